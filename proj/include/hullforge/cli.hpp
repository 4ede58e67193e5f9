/**************************************************************************
 * cli.hpp
 *
 * Copyright 2026 The hullforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <algorithm>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "code.hpp"
#include "codefile.hpp"
#include "eaqecc.hpp"
#include "error.hpp"
#include "extension.hpp"
#include "field.hpp"
#include "fixtures.hpp"
#include "grs.hpp"
#include "tables.hpp"

namespace hullforge {

namespace cli {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

inline std::string join_modulus(const std::vector<u64>& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s;
}

inline std::string distance_text(const DistanceResult& r) {
    if (r.exact) return std::to_string(r.d);
    return "[" + std::to_string(r.d) + "," + std::to_string(r.upper) + "]";
}

inline std::vector<Element> parse_literals(const Field& f, const std::vector<std::string>& lits) {
    std::vector<Element> out;
    for (const auto& s : lits) out.push_back(parse_literal(f, s));
    return out;
}

inline void print_eaqecc(std::ostream& out, const char* label, const EaqeccParams& p) {
    const RateReport r = rates(p);
    out << label << " " << p.str() << (p.exact ? "" : " (d is a lower bound)") << " mds=" << (p.mds ? "yes" : "no")
        << " rate=" << to_string(r.rate) << " net_rate=" << to_string(r.net_rate) << "\n";
}

} // namespace cli

/// Runs one hullforge command; args excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                       std::ostream& err = std::cerr) {
    CLI::App app{"Galois hulls, self-orthogonal extensions and EAQECC parameters", "hullforge"};
    app.require_subcommand(1);

    int status = cli::kOk;
    std::function<void()> action;

    // field-info
    u64 fi_p = 0, fi_h = 0;
    auto* field_info = app.add_subcommand("field-info", "Describe GF(p^h)");
    field_info->set_help_flag("--help", "Print this help message and exit");
    field_info->add_option("p", fi_p)->required();
    field_info->add_option("h", fi_h)->required();
    field_info->callback([&] {
        action = [&] {
            const FieldPtr F = Field::create(fi_p, fi_h);
            out << "field GF(" << F->label() << ")\n";
            out << "q=" << F->q() << "\n";
            out << "modulus=" << cli::join_modulus(F->modulus()) << "\n";
            out << "log_tables=" << (F->has_tables() ? "yes" : "no") << "\n";
            for (u64 e = 0; e < F->h(); ++e) {
                out << "e=" << e << " norm_exponent=" << norm_exponent(*F, e);
                if (F->p() != 2) {
                    const auto t0 = solve_t0(*F, e);
                    out << " t0=" << (t0 ? std::to_string(*t0) : "none");
                }
                out << "\n";
            }
        };
    });

    // analyze
    std::string an_file;
    std::optional<u64> an_e, an_budget;
    auto* analyze = app.add_subcommand("analyze", "Parameters, hulls and predicates of a code");
    analyze->add_option("file", an_file)->required();
    analyze->add_option("--e", an_e, "Restrict predicates and profiles to this e");
    analyze->add_option("--dist-budget", an_budget, "Work limit for minimum distance");
    analyze->callback([&] {
        action = [&] {
            const LinearCode c = read_code_file(an_file);
            const Field& F = c.field();
            out << "field GF(" << F.label() << ")\n";
            out << "n=" << c.n() << " k=" << c.k() << " d=" << cli::distance_text(min_distance(c, an_budget)) << "\n";
            out << "hull ";
            for (u64 e = 0; e < F.h(); ++e) out << (e ? ", " : "") << "e=" << e << ":" << hull(c, e).dim_hull;
            out << "\n";
            std::vector<u64> es;
            if (an_e) {
                check_exponent(F, *an_e, F.h() - 1);
                es.push_back(*an_e);
            } else {
                for (u64 e = 0; e < F.h(); ++e) es.push_back(e);
            }
            for (u64 e : es) {
                const Classification cl = classify(c, e);
                out << "e=" << e << " self_orthogonal=" << cl.self_orthogonal << " self_dual=" << cl.self_dual
                    << " lcd=" << cl.lcd;
                try {
                    const SingletonProfile sp = singleton_profile(c, e, an_budget);
                    out << " defect=" << sp.defect << " dual_defect=" << sp.dual_defect << " m_mds="
                        << (sp.m_mds ? std::to_string(*sp.m_mds) : "none");
                } catch (const Error& ex) {
                    if (ex.code() != ErrorCode::BudgetExceeded) throw;
                    out << " defect=unknown";
                }
                out << "\n";
            }
        };
    });

    // extend
    std::string ex_file;
    u64 ex_e = 0;
    std::size_t ex_i = 0;
    std::vector<std::string> ex_alphas;
    std::string ex_beta = "1";
    auto* extend = app.add_subcommand("extend", "Lengthen a self-orthogonal code by i columns");
    extend->add_option("file", ex_file)->required();
    extend->add_option("--e", ex_e)->required();
    extend->add_option("--i", ex_i)->required();
    extend->add_option("--alphas", ex_alphas, "Comma-separated literals")->delimiter(',');
    extend->add_option("--beta", ex_beta);
    extend->callback([&] {
        action = [&] {
            const LinearCode c = read_code_file(ex_file);
            const Field& F = c.field();
            AlphaTuple a;
            if (!ex_alphas.empty()) {
                a = {ex_e, cli::parse_literals(F, ex_alphas)};
                if (a.values.size() != ex_i) fail(ErrorCode::BadLength, "--alphas must list i values");
            } else {
                auto found = find_alpha_tuple(F, ex_e, ex_i);
                if (!found) fail(ErrorCode::NoAlphaTuple, "no alpha tuple found");
                a = *found;
            }
            out << serialize_code_file(extend_self_orthogonal(c, ex_e, a, parse_literal(F, ex_beta)));
        };
    });

    // extend-one
    std::string eo_file, eo_alpha, eo_beta, eo_lambda = "1";
    u64 eo_e = 0;
    std::size_t eo_l = 0;
    auto* extend_one = app.add_subcommand("extend-one", "Add one column and set the hull dimension");
    extend_one->add_option("file", eo_file)->required();
    extend_one->add_option("--e", eo_e)->required();
    extend_one->add_option("--l", eo_l)->required();
    extend_one->add_option("--alpha", eo_alpha)->required();
    extend_one->add_option("--beta", eo_beta)->required();
    extend_one->add_option("--lambda", eo_lambda);
    extend_one->callback([&] {
        action = [&] {
            const LinearCode c = read_code_file(eo_file);
            const Field& F = c.field();
            out << serialize_code_file(extend_one_with_hull(c, eo_e, eo_l, parse_literal(F, eo_alpha),
                                                            parse_literal(F, eo_beta), parse_literal(F, eo_lambda)));
        };
    });

    // reduce-hull
    std::string rh_file;
    u64 rh_e = 0;
    std::size_t rh_l = 0;
    auto* reduce = app.add_subcommand("reduce-hull", "Equivalent code with a smaller hull");
    reduce->add_option("file", rh_file)->required();
    reduce->add_option("--e", rh_e)->required();
    reduce->add_option("--l", rh_l)->required();
    reduce->callback([&] {
        action = [&] { out << serialize_code_file(reduce_hull_dim(read_code_file(rh_file), rh_e, rh_l)); };
    });

    // hso-coset / hso-product
    u64 hc_q = 0, hc_np = 0, hc_t = 0;
    std::size_t hc_k = 0;
    auto* hso_coset = app.add_subcommand("hso-coset", "Hermitian self-orthogonal MDS code, coset family");
    hso_coset->add_option("q", hc_q)->required();
    hso_coset->add_option("n_prime", hc_np)->required();
    hso_coset->add_option("t", hc_t)->required();
    hso_coset->add_option("k", hc_k)->required();
    hso_coset->callback([&] {
        action = [&] {
            const GrsSpec s = hso_mds_coset(field_of_order(hc_q), hc_np, hc_t, hc_k);
            const LinearCode c = grs_generator(s);
            out << "# [" << c.n() << "," << c.k() << "," << c.n() - c.k() + 1 << "]_" << s.field->label()
                << " Hermitian self-orthogonal MDS\n"
                << serialize_code_file(c);
        };
    });

    u64 hp_q = 0, hp_x1 = 0, hp_x2 = 0, hp_n1 = 0;
    std::size_t hp_k = 0;
    auto* hso_product = app.add_subcommand("hso-product", "Hermitian self-orthogonal MDS code, product family");
    hso_product->add_option("q", hp_q)->required();
    hso_product->add_option("x1", hp_x1)->required();
    hso_product->add_option("x2", hp_x2)->required();
    hso_product->add_option("n1", hp_n1)->required();
    hso_product->add_option("k", hp_k)->required();
    hso_product->callback([&] {
        action = [&] {
            const GrsSpec s = hso_mds_product(field_of_order(hp_q), hp_x1, hp_x2, hp_n1, hp_k);
            const LinearCode c = grs_generator(s);
            out << "# [" << c.n() << "," << c.k() << "," << c.n() - c.k() + 1 << "]_" << s.field->label()
                << " Hermitian self-orthogonal MDS\n"
                << serialize_code_file(c);
        };
    });

    // eaqecc
    std::string eq_file;
    u64 eq_e = 0;
    bool eq_sub = false;
    std::optional<u64> eq_budget;
    auto* eaqecc = app.add_subcommand("eaqecc", "EAQECC parameters from the e-Galois hull");
    eaqecc->add_option("file", eq_file)->required();
    eaqecc->add_option("--e", eq_e)->required();
    eaqecc->add_flag("--subfield", eq_sub, "sqrt(q)-ary codes (needs e = h/2)");
    eaqecc->add_option("--dist-budget", eq_budget);
    eaqecc->callback([&] {
        action = [&] {
            DeriveOptions opt;
            opt.cap = eq_budget;
            const EaqeccPair pr = derive_eaqecc(read_code_file(eq_file), eq_e,
                                                eq_sub ? Target::subfield : Target::same_field, opt);
            out << "hull=" << pr.hull_dim << "\n";
            cli::print_eaqecc(out, "Q", pr.q);
            cli::print_eaqecc(out, "Qdual", pr.qdual);
        };
    });

    // propagate
    std::string pr_file;
    u64 pr_e = 0;
    std::size_t pr_i = 0, pr_l = 0;
    bool pr_sub = false;
    std::vector<std::string> pr_alphas;
    auto* propagate_cmd = app.add_subcommand("propagate", "Lengthen by i columns, set the hull to l, derive EAQECCs");
    propagate_cmd->add_option("file", pr_file)->required();
    propagate_cmd->add_option("--e", pr_e)->required();
    propagate_cmd->add_option("--i", pr_i)->required();
    propagate_cmd->add_option("--l", pr_l)->required();
    propagate_cmd->add_flag("--subfield", pr_sub);
    propagate_cmd->add_option("--alphas", pr_alphas, "Comma-separated literals (i >= 2)")->delimiter(',');
    propagate_cmd->callback([&] {
        action = [&] {
            const LinearCode c = read_code_file(pr_file);
            PropagateOptions opt;
            if (!pr_alphas.empty()) opt.alphas = AlphaTuple{pr_e, cli::parse_literals(c.field(), pr_alphas)};
            const auto ps = propagate(c, pr_e, pr_i, pr_l, pr_sub ? Target::subfield : Target::same_field, opt);
            cli::print_eaqecc(out, "Q", ps[0]);
            cli::print_eaqecc(out, "Qdual", ps[1]);
        };
    });

    // table
    int tb_which = 0;
    auto* table = app.add_subcommand("table", "Regenerate a table as CSV");
    table->add_option("which", tb_which)->required()->check(CLI::IsMember({3, 6, 7, 8}));
    table->callback([&] { action = [&] { out << table_by_number(tb_which).str(); }; });

    // alphas
    u64 al_p = 0, al_h = 0, al_e = 0;
    std::size_t al_i = 0;
    auto* alphas = app.add_subcommand("alphas", "Alpha tuple of length i for GF(p^h) and e");
    alphas->set_help_flag("--help", "Print this help message and exit");
    alphas->add_option("p", al_p)->required();
    alphas->add_option("h", al_h)->required();
    alphas->add_option("e", al_e)->required();
    alphas->add_option("i", al_i)->required();
    alphas->callback([&] {
        action = [&] {
            const FieldPtr F = Field::create(al_p, al_h);
            const ConditionReport rep = alpha_conditions(*F, al_e);
            out << "case=" << to_string(rep.kind) << "\n";
            auto found = find_alpha_tuple(*F, al_e, al_i);
            if (!found) fail(ErrorCode::NoAlphaTuple, "no alpha tuple of length " + std::to_string(al_i));
            out << "alphas=";
            for (std::size_t j = 0; j < found->values.size(); ++j)
                out << (j ? "," : "") << format_literal(*F, found->values[j]);
            out << "\n";
        };
    });

    // verify-paper
    bool vp_verbose = false;
    auto* verify = app.add_subcommand("verify-paper", "Run every reference fixture");
    verify->add_flag("--verbose", vp_verbose, "List passing checks too");
    verify->callback([&] {
        action = [&] {
            const FixtureLog log = verify_paper();
            for (const auto& r : log.results())
                if (!r.ok || vp_verbose)
                    out << (r.ok ? "PASS " : "FAIL ") << r.id << (r.detail.empty() ? "" : " (" + r.detail + ")")
                        << "\n";
            out << log.results().size() - log.failures() << "/" << log.results().size() << " checks passed\n";
            if (log.failures() != 0) status = cli::kMismatch;
        };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? cli::kOk : cli::kUsage;
    }
    try {
        if (action) action();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return cli::kUsage;
    }
    return status;
}

} // namespace hullforge
