/**************************************************************************
 * test_properties.cpp
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

#include <gtest/gtest.h>

#include "suites.hpp"

using namespace hullforge;

namespace {

void expect_clean(const FixtureLog& log) {
    for (const auto& r : log.results()) EXPECT_TRUE(r.ok) << r.id << ": " << r.detail;
}

class RandomCodes : public ::testing::TestWithParam<u64> {};

} // namespace

TEST_P(RandomCodes, InvariantsHold) {
    FixtureLog log;
    const suites::PropertyStats st = suites::property_suite(GetParam(), 500, log);
    EXPECT_EQ(st.codes, 500u);
    EXPECT_EQ(st.distance_pairs, 500u);
    expect_clean(log);
}

INSTANTIATE_TEST_SUITE_P(Fields, RandomCodes, ::testing::ValuesIn(suites::property_fields()),
                         [](const auto& info) { return "q" + std::to_string(info.param); });

TEST(ClosedForms, AgreeWithDirectEvaluation) {
    FixtureLog log;
    suites::closed_form_checks(log);
    EXPECT_GE(log.results().size(), 3u);
    expect_clean(log);
}

TEST(ClosedForms, FamilyRegeneration) {
    FixtureLog log;
    suites::family_regeneration_checks(log);
    expect_clean(log);
}
