/**************************************************************************
 * error.hpp
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hullforge {

enum class ErrorCode {
    NotPrime,
    Reducible,
    NotPrimitive,
    BadModulus,
    FieldTooLarge,
    EOutOfRange,
    NotInSubfield,
    Zero,
    OddExtension,
    BadArgs,
    EvenCharacteristic,
    DimensionMismatch,
    RankDeficient,
    EmptyCode,
    InternalMismatch,
    BudgetExceeded,
    BadLength,
    NotSelfOrthogonal,
    BadBeta,
    BadLambda,
    BadAlpha,
    BadAlphaTuple,
    LengthOne,
    HullTargetOutOfRange,
    DeterminantCondition,
    NoScalingElement,
    DuplicateLocators,
    ZeroMultiplier,
    BadDivisor,
    TOutOfRange,
    KOutOfRange,
    CosetOverlap,
    ConditionViolated,
    Overlap,
    SubfieldUnavailable,
    NoAlphaTuple,
    ParseError,
    BadLiteral,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::EOutOfRange: return "EOutOfRange";
    case ErrorCode::NotInSubfield: return "NotInSubfield";
    case ErrorCode::Zero: return "Zero";
    case ErrorCode::OddExtension: return "OddExtension";
    case ErrorCode::BadArgs: return "BadArgs";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::EmptyCode: return "EmptyCode";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::NotSelfOrthogonal: return "NotSelfOrthogonal";
    case ErrorCode::BadBeta: return "BadBeta";
    case ErrorCode::BadLambda: return "BadLambda";
    case ErrorCode::BadAlpha: return "BadAlpha";
    case ErrorCode::BadAlphaTuple: return "BadAlphaTuple";
    case ErrorCode::LengthOne: return "LengthOne";
    case ErrorCode::HullTargetOutOfRange: return "HullTargetOutOfRange";
    case ErrorCode::DeterminantCondition: return "DeterminantCondition";
    case ErrorCode::NoScalingElement: return "NoScalingElement";
    case ErrorCode::DuplicateLocators: return "DuplicateLocators";
    case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorCode::BadDivisor: return "BadDivisor";
    case ErrorCode::TOutOfRange: return "TOutOfRange";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::CosetOverlap: return "CosetOverlap";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::Overlap: return "Overlap";
    case ErrorCode::SubfieldUnavailable: return "SubfieldUnavailable";
    case ErrorCode::NoAlphaTuple: return "NoAlphaTuple";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadLiteral: return "BadLiteral";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace hullforge
