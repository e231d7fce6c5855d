/*
 * Copyright 2026 The egrl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace egrl {

/// Every failure the library reports. The CLI maps these onto exit codes.
enum class Errc {
    CompositeCharacteristic,
    ReducibleModulus,
    NonMonic,
    BadModulus,
    ZeroInverse,
    CtxMismatch,
    NoPrimitive,
    NotSquare,
    DimMismatch,
    ZeroScale,
    DuplicateNodes,
    DomainSize,
    OutOfStatedRange,
    ZeroCode,
    BudgetExceeded,
    InconsistentInput,
    NegativeCount,
    DuplicateAlpha,
    ZeroV,
    ZeroB,
    SingularM,
    RangeViolation,
    UnsupportedShape,
    ParseError,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
    case Errc::CompositeCharacteristic: return "CompositeCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NonMonic: return "NonMonic";
    case Errc::BadModulus: return "BadModulus";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::CtxMismatch: return "CtxMismatch";
    case Errc::NoPrimitive: return "NoPrimitive";
    case Errc::NotSquare: return "NotSquare";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::DuplicateNodes: return "DuplicateNodes";
    case Errc::DomainSize: return "DomainSize";
    case Errc::OutOfStatedRange: return "OutOfStatedRange";
    case Errc::ZeroCode: return "ZeroCode";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InconsistentInput: return "InconsistentInput";
    case Errc::NegativeCount: return "NegativeCount";
    case Errc::DuplicateAlpha: return "DuplicateAlpha";
    case Errc::ZeroV: return "ZeroV";
    case Errc::ZeroB: return "ZeroB";
    case Errc::SingularM: return "SingularM";
    case Errc::RangeViolation: return "RangeViolation";
    case Errc::UnsupportedShape: return "UnsupportedShape";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + (detail.empty() ? "" : ": " + detail)),
          code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace egrl
