// Copyright 2026 The uurbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uur/error.hpp"

namespace uur {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::NotPSD: return "NotPSD";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::InvalidDensityMatrix: return "InvalidDensityMatrix";
        case ErrorCode::BlochVectorTooLong: return "BlochVectorTooLong";
        case ErrorCode::InvalidSubset: return "InvalidSubset";
        case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
        case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorCode::UnknownExample: return "UnknownExample";
        case ErrorCode::IncompatibleDimension: return "IncompatibleDimension";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

SearchSpaceTooLarge::SearchSpaceTooLarge(std::uint64_t candidates, std::uint64_t cap)
    : Error(ErrorCode::SearchSpaceTooLarge,
            std::to_string(candidates) + " candidate subsets exceed the cap of " +
                std::to_string(cap)),
      candidates_(candidates),
      cap_(cap) {}

}  // namespace uur
