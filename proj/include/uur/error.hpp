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

#ifndef UUR_ERROR_HPP
#define UUR_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uur {

enum class ErrorCode {
    InvalidArgument,
    NonFinite,
    NotHermitian,
    NoConvergence,
    NotPSD,
    DimensionMismatch,
    NotUnitary,
    NotNormalized,
    InvalidDensityMatrix,
    BlochVectorTooLong,
    InvalidSubset,
    WeightOutOfRange,
    SearchSpaceTooLarge,
    IndexOutOfRange,
    DimensionTooSmall,
    UnknownExample,
    IncompatibleDimension,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` is stable and scriptable;
/// `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when an exhaustive subset search would exceed the configured cap.
class SearchSpaceTooLarge : public Error {
public:
    SearchSpaceTooLarge(std::uint64_t candidates, std::uint64_t cap);

    std::uint64_t candidates() const noexcept { return candidates_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t candidates_;
    std::uint64_t cap_;
};

}  // namespace uur

#endif  // UUR_ERROR_HPP
