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


// Randomized self-check: every invariant of the numeric, moment and bound
// layers re-verified on seeded random instances.

#ifndef UUR_CHECK_HPP
#define UUR_CHECK_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace uur {

struct CheckOptions {
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    std::size_t max_dim = 8;
    /// Test hook. "k_m" replaces K_m by 2·ΔA²ΔB² + 1e-6 inside the chain suites.
    std::optional<std::string> fault;
};

struct SuiteResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t violations = 0;
    /// Smallest margin seen: rhs + tol − lhs for inequalities, tol − |diff| for
    /// identities. Negative means violated.
    double worst_margin = 0.0;
    /// First violating instance, serialized as JSON.
    std::optional<std::string> counterexample;
};

struct CheckReport {
    CheckOptions options;
    std::vector<SuiteResult> suites;
    bool ok() const;
};

std::vector<std::string> check_suite_names();

/// Throws Error(InvalidArgument) for an unknown fault name or max_dim < 2.
CheckReport run_checks(const CheckOptions& options);

/// Summary lines followed by any counterexamples, one JSON document per line.
void write_check_report(std::ostream& os, const CheckReport& report);

}  // namespace uur

#endif  // UUR_CHECK_HPP
