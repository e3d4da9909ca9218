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


// The four front-end commands. Each returns a process exit code and writes
// its report to `out` (or to config.output_path when set); diagnostics go
// to `err`.

#ifndef UUR_RUNS_HPP
#define UUR_RUNS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uur/bounds.hpp"
#include "uur/io.hpp"
#include "uur/scenarios.hpp"

namespace uur {

enum class Command { Bounds, Sweep, Compare, Check };
enum class OutputFormat { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;

struct RunConfig {
    Command command = Command::Bounds;
    std::optional<std::string> input_path;
    std::optional<ExampleId> example;
    std::optional<std::size_t> dim;
    std::optional<double> theta;  // bounds only
    std::optional<double> theta_min;
    std::optional<double> theta_max;
    std::optional<std::size_t> steps;
    std::optional<std::size_t> m;
    std::optional<double> v;
    std::optional<Flavor> flavor;
    std::optional<std::uint64_t> cap;
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    std::size_t max_dim = 8;
    std::optional<std::string> output_path;
    std::optional<OutputFormat> format;  // bounds → json, sweep/compare → csv
    bool greedy = false;
    /// compare: both unset → k_m_v − {lb, i_2, i_1_prime}, plus
    /// prod_k_v − {bong3, prod_i_2} for three-operator scenarios.
    std::optional<std::string> minuend;    // default k_m_v
    std::vector<std::string> subtrahends;  // default lb, i_2, i_1_prime
    std::optional<std::string> inject_fault;
};

/// Throws Error(InvalidArgument / WeightOutOfRange) when the config breaks
/// steps ≥ 1, θ_min ≤ θ_max, v ∈ [0,1] or names no source.
void validate(const RunConfig& config);

/// θ_min + k(θ_max − θ_min)/(steps − 1), k = 0..steps−1; one point at θ_min
/// when steps = 1.
std::vector<double> theta_grid(double theta_min, double theta_max, std::size_t steps);

/// One row of the sweep table at a resolved pure point. Three-operator
/// columns use the first three operators, two-operator columns the first two.
io::SweepRow sweep_row(double theta, const PurePoint& point, std::size_t m, double v,
                       std::uint64_t cap, SearchMode mode);

/// Row-level chain re-assertion used by the emitter; empty when consistent.
std::vector<std::string> row_violations(const io::SweepRow& row, double slack = kChainSlack);

/// Rows for a built-in scenario, θ ascending.
std::vector<io::SweepRow> sweep_rows(const RunConfig& config);

int run_bounds(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_check(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command; maps exceptions to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace uur

#endif  // UUR_RUNS_HPP
