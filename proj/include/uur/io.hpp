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


// Scenario files, sweep tables and their text encodings.

#ifndef UUR_IO_HPP
#define UUR_IO_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uur/bounds.hpp"
#include "uur/scenarios.hpp"

namespace uur::io {

struct InputParams {
    std::optional<std::size_t> m;
    std::optional<double> v;
    std::optional<Flavor> flavor;
    std::optional<std::uint64_t> cap;
};

struct InputDocument {
    std::size_t dimension = 0;
    std::vector<NamedOperator> operators;
    StateSpec state = PureState(ComplexVector{Complex(1.0)});  // replaced by parse_input
    InputParams params;
};

/// Parses the scenario schema:
///   {"dimension": n,
///    "operators": [{"name": "A", "matrix": [[[re, im], ...], ...]}, ...],
///    "state": {"pure": [[re, im], ...]} | {"density": matrix} | {"bloch": [r1, r2, r3]},
///    "params": {"m", "v", "flavor", "cap"}}            (params optional)
/// Operators must be unitary to 1e-8; the message names the offender and
/// its max-entry deviation from A†A = I.
InputDocument parse_input(std::string_view text);
InputDocument load_input(const std::string& path);

/// Columns only present when the scenario has at least three operators.
struct ThreeOpColumns {
    double variance_triple = 0.0;
    double bong3 = 0.0;
    double prod_k = 0.0;
    double prod_k_v = 0.0;
    double prod_k_tilde = 0.0;
    double prod_i_2 = 0.0;
    friend bool operator==(const ThreeOpColumns&, const ThreeOpColumns&) = default;
};

struct SweepRow {
    double theta = 0.0;
    double variance_product = 0.0;
    double lb = 0.0;
    double k_m = 0.0;
    double k_m_v = 0.0;
    double k_tilde = 0.0;
    double i_2 = 0.0;
    std::optional<double> i_1_prime;  // empty cell when n < 3
    std::optional<ThreeOpColumns> three;
    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

std::vector<std::string> sweep_columns(bool three_op);

/// Value of a named column; nullopt when the column is absent for this row.
/// Throws Error(InvalidArgument) for names that are not columns at all.
std::optional<double> column_value(const SweepRow& row, std::string_view name);

/// 17 significant digits, shortest exponent form, locale independent.
std::string format_double(double x);
double parse_double(std::string_view text);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool three_op);
std::vector<SweepRow> read_sweep_csv(std::istream& is);

}  // namespace uur::io

#endif  // UUR_IO_HPP
