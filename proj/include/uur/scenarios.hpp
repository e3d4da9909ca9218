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

// Built-in operator/state families ex1..ex6 and the generic clock and shift
// operators. Printed example matrices are reproduced verbatim even where they
// differ from the generic clock family; see each scenario's notes.

#ifndef UUR_SCENARIOS_HPP
#define UUR_SCENARIOS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uur/linalg.hpp"
#include "uur/moments.hpp"

namespace uur {

enum class ExampleId { Ex1, Ex2, Ex3, Ex4, Ex5, Ex6 };

std::string to_string(ExampleId id);
/// Accepts "ex1".."ex6". Throws Error(UnknownExample).
ExampleId example_from_string(const std::string& s);

/// diag(1, ω, ..., ω^{d−1}), ω = e^{2πi/d}. Throws Error(DimensionTooSmall) for d < 2.
ComplexMatrix clock_operator(std::size_t d);
/// Cyclic shift |k> → |k+1 mod d>, i.e. [[0, 1], [I_{d−1}, 0]] in block form.
ComplexMatrix shift_operator(std::size_t d);

struct NamedOperator {
    std::string name;
    ComplexMatrix matrix;
};

using StateSpec = std::variant<PureState, DensityMatrix>;

struct ScenarioDefaults {
    std::size_t m = 1;
    double v = 0.1;
    double theta_min = 0.0;
    double theta_max = 0.0;
    std::size_t steps = 200;
};

struct Scenario {
    ExampleId id;
    std::size_t dimension;
    std::vector<NamedOperator> operators;
    std::function<StateSpec(double)> state;
    ScenarioDefaults defaults;
    bool state_normalized = false;
    std::string notes;
};

std::size_t default_dimension(ExampleId id);

/// Throws Error(IncompatibleDimension) when d does not fit the example
/// (ex3, ex6 need 3; ex4 needs 2; ex5 needs 4; ex2 needs ≥ 3; ex1 needs ≥ 2).
Scenario make_scenario(ExampleId id, std::size_t d);

/// Operators and pure state the bounds act on. Mixed states are purified and
/// their operators lifted to I ⊗ A.
struct PurePoint {
    std::vector<NamedOperator> operators;
    PureState state;
    bool purified = false;
};

PurePoint resolve(const std::vector<NamedOperator>& operators, const StateSpec& state);

/// Closed-form values of the ex1 family (clock/shift pair, state
/// cosθ|0> − sinθ|d−1>). x and y are zero-based vectors of length d.
struct Example1Reference {
    std::vector<double> x;
    std::vector<double> y;
    double i_1 = 0.0;
    double i_2 = 0.0;
    double i_d = 0.0;
    std::optional<double> i_1_prime;
    double k_2 = 0.0;  // K over the block {1, 2}
    bool from_printed_formulas = true;
};

/// Printed closed forms for d ≥ 3. For d = 2 the printed expressions collide
/// (y_2 is also y_d), so hand-derived d = 2 values are returned instead and
/// `from_printed_formulas` is false.
Example1Reference example1_reference(std::size_t d, double theta);

/// The printed expressions evaluated literally for any d ≥ 2; where indices
/// collide, later assignments win (y_d overwrites y_2 when d = 2).
Example1Reference example1_printed_formulas(std::size_t d, double theta);

}  // namespace uur

#endif  // UUR_SCENARIOS_HPP
