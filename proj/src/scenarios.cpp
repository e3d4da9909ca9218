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

#include "uur/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "uur/error.hpp"

namespace uur {

namespace {

constexpr double kPi = std::numbers::pi;

Complex phase(double angle) { return std::polar(1.0, angle); }

void require_dimension(ExampleId id, std::size_t d, bool ok, const std::string& need) {
    if (!ok) {
        throw Error(ErrorCode::IncompatibleDimension,
                    to_string(id) + " needs " + need + ", got d = " + std::to_string(d));
    }
}

// diag(1, e^{iπ/2}, e^{3iπ/2}) as printed for the d = 3 examples
ComplexMatrix printed_a3() {
    const std::vector<Complex> diag{1.0, phase(kPi / 2), phase(3 * kPi / 2)};
    return ComplexMatrix::diagonal(std::span<const Complex>(diag));
}

ComplexMatrix printed_b3() {
    return ComplexMatrix::from_rows({{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}});
}

}  // namespace

std::string to_string(ExampleId id) {
    switch (id) {
        case ExampleId::Ex1: return "ex1";
        case ExampleId::Ex2: return "ex2";
        case ExampleId::Ex3: return "ex3";
        case ExampleId::Ex4: return "ex4";
        case ExampleId::Ex5: return "ex5";
        case ExampleId::Ex6: return "ex6";
    }
    return "ex1";
}

ExampleId example_from_string(const std::string& s) {
    if (s == "ex1") return ExampleId::Ex1;
    if (s == "ex2") return ExampleId::Ex2;
    if (s == "ex3") return ExampleId::Ex3;
    if (s == "ex4") return ExampleId::Ex4;
    if (s == "ex5") return ExampleId::Ex5;
    if (s == "ex6") return ExampleId::Ex6;
    throw Error(ErrorCode::UnknownExample, "'" + s + "' is not one of ex1..ex6");
}

ComplexMatrix clock_operator(std::size_t d) {
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "clock operator needs d ≥ 2");
    std::vector<Complex> diag(d);
    for (std::size_t k = 0; k < d; ++k) diag[k] = phase(2.0 * kPi * static_cast<double>(k) / static_cast<double>(d));
    return ComplexMatrix::diagonal(std::span<const Complex>(diag));
}

ComplexMatrix shift_operator(std::size_t d) {
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "shift operator needs d ≥ 2");
    ComplexMatrix b(d);
    b(0, d - 1) = 1.0;
    for (std::size_t k = 1; k < d; ++k) b(k, k - 1) = 1.0;
    return b;
}

std::size_t default_dimension(ExampleId id) {
    switch (id) {
        case ExampleId::Ex1: return 3;
        case ExampleId::Ex2: return 4;
        case ExampleId::Ex3: return 3;
        case ExampleId::Ex4: return 2;
        case ExampleId::Ex5: return 4;
        case ExampleId::Ex6: return 3;
    }
    return 3;
}

Scenario make_scenario(ExampleId id, std::size_t d) {
    Scenario s{id, d, {}, {}, {}, false, {}};
    s.defaults.v = 0.1;
    s.defaults.steps = 200;
    s.defaults.theta_min = 0.0;
    s.defaults.theta_max = kPi;

    switch (id) {
        case ExampleId::Ex1: {
            require_dimension(id, d, d >= 2, "d ≥ 2");
            s.operators = {{"A", clock_operator(d)}, {"B", shift_operator(d)}};
            s.state = [d](double theta) -> StateSpec {
                ComplexVector v(d);
                v[0] = std::cos(theta);
                v[d - 1] += -std::sin(theta);
                return PureState(std::move(v));
            };
            s.defaults.m = std::max<std::size_t>(1, d / 2);
            break;
        }
        case ExampleId::Ex2: {
            require_dimension(id, d, d >= 3, "d ≥ 3");
            if (d == 4) {
                const std::vector<Complex> diag{1.0, phase(kPi / 2), phase(kPi), phase(4 * kPi / 3)};
                s.operators = {{"A", ComplexMatrix::diagonal(std::span<const Complex>(diag))},
                               {"B", shift_operator(4)}};
                s.notes = "A reproduces the printed d=4 matrix, whose last phase is e^{4iπ/3}";
            } else {
                s.operators = {{"A", clock_operator(d)}, {"B", shift_operator(d)}};
            }
            s.state = [d](double theta) -> StateSpec {
                ComplexVector v(d);
                const double head = std::cos(theta) / std::sqrt(static_cast<double>(d - 1));
                for (std::size_t k = 0; k + 1 < d; ++k) v[k] = head;
                v[d - 1] = -std::sin(theta);
                return PureState(std::move(v));
            };
            s.defaults.m = std::max<std::size_t>(1, d / 2);
            break;
        }
        case ExampleId::Ex3: {
            require_dimension(id, d, d == 3, "d = 3");
            s.operators = {{"A", printed_a3()}, {"B", printed_b3()}};
            s.state = [](double theta) -> StateSpec {
                const double h = std::sqrt(2.0) / 2.0 * std::cos(theta);
                return PureState(ComplexVector{h, h, std::sin(theta)});
            };
            s.defaults.m = 2;
            break;
        }
        case ExampleId::Ex4: {
            require_dimension(id, d, d == 2, "d = 2 (purified to 4)");
            const double c = std::cos(kPi / 8);
            const double sn = std::sin(kPi / 8);
            const Complex i(0.0, 1.0);
            s.operators = {
                {"A", c * ComplexMatrix::identity(2) - (i * sn) * pauli_y()},
                {"B", c * ComplexMatrix::identity(2) + (i * sn) * pauli_z()},
            };
            s.state = [](double theta) -> StateSpec {
                return bloch_density({1.0 / 3.0, 2.0 / 3.0 * std::cos(theta),
                                      2.0 / 3.0 * std::sin(theta)});
            };
            s.defaults.m = 2;
            s.defaults.theta_max = 2 * kPi;
            break;
        }
        case ExampleId::Ex5: {
            require_dimension(id, d, d == 4, "d = 4");
            const Complex i(0.0, 1.0);
            const std::vector<Complex> diag{1.0, i, -1.0, -i};
            s.operators = {
                {"A", ComplexMatrix::diagonal(std::span<const Complex>(diag))},
                {"B", shift_operator(4)},
                {"C", ComplexMatrix::from_rows({{0.0, 1.0, 0.0, 0.0},
                                                {1.0, 0.0, 0.0, 0.0},
                                                {0.0, 0.0, 1.0, 0.0},
                                                {0.0, 0.0, 0.0, -1.0}})},
            };
            s.notes =
                "B repaired: the printed matrix puts row 1's entry in column 2 (not unitary); "
                "it is moved to column 4, giving the d=4 cyclic shift";
            s.state = [](double theta) -> StateSpec {
                const double c = std::cos(theta / 2);
                const double sn = std::sin(theta / 2);
                const double r3 = std::sqrt(3.0) / 2.0;
                return PureState(ComplexVector{0.5 * c, r3 * sn, 0.5 * sn, r3 * c});
            };
            s.defaults.m = 2;
            s.defaults.theta_max = 2 * kPi;
            break;
        }
        case ExampleId::Ex6: {
            require_dimension(id, d, d == 3, "d = 3");
            s.operators = {
                {"A", printed_a3()},
                {"B", printed_b3()},
                {"C", ComplexMatrix::from_rows({{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}})},
            };
            s.state = [](double theta) -> StateSpec {
                const double h = std::sqrt(2.0) / 2.0;
                return PureState::normalized(ComplexVector{
                    h * std::cos(theta / 2), h * std::sin(theta / 2), -std::sin(theta / 2)});
            };
            s.state_normalized = true;
            s.notes = "printed amplitudes have squared norm 1/2 + sin^2(theta/2); state is normalized";
            s.defaults.m = 2;
            s.defaults.theta_max = 2 * kPi;
            break;
        }
    }
    return s;
}

PurePoint resolve(const std::vector<NamedOperator>& operators, const StateSpec& state) {
    if (const auto* pure = std::get_if<PureState>(&state)) {
        return PurePoint{operators, *pure, false};
    }
    const auto& rho = std::get<DensityMatrix>(state);
    std::vector<NamedOperator> lifted;
    lifted.reserve(operators.size());
    for (const auto& op : operators) {
        if (op.matrix.dim() != rho.dim()) {
            throw Error(ErrorCode::DimensionMismatch,
                        "operator " + op.name + " has dimension " + std::to_string(op.matrix.dim()) +
                            ", state has " + std::to_string(rho.dim()));
        }
        lifted.push_back({op.name, lift(op.matrix)});
    }
    return PurePoint{std::move(lifted), purify(rho), true};
}

namespace {

double omega_gap_squared(std::size_t d) {
    // |1 − e^{−2πi/d}|²
    return 2.0 - 2.0 * std::cos(2.0 * kPi / static_cast<double>(d));
}

}  // namespace

Example1Reference example1_printed_formulas(std::size_t d, double theta) {
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "ex1 needs d ≥ 2");
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double g2 = omega_gap_squared(d);
    const double g = std::sqrt(g2);

    Example1Reference r;
    r.x.assign(d, 0.0);
    r.y.assign(d, 0.0);
    r.x[0] = std::abs(g * s * s * c);
    r.x[d - 1] = std::abs(g * s * c * c);
    r.y[0] = std::abs(s * s * s);
    r.y[1] = std::abs(c);
    r.y[d - 1] = std::abs(s * s * c);

    const double s2 = s * s, c2 = c * c;
    const double s4 = s2 * s2, c4 = c2 * c2;
    const double s6 = s4 * s2, c6 = c4 * c2;
    const double s8 = s4 * s4;
    r.i_1 = g2 * std::abs(s6 * c2 + s2 * c4);
    r.i_2 = g2 * std::abs(s6 * c2 + s2 * c6);
    r.i_d = g2 * std::abs(s6 * c2);
    r.i_1_prime = g2 * std::abs(s8 * c2 + s6 * c6 + s2 * c4);
    const double root = std::sqrt(s4 * c2 * (s6 + c2)) + std::sqrt(s6 * c6);
    r.k_2 = g2 * root * root;
    r.from_printed_formulas = true;
    return r;
}

Example1Reference example1_reference(std::size_t d, double theta) {
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "ex1 needs d ≥ 2");
    if (d >= 3) return example1_printed_formulas(d, theta);

    // d = 2: A = σ_z, B = σ_x, ψ = (c, −s); δA ψ = 2sc(s, c), δB ψ = cos2θ(s, c).
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double c2t = std::cos(2 * theta);
    Example1Reference r;
    r.x = {std::abs(2 * c * s * s), std::abs(2 * s * c * c)};
    r.y = {std::abs(c2t * s), std::abs(c2t * c)};
    const double all = 4 * s * s * c * c * c2t * c2t;
    r.i_1 = all;
    r.i_2 = all;
    r.i_d = all;
    r.k_2 = all;
    r.from_printed_formulas = false;
    return r;
}

}  // namespace uur
