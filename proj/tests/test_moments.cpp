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


#include <algorithm>
#include <array>
#include <cmath>

#include "doctest.h"
#include "test_support.hpp"
#include "uur/error.hpp"
#include "uur/moments.hpp"
#include "uur/random.hpp"
#include "uur/scenarios.hpp"

using namespace uur;
using uur::test::kI;
using uur::test::kPi;

namespace {

// Closed-form qubit purification, valid away from |r| = 0 and r1 = r2 = 0.
std::array<Complex, 4> closed_form_purification(const std::array<double, 3>& r) {
    const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    const double sm = std::sqrt(1.0 - len), sp = std::sqrt(1.0 + len);
    const double den = 2.0 * std::sqrt(2.0) * len;
    const Complex z(r[0], r[1]);
    return {
        Complex((r[2] * (sp - sm) + len * (sm + sp)) / den),
        (len * len - r[2] * r[2]) * (sm - sp) / (den * z),
        -z * (sm - sp) / den,
        Complex((r[2] * (sm - sp) + len * (sm + sp)) / den),
    };
}

void expect_error(ErrorCode code, auto&& fn) {
    try {
        fn();
        FAIL("expected " << to_string(code));
    } catch (const Error& e) {
        CHECK(e.code() == code);
    }
}

}  // namespace

TEST_CASE("state validation") {
    expect_error(ErrorCode::NotNormalized, [] { PureState(ComplexVector{1.0, 1.0}); });
    CHECK_NOTHROW(PureState(ComplexVector{1.0, 1e-6 * kI}, 1e-9));
    const PureState p = PureState::normalized(ComplexVector{3.0, 4.0 * kI});
    CHECK(p.amplitudes()[1] == Complex(0.0, 0.8));

    expect_error(ErrorCode::InvalidDensityMatrix, [] { DensityMatrix(ComplexMatrix::identity(2)); });
    expect_error(ErrorCode::InvalidDensityMatrix,
                 [] { DensityMatrix(ComplexMatrix::from_rows({{0.5, 0.1}, {0.2, 0.5}})); });
    expect_error(ErrorCode::InvalidDensityMatrix,
                 [] { DensityMatrix(ComplexMatrix::from_rows({{1.2, 0.0}, {0.0, -0.2}})); });
}

TEST_CASE("expectation") {
    CounterRng rng(1, 0);
    const PureState psi = random_state(rng, 4);
    CHECK(std::abs(expectation(ComplexMatrix::identity(4), psi) - 1.0) < 1e-14);

    const double t = kPi / 6;
    const PureState phi(ComplexVector{std::cos(t), -std::sin(t)});
    CHECK(std::abs(expectation(pauli_z(), phi) - 0.5) < 1e-14);

    CHECK(std::abs(expectation(shift_operator(3), PureState(ComplexVector{1.0, 0.0, 0.0}))) < 1e-15);
    CHECK_THROWS_AS(expectation(ComplexMatrix::identity(3), psi), Error);

    const ComplexMatrix u = random_unitary(rng, 4);
    CHECK(std::abs(expectation(u, psi)) <= 1.0 + 1e-10);
}

TEST_CASE("delta vectors") {
    CounterRng rng(2, 0);
    const PureState psi = random_state(rng, 3);
    const auto zero = delta_vector(ComplexMatrix::identity(3), psi);
    CHECK(zero.entries.norm() < 1e-15);

    const PureState plus(ComplexVector{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
    const auto dz = delta_vector(pauli_z(), plus);
    CHECK(std::abs(dz.entries[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(dz.entries[1] + 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(dz.entries.norm_squared() == doctest::Approx(1.0));

    SUBCASE("clock at d = 3, theta = pi/4") {
        const double th = kPi / 4, s = std::sin(th), c = std::cos(th);
        const Scenario sc = make_scenario(ExampleId::Ex1, 3);
        const auto psi3 = std::get<PureState>(sc.state(th));
        const auto a = delta_vector(sc.operators[0].matrix, psi3);
        const double gap = std::abs(1.0 - std::polar(1.0, -2.0 * kPi / 3));
        CHECK(std::abs(std::abs(a.entries[0]) - gap * s * s * c) < 1e-12);
        CHECK(std::abs(a.entries[1]) < 1e-15);
        CHECK(std::abs(std::abs(a.entries[2]) - gap * s * c * c) < 1e-12);
    }

    SUBCASE("non-unitary operator") {
        ComplexMatrix m = ComplexMatrix::identity(3);
        m(2, 2) = 1.1;
        expect_error(ErrorCode::NotUnitary, [&] { (void)delta_vector(m, psi); });
    }
    SUBCASE("dimension mismatch") {
        expect_error(ErrorCode::DimensionMismatch, [&] { (void)delta_vector(ComplexMatrix::identity(2), psi); });
    }
}

TEST_CASE("modulus pairs") {
    CounterRng rng(3, 0);
    const PureState psi = random_state(rng, 4);
    const auto trivial = modulus_pair(ComplexMatrix::identity(4), ComplexMatrix::identity(4), psi);
    for (std::size_t i = 0; i < 4; ++i) CHECK(trivial.x[i] + trivial.y[i] < 1e-15);

    SUBCASE("shift coordinates at d = 6, theta = pi/3") {
        const double th = kPi / 3, s = std::sin(th), c = std::cos(th);
        const Scenario sc = make_scenario(ExampleId::Ex1, 6);
        const auto pair = modulus_pair(sc.operators[0].matrix, sc.operators[1].matrix, std::get<PureState>(sc.state(th)));
        CHECK(pair.y[0] == doctest::Approx(s * s * s).epsilon(1e-12));
        CHECK(pair.y[1] == doctest::Approx(c).epsilon(1e-12));
        for (std::size_t i = 2; i < 5; ++i) CHECK(pair.y[i] < 1e-15);
        CHECK(pair.y[5] == doctest::Approx(s * s * c).epsilon(1e-12));
    }

    SUBCASE("squared norms are the variances") {
        for (int t = 0; t < 10; ++t) {
            const ComplexMatrix a = random_unitary(rng, 4), b = random_unitary(rng, 4);
            const auto pair = modulus_pair(a, b, psi);
            double xx = 0, yy = 0;
            for (std::size_t i = 0; i < 4; ++i) {
                xx += pair.x[i] * pair.x[i];
                yy += pair.y[i] * pair.y[i];
            }
            CHECK(std::abs(xx - (1.0 - std::norm(expectation(a, psi)))) < 1e-10);
            CHECK(std::abs(yy - (1.0 - std::norm(expectation(b, psi)))) < 1e-10);
        }
    }
}

TEST_CASE("correlation") {
    CounterRng rng(4, 0);
    const PureState psi = random_state(rng, 5);
    const ComplexMatrix a = random_unitary(rng, 5), b = random_unitary(rng, 5);
    const Complex self = correlation(a, a, psi);
    CHECK(std::abs(self.imag()) < 1e-12);
    CHECK(std::abs(self.real() - variance_pure(a, psi)) < 1e-12);
    CHECK(std::abs(correlation(ComplexMatrix::identity(5), b, psi)) < 1e-15);
    const Complex coords = inner(delta_vector(a, psi).entries, delta_vector(b, psi).entries);
    CHECK(std::abs(correlation(a, b, psi) - coords) < 1e-10);

    const double th = kPi / 6;
    const PureState q(ComplexVector{std::cos(th), -std::sin(th)});
    const Complex c = correlation(pauli_z(), pauli_x(), q);
    CHECK(std::abs(c - std::sin(2 * th) * std::cos(2 * th)) < 1e-14);
}

TEST_CASE("pure-state variance") {
    CounterRng rng(5, 0);
    const PureState psi = random_state(rng, 3);
    CHECK(variance_pure(ComplexMatrix::identity(3), psi) < 1e-15);
    CHECK(variance_pure(pauli_z(), PureState(ComplexVector{0.0, 1.0})) < 1e-15);
    const PureState plus(ComplexVector{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
    CHECK(variance_pure(pauli_z(), plus) == doctest::Approx(1.0));
    for (int t = 0; t < 20; ++t) {
        const ComplexMatrix u = random_unitary(rng, 3);
        const double v = variance_pure(u, psi);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0 + 1e-10);
        CHECK(std::abs(v - (1.0 - std::norm(expectation(u, psi)))) < 1e-10);
    }
}

TEST_CASE("mixed-state variance") {
    CounterRng rng(6, 0);
    const PureState psi = random_state(rng, 3);
    const ComplexMatrix u = random_unitary(rng, 3);
    CHECK(std::abs(variance_mixed(u, DensityMatrix::from_pure(psi)) - variance_pure(u, psi)) < 1e-12);

    ComplexMatrix half = ComplexMatrix::identity(2);
    half *= 0.5;
    CHECK(variance_mixed(pauli_z(), DensityMatrix(half)) == doctest::Approx(1.0));

    for (int t = 0; t < 50; ++t) {
        const DensityMatrix rho = random_density(rng, 4);
        const ComplexMatrix a = random_unitary(rng, 4);
        const auto e = hermitian_eig(rho.matrix());
        double avg = 0.0;
        for (std::size_t j = 0; j < 4; ++j) {
            avg += std::max(0.0, e.eigenvalues[j]) * variance_pure(a, PureState::normalized(e.eigenvectors.column(j)));
        }
        CHECK(variance_mixed(a, rho) >= avg - 1e-10);
        CHECK(std::abs(variance_mixed(a, rho) - (1.0 - std::norm(expectation(a, rho)))) < 1e-10);
    }
}

TEST_CASE("pure state lemma on small mixed instances") {
    CounterRng rng(7, 0);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
        const DensityMatrix rho = random_density(rng, n);
        const ComplexMatrix a = random_unitary(rng, n), b = random_unitary(rng, n);
        const auto e = hermitian_eig(rho.matrix());
        double min_prod = 2.0, min_sum = 3.0;
        for (std::size_t j = 0; j < n; ++j) {
            const PureState u = PureState::normalized(e.eigenvectors.column(j));
            min_prod = std::min(min_prod, variance_pure(a, u) * variance_pure(b, u));
            min_sum = std::min(min_sum, variance_pure(a, u) + variance_pure(b, u));
        }
        CHECK(variance_mixed(a, rho) * variance_mixed(b, rho) >= min_prod - 1e-9);
        CHECK(variance_mixed(a, rho) + variance_mixed(b, rho) >= min_sum - 1e-9);
    }
}

TEST_CASE("bloch density") {
    ComplexMatrix half = ComplexMatrix::identity(2);
    half *= 0.5;
    CHECK(max_abs_diff(bloch_density({0, 0, 0}).matrix(), half) < 1e-15);
    CHECK(max_abs_diff(bloch_density({0, 0, 1}).matrix(), ComplexMatrix::from_rows({{1, 0}, {0, 0}})) < 1e-15);
    const auto e = hermitian_eig(bloch_density({1.0 / 3, 2.0 / 3, 0.0}).matrix());
    CHECK(e.eigenvalues[0] == doctest::Approx((1 - std::sqrt(5.0) / 3) / 2).epsilon(1e-12));
    CHECK(e.eigenvalues[1] == doctest::Approx((1 + std::sqrt(5.0) / 3) / 2).epsilon(1e-12));
    expect_error(ErrorCode::BlochVectorTooLong, [] { (void)bloch_density({0.8, 0.8, 0.0}); });

    const std::array<double, 3> r{0.2, -0.3, 0.5};
    const DensityMatrix rho = bloch_density(r);
    CHECK(expectation(pauli_x(), rho).real() == doctest::Approx(r[0]));
    CHECK(expectation(pauli_y(), rho).real() == doctest::Approx(r[1]));
    CHECK(expectation(pauli_z(), rho).real() == doctest::Approx(r[2]));
}

TEST_CASE("purification") {
    SUBCASE("already pure") {
        const PureState p = purify(bloch_density({0, 0, 1}));
        CHECK(std::abs(p.amplitudes()[0] - 1.0) < 1e-12);
        for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(p.amplitudes()[i]) < 1e-12);
    }
    SUBCASE("maximally mixed") {
        const PureState p = purify(bloch_density({0, 0, 0}));
        const double h = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(p.amplitudes()[0] - h) < 1e-14);
        CHECK(std::abs(p.amplitudes()[1]) < 1e-14);
        CHECK(std::abs(p.amplitudes()[2]) < 1e-14);
        CHECK(std::abs(p.amplitudes()[3] - h) < 1e-14);
    }
    SUBCASE("closed-form qubit reference") {
        // The closed form lists entries in a different stacking order with
        // one sign flipped; moduli and the two diagonal entries agree.
        for (double th : {0.0, 0.4, 1.3, 2.0, 4.0}) {
            const std::array<double, 3> r{1.0 / 3, 2.0 / 3 * std::cos(th), 2.0 / 3 * std::sin(th)};
            const auto ref = closed_form_purification(r);
            const PureState p = purify(bloch_density(r));
            for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(std::abs(p.amplitudes()[i]) - std::abs(ref[i])) < 1e-12);
            CHECK(std::abs(p.amplitudes()[0] - ref[0]) < 1e-12);
            CHECK(std::abs(p.amplitudes()[3] - ref[3]) < 1e-12);
        }
    }
    SUBCASE("lifted expectations reproduce Tr(A rho)") {
        CounterRng rng(8, 0);
        for (int t = 0; t < 30; ++t) {
            const DensityMatrix rho = random_density(rng, 3);
            const PureState p = purify(rho);
            CHECK(p.dim() == 9);
            const ComplexMatrix a = random_unitary(rng, 3);
            CHECK(std::abs(expectation(lift(a), p) - expectation(a, rho)) < 1e-10);
            CHECK(std::abs(variance_pure(lift(a), p) - variance_mixed(a, rho)) < 1e-10);
        }
    }
    SUBCASE("reduced states") {
        CounterRng rng(9, 0);
        for (int t = 0; t < 20; ++t) {
            const DensityMatrix rho = random_density(rng, 3);
            const PureState p = purify(rho);
            CHECK(max_abs_diff(trace_out_first(p, 3), rho.matrix()) < 1e-9);
            // the other factor carries the transpose
            ComplexMatrix transposed(3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) transposed(i, j) = rho.matrix()(j, i);
            CHECK(max_abs_diff(trace_out_second(p, 3), transposed) < 1e-9);
        }
    }
}

TEST_CASE("pauli matrices") {
    CHECK(max_abs_diff(pauli_x() * pauli_y(), kI * pauli_z()) < 1e-15);
    CHECK(is_unitary(pauli_y(), 1e-15));
}
