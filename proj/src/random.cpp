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

#include "uur/random.hpp"

#include <cmath>
#include <numbers>

namespace uur {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Complex complex_normal(CounterRng& rng) {
    const double re = rng.normal();
    const double im = rng.normal();
    return Complex(re, im) / std::sqrt(2.0);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(splitmix64(seed) ^ (stream * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL))) {}

std::uint64_t CounterRng::next_u64() {
    return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
}

double CounterRng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t CounterRng::uniform_int(std::size_t lo, std::size_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::size_t>(next_u64() % span);
}

ComplexMatrix random_unitary(CounterRng& rng, std::size_t n) {
    std::vector<ComplexVector> cols;
    cols.reserve(n);
    while (cols.size() < n) {
        ComplexVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = complex_normal(rng);
        // two passes of modified Gram–Schmidt keep the columns orthonormal to ~1e-15
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : cols) v -= inner(q, v) * q;
        const double norm = v.norm();
        if (norm < 1e-8) continue;
        v *= 1.0 / norm;
        cols.push_back(std::move(v));
    }
    ComplexMatrix u(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) u(i, j) = cols[j][i];
    return u;
}

PureState random_state(CounterRng& rng, std::size_t n) {
    ComplexVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = complex_normal(rng);
    return PureState::normalized(std::move(v));
}

DensityMatrix random_density(CounterRng& rng, std::size_t n) {
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = complex_normal(rng);
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    for (std::size_t i = 0; i < n; ++i) {
        rho(i, i) = rho(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) rho(j, i) = std::conj(rho(i, j));
    }
    return DensityMatrix(std::move(rho));
}

std::array<double, 3> random_bloch_vector(CounterRng& rng) {
    while (true) {
        std::array<double, 3> r{2 * rng.uniform() - 1, 2 * rng.uniform() - 1, 2 * rng.uniform() - 1};
        if (r[0] * r[0] + r[1] * r[1] + r[2] * r[2] < 1.0) return r;
    }
}

}  // namespace uur
