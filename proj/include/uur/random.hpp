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

#ifndef UUR_RANDOM_HPP
#define UUR_RANDOM_HPP

#include <array>
#include <cstddef>
#include <cstdint>

#include "uur/linalg.hpp"
#include "uur/moments.hpp"

namespace uur {

/// Counter-based generator: draw k of stream (seed, stream) is a pure
/// function of (seed, stream, k), so trials can be generated in any order.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    /// Uniform on [0, 1).
    double uniform();
    /// Standard normal (Box–Muller, no cached second variate).
    double normal();
    /// Uniform integer in [lo, hi].
    std::size_t uniform_int(std::size_t lo, std::size_t hi);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Haar-distributed unitary: Gram–Schmidt on a complex Gaussian matrix, which
/// leaves R with a positive real diagonal.
ComplexMatrix random_unitary(CounterRng& rng, std::size_t n);
PureState random_state(CounterRng& rng, std::size_t n);
/// G G† / Tr(G G†) for complex Gaussian G.
DensityMatrix random_density(CounterRng& rng, std::size_t n);
/// Uniform in the open unit ball.
std::array<double, 3> random_bloch_vector(CounterRng& rng);

}  // namespace uur

#endif  // UUR_RANDOM_HPP
