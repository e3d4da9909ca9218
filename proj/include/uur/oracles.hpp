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

// Brute-force reference computations used by the self-check suite and the
// tests. None of these call into bounds.cpp; they recompute from the
// definitions by a different route.

#ifndef UUR_ORACLES_HPP
#define UUR_ORACLES_HPP

#include <cstddef>
#include <vector>

#include "uur/moments.hpp"

namespace uur::oracle {

/// σ(K_m) for a permutation σ of {0..n−1}: the block is {σ(0), ..., σ(m−1)}.
/// Block sums are accumulated in ascending original index, since σ(K_m)
/// depends only on which indices occupy the block.
double permuted_block_bound(const std::vector<double>& x, const std::vector<double>& y,
                            const std::vector<std::size_t>& perm, std::size_t m);

/// max over all n! permutations of σ(K_m). Intended for n ≤ 8.
double permutation_k_tilde_m(const std::vector<double>& x, const std::vector<double>& y,
                             std::size_t m);

/// I_d via the Lagrange identity
///   I_d = |Σ conj(α_i)β_i|² + Σ_{k>d} Σ_{i<k} |β_i α_k − α_i β_k|²
/// (one-based d).
double yu_i_d_lagrange(const ComplexVector& alpha, const ComplexVector& beta, std::size_t d);

/// 3×3 Hermitian determinant of the delta-vector Gram matrix, which equals
/// the (l+1)×(l+1) Gram determinant of ψ, Aψ, Bψ, Cψ.
double delta_gram_det3(const ComplexVector& a, const ComplexVector& b, const ComplexVector& c);

}  // namespace uur::oracle

#endif  // UUR_ORACLES_HPP
