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

// Lower bounds on the variance product ΔA²ΔB² of two unitary operators.
//
// All bounds are functions of the delta coordinate vectors α, β (and their
// moduli x, y). The block bounds split the coordinates into an index subset
// S and its complement Sᶜ:
//
//   K_S   = (|x_S||y_S| + |x_Sᶜ||y_Sᶜ|)²
//   K_S^v = v·K_S + (1 − v)·|x|²|y|²
//
// and satisfy (x·y)² ≤ K_S ≤ K_S^v ≤ |x|²|y|² = ΔA²ΔB². K_m is K_S for the
// leading block S = {1..m}. K̃_m maximizes K_S over all |S| = m, K̃ then
// maximizes over m.
//
// Index conventions: SubsetSelection stores zero-based positions; reports
// print them one-based.

#ifndef UUR_BOUNDS_HPP
#define UUR_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uur/linalg.hpp"
#include "uur/moments.hpp"

namespace uur {

inline constexpr std::uint64_t kDefaultSearchCap = 5'000'000;
inline constexpr double kChainSlack = 1e-10;
inline constexpr double kDefaultWeight = 0.1;

/// An index block S ⊆ {0..n−1}, kept sorted, 1 ≤ |S| ≤ n.
class SubsetSelection {
public:
    /// Throws Error(InvalidSubset) on empty, out-of-range or repeated
    /// indices. Unsorted input is sorted.
    SubsetSelection(std::size_t n, std::vector<std::size_t> indices);
    /// {0, ..., m−1}
    static SubsetSelection leading(std::size_t n, std::size_t m);
    static SubsetSelection from_one_based(std::size_t n, const std::vector<std::size_t>& indices);

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return indices_.size(); }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    std::vector<std::size_t> one_based() const;
    std::vector<bool> mask() const;

    friend bool operator==(const SubsetSelection&, const SubsetSelection&) = default;

private:
    std::size_t n_;
    std::vector<std::size_t> indices_;
};

enum class Flavor { Plain, Convex, Tilde };
enum class SearchMode { Exact, Greedy };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

struct TildeBlock {
    double value = 0.0;
    SubsetSelection subset{1, {0}};
    bool heuristic = false;
};

struct TildeOverall {
    double value = 0.0;
    std::size_t m = 0;
    SubsetSelection subset{1, {0}};
    bool heuristic = false;
};

/// binomial(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// |x|²|y|² = ΔA²ΔB²
double variance_product(const ModulusPair& pair);
/// |Σ conj(α_i)β_i|², the Gram-determinant bound.
double bong_lb(const ModulusPair& pair);

double k_m(const ModulusPair& pair, const SubsetSelection& block);
/// Throws Error(WeightOutOfRange) unless v ∈ [0, 1].
double k_m_v(const ModulusPair& pair, const SubsetSelection& block, double v);

/// Exhaustive maximum of K_S over |S| = m; ties go to the lexicographically
/// smallest S. Throws SearchSpaceTooLarge if binomial(n, m) > cap.
TildeBlock k_tilde_m(const ModulusPair& pair, std::size_t m, std::uint64_t cap = kDefaultSearchCap);

/// Greedy approximation to k_tilde_m: grows S one index at a time, taking
/// the largest K at each step, and never reports less than the leading block.
/// The result is flagged heuristic.
TildeBlock k_tilde_m_greedy(const ModulusPair& pair, std::size_t m);

/// max over m = 1..max(1, ⌊n/2⌋) of k_tilde_m; K̃_m = K̃_{n−m} covers the rest.
TildeOverall k_tilde(const ModulusPair& pair, std::uint64_t cap = kDefaultSearchCap,
                     SearchMode mode = SearchMode::Exact);

/// Fine-grained bound I_d, d one-based in [1, n]:
///   I_d = Σ_i x_i²y_i² + Σ_{i<j, j>d} (x_i²y_j² + x_j²y_i²)
///       + Σ_{i<j≤d} 2·Re(conj(α_i)β_i α_j conj(β_j))
/// so that I_1 = |x|²|y|² and I_n = |Σ conj(α_i)β_i|².
double yu_i_d(const ModulusPair& pair, std::size_t d);
/// I_1, ..., I_n
std::vector<double> yu_sequence(const ModulusPair& pair);

/// I_1' = Σ x_i²y_i² + Σ_{j≠1, i≠j} x_i²y_j² + y_1² Σ_{i≥4} x_i² + 2y_1²x_2x_3
/// (one-based). Requires n ≥ 3, else Error(DimensionTooSmall).
double li_i1prime(const ModulusPair& pair);

/// G_jk = <U_j† U_k> over U_0 = I followed by `ops`.
ComplexMatrix gram_matrix(const std::vector<ComplexMatrix>& ops, const PureState& psi);

/// Right-hand side of the three-operator Gram inequality
///   ΔA²ΔB²ΔC² ≥ ΔA²|c_BC|² + ΔB²|c_AC|² + ΔC²|c_AB|² − 2Re(c_AC c_CB c_BA)
/// with c_XY = <X†Y> − <X†><Y>.
double bong_three_op_rhs(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                         const PureState& psi);

/// (∏_{i<j} K^{ij})^{1/(l−1)} where K^{ij} is K_m, K_m^v or K̃_m for the pair
/// (A_i, A_j), chosen by `flavor`. Bounds ∏_i ΔA_i². Greedy mode swaps the
/// exhaustive K̃_m for k_tilde_m_greedy.
double multi_op_bound(const std::vector<ComplexMatrix>& ops, const PureState& psi, std::size_t m,
                      double v, Flavor flavor, std::uint64_t cap = kDefaultSearchCap,
                      SearchMode mode = SearchMode::Exact);

struct BoundSet {
    double variance_product = 0.0;
    double lb = 0.0;
    double k_m = 0.0;
    double k_m_v = 0.0;
    double k_tilde_m = 0.0;
    SubsetSelection k_tilde_m_subset{1, {0}};
    double k_tilde = 0.0;
    std::size_t k_tilde_m_index = 1;  // the m achieving K̃
    SubsetSelection k_tilde_argmax{1, {0}};
    std::vector<double> i_d;             // I_1..I_n, stored zero-based
    std::optional<double> i_1_prime;     // absent when n < 3
    std::size_t m = 1;
    double v = kDefaultWeight;
    bool heuristic = false;
};

BoundSet bound_report(const ComplexMatrix& a, const ComplexMatrix& b, const PureState& psi,
                      std::size_t m, double v, std::uint64_t cap = kDefaultSearchCap,
                      SearchMode mode = SearchMode::Exact);
BoundSet bound_report(const ModulusPair& pair, std::size_t m, double v,
                      std::uint64_t cap = kDefaultSearchCap, SearchMode mode = SearchMode::Exact);

/// Human-readable descriptions of every BoundSet chain relation that fails
/// by more than `slack`. Empty means the set is consistent. K̃_m ≤ K̃ is
/// skipped for m = n, where the block has no complement.
std::vector<std::string> chain_violations(const BoundSet& bounds, double slack = kChainSlack);

}  // namespace uur

#endif  // UUR_BOUNDS_HPP
