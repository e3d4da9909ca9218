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

#include "uur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "uur/error.hpp"

namespace uur {

// --- SubsetSelection ------------------------------------------------------

SubsetSelection::SubsetSelection(std::size_t n, std::vector<std::size_t> indices)
    : n_(n), indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (indices_.empty() || indices_.size() > n_) {
        throw Error(ErrorCode::InvalidSubset, "block size " + std::to_string(indices_.size()) +
                                                  " is outside [1, " + std::to_string(n_) + "]");
    }
    if (indices_.back() >= n_) {
        throw Error(ErrorCode::InvalidSubset, "index " + std::to_string(indices_.back() + 1) +
                                                  " is outside [1, " + std::to_string(n_) + "]");
    }
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw Error(ErrorCode::InvalidSubset, "repeated index");
    }
}

SubsetSelection SubsetSelection::leading(std::size_t n, std::size_t m) {
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    return SubsetSelection(n, std::move(idx));
}

SubsetSelection SubsetSelection::from_one_based(std::size_t n, const std::vector<std::size_t>& indices) {
    std::vector<std::size_t> idx;
    idx.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i == 0) throw Error(ErrorCode::InvalidSubset, "one-based index 0");
        idx.push_back(i - 1);
    }
    return SubsetSelection(n, std::move(idx));
}

std::vector<std::size_t> SubsetSelection::one_based() const {
    std::vector<std::size_t> r(indices_);
    for (auto& i : r) ++i;
    return r;
}

std::vector<bool> SubsetSelection::mask() const {
    std::vector<bool> in(n_, false);
    for (std::size_t i : indices_) in[i] = true;
    return in;
}

std::string to_string(Flavor f) {
    switch (f) {
        case Flavor::Plain: return "plain";
        case Flavor::Convex: return "convex";
        case Flavor::Tilde: return "tilde";
    }
    return "plain";
}

Flavor flavor_from_string(const std::string& s) {
    if (s == "plain") return Flavor::Plain;
    if (s == "convex") return Flavor::Convex;
    if (s == "tilde") return Flavor::Tilde;
    throw Error(ErrorCode::InvalidArgument, "unknown flavor '" + s + "'");
}

// --- helpers ----------------------------------------------------------------

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    // r·(n−k+i)/i is exact at every step; divide out gcd(r, i) first so the
    // multiplication is the only place overflow can occur.
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
        const std::uint64_t t = (n - k + i) / (i / g);
        r /= g;
        if (r > std::numeric_limits<std::uint64_t>::max() / t) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r *= t;
    }
    return r;
}

namespace {

double sum_squares(const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += e * e;
    return s;
}

// K for the block marked by `in`. Both block sums accumulate in ascending
// index order, so the value depends only on the index set.
double block_value(const ModulusPair& pair, const std::vector<bool>& in) {
    double xs = 0.0, ys = 0.0, xc = 0.0, yc = 0.0;
    for (std::size_t i = 0; i < pair.dim(); ++i) {
        const double x2 = pair.x[i] * pair.x[i];
        const double y2 = pair.y[i] * pair.y[i];
        if (in[i]) {
            xs += x2;
            ys += y2;
        } else {
            xc += x2;
            yc += y2;
        }
    }
    const double root = std::sqrt(xs) * std::sqrt(ys) + std::sqrt(xc) * std::sqrt(yc);
    return root * root;
}

void require_block(const ModulusPair& pair, const SubsetSelection& block) {
    if (block.n() != pair.dim()) {
        throw Error(ErrorCode::InvalidSubset, "block is over " + std::to_string(block.n()) +
                                                  " indices but the pair has dimension " +
                                                  std::to_string(pair.dim()));
    }
}

void require_weight(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::WeightOutOfRange, "v = " + std::to_string(v) + " is outside [0, 1]");
    }
}

void require_block_size(std::size_t n, std::size_t m) {
    if (m < 1 || m > n) {
        throw Error(ErrorCode::InvalidSubset,
                    "m = " + std::to_string(m) + " is outside [1, " + std::to_string(n) + "]");
    }
}

void require_pair(const ModulusPair& pair) {
    if (pair.dim() == 0 || pair.x.size() != pair.y.size()) {
        throw Error(ErrorCode::DimensionMismatch, "x and y must be non-empty and equally long");
    }
}

}  // namespace

double variance_product(const ModulusPair& pair) {
    return sum_squares(pair.x) * sum_squares(pair.y);
}

double bong_lb(const ModulusPair& pair) {
    return std::norm(inner(pair.alpha.entries, pair.beta.entries));
}

double k_m(const ModulusPair& pair, const SubsetSelection& block) {
    require_pair(pair);
    require_block(pair, block);
    return block_value(pair, block.mask());
}

double k_m_v(const ModulusPair& pair, const SubsetSelection& block, double v) {
    require_weight(v);
    return v * k_m(pair, block) + (1.0 - v) * variance_product(pair);
}

TildeBlock k_tilde_m(const ModulusPair& pair, std::size_t m, std::uint64_t cap) {
    require_pair(pair);
    const std::size_t n = pair.dim();
    require_block_size(n, m);
    const std::uint64_t count = binomial(n, m);
    if (count > cap) throw SearchSpaceTooLarge(count, cap);

    std::vector<std::size_t> comb(m);
    for (std::size_t i = 0; i < m; ++i) comb[i] = i;
    std::vector<bool> in(n, false);

    double best = -1.0;
    std::vector<std::size_t> best_comb;
    while (true) {
        std::fill(in.begin(), in.end(), false);
        for (std::size_t i : comb) in[i] = true;
        const double value = block_value(pair, in);
        if (value > best) {
            best = value;
            best_comb = comb;
        }
        // next combination in lexicographic order
        std::size_t i = m;
        while (i > 0 && comb[i - 1] == n - m + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < m; ++j) comb[j] = comb[j - 1] + 1;
    }
    return TildeBlock{best, SubsetSelection(n, std::move(best_comb)), false};
}

TildeBlock k_tilde_m_greedy(const ModulusPair& pair, std::size_t m) {
    require_pair(pair);
    const std::size_t n = pair.dim();
    require_block_size(n, m);

    std::vector<bool> in(n, false);
    std::vector<std::size_t> chosen;
    for (std::size_t step = 0; step < m; ++step) {
        double best = -1.0;
        std::size_t best_i = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (in[i]) continue;
            in[i] = true;
            const double value = block_value(pair, in);
            in[i] = false;
            if (value > best) {
                best = value;
                best_i = i;
            }
        }
        in[best_i] = true;
        chosen.push_back(best_i);
    }
    SubsetSelection greedy(n, std::move(chosen));
    const SubsetSelection lead = SubsetSelection::leading(n, m);
    const double greedy_value = block_value(pair, greedy.mask());
    const double lead_value = block_value(pair, lead.mask());
    if (lead_value > greedy_value ||
        (lead_value == greedy_value && lead.indices() < greedy.indices())) {
        return TildeBlock{lead_value, lead, true};
    }
    return TildeBlock{greedy_value, greedy, true};
}

TildeOverall k_tilde(const ModulusPair& pair, std::uint64_t cap, SearchMode mode) {
    require_pair(pair);
    const std::size_t n = pair.dim();
    const std::size_t top = std::max<std::size_t>(1, n / 2);
    if (mode == SearchMode::Exact) {
        for (std::size_t m = 1; m <= top; ++m) {
            const std::uint64_t count = binomial(n, m);
            if (count > cap) throw SearchSpaceTooLarge(count, cap);
        }
    }
    TildeOverall best;
    best.value = -1.0;
    for (std::size_t m = 1; m <= top; ++m) {
        TildeBlock block = mode == SearchMode::Exact ? k_tilde_m(pair, m, cap)
                                                     : k_tilde_m_greedy(pair, m);
        if (block.value > best.value) {
            best = TildeOverall{block.value, m, std::move(block.subset), block.heuristic};
        }
    }
    return best;
}

double yu_i_d(const ModulusPair& pair, std::size_t d) {
    require_pair(pair);
    const std::size_t n = pair.dim();
    if (d < 1 || d > n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "d = " + std::to_string(d) + " is outside [1, " + std::to_string(n) + "]");
    }
    const auto& a = pair.alpha.entries;
    const auto& b = pair.beta.entries;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += pair.x[i] * pair.x[i] * pair.y[i] * pair.y[i];
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (j + 1 > d) {
                s += pair.x[i] * pair.x[i] * pair.y[j] * pair.y[j] +
                     pair.x[j] * pair.x[j] * pair.y[i] * pair.y[i];
            } else {
                s += 2.0 * (std::conj(a[i]) * b[i] * a[j] * std::conj(b[j])).real();
            }
        }
    }
    return s;
}

std::vector<double> yu_sequence(const ModulusPair& pair) {
    std::vector<double> out;
    out.reserve(pair.dim());
    for (std::size_t d = 1; d <= pair.dim(); ++d) out.push_back(yu_i_d(pair, d));
    return out;
}

double li_i1prime(const ModulusPair& pair) {
    require_pair(pair);
    const std::size_t n = pair.dim();
    if (n < 3) {
        throw Error(ErrorCode::DimensionTooSmall,
                    "I_1' needs dimension ≥ 3, got " + std::to_string(n));
    }
    const auto& x = pair.x;
    const auto& y = pair.y;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i] * y[i] * y[i];
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) s += x[i] * x[i] * y[j] * y[j];
    double tail = 0.0;
    for (std::size_t i = 3; i < n; ++i) tail += x[i] * x[i];
    s += y[0] * y[0] * tail;
    s += 2.0 * y[0] * y[0] * x[1] * x[2];
    return s;
}

ComplexMatrix gram_matrix(const std::vector<ComplexMatrix>& ops, const PureState& psi) {
    std::vector<ComplexVector> images;
    images.reserve(ops.size() + 1);
    images.push_back(psi.amplitudes());
    for (std::size_t k = 0; k < ops.size(); ++k) {
        if (ops[k].dim() != psi.dim()) {
            throw Error(ErrorCode::DimensionMismatch,
                        "operator " + std::to_string(k + 1) + " has dimension " +
                            std::to_string(ops[k].dim()) + ", state has " +
                            std::to_string(psi.dim()));
        }
        const double defect = unitarity_defect(ops[k]);
        if (!(defect <= kOperatorUnitaryTol)) {
            throw Error(ErrorCode::NotUnitary, "operator " + std::to_string(k + 1) +
                                                   " deviates from unitarity by " +
                                                   std::to_string(defect));
        }
        images.push_back(ops[k] * psi.amplitudes());
    }
    const std::size_t size = images.size();
    ComplexMatrix g(size);
    for (std::size_t j = 0; j < size; ++j) {
        g(j, j) = 1.0;
        for (std::size_t k = j + 1; k < size; ++k) {
            const Complex value = inner(images[j], images[k]);
            g(j, k) = value;
            g(k, j) = std::conj(value);
        }
    }
    return g;
}

double bong_three_op_rhs(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                         const PureState& psi) {
    const double var_a = variance_pure(a, psi);
    const double var_b = variance_pure(b, psi);
    const double var_c = variance_pure(c, psi);
    const Complex c_bc = correlation(b, c, psi);
    const Complex c_ac = correlation(a, c, psi);
    const Complex c_ab = correlation(a, b, psi);
    const Complex c_cb = correlation(c, b, psi);
    const Complex c_ba = correlation(b, a, psi);
    return var_a * std::norm(c_bc) + var_b * std::norm(c_ac) + var_c * std::norm(c_ab) -
           2.0 * (c_ac * c_cb * c_ba).real();
}

double multi_op_bound(const std::vector<ComplexMatrix>& ops, const PureState& psi, std::size_t m,
                      double v, Flavor flavor, std::uint64_t cap, SearchMode mode) {
    const std::size_t l = ops.size();
    if (l < 2) {
        throw Error(ErrorCode::InvalidArgument, "need at least two operators, got " + std::to_string(l));
    }
    require_weight(v);
    std::vector<DeltaVector> deltas;
    deltas.reserve(l);
    for (const auto& op : ops) deltas.push_back(delta_vector(op, psi));
    const std::size_t n = psi.dim();
    require_block_size(n, m);
    const SubsetSelection lead = SubsetSelection::leading(n, m);

    double product = 1.0;
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = i + 1; j < l; ++j) {
            const ModulusPair pair = ModulusPair::from_deltas(deltas[i].entries, deltas[j].entries);
            switch (flavor) {
                case Flavor::Plain: product *= k_m(pair, lead); break;
                case Flavor::Convex: product *= k_m_v(pair, lead, v); break;
                case Flavor::Tilde:
                    product *= mode == SearchMode::Greedy ? k_tilde_m_greedy(pair, m).value
                                                          : k_tilde_m(pair, m, cap).value;
                    break;
            }
        }
    }
    return std::pow(product, 1.0 / static_cast<double>(l - 1));
}

BoundSet bound_report(const ModulusPair& pair, std::size_t m, double v, std::uint64_t cap,
                      SearchMode mode) {
    require_pair(pair);
    require_weight(v);
    const std::size_t n = pair.dim();
    require_block_size(n, m);
    const SubsetSelection lead = SubsetSelection::leading(n, m);

    BoundSet out;
    out.m = m;
    out.v = v;
    out.variance_product = variance_product(pair);
    out.lb = bong_lb(pair);
    out.k_m = k_m(pair, lead);
    out.k_m_v = k_m_v(pair, lead, v);

    TildeBlock block = mode == SearchMode::Exact ? k_tilde_m(pair, m, cap) : k_tilde_m_greedy(pair, m);
    out.k_tilde_m = block.value;
    out.k_tilde_m_subset = block.subset;
    TildeOverall overall = k_tilde(pair, cap, mode);
    if (mode == SearchMode::Greedy && block.value > overall.value) {
        // m above ⌊n/2⌋ searched greedily can beat the greedy passes below it
        overall = TildeOverall{block.value, m, block.subset, true};
    }
    out.k_tilde = overall.value;
    out.k_tilde_m_index = overall.m;
    out.k_tilde_argmax = overall.subset;
    out.heuristic = mode == SearchMode::Greedy;

    out.i_d = yu_sequence(pair);
    if (n >= 3) out.i_1_prime = li_i1prime(pair);
    return out;
}

BoundSet bound_report(const ComplexMatrix& a, const ComplexMatrix& b, const PureState& psi,
                      std::size_t m, double v, std::uint64_t cap, SearchMode mode) {
    return bound_report(modulus_pair(a, b, psi), m, v, cap, mode);
}

std::vector<std::string> chain_violations(const BoundSet& s, double slack) {
    std::vector<std::string> out;
    auto le = [&](double lhs, double rhs, const char* lname, const char* rname) {
        if (!(lhs <= rhs + slack)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << lname << " = " << lhs << " exceeds " << rname << " = " << rhs;
            out.push_back(msg.str());
        }
    };
    auto eq = [&](double lhs, double rhs, const char* lname, const char* rname) {
        if (!(std::abs(lhs - rhs) <= slack)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << lname << " = " << lhs << " differs from " << rname << " = " << rhs;
            out.push_back(msg.str());
        }
    };
    le(s.lb, s.k_m, "lb", "k_m");
    le(s.k_m, s.k_m_v, "k_m", "k_m_v");
    le(s.k_m_v, s.variance_product, "k_m_v", "variance_product");
    le(s.k_m, s.k_tilde_m, "k_m", "k_tilde_m");
    // m = n leaves Sᶜ empty, so K̃_n is the product itself; only proper
    // splits are covered by K̃.
    const SubsetSelection& blk = s.k_tilde_m_subset;
    if (blk.m() < blk.n() || blk.n() == 1) le(s.k_tilde_m, s.k_tilde, "k_tilde_m", "k_tilde");
    le(s.k_tilde, s.variance_product, "k_tilde", "variance_product");
    if (!s.i_d.empty()) {
        eq(s.i_d.front(), s.variance_product, "i_1", "variance_product");
        eq(s.i_d.back(), s.lb, "i_n", "lb");
        for (std::size_t d = 1; d < s.i_d.size(); ++d) {
            const std::string l = "i_" + std::to_string(d + 1);
            const std::string r = "i_" + std::to_string(d);
            le(s.i_d[d], s.i_d[d - 1], l.c_str(), r.c_str());
        }
    }
    return out;
}

}  // namespace uur
