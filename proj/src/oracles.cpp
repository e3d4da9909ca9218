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

#include "uur/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace uur::oracle {

double permuted_block_bound(const std::vector<double>& x, const std::vector<double>& y,
                            const std::vector<std::size_t>& perm, std::size_t m) {
    const std::size_t n = x.size();
    std::vector<char> head(n, 0);
    for (std::size_t k = 0; k < m; ++k) head[perm[k]] = 1;
    double x_head = 0, y_head = 0, x_tail = 0, y_tail = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double& xs = head[i] ? x_head : x_tail;
        double& ys = head[i] ? y_head : y_tail;
        xs += x[i] * x[i];
        ys += y[i] * y[i];
    }
    const double r = std::sqrt(x_head) * std::sqrt(y_head) + std::sqrt(x_tail) * std::sqrt(y_tail);
    return r * r;
}

double permutation_k_tilde_m(const std::vector<double>& x, const std::vector<double>& y,
                             std::size_t m) {
    std::vector<std::size_t> perm(x.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = -1.0;
    do {
        best = std::max(best, permuted_block_bound(x, y, perm, m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

double yu_i_d_lagrange(const ComplexVector& alpha, const ComplexVector& beta, std::size_t d) {
    const std::size_t n = alpha.dim();
    Complex dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += std::conj(alpha[i]) * beta[i];
    double total = std::norm(dot);
    // one-based k > d  ⇔  zero-based k ≥ d
    for (std::size_t k = d; k < n; ++k)
        for (std::size_t i = 0; i < k; ++i) total += std::norm(beta[i] * alpha[k] - alpha[i] * beta[k]);
    return total;
}

double delta_gram_det3(const ComplexVector& a, const ComplexVector& b, const ComplexVector& c) {
    auto ip = [](const ComplexVector& u, const ComplexVector& v) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
        return s;
    };
    const double gaa = ip(a, a).real(), gbb = ip(b, b).real(), gcc = ip(c, c).real();
    const Complex gab = ip(a, b), gbc = ip(b, c), gca = ip(c, a);
    return gaa * gbb * gcc + 2.0 * (gab * gbc * gca).real() - gaa * std::norm(gbc) -
           gbb * std::norm(gca) - gcc * std::norm(gab);
}

}  // namespace uur::oracle
