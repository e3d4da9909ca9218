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


#include "uur/check.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <utility>

#include "json.hpp"
#include "uur/bounds.hpp"
#include "uur/error.hpp"
#include "uur/io.hpp"
#include "uur/linalg.hpp"
#include "uur/moments.hpp"
#include "uur/oracles.hpp"
#include "uur/random.hpp"
#include "uur/scenarios.hpp"

namespace uur {

using nlohmann::ordered_json;

namespace {

constexpr double kSlack = 1e-10;

// --- counterexample serialization (same schema as scenario input files) ---

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json matrix_json(const ComplexMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(complex_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json vector_json(const ComplexVector& v) {
    ordered_json out = ordered_json::array();
    for (Complex z : v) out.push_back(complex_json(z));
    return out;
}

ordered_json instance_json(const std::vector<ComplexMatrix>& ops, const ordered_json& state,
                           ordered_json params = ordered_json::object()) {
    ordered_json j;
    j["dimension"] = ops.empty() ? 0 : ops.front().dim();
    ordered_json list = ordered_json::array();
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const char name[2] = {static_cast<char>('A' + k), '\0'};
        list.push_back({{"name", name}, {"matrix", matrix_json(ops[k])}});
    }
    j["operators"] = std::move(list);
    j["state"] = state;
    if (!params.empty()) j["params"] = std::move(params);
    return j;
}

ordered_json pure_json(const PureState& psi) { return {{"pure", vector_json(psi.amplitudes())}}; }
ordered_json density_json(const DensityMatrix& rho) { return {{"density", matrix_json(rho.matrix())}}; }

// --- bookkeeping -----------------------------------------------------------

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void begin_trial() { ++result_.trials; }

    // lhs ≤ rhs, allowing `tol`.
    template <class Instance>
    void le(double lhs, double rhs, double tol, const char* what, Instance&& instance) {
        record(rhs + tol - lhs, !(lhs <= rhs + tol), lhs, rhs, tol, what, instance);
    }

    // |a − b| ≤ tol.
    template <class Instance>
    void eq(double a, double b, double tol, const char* what, Instance&& instance) {
        const double gap = std::abs(a - b);
        record(tol - gap, !(gap <= tol), a, b, tol, what, instance);
    }

    SuiteResult take() { return std::move(result_); }

private:
    template <class Instance>
    void record(double margin, bool violated, double lhs, double rhs, double tol, const char* what,
                Instance& instance) {
        if (std::isnan(margin)) margin = -std::numeric_limits<double>::infinity();
        margin += 0.0;  // print −0 as 0
        worst_ = std::min(worst_, margin);
        result_.worst_margin = worst_;
        if (!violated) return;
        ++result_.violations;
        if (result_.counterexample) return;
        ordered_json j;
        j["suite"] = result_.name;
        j["trial"] = result_.trials - 1;
        j["check"] = what;
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        j["tolerance"] = tol;
        const ordered_json extra = instance();
        for (const auto& [k, v] : extra.items()) j[k] = v;
        result_.counterexample = j.dump();
    }

    SuiteResult result_;
    double worst_ = std::numeric_limits<double>::infinity();
};

// Each trial owns a private stream, so results do not depend on the order
// in which trials run.
CounterRng trial_rng(std::uint64_t seed, std::size_t suite, std::size_t trial) {
    return CounterRng(seed, (static_cast<std::uint64_t>(suite) << 32) | static_cast<std::uint64_t>(trial));
}

ComplexMatrix random_hermitian(CounterRng& rng, std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = rng.normal();
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

ComplexMatrix random_gaussian(CounterRng& rng, std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
    return m;
}

constexpr std::array<double, 4> kWeights{0.0, 0.1, 0.5, 1.0};

struct Context {
    CheckOptions opt;
    std::size_t suite_index = 0;
};

using SuiteFn = SuiteResult (*)(const Context&);

// --- numeric core ----------------------------------------------------------

SuiteResult suite_eig(const Context& c) {
    Suite s("linalg.hermitian_eig");
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const std::size_t n = rng.uniform_int(1, c.opt.max_dim);
        const ComplexMatrix m = random_hermitian(rng, n);
        const auto inst = [&] { return ordered_json{{"matrix", matrix_json(m)}}; };
        s.begin_trial();
        const EigDecomposition e = hermitian_eig(m);
        double sum = 0.0;
        for (double l : e.eigenvalues) sum += l;
        s.eq(sum, m.trace().real(), 1e-9, "sum of eigenvalues = trace", inst);
        const ComplexMatrix& v = e.eigenvectors;
        s.eq(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(n)), 0.0, 1e-10, "V†V = I", inst);
        const ComplexMatrix rebuilt = v * ComplexMatrix::diagonal(std::span<const double>(e.eigenvalues)) * v.adjoint();
        s.eq(max_abs_diff(rebuilt, m), 0.0, 1e-8, "V diag(λ) V† = M", inst);
        for (std::size_t k = 1; k < n; ++k) {
            s.le(e.eigenvalues[k - 1], e.eigenvalues[k], 0.0, "eigenvalues ascending", inst);
        }
    }
    return s.take();
}

SuiteResult suite_psd_sqrt(const Context& c) {
    Suite s("linalg.psd_sqrt");
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const std::size_t n = rng.uniform_int(1, c.opt.max_dim);
        const ComplexMatrix g = random_gaussian(rng, n);
        ComplexMatrix m = g * g.adjoint();
        m *= 1.0 / m.trace().real();
        const auto inst = [&] { return ordered_json{{"matrix", matrix_json(m)}}; };
        s.begin_trial();
        const ComplexMatrix r = psd_sqrt(m);
        s.eq(max_abs_diff(r * r, m), 0.0, 1e-8, "psd_sqrt(M)² = M", inst);
    }
    return s.take();
}

SuiteResult suite_vec_kron(const Context& c) {
    Suite s("linalg.vec_kron");
    const std::size_t top = std::min<std::size_t>(6, c.opt.max_dim);
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const std::size_t n = rng.uniform_int(1, top);
        const ComplexMatrix a = random_gaussian(rng, n);
        const ComplexMatrix m = random_gaussian(rng, n);
        const auto inst = [&] { return ordered_json{{"a", matrix_json(a)}, {"m", matrix_json(m)}}; };
        s.begin_trial();
        const ComplexVector lhs = kron(ComplexMatrix::identity(n), a) * vec(m);
        s.eq(max_abs_diff(lhs, vec(a * m)), 0.0, 1e-12, "(I⊗A)vec(M) = vec(AM)", inst);
    }
    return s.take();
}

SuiteResult suite_kron_unitary(const Context& c) {
    Suite s("linalg.kron_unitary");
    const std::size_t top = std::min<std::size_t>(4, c.opt.max_dim);
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const ComplexMatrix a = random_unitary(rng, rng.uniform_int(1, top));
        const ComplexMatrix b = random_unitary(rng, rng.uniform_int(1, top));
        const auto inst = [&] { return ordered_json{{"a", matrix_json(a)}, {"b", matrix_json(b)}}; };
        s.begin_trial();
        s.le(unitarity_defect(kron(a, b)), 0.0, 1e-10, "kron(A,B) unitary", inst);
    }
    return s.take();
}

// --- moments ---------------------------------------------------------------

SuiteResult suite_variance(const Context& c) {
    Suite s("moments.variance");
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const std::size_t n = rng.uniform_int(2, c.opt.max_dim);
        const ComplexMatrix a = random_unitary(rng, n);
        const PureState psi = random_state(rng, n);
        const auto inst = [&] { return instance_json({a}, pure_json(psi)); };
        s.begin_trial();
        const double v1 = variance_pure(a, psi);
        const double v2 = 1.0 - std::norm(expectation(a, psi));
        const double v3 = delta_vector(a, psi).entries.norm_squared();
        s.eq(v1, v2, kSlack, "‖δAψ‖² = 1 − |⟨A⟩|²", inst);
        s.eq(v1, v3, kSlack, "‖δAψ‖² = Σ|α_i|²", inst);
    }
    return s.take();
}

SuiteResult suite_correlation(const Context& c) {
    Suite s("moments.correlation");
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const std::size_t n = rng.uniform_int(2, c.opt.max_dim);
        const ComplexMatrix a = random_unitary(rng, n);
        const ComplexMatrix b = random_unitary(rng, n);
        const PureState psi = random_state(rng, n);
        const auto inst = [&] { return instance_json({a, b}, pure_json(psi)); };
        s.begin_trial();
        const Complex direct = correlation(a, b, psi);
        const Complex coords = inner(delta_vector(a, psi).entries, delta_vector(b, psi).entries);
        s.eq(std::abs(direct - coords), 0.0, kSlack, "⟨A†B⟩ − ⟨A†⟩⟨B⟩ = Σ conj(α_i)β_i", inst);
    }
    return s.take();
}

SuiteResult suite_mixed_variance(const Context& c) {
    Suite s("moments.mixed_variance");
    const std::size_t top = std::min<std::size_t>(4, c.opt.max_dim);
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const std::size_t n = rng.uniform_int(2, top);
        const ComplexMatrix a = random_unitary(rng, n);
        const DensityMatrix rho = random_density(rng, n);
        const auto inst = [&] { return instance_json({a}, density_json(rho)); };
        s.begin_trial();
        const double mixed = variance_mixed(a, rho);
        s.eq(mixed, 1.0 - std::norm(expectation(a, rho)), kSlack, "Tr[(δA)†δA ρ] = 1 − |Tr Aρ|²", inst);
        // concavity over the spectral decomposition
        const EigDecomposition e = hermitian_eig(rho.matrix());
        double avg = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            avg += std::max(0.0, e.eigenvalues[j]) *
                   variance_pure(a, PureState::normalized(e.eigenvectors.column(j)));
        }
        s.le(avg, mixed, kSlack, "Σ λ_j ΔA²(u_j) ≤ ΔA²(ρ)", inst);
        // purification reproduces the mixed variance
        s.eq(variance_pure(lift(a), purify(rho)), mixed, kSlack, "ΔA²(ρ) = Δ(I⊗A)² on the purification", inst);
    }
    return s.take();
}

SuiteResult suite_purification(const Context& c) {
    Suite s("moments.purification");
    const std::size_t states = std::min<std::size_t>(200, c.opt.trials);
    for (std::size_t t = 0; t < states; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const auto r = random_bloch_vector(rng);
        const DensityMatrix rho = bloch_density(r);
        const PureState psi = purify(rho);
        s.begin_trial();
        for (int k = 0; k < 20; ++k) {
            const ComplexMatrix a = random_unitary(rng, 2);
            const auto inst = [&] {
                return instance_json({a}, ordered_json{{"bloch", {r[0], r[1], r[2]}}});
            };
            s.eq(std::abs(expectation(lift(a), psi) - expectation(a, rho)), 0.0, kSlack,
                 "⟨I⊗A⟩ on the purification = Tr(Aρ)", inst);
        }
        const auto inst = [&] { return ordered_json{{"state", {{"bloch", {r[0], r[1], r[2]}}}}}; };
        s.eq(max_abs_diff(trace_out_first(psi, 2), rho.matrix()), 0.0, 1e-9,
             "reduced state on the operator factor = ρ", inst);
    }
    return s.take();
}

// Minimum over the eigenbasis of ρ of f(ΔA²(u_j), ΔB²(u_j)).
template <class F>
double eigenbasis_min(const ComplexMatrix& a, const ComplexMatrix& b, const DensityMatrix& rho, F f) {
    const EigDecomposition e = hermitian_eig(rho.matrix());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < rho.dim(); ++j) {
        const PureState u = PureState::normalized(e.eigenvectors.column(j));
        best = std::min(best, f(variance_pure(a, u), variance_pure(b, u)));
    }
    return best;
}

template <class F>
SuiteResult pure_state_lemma(const Context& c, const char* name, const char* what, F f) {
    Suite s(name);
    const std::size_t count = std::min<std::size_t>(500, c.opt.trials);
    const std::size_t top = std::min<std::size_t>(4, c.opt.max_dim);
    for (std::size_t t = 0; t < count; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const std::size_t n = rng.uniform_int(2, top);
        const ComplexMatrix a = random_unitary(rng, n);
        const ComplexMatrix b = random_unitary(rng, n);
        const DensityMatrix rho = random_density(rng, n);
        const auto inst = [&] { return instance_json({a, b}, density_json(rho)); };
        s.begin_trial();
        s.le(eigenbasis_min(a, b, rho, f), f(variance_mixed(a, rho), variance_mixed(b, rho)), 1e-9, what, inst);
    }
    return s.take();
}

SuiteResult suite_lemma_product(const Context& c) {
    return pure_state_lemma(c, "moments.pure_state_product", "min_j ΔA²ΔB²(u_j) ≤ ΔA²ΔB²(ρ)",
                            [](double x, double y) { return x * y; });
}

SuiteResult suite_lemma_sum(const Context& c) {
    return pure_state_lemma(c, "moments.pure_state_sum", "min_j (ΔA² + ΔB²)(u_j) ≤ (ΔA² + ΔB²)(ρ)",
                            [](double x, double y) { return x + y; });
}

// --- bounds ----------------------------------------------------------------

struct PairInstance {
    ComplexMatrix a, b;
    PureState psi;
    ModulusPair pair;
};

PairInstance random_pair(CounterRng& rng, std::size_t lo, std::size_t hi) {
    const std::size_t n = rng.uniform_int(lo, hi);
    ComplexMatrix a = random_unitary(rng, n);
    ComplexMatrix b = random_unitary(rng, n);
    PureState psi = random_state(rng, n);
    ModulusPair pair = modulus_pair(a, b, psi);
    return {std::move(a), std::move(b), std::move(psi), std::move(pair)};
}

ordered_json pair_json(const PairInstance& p, ordered_json params = ordered_json::object()) {
    return instance_json({p.a, p.b}, pure_json(p.psi), std::move(params));
}

SuiteResult suite_subset_chain(const Context& c) {
    Suite s("bounds.subset_chain");
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const PairInstance p = random_pair(rng, 2, c.opt.max_dim);
        const std::size_t n = p.pair.dim();
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (rng.uniform() < 0.5) idx.push_back(i);
        if (idx.empty()) idx.push_back(rng.uniform_int(0, n - 1));
        const SubsetSelection block(n, idx);
        const auto inst = [&] { return pair_json(p, {{"subset", block.one_based()}}); };
        s.begin_trial();
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += p.pair.x[i] * p.pair.y[i];
        const double k = k_m(p.pair, block);
        s.le(dot * dot, k, kSlack, "(x·y)² ≤ K_S", inst);
        s.le(k, variance_product(p.pair), kSlack, "K_S ≤ |x|²|y|²", inst);
    }
    return s.take();
}

SuiteResult suite_block_chain(const Context& c) {
    Suite s("bounds.block_chain");
    const bool fault = c.opt.fault.has_value();
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const PairInstance p = random_pair(rng, 2, c.opt.max_dim);
        const std::size_t n = p.pair.dim();
        const std::size_t m = rng.uniform_int(1, n);
        const double v = kWeights[rng.uniform_int(0, kWeights.size() - 1)];
        const auto inst = [&] { return pair_json(p, {{"m", m}, {"v", v}}); };
        s.begin_trial();
        const SubsetSelection lead = SubsetSelection::leading(n, m);
        const double prod = variance_product(p.pair);
        const double km = fault ? 2.0 * prod + 1e-6 : k_m(p.pair, lead);
        const double kmv = v * km + (1.0 - v) * prod;
        s.le(bong_lb(p.pair), km, kSlack, "LB ≤ K_m", inst);
        s.le(km, kmv, kSlack, "K_m ≤ K_m^v", inst);
        s.le(kmv, prod, kSlack, "K_m^v ≤ ΔA²ΔB²", inst);
        if (!fault) s.eq(kmv, k_m_v(p.pair, lead, v), 1e-15, "K_m^v = vK_m + (1−v)|x|²|y|²", inst);
    }
    return s.take();
}

SuiteResult suite_tilde_chain(const Context& c) {
    Suite s("bounds.tilde_chain");
    const bool fault = c.opt.fault.has_value();
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const PairInstance p = random_pair(rng, 2, c.opt.max_dim);
        const std::size_t n = p.pair.dim();
        const double prod = variance_product(p.pair);
        const TildeOverall overall = k_tilde(p.pair);
        s.begin_trial();
        for (std::size_t m = 1; m <= n; ++m) {
            const auto inst = [&] { return pair_json(p, {{"m", m}}); };
            const double km = fault ? 2.0 * prod + 1e-6 : k_m(p.pair, SubsetSelection::leading(n, m));
            const double ktm = k_tilde_m(p.pair, m).value;
            s.le(km, ktm, kSlack, "K_m ≤ K̃_m", inst);
            // K̃ ranges over m ≤ ⌊n/2⌋; larger blocks mirror smaller ones
            if (m <= std::max<std::size_t>(1, n / 2)) s.le(ktm, overall.value, kSlack, "K̃_m ≤ K̃", inst);
        }
        const auto inst = [&] { return pair_json(p); };
        s.le(overall.value, prod, kSlack, "K̃ ≤ ΔA²ΔB²", inst);
    }
    return s.take();
}

SuiteResult suite_tilde_oracle(const Context& c) {
    Suite s("bounds.tilde_vs_permutations");
    const std::size_t top = std::min<std::size_t>(6, c.opt.max_dim);
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const PairInstance p = random_pair(rng, 2, top);
        const std::size_t m = rng.uniform_int(1, p.pair.dim());
        const auto inst = [&] { return pair_json(p, {{"m", m}}); };
        s.begin_trial();
        s.eq(k_tilde_m(p.pair, m).value, oracle::permutation_k_tilde_m(p.pair.x, p.pair.y, m), 0.0,
             "subset search = max over n! permutations", inst);
    }
    return s.take();
}

SuiteResult suite_tilde_symmetry(const Context& c) {
    Suite s("bounds.tilde_symmetry");
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const PairInstance p = random_pair(rng, 2, c.opt.max_dim);
        const std::size_t n = p.pair.dim();
        s.begin_trial();
        for (std::size_t m = 1; m < n; ++m) {
            const auto inst = [&] { return pair_json(p, {{"m", m}}); };
            s.eq(k_tilde_m(p.pair, m).value, k_tilde_m(p.pair, n - m).value, 1e-12, "K̃_m = K̃_{n−m}", inst);
        }
    }
    return s.take();
}

SuiteResult suite_yu(const Context& c) {
    Suite s("bounds.yu_chain");
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const PairInstance p = random_pair(rng, 2, c.opt.max_dim);
        const std::size_t n = p.pair.dim();
        const auto inst = [&] { return pair_json(p); };
        s.begin_trial();
        const std::vector<double> seq = yu_sequence(p.pair);
        s.eq(seq.front(), variance_product(p.pair), kSlack, "I_1 = ΔA²ΔB²", inst);
        s.eq(seq.back(), bong_lb(p.pair), kSlack, "I_n = LB", inst);
        for (std::size_t d = 1; d < n; ++d) s.le(seq[d], seq[d - 1], kSlack, "I_{d+1} ≤ I_d", inst);
        for (std::size_t d = 1; d <= n; ++d) {
            s.eq(seq[d - 1], oracle::yu_i_d_lagrange(p.pair.alpha.entries, p.pair.beta.entries, d), kSlack,
                 "I_d = LB + Lagrange remainder", inst);
        }
    }
    return s.take();
}

SuiteResult suite_li(const Context& c) {
    Suite s("bounds.li_chain");
    if (c.opt.max_dim < 3) return s.take();
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const PairInstance p = random_pair(rng, 3, c.opt.max_dim);
        const auto inst = [&] { return pair_json(p); };
        s.begin_trial();
        const double li = li_i1prime(p.pair);
        s.le(li, variance_product(p.pair), kSlack, "I_1' ≤ ΔA²ΔB²", inst);
        s.le(yu_i_d(p.pair, 2), li, kSlack, "I_2 ≤ I_1'", inst);
    }
    return s.take();
}

SuiteResult suite_gram(const Context& c) {
    Suite s("bounds.gram_psd");
    const std::size_t count = std::min<std::size_t>(500, c.opt.trials);
    const std::size_t top = std::min<std::size_t>(6, c.opt.max_dim);
    for (std::size_t t = 0; t < count; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const std::size_t n = rng.uniform_int(2, top);
        const std::size_t l = rng.uniform_int(1, 4);
        std::vector<ComplexMatrix> ops;
        for (std::size_t k = 0; k < l; ++k) ops.push_back(random_unitary(rng, n));
        const PureState psi = random_state(rng, n);
        const auto inst = [&] { return instance_json(ops, pure_json(psi)); };
        s.begin_trial();
        s.le(0.0, hermitian_eig(gram_matrix(ops, psi)).eigenvalues.front(), kSlack, "λ_min(G) ≥ 0", inst);
    }
    return s.take();
}

SuiteResult suite_three_op(const Context& c) {
    Suite s("bounds.three_operator");
    const std::size_t count = std::min<std::size_t>(500, c.opt.trials);
    const std::size_t top = std::min<std::size_t>(6, c.opt.max_dim);
    for (std::size_t t = 0; t < count; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const std::size_t n = rng.uniform_int(2, top);
        const std::vector<ComplexMatrix> ops{random_unitary(rng, n), random_unitary(rng, n), random_unitary(rng, n)};
        const PureState psi = random_state(rng, n);
        const auto inst = [&] { return instance_json(ops, pure_json(psi)); };
        s.begin_trial();
        const double det = determinant(gram_matrix(ops, psi)).real();
        const double triple = variance_pure(ops[0], psi) * variance_pure(ops[1], psi) * variance_pure(ops[2], psi);
        const double rhs = bong_three_op_rhs(ops[0], ops[1], ops[2], psi);
        s.le(0.0, det, kSlack, "det G ≥ 0", inst);
        s.le(rhs, triple, kSlack, "three-operator bound ≤ ΔA²ΔB²ΔC²", inst);
        s.eq(det, triple - rhs, kSlack, "det G = ΔA²ΔB²ΔC² − rhs", inst);
        const double oracle_det = oracle::delta_gram_det3(delta_vector(ops[0], psi).entries,
                                                          delta_vector(ops[1], psi).entries,
                                                          delta_vector(ops[2], psi).entries);
        s.eq(det, oracle_det, kSlack, "det G = det of the delta-vector Gram matrix", inst);
    }
    return s.take();
}

SuiteResult suite_multi_op(const Context& c) {
    Suite s("bounds.multi_operator");
    const std::size_t per_l = std::min<std::size_t>(300, c.opt.trials);
    for (std::size_t l = 3; l <= 4; ++l) {
        for (std::size_t t = 0; t < per_l; ++t) {
            auto rng = trial_rng(c.opt.seed, c.suite_index, (l << 24) | t);
            const std::size_t n = rng.uniform_int(2, c.opt.max_dim);
            std::vector<ComplexMatrix> ops;
            for (std::size_t k = 0; k < l; ++k) ops.push_back(random_unitary(rng, n));
            const PureState psi = random_state(rng, n);
            const std::size_t m = rng.uniform_int(1, n);
            const double v = kWeights[rng.uniform_int(0, kWeights.size() - 1)];
            const auto inst = [&] { return instance_json(ops, pure_json(psi), {{"m", m}, {"v", v}}); };
            s.begin_trial();
            double prod = 1.0;
            for (const auto& op : ops) prod *= variance_pure(op, psi);
            const double plain = multi_op_bound(ops, psi, m, v, Flavor::Plain);
            const double convex = multi_op_bound(ops, psi, m, v, Flavor::Convex);
            const double tilde = multi_op_bound(ops, psi, m, v, Flavor::Tilde);
            s.le(plain, prod, kSlack, "plain ≤ ∏Δ²", inst);
            s.le(convex, prod, kSlack, "convex ≤ ∏Δ²", inst);
            s.le(tilde, prod, kSlack, "tilde ≤ ∏Δ²", inst);
            s.le(plain, tilde, kSlack, "plain ≤ tilde", inst);
        }
    }
    return s.take();
}

SuiteResult suite_equality(const Context& c) {
    Suite s("bounds.equality_condition");
    for (std::size_t t = 0; t < c.opt.trials; ++t) {
        auto rng = trial_rng(c.opt.seed, c.suite_index, t);
        const std::size_t n = rng.uniform_int(2, c.opt.max_dim);
        const std::size_t m = rng.uniform_int(1, n - 1);
        // Proportional branch: x = k·y on both blocks (the norm condition then
        // forces a common factor). Degenerate branch: x and y both vanish on
        // the block, the complement is arbitrary.
        std::vector<double> y(n), x(n);
        for (double& e : y) e = std::abs(rng.normal());
        const double k = std::abs(rng.normal());
        const bool degenerate = rng.uniform() < 0.25;
        for (std::size_t i = 0; i < n; ++i) {
            if (degenerate) {
                x[i] = i < m ? 0.0 : std::abs(rng.normal());
                if (i < m) y[i] = 0.0;
            } else {
                x[i] = k * y[i];
            }
        }
        double nx = 0.0, ny = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            nx += x[i] * x[i];
            ny += y[i] * y[i];
        }
        if (nx == 0.0 || ny == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] /= std::sqrt(nx);
            y[i] /= std::sqrt(ny);
        }
        std::vector<Complex> xa(x.begin(), x.end()), yb(y.begin(), y.end());
        const ModulusPair pair = ModulusPair::from_deltas(ComplexVector(xa), ComplexVector(yb));
        const auto inst = [&] { return ordered_json{{"x", x}, {"y", y}, {"m", m}}; };
        s.begin_trial();
        s.eq(k_m(pair, SubsetSelection::leading(n, m)), variance_product(pair), kSlack,
             "proportional blocks give K_m = |x|²|y|²", inst);
    }
    return s.take();
}

// --- scenarios -------------------------------------------------------------

SuiteResult suite_scenarios(const Context& c) {
    (void)c;
    Suite s("scenarios.validity");
    for (ExampleId id : {ExampleId::Ex1, ExampleId::Ex2, ExampleId::Ex3, ExampleId::Ex4, ExampleId::Ex5, ExampleId::Ex6}) {
        const Scenario sc = make_scenario(id, default_dimension(id));
        for (std::size_t k = 0; k < 100; ++k) {
            const double theta = sc.defaults.theta_min +
                                 (sc.defaults.theta_max - sc.defaults.theta_min) * static_cast<double>(k) / 99.0;
            const PurePoint pt = resolve(sc.operators, sc.state(theta));
            std::vector<ComplexMatrix> ops;
            for (const auto& op : pt.operators) ops.push_back(op.matrix);
            const auto inst = [&] {
                ordered_json j = instance_json(ops, pure_json(pt.state));
                j["example"] = to_string(id);
                j["theta"] = theta;
                return j;
            };
            s.begin_trial();
            s.eq(pt.state.amplitudes().norm(), 1.0, kSlack, "‖ψ‖ = 1", inst);
            for (const auto& op : ops) s.le(unitarity_defect(op), 0.0, kSlack, "operator unitary", inst);
            const BoundSet bs = bound_report(ops[0], ops[1], pt.state, sc.defaults.m, sc.defaults.v);
            s.eq(static_cast<double>(chain_violations(bs).size()), 0.0, 0.0, "bound chain holds", inst);
        }
    }
    return s.take();
}

SuiteResult suite_example4(const Context& c) {
    (void)c;
    Suite s("scenarios.ex4_ordering");
    const Scenario sc = make_scenario(ExampleId::Ex4, 2);
    for (std::size_t k = 0; k < 200; ++k) {
        const double theta = sc.defaults.theta_min +
                             (sc.defaults.theta_max - sc.defaults.theta_min) * static_cast<double>(k) / 199.0;
        const PurePoint pt = resolve(sc.operators, sc.state(theta));
        const ModulusPair pair = modulus_pair(pt.operators[0].matrix, pt.operators[1].matrix, pt.state);
        const auto inst = [&] {
            return instance_json({pt.operators[0].matrix, pt.operators[1].matrix}, pure_json(pt.state),
                                 {{"theta", theta}});
        };
        s.begin_trial();
        const auto seq = yu_sequence(pair);
        const double k2v = k_m_v(pair, SubsetSelection::leading(pair.dim(), 2), 0.1);
        s.le(k2v, variance_product(pair), kSlack, "K_2^0.1 ≤ ΔA²ΔB²", inst);
        s.le(seq[1], k2v, kSlack, "I_2 ≤ K_2^0.1", inst);
        s.le(seq[2], seq[1], kSlack, "I_3 ≤ I_2", inst);
        s.le(seq[3], seq[2], kSlack, "I_4 ≤ I_3", inst);
        s.le(bong_lb(pair), seq[3], kSlack, "LB ≤ I_4", inst);
    }
    return s.take();
}

struct SuiteEntry {
    const char* name;
    SuiteFn fn;
};

constexpr std::array<SuiteEntry, 22> kSuites{{
    {"linalg.hermitian_eig", suite_eig},
    {"linalg.psd_sqrt", suite_psd_sqrt},
    {"linalg.vec_kron", suite_vec_kron},
    {"linalg.kron_unitary", suite_kron_unitary},
    {"moments.variance", suite_variance},
    {"moments.correlation", suite_correlation},
    {"moments.mixed_variance", suite_mixed_variance},
    {"moments.purification", suite_purification},
    {"moments.pure_state_product", suite_lemma_product},
    {"moments.pure_state_sum", suite_lemma_sum},
    {"bounds.subset_chain", suite_subset_chain},
    {"bounds.block_chain", suite_block_chain},
    {"bounds.tilde_chain", suite_tilde_chain},
    {"bounds.tilde_vs_permutations", suite_tilde_oracle},
    {"bounds.tilde_symmetry", suite_tilde_symmetry},
    {"bounds.yu_chain", suite_yu},
    {"bounds.li_chain", suite_li},
    {"bounds.gram_psd", suite_gram},
    {"bounds.three_operator", suite_three_op},
    {"bounds.multi_operator", suite_multi_op},
    {"bounds.equality_condition", suite_equality},
    {"scenarios.validity", suite_scenarios},
}};

}  // namespace

bool CheckReport::ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.violations == 0; });
}

std::vector<std::string> check_suite_names() {
    std::vector<std::string> out;
    for (const auto& e : kSuites) out.emplace_back(e.name);
    out.emplace_back("scenarios.ex4_ordering");
    return out;
}

CheckReport run_checks(const CheckOptions& options) {
    if (options.fault && *options.fault != "k_m") {
        throw Error(ErrorCode::InvalidArgument, "unknown fault '" + *options.fault + "' (known: k_m)");
    }
    if (options.max_dim < 2) throw Error(ErrorCode::InvalidArgument, "max dimension must be ≥ 2");
    if (options.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be ≥ 1");
    CheckReport report;
    report.options = options;
    Context ctx{options, 0};
    for (std::size_t i = 0; i < kSuites.size(); ++i) {
        ctx.suite_index = i;
        report.suites.push_back(kSuites[i].fn(ctx));
    }
    ctx.suite_index = kSuites.size();
    report.suites.push_back(suite_example4(ctx));
    return report;
}

void write_check_report(std::ostream& os, const CheckReport& report) {
    const auto& o = report.options;
    os << "seed " << o.seed << ", trials " << o.trials << ", max dimension " << o.max_dim;
    if (o.fault) os << ", injected fault " << *o.fault;
    os << '\n';
    std::size_t failed = 0;
    for (const auto& s : report.suites) {
        char margin[32];
        std::snprintf(margin, sizeof margin, "%.3e", s.worst_margin);
        char line[160];
        std::snprintf(line, sizeof line, "%-4s %-32s trials %6zu  violations %6zu  worst margin %s\n",
                      s.violations ? "FAIL" : "ok", s.name.c_str(), s.trials, s.violations, margin);
        os << line;
        if (s.violations) ++failed;
    }
    os << (failed ? "FAIL" : "PASS") << ": " << report.suites.size() - failed << " of " << report.suites.size()
       << " suites clean\n";
    for (const auto& s : report.suites) {
        if (s.counterexample) os << "counterexample " << *s.counterexample << '\n';
    }
}

}  // namespace uur
