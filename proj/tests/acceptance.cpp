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


// Acceptance suite: one PASS/FAIL line per criterion, followed by indented
// detail lines. Exit status is the number of failing criteria (capped).
//
// Reference values are recomputed here by routes independent of the library
// where practical: variances from raw expectation values, partial traces
// from purified amplitudes, permutation brute force for K̃_m, the Lagrange
// identity for I_d and a direct 3×3 determinant for the Gram machinery.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "uur/bounds.hpp"
#include "uur/moments.hpp"
#include "uur/oracles.hpp"
#include "uur/random.hpp"
#include "uur/runs.hpp"
#include "uur/scenarios.hpp"

using namespace uur;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr double kChainTol = 1e-10;
constexpr double kIdentityTol = 1e-10;
constexpr double kClosedFormTol = 1e-9;
constexpr double kPartialTraceTol = 1e-9;
constexpr double kLemmaTol = 1e-9;
constexpr double kPointwiseTol = 1e-12;
constexpr double kPi = 3.14159265358979323846;

struct Criterion {
    int id = 0;
    std::string title;
    bool pass = true;
    std::vector<std::string> details;

    Criterion() = default;
    Criterion(int i, std::string t) : id(i), title(std::move(t)) {}

    void require(bool ok) { pass = pass && ok; }
    template <class... Args>
    void note(const char* fmt, Args... args) {
        if constexpr (sizeof...(Args) == 0) {
            details.emplace_back(fmt);
        } else {
            char buf[512];
            std::snprintf(buf, sizeof buf, fmt, args...);
            details.emplace_back(buf);
        }
    }
};

// Running tally of one inequality/identity family.
struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    double worst = 0.0;  // largest violation amount seen (0 when clean)

    // lhs ≤ rhs + tol
    void le(double lhs, double rhs, double tol) {
        ++checks;
        const double excess = lhs - rhs;
        if (excess > tol) ++failures;
        worst = std::max(worst, excess);
    }
    void eq(double a, double b, double tol) {
        ++checks;
        const double d = std::abs(a - b);
        if (!(d <= tol)) ++failures;
        worst = std::max(worst, d);
    }
    bool clean() const { return failures == 0; }
};

void report_tally(Criterion& c, const char* label, const Tally& t) {
    c.note("%-44s %s  checks %zu  failures %zu  worst %.3e", label, t.clean() ? "ok  " : "FAIL",
           t.checks, t.failures, t.worst);
    c.require(t.clean());
}

CounterRng rng_for(int criterion, std::size_t trial) {
    return CounterRng(kSeed, (static_cast<std::uint64_t>(criterion) << 32) | trial);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    return out;
}

// ΔA² from the raw expectation value, 1 − |<ψ|A|ψ>|², computed by hand.
double raw_variance(const ComplexMatrix& a, const PureState& psi) {
    const auto& v = psi.amplitudes();
    Complex e = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j) e += std::conj(v[i]) * a(i, j) * v[j];
    return 1.0 - std::norm(e);
}

double raw_variance(const ComplexMatrix& a, const DensityMatrix& rho) {
    Complex tr = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) tr += a(i, j) * rho.matrix()(j, i);
    return 1.0 - std::norm(tr);
}

struct Pair {
    ComplexMatrix a, b;
    PureState psi;
    ModulusPair pair;
};

Pair random_pair(CounterRng& rng, std::size_t lo, std::size_t hi) {
    const std::size_t n = rng.uniform_int(lo, hi);
    ComplexMatrix a = random_unitary(rng, n);
    ComplexMatrix b = random_unitary(rng, n);
    PureState psi = random_state(rng, n);
    ModulusPair pair = modulus_pair(a, b, psi);
    return {std::move(a), std::move(b), std::move(psi), std::move(pair)};
}

PureState pure_of(const StateSpec& s) { return std::get<PureState>(s); }

// --- 1 ---------------------------------------------------------------------

Criterion chain_suite() {
    Criterion c{1, "inequality chain, 1000 instances, d 2..8, all m, v in {0, 0.1, 0.5, 1}"};
    Tally lower, convex, upper, tilde_m, tilde, tilde_top, product;
    for (std::size_t t = 0; t < 1000; ++t) {
        auto rng = rng_for(1, t);
        const Pair p = random_pair(rng, 2, 8);
        const std::size_t n = p.pair.dim();
        const double prod = raw_variance(p.a, p.psi) * raw_variance(p.b, p.psi);
        product.eq(variance_product(p.pair), prod, kIdentityTol);
        const double lb = std::norm(inner(p.pair.alpha.entries, p.pair.beta.entries));
        const double kt = k_tilde(p.pair).value;
        tilde_top.le(kt, prod, kChainTol);
        for (std::size_t m = 1; m <= n; ++m) {
            const auto block = SubsetSelection::leading(n, m);
            const double km = k_m(p.pair, block);
            const double ktm = k_tilde_m(p.pair, m).value;
            lower.le(lb, km, kChainTol);
            tilde_m.le(km, ktm, kChainTol);
            // m = n leaves an empty complement: K_n is the product itself,
            // which K̃ (a maximum over proper splits) need not reach.
            if (m < n || n == 1) tilde.le(ktm, kt, kChainTol);
            for (const double v : {0.0, 0.1, 0.5, 1.0}) {
                const double kmv = k_m_v(p.pair, block, v);
                convex.le(km, kmv, kChainTol);
                upper.le(kmv, prod, kChainTol);
            }
        }
    }
    report_tally(c, "variance product vs raw expectations", product);
    report_tally(c, "LB <= K_m", lower);
    report_tally(c, "K_m <= K_m^v", convex);
    report_tally(c, "K_m^v <= dA^2 dB^2", upper);
    report_tally(c, "K_m <= K~_m", tilde_m);
    report_tally(c, "K~_m <= K~ (proper splits m < n)", tilde);
    report_tally(c, "K~ <= dA^2 dB^2", tilde_top);
    return c;
}

// --- 2 ---------------------------------------------------------------------

Criterion yu_li() {
    Criterion c{2, "I_1 = product, I_n = LB, I_d non-increasing; product >= I_1' >= I_2 (d >= 3)"};
    Tally first, last, mono, lagrange, li_upper, li_lower;
    std::size_t li_instances = 0;
    for (std::size_t t = 0; t < 1000; ++t) {
        auto rng = rng_for(1, t);  // the same 1000 instances as criterion 1
        const Pair p = random_pair(rng, 2, 8);
        const std::size_t n = p.pair.dim();
        const double prod = raw_variance(p.a, p.psi) * raw_variance(p.b, p.psi);
        const double lb = std::norm(inner(p.pair.alpha.entries, p.pair.beta.entries));
        const auto seq = yu_sequence(p.pair);
        first.eq(seq.front(), prod, kIdentityTol);
        last.eq(seq.back(), lb, kIdentityTol);
        for (std::size_t d = 1; d < n; ++d) mono.le(seq[d], seq[d - 1], kChainTol);
        for (std::size_t d = 1; d <= n; ++d)
            lagrange.eq(seq[d - 1], oracle::yu_i_d_lagrange(p.pair.alpha.entries, p.pair.beta.entries, d),
                        kIdentityTol);
        if (n >= 3) {
            ++li_instances;
            const double li = li_i1prime(p.pair);
            li_upper.le(li, prod, kChainTol);
            li_lower.le(seq[1], li, kChainTol);
        }
    }
    report_tally(c, "I_1 = dA^2 dB^2", first);
    report_tally(c, "I_n = LB", last);
    report_tally(c, "I_{d+1} <= I_d", mono);
    report_tally(c, "I_d = Lagrange-identity oracle", lagrange);
    report_tally(c, "I_1' <= dA^2 dB^2", li_upper);
    report_tally(c, "I_2 <= I_1'", li_lower);
    c.note("I_1' evaluated on %zu instances with d >= 3", li_instances);
    if (!li_lower.clean())
        c.note("I_1' as printed equals dA^2 dB^2 - y_1^2 (x_2 - x_3)^2, which drops below I_2 when that gap is large");
    return c;
}

// --- 3 ---------------------------------------------------------------------

Criterion example1_closed_forms() {
    Criterion c{3, "clock/shift closed forms, d in {2, 3, 6}, 50 theta in [0, pi]"};
    const auto thetas = linspace(0.0, kPi, 50);
    for (const std::size_t d : {2u, 3u, 6u}) {
        const Scenario sc = make_scenario(ExampleId::Ex1, d);
        Tally xs, ys, i1, i2, id, i1p, k2, coincide;
        Tally lit_x, lit_y, lit_i1, lit_i2, lit_id, lit_i1p;
        bool hand_derived = false;
        for (const double th : thetas) {
            const PureState psi = pure_of(sc.state(th));
            const ModulusPair pair = modulus_pair(sc.operators[0].matrix, sc.operators[1].matrix, psi);
            const Example1Reference ref = example1_reference(d, th);
            const Example1Reference lit = example1_printed_formulas(d, th);
            hand_derived = hand_derived || !ref.from_printed_formulas;
            for (std::size_t i = 0; i < d; ++i) {
                xs.eq(pair.x[i], ref.x[i], kClosedFormTol);
                ys.eq(pair.y[i], ref.y[i], kClosedFormTol);
                lit_x.eq(pair.x[i], lit.x[i], kClosedFormTol);
                lit_y.eq(pair.y[i], lit.y[i], kClosedFormTol);
            }
            const double y1 = yu_i_d(pair, 1), y2 = yu_i_d(pair, 2), yd = yu_i_d(pair, d);
            i1.eq(y1, ref.i_1, kClosedFormTol);
            i2.eq(y2, ref.i_2, kClosedFormTol);
            id.eq(yd, ref.i_d, kClosedFormTol);
            lit_i1.eq(y1, lit.i_1, kClosedFormTol);
            lit_i2.eq(y2, lit.i_2, kClosedFormTol);
            lit_id.eq(yd, lit.i_d, kClosedFormTol);
            k2.eq(k_m(pair, SubsetSelection::leading(d, 2)), ref.k_2, kClosedFormTol);
            if (d >= 3 && lit.i_1_prime) lit_i1p.eq(li_i1prime(pair), *lit.i_1_prime, kClosedFormTol);
            if (d == 3) i1p.eq(li_i1prime(pair), *ref.i_1_prime, kClosedFormTol);
            if (d == 2) {
                const BoundSet b = bound_report(pair, 1, kDefaultWeight);
                for (const double v : {b.lb, b.k_m, b.k_m_v, b.k_tilde_m, b.k_tilde, b.i_d[0], b.i_d[1]})
                    coincide.eq(v, b.variance_product, kIdentityTol);
            }
        }
        char label[64];
        const auto row = [&](const char* what, const Tally& t) {
            std::snprintf(label, sizeof label, "d=%zu %s", d, what);
            report_tally(c, label, t);
        };
        row("x", xs);
        row("y", ys);
        row("I_1", i1);
        row("I_2", i2);
        row("I_d", id);
        row("K over block {1,2}", k2);
        if (d == 3) row("I_1'", i1p);
        if (d == 2) row("all bounds coincide", coincide);
        // Deviations of the literal printed expressions, itemized rather than
        // gated: where they disagree the reference above is the one derived
        // consistently for this d.
        const auto item = [&](const char* what, const Tally& t) {
            if (t.checks && !t.clean())
                c.note("  deviation d=%zu, literal %s: %zu of %zu points off, max %.3e", d, what, t.failures,
                       t.checks, t.worst);
        };
        item("x", lit_x);
        item("y", lit_y);
        item("I_1", lit_i1);
        item("I_2", lit_i2);
        item("I_d", lit_id);
        item("I_1'", lit_i1p);
        if (hand_derived) c.note("  d=%zu reference is hand-derived (the printed indices collide)", d);
    }
    return c;
}

// --- 4 ---------------------------------------------------------------------

Criterion saturation() {
    Criterion c{4, "permutation saturation: (3 6) at d=6, (3 d) for d 3..8, (2 4) for the purified qubit"};
    const auto thetas = linspace(0.0, kPi, 50);
    for (std::size_t d = 3; d <= 8; ++d) {
        const Scenario sc = make_scenario(ExampleId::Ex1, d);
        const auto block = SubsetSelection::from_one_based(d, d == 3 ? std::vector<std::size_t>{1, 2, 3}
                                                                      : std::vector<std::size_t>{1, 2, d});
        Tally sat, tilde;
        for (const double th : thetas) {
            const PureState psi = pure_of(sc.state(th));
            const ModulusPair pair = modulus_pair(sc.operators[0].matrix, sc.operators[1].matrix, psi);
            const double prod = raw_variance(sc.operators[0].matrix, psi) * raw_variance(sc.operators[1].matrix, psi);
            sat.eq(k_m(pair, block), prod, kIdentityTol);
            tilde.eq(k_tilde_m(pair, 3).value, prod, kIdentityTol);
        }
        char label[64];
        std::snprintf(label, sizeof label, "d=%zu block {1,2,%zu}: K = product", d, d);
        report_tally(c, label, sat);
        std::snprintf(label, sizeof label, "d=%zu K~_3 = product", d);
        report_tally(c, label, tilde);
    }

    const Scenario ex4 = make_scenario(ExampleId::Ex4, 2);
    const auto grid = linspace(ex4.defaults.theta_min, ex4.defaults.theta_max, ex4.defaults.steps);
    Tally witness, tilde2, alt;
    std::vector<std::size_t> argmax;
    for (const double th : grid) {
        const PurePoint pt = resolve(ex4.operators, ex4.state(th));
        const ComplexMatrix& a = pt.operators[0].matrix;
        const ComplexMatrix& b = pt.operators[1].matrix;
        const ModulusPair pair = modulus_pair(a, b, pt.state);
        const double prod = raw_variance(a, pt.state) * raw_variance(b, pt.state);
        witness.eq(k_m(pair, SubsetSelection::from_one_based(4, {1, 4})), prod, kIdentityTol);
        alt.eq(k_m(pair, SubsetSelection::from_one_based(4, {1, 3})), prod, kIdentityTol);
        const TildeBlock tb = k_tilde_m(pair, 2);
        tilde2.eq(tb.value, prod, kIdentityTol);
        if (argmax.empty()) argmax = tb.subset.one_based();
    }
    report_tally(c, "purified qubit, (2 4) block {1,4}: K = product", witness);
    c.note("  (informational) K~_2 = product            %s  worst %.3e  first argmax {%zu,%zu}",
           tilde2.clean() ? "ok  " : "FAIL", tilde2.worst, argmax.at(0), argmax.at(1));
    c.note("  (informational) block {1,3}: K = product   %s  worst %.3e", alt.clean() ? "ok  " : "FAIL",
           alt.worst);
    return c;
}

// --- 5 ---------------------------------------------------------------------

Criterion ex4_ordering() {
    Criterion c{5, "purified qubit ordering over 200 theta: product >= K_2^0.1 >= I_2 >= I_3 >= I_4 >= LB"};
    const Scenario ex4 = make_scenario(ExampleId::Ex4, 2);
    const auto grid = linspace(ex4.defaults.theta_min, ex4.defaults.theta_max, 200);
    Tally t0, t1, t2, t3, t4;
    for (const double th : grid) {
        const PurePoint pt = resolve(ex4.operators, ex4.state(th));
        const ModulusPair pair = modulus_pair(pt.operators[0].matrix, pt.operators[1].matrix, pt.state);
        const double prod = raw_variance(pt.operators[0].matrix, pt.state) *
                            raw_variance(pt.operators[1].matrix, pt.state);
        const double k2v = k_m_v(pair, SubsetSelection::leading(4, 2), 0.1);
        const auto& al = pair.alpha.entries;
        const auto& be = pair.beta.entries;
        const double i2 = oracle::yu_i_d_lagrange(al, be, 2), i3 = oracle::yu_i_d_lagrange(al, be, 3),
                     i4 = oracle::yu_i_d_lagrange(al, be, 4);
        const double lb = std::norm(inner(al, be));
        t0.le(k2v, prod, kChainTol);
        t1.le(i2, k2v, kChainTol);
        t2.le(i3, i2, kChainTol);
        t3.le(i4, i3, kChainTol);
        t4.le(lb, i4, kChainTol);
    }
    report_tally(c, "K_2^0.1 <= product", t0);
    report_tally(c, "I_2 <= K_2^0.1", t1);
    report_tally(c, "I_3 <= I_2", t2);
    report_tally(c, "I_4 <= I_3", t3);
    report_tally(c, "LB <= I_4", t4);
    return c;
}

// --- 6 ---------------------------------------------------------------------

Criterion purification() {
    Criterion c{6, "purification: <I (x) A> = Tr(A rho); both partial traces equal rho"};
    Tally expect, keep, other, other_transpose, lib_first, lib_second;
    for (std::size_t t = 0; t < 200; ++t) {
        auto rng = rng_for(6, t);
        const DensityMatrix rho = bloch_density(random_bloch_vector(rng));
        const PureState psi = purify(rho);
        const auto& v = psi.amplitudes();
        // Amplitude (i, j) sits at j·2 + i; lift() acts on i.
        ComplexMatrix on_i(2), on_j(2);
        for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t q = 0; q < 2; ++q)
                for (std::size_t k = 0; k < 2; ++k) {
                    on_i(p, q) += v[k * 2 + p] * std::conj(v[k * 2 + q]);
                    on_j(p, q) += v[p * 2 + k] * std::conj(v[q * 2 + k]);
                }
        ComplexMatrix rho_t(2);
        for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t q = 0; q < 2; ++q) rho_t(p, q) = rho.matrix()(q, p);
        keep.eq(max_abs_diff(on_i, rho.matrix()), 0.0, kPartialTraceTol);
        other.eq(max_abs_diff(on_j, rho.matrix()), 0.0, kPartialTraceTol);
        other_transpose.eq(max_abs_diff(on_j, rho_t), 0.0, kPartialTraceTol);
        lib_first.eq(max_abs_diff(trace_out_first(psi, 2), on_i), 0.0, kPartialTraceTol);
        lib_second.eq(max_abs_diff(trace_out_second(psi, 2), on_j), 0.0, kPartialTraceTol);
        for (std::size_t u = 0; u < 20; ++u) {
            const ComplexMatrix a = random_unitary(rng, 2);
            Complex tr = 0.0;
            for (std::size_t p = 0; p < 2; ++p)
                for (std::size_t q = 0; q < 2; ++q) tr += a(p, q) * rho.matrix()(q, p);
            expect.eq(std::abs(expectation(lift(a), psi) - tr), 0.0, kIdentityTol);
        }
    }
    report_tally(c, "<psi|I (x) A|psi> = Tr(A rho)", expect);
    report_tally(c, "trace over the untouched factor = rho", keep);
    report_tally(c, "trace over the acted-on factor = rho", other);
    c.note("  (informational) trace over the acted-on factor = rho^T: %s  worst %.3e",
           other_transpose.clean() ? "ok" : "FAIL", other_transpose.worst);
    report_tally(c, "library trace_out_first matches", lib_first);
    report_tally(c, "library trace_out_second matches", lib_second);
    return c;
}

// --- 7 ---------------------------------------------------------------------

Criterion pure_state_lemma() {
    Criterion c{7, "pure state lemma, product and sum forms, 500 mixed instances, d <= 4"};
    Tally prod_form, sum_form;
    for (std::size_t t = 0; t < 500; ++t) {
        auto rng = rng_for(7, t);
        const std::size_t n = rng.uniform_int(2, 4);
        const DensityMatrix rho = random_density(rng, n);
        const ComplexMatrix a = random_unitary(rng, n);
        const ComplexMatrix b = random_unitary(rng, n);
        const double va = raw_variance(a, rho), vb = raw_variance(b, rho);
        const EigDecomposition eig = hermitian_eig(rho.matrix());
        double best_prod = 1e300, best_sum = 1e300;
        for (std::size_t j = 0; j < n; ++j) {
            const PureState u = PureState::normalized(eig.eigenvectors.column(j));
            const double pa = raw_variance(a, u), pb = raw_variance(b, u);
            best_prod = std::min(best_prod, pa * pb);
            best_sum = std::min(best_sum, pa + pb);
        }
        prod_form.le(best_prod, va * vb, kLemmaTol);
        sum_form.le(best_sum, va + vb, kLemmaTol);
    }
    report_tally(c, "min_j product(u_j) <= product(rho)", prod_form);
    report_tally(c, "min_j sum(u_j) <= sum(rho)", sum_form);
    return c;
}

// --- 8 ---------------------------------------------------------------------

Criterion gram() {
    Criterion c{8, "Gram matrix PSD (up to 4 operators); three-operator bound <= triple product"};
    Tally psd, three, det;
    for (std::size_t t = 0; t < 500; ++t) {
        auto rng = rng_for(8, t);
        const std::size_t n = rng.uniform_int(2, 8);
        const std::size_t l = rng.uniform_int(1, 4);
        std::vector<ComplexMatrix> ops;
        for (std::size_t k = 0; k < l; ++k) ops.push_back(random_unitary(rng, n));
        const PureState psi = random_state(rng, n);
        psd.le(0.0, hermitian_eig(gram_matrix(ops, psi)).eigenvalues.front(), kChainTol);
        if (l >= 3) {
            const double triple =
                raw_variance(ops[0], psi) * raw_variance(ops[1], psi) * raw_variance(ops[2], psi);
            const double rhs = bong_three_op_rhs(ops[0], ops[1], ops[2], psi);
            three.le(rhs, triple, kChainTol);
            det.eq(triple - rhs,
                   oracle::delta_gram_det3(delta_vector(ops[0], psi).entries, delta_vector(ops[1], psi).entries,
                                           delta_vector(ops[2], psi).entries),
                   kIdentityTol);
        }
    }
    report_tally(c, "min eigenvalue of G >= 0", psd);
    report_tally(c, "three-operator bound <= triple product", three);
    report_tally(c, "triple - bound = delta Gram determinant", det);
    return c;
}

// --- 9 ---------------------------------------------------------------------

Criterion multi_operator() {
    Criterion c{9, "multi-operator geometric-mean bounds, l in {3, 4}, all flavors, 300 each"};
    for (const std::size_t l : {3u, 4u}) {
        Tally plain, convex, tilde, order;
        for (std::size_t t = 0; t < 300; ++t) {
            auto rng = rng_for(9, l * 1000 + t);
            const std::size_t n = rng.uniform_int(2, 8);
            std::vector<ComplexMatrix> ops;
            for (std::size_t k = 0; k < l; ++k) ops.push_back(random_unitary(rng, n));
            const PureState psi = random_state(rng, n);
            const std::size_t m = rng.uniform_int(1, std::max<std::size_t>(1, n / 2));
            const double v = rng.uniform();
            double prod = 1.0;
            for (const auto& op : ops) prod *= raw_variance(op, psi);
            const double bp = multi_op_bound(ops, psi, m, v, Flavor::Plain);
            const double bc = multi_op_bound(ops, psi, m, v, Flavor::Convex);
            const double bt = multi_op_bound(ops, psi, m, v, Flavor::Tilde);
            plain.le(bp, prod, kChainTol);
            convex.le(bc, prod, kChainTol);
            tilde.le(bt, prod, kChainTol);
            order.le(bp, bt, kPointwiseTol);
        }
        char label[64];
        std::snprintf(label, sizeof label, "l=%zu plain <= product", l);
        report_tally(c, label, plain);
        std::snprintf(label, sizeof label, "l=%zu convex <= product", l);
        report_tally(c, label, convex);
        std::snprintf(label, sizeof label, "l=%zu tilde <= product", l);
        report_tally(c, label, tilde);
        std::snprintf(label, sizeof label, "l=%zu plain <= tilde", l);
        report_tally(c, label, order);
    }
    return c;
}

// --- 10 --------------------------------------------------------------------

Criterion oracle_equivalence() {
    Criterion c{10, "subset enumeration K~_m == permutation brute force, n <= 6, 100 instances, exact"};
    std::size_t checks = 0, mismatches = 0;
    double worst = 0.0;
    for (std::size_t t = 0; t < 100; ++t) {
        auto rng = rng_for(10, t);
        const Pair p = random_pair(rng, 2, 6);
        const std::size_t n = p.pair.dim();
        for (std::size_t m = 1; m <= n; ++m) {
            const double a = k_tilde_m(p.pair, m).value;
            const double b = oracle::permutation_k_tilde_m(p.pair.x, p.pair.y, m);
            ++checks;
            if (a != b) ++mismatches;
            worst = std::max(worst, std::abs(a - b));
        }
    }
    c.note("%-44s %s  checks %zu  mismatches %zu  worst %.3e", "K~_m == max over n! permutations",
           mismatches ? "FAIL" : "ok  ", checks, mismatches, worst);
    c.require(mismatches == 0);
    return c;
}

// --- 11 --------------------------------------------------------------------

Criterion determinism() {
    Criterion c{11, "identical sweep and check configs give byte-identical output"};
    const auto capture = [](const RunConfig& cfg) {
        std::ostringstream out, err;
        const int code = run(cfg, out, err);
        return std::to_string(code) + "\n" + out.str();
    };
    RunConfig sweep;
    sweep.command = Command::Sweep;
    sweep.example = ExampleId::Ex1;
    sweep.dim = 6;
    RunConfig check;
    check.command = Command::Check;
    for (const auto& [name, cfg] : {std::pair<const char*, RunConfig>{"sweep ex1 d=6", sweep},
                                    std::pair<const char*, RunConfig>{"check seed 42", check}}) {
        const std::string a = capture(cfg), b = capture(cfg);
        const bool same = a == b;
        c.note("%-44s %s  %zu bytes", name, same ? "ok  " : "FAIL", a.size());
        c.require(same && a.size() > 2);
    }
    return c;
}

}  // namespace

int main() {
    const std::vector<std::function<Criterion()>> all = {
        chain_suite, yu_li,          example1_closed_forms, saturation,         ex4_ordering, purification,
        pure_state_lemma, gram,      multi_operator,        oracle_equivalence, determinism};
    int failed = 0;
    for (std::size_t k = 0; k < all.size(); ++k) {
        Criterion c;
        try {
            c = all[k]();
        } catch (const std::exception& e) {
            c.id = static_cast<int>(k + 1);
            c.pass = false;
            c.details.push_back(std::string("unexpected exception: ") + e.what());
        }
        std::printf("criterion %2d: %s  %s\n", c.id, c.pass ? "PASS" : "FAIL", c.title.c_str());
        for (const auto& d : c.details) std::printf("    %s\n", d.c_str());
        std::fflush(stdout);
        failed += c.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
