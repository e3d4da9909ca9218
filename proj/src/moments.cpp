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

#include "uur/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uur/error.hpp"

namespace uur {

namespace {

void require_dims(std::size_t op, std::size_t state) {
    if (op != state) {
        throw Error(ErrorCode::DimensionMismatch, "operator dimension " + std::to_string(op) +
                                                      " does not match state dimension " +
                                                      std::to_string(state));
    }
}

void require_unitary(const ComplexMatrix& a) {
    const double defect = unitarity_defect(a);
    if (!(defect <= kOperatorUnitaryTol)) {
        throw Error(ErrorCode::NotUnitary,
                    "‖A†A − I‖_max = " + std::to_string(defect) + " exceeds tolerance");
    }
}

}  // namespace

PureState::PureState(ComplexVector amplitudes, double tol) : amplitudes_(std::move(amplitudes)) {
    const double norm = amplitudes_.norm();
    if (amplitudes_.dim() == 0 || !(std::abs(norm - 1.0) <= tol)) {
        throw Error(ErrorCode::NotNormalized, "state norm is " + std::to_string(norm));
    }
}

PureState PureState::normalized(ComplexVector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0)) throw Error(ErrorCode::NotNormalized, "cannot normalize the zero vector");
    amplitudes *= 1.0 / norm;
    return PureState(std::move(amplitudes));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    if (matrix_.dim() == 0 || !matrix_.all_finite()) {
        throw Error(ErrorCode::InvalidDensityMatrix, "empty or non-finite matrix");
    }
    const double herm = hermiticity_defect(matrix_);
    if (herm > kStateTol) {
        throw Error(ErrorCode::InvalidDensityMatrix,
                    "not Hermitian (defect " + std::to_string(herm) + ")");
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - Complex(1.0)) > kStateTol) {
        throw Error(ErrorCode::InvalidDensityMatrix,
                    "trace is " + std::to_string(tr.real()) + (tr.imag() >= 0 ? "+" : "") +
                        std::to_string(tr.imag()) + "i");
    }
    const auto eig = hermitian_eig(matrix_);
    if (eig.eigenvalues.front() < -kPsdSlack) {
        throw Error(ErrorCode::InvalidDensityMatrix,
                    "negative eigenvalue " + std::to_string(eig.eigenvalues.front()));
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return DensityMatrix(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

ModulusPair ModulusPair::from_deltas(ComplexVector alpha, ComplexVector beta) {
    if (alpha.dim() != beta.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "delta vectors differ in dimension");
    }
    ModulusPair p;
    p.x.reserve(alpha.dim());
    p.y.reserve(beta.dim());
    for (const auto& a : alpha) p.x.push_back(std::abs(a));
    for (const auto& b : beta) p.y.push_back(std::abs(b));
    p.alpha = DeltaVector{std::move(alpha), 0.0};
    p.beta = DeltaVector{std::move(beta), 0.0};
    return p;
}

Complex expectation(const ComplexMatrix& a, const PureState& psi) {
    require_dims(a.dim(), psi.dim());
    return inner(psi.amplitudes(), a * psi.amplitudes());
}

Complex expectation(const ComplexMatrix& a, const DensityMatrix& rho) {
    require_dims(a.dim(), rho.dim());
    return (a * rho.matrix()).trace();
}

DeltaVector delta_vector(const ComplexMatrix& a, const PureState& psi) {
    require_dims(a.dim(), psi.dim());
    require_unitary(a);
    const ComplexVector a_psi = a * psi.amplitudes();
    const Complex mean = inner(psi.amplitudes(), a_psi);
    return DeltaVector{a_psi - mean * psi.amplitudes(), mean};
}

ModulusPair modulus_pair(const ComplexMatrix& a, const ComplexMatrix& b, const PureState& psi) {
    DeltaVector alpha = delta_vector(a, psi);
    DeltaVector beta = delta_vector(b, psi);
    ModulusPair p;
    p.x.reserve(alpha.entries.dim());
    p.y.reserve(beta.entries.dim());
    for (const auto& z : alpha.entries) p.x.push_back(std::abs(z));
    for (const auto& z : beta.entries) p.y.push_back(std::abs(z));
    p.alpha = std::move(alpha);
    p.beta = std::move(beta);
    return p;
}

Complex correlation(const ComplexMatrix& a, const ComplexMatrix& b, const PureState& psi) {
    require_dims(a.dim(), psi.dim());
    require_dims(b.dim(), psi.dim());
    require_unitary(a);
    require_unitary(b);
    const ComplexMatrix a_dag = a.adjoint();
    return expectation(a_dag * b, psi) - expectation(a_dag, psi) * expectation(b, psi);
}

double variance_pure(const ComplexMatrix& a, const PureState& psi) {
    return delta_vector(a, psi).entries.norm_squared();
}

double variance_mixed(const ComplexMatrix& a, const DensityMatrix& rho) {
    require_dims(a.dim(), rho.dim());
    require_unitary(a);
    const Complex mean = expectation(a, rho);
    const ComplexMatrix delta = a - mean * ComplexMatrix::identity(a.dim());
    return std::max(0.0, (delta.adjoint() * delta * rho.matrix()).trace().real());
}

PureState purify(const DensityMatrix& rho) {
    // ‖vec(√ρ)‖² = Tr ρ = 1 up to roundoff; renormalize to absorb the clamp.
    return PureState::normalized(vec(psd_sqrt(rho.matrix())));
}

ComplexMatrix lift(const ComplexMatrix& a) {
    return kron(ComplexMatrix::identity(a.dim()), a);
}

DensityMatrix bloch_density(const std::array<double, 3>& r) {
    for (double c : r) {
        if (!std::isfinite(c)) throw Error(ErrorCode::NonFinite, "Bloch component is not finite");
    }
    const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (len > 1.0 + 1e-12) {
        throw Error(ErrorCode::BlochVectorTooLong, "|r| = " + std::to_string(len) + " > 1");
    }
    ComplexMatrix m = ComplexMatrix::identity(2);
    m += r[0] * pauli_x();
    m += r[1] * pauli_y();
    m += r[2] * pauli_z();
    m *= 0.5;
    return DensityMatrix(std::move(m));
}

ComplexMatrix trace_out_first(const PureState& psi, std::size_t n) {
    if (psi.dim() != n * n) {
        throw Error(ErrorCode::DimensionMismatch, "state is not on C^n ⊗ C^n");
    }
    const auto& v = psi.amplitudes();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Complex s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += v[j * n + i] * std::conj(v[j * n + k]);
            r(i, k) = s;
        }
    return r;
}

ComplexMatrix trace_out_second(const PureState& psi, std::size_t n) {
    if (psi.dim() != n * n) {
        throw Error(ErrorCode::DimensionMismatch, "state is not on C^n ⊗ C^n");
    }
    const auto& v = psi.amplitudes();
    ComplexMatrix r(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
            Complex s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += v[j * n + i] * std::conj(v[l * n + i]);
            r(j, l) = s;
        }
    return r;
}

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
ComplexMatrix pauli_y() {
    return ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
}
ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }

}  // namespace uur
