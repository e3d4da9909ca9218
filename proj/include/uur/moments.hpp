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

// Expectation values, delta coordinate vectors and variances of unitary
// operators, for pure states and (via purification) mixed states.
//
// Conventions: for a unitary A and state ψ,
//   <A>    = <ψ|A|ψ>
//   δA     = A − <A>
//   ΔA²    = <ψ|(δA)†(δA)|ψ> = 1 − |<A>|²
//   α_i    = <i|δA|ψ>,  x_i = |α_i|

#ifndef UUR_MOMENTS_HPP
#define UUR_MOMENTS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "uur/linalg.hpp"

namespace uur {

inline constexpr double kStateTol = 1e-10;
inline constexpr double kOperatorUnitaryTol = 1e-8;

class PureState {
public:
    /// Throws Error(NotNormalized) if |‖ψ‖ − 1| > tol.
    explicit PureState(ComplexVector amplitudes, double tol = kStateTol);
    /// Rescales to unit norm. Throws Error(NotNormalized) on the zero vector.
    static PureState normalized(ComplexVector amplitudes);

    std::size_t dim() const noexcept { return amplitudes_.dim(); }
    const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

private:
    ComplexVector amplitudes_;
};

class DensityMatrix {
public:
    /// Throws Error(InvalidDensityMatrix) unless m is Hermitian to 1e-10,
    /// has unit trace to 1e-10 and no eigenvalue below −1e-10.
    explicit DensityMatrix(ComplexMatrix m);
    static DensityMatrix from_pure(const PureState& psi);

    std::size_t dim() const noexcept { return matrix_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }

private:
    ComplexMatrix matrix_;
};

struct DeltaVector {
    ComplexVector entries;  // α_i
    Complex mean;           // <A>
};

struct ModulusPair {
    std::vector<double> x;
    std::vector<double> y;
    DeltaVector alpha;
    DeltaVector beta;

    std::size_t dim() const noexcept { return x.size(); }

    /// Builds a pair straight from coordinate vectors (means set to zero).
    /// Useful when the operators are not at hand.
    static ModulusPair from_deltas(ComplexVector alpha, ComplexVector beta);
};

Complex expectation(const ComplexMatrix& a, const PureState& psi);
/// Tr(Aρ)
Complex expectation(const ComplexMatrix& a, const DensityMatrix& rho);

DeltaVector delta_vector(const ComplexMatrix& a, const PureState& psi);
ModulusPair modulus_pair(const ComplexMatrix& a, const ComplexMatrix& b, const PureState& psi);

/// <A†B> − <A†><B>, evaluated through operator products.
Complex correlation(const ComplexMatrix& a, const ComplexMatrix& b, const PureState& psi);

double variance_pure(const ComplexMatrix& a, const PureState& psi);
/// Tr[(δA)†(δA)ρ] with δA = A − Tr(Aρ); equals 1 − |Tr(Aρ)|² for unitary A.
double variance_mixed(const ComplexMatrix& a, const DensityMatrix& rho);

/// vec(√ρ) on the doubled space; pairs with lift(A) = I ⊗ A.
PureState purify(const DensityMatrix& rho);
/// I_n ⊗ A, the action of A on the purified state.
ComplexMatrix lift(const ComplexMatrix& a);

/// ½(I + r·σ). Throws Error(BlochVectorTooLong) if |r| > 1 + 1e-12.
DensityMatrix bloch_density(const std::array<double, 3>& r);

/// Reduced states of |ψ><ψ| on C^n ⊗ C^n (first factor is the column index
/// of vec). `trace_out_first` keeps the factor lift() acts on.
ComplexMatrix trace_out_first(const PureState& psi, std::size_t n);
ComplexMatrix trace_out_second(const PureState& psi, std::size_t n);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace uur

#endif  // UUR_MOMENTS_HPP
