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

// Dense complex linear algebra for the small matrices that appear in
// uncertainty-relation computations (operators, density matrices, Gram
// matrices). Dimensions stay well below ~64, so everything is plain loops.

#ifndef UUR_LINALG_HPP
#define UUR_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace uur {

using Complex = std::complex<double>;

class ComplexVector {
public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim) : data_(dim) {}
    /// Throws Error(NonFinite) if any entry is NaN or infinite.
    explicit ComplexVector(std::vector<Complex> entries);
    ComplexVector(std::initializer_list<Complex> entries)
        : ComplexVector(std::vector<Complex>(entries)) {}

    std::size_t dim() const noexcept { return data_.size(); }
    Complex& operator[](std::size_t i) { return data_[i]; }
    const Complex& operator[](std::size_t i) const { return data_[i]; }
    std::span<const Complex> entries() const noexcept { return data_; }

    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    double norm() const;
    double norm_squared() const;

    ComplexVector& operator+=(const ComplexVector& other);
    ComplexVector& operator-=(const ComplexVector& other);
    ComplexVector& operator*=(Complex scale);

private:
    std::vector<Complex> data_;
};

ComplexVector operator+(ComplexVector lhs, const ComplexVector& rhs);
ComplexVector operator-(ComplexVector lhs, const ComplexVector& rhs);
ComplexVector operator*(Complex scale, ComplexVector v);

/// <u|v>, conjugate-linear in the first argument.
Complex inner(const ComplexVector& u, const ComplexVector& v);

/// Square n×n complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    /// Zero matrix of dimension n.
    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}
    /// Throws Error(InvalidArgument) unless `rows` is square, and
    /// Error(NonFinite) on NaN/Inf.
    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix diagonal(std::span<const double> diag);
    /// |u><v|
    static ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v);

    std::size_t dim() const noexcept { return n_; }
    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    /// Column j as a vector.
    ComplexVector column(std::size_t j) const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v);

/// max_ij |a_ij - b_ij|. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const ComplexVector& a, const ComplexVector& b);
double frobenius_norm(const ComplexMatrix& m);

struct EigDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

inline constexpr double kDefaultHermitianTol = 1e-10;
inline constexpr double kJacobiOffDiagTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kPsdSlack = 1e-10;

/// Cyclic complex Jacobi eigendecomposition of a Hermitian matrix.
///
/// Throws Error(NotHermitian) when max |M_ij - conj(M_ji)| > tol, and
/// Error(NoConvergence) when the off-diagonal Frobenius norm does not fall
/// below 1e-12·max(1, ‖M‖_F) within 100 sweeps.
EigDecomposition hermitian_eig(const ComplexMatrix& m, double tol = kDefaultHermitianTol);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-10, 0) are clamped to zero; anything lower throws Error(NotPSD).
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Column stacking: entry (i, j) lands at j·n + i, so that
/// (I ⊗ A)·vec(M) = vec(A·M).
ComplexVector vec(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& m, double tol);
/// ‖M†M − I‖_max, the quantity is_unitary thresholds.
double unitarity_defect(const ComplexMatrix& m);
double hermiticity_defect(const ComplexMatrix& m);

/// Determinant by partial-pivot LU.
Complex determinant(const ComplexMatrix& m);

}  // namespace uur

#endif  // UUR_LINALG_HPP
