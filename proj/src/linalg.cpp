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

#include "uur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "uur/error.hpp"

namespace uur {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

// --- ComplexVector --------------------------------------------------------

ComplexVector::ComplexVector(std::vector<Complex> entries) : data_(std::move(entries)) {
    for (const auto& z : data_) {
        if (!finite(z)) throw Error(ErrorCode::NonFinite, "vector entry is not finite");
    }
}

double ComplexVector::norm_squared() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return s;
}

double ComplexVector::norm() const { return std::sqrt(norm_squared()); }

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
    require_same_dim(dim(), other.dim(), "vector addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
    require_same_dim(dim(), other.dim(), "vector subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexVector& ComplexVector::operator*=(Complex scale) {
    for (auto& z : data_) z *= scale;
    return *this;
}

ComplexVector operator+(ComplexVector lhs, const ComplexVector& rhs) { return lhs += rhs; }
ComplexVector operator-(ComplexVector lhs, const ComplexVector& rhs) { return lhs -= rhs; }
ComplexVector operator*(Complex scale, ComplexVector v) { return v *= scale; }

Complex inner(const ComplexVector& u, const ComplexVector& v) {
    require_same_dim(u.dim(), v.dim(), "inner product");
    Complex s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

// --- ComplexMatrix --------------------------------------------------------

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "matrix must have at least one row");
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw Error(ErrorCode::InvalidArgument,
                        "matrix is not square: row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!finite(rows[i][j])) throw Error(ErrorCode::NonFinite, "matrix entry is not finite");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::vector<std::vector<Complex>> r;
    r.reserve(rows.size());
    for (const auto& row : rows) r.emplace_back(row);
    return from_rows(r);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector& u, const ComplexVector& v) {
    require_same_dim(u.dim(), v.dim(), "outer product");
    ComplexMatrix m(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j) m(i, j) = u[i] * std::conj(v[j]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
    ComplexVector v(n_);
    for (std::size_t i = 0; i < n_; ++i) v[i] = (*this)(i, j);
    return v;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), finite);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_dim(n_, other.n_, "matrix addition");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_dim(n_, other.n_, "matrix subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim(), b.dim(), "matrix product");
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
    require_same_dim(a.dim(), v.dim(), "matrix-vector product");
    ComplexVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double d = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double d = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix& m) {
    double d = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j)
            d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

// --- Eigensolver ----------------------------------------------------------

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Annihilates a(p, q) with the plane unitary
//   U = [[c, s], [-s·conj(phase), c·conj(phase)]],  phase = a_pq / |a_pq|,
// i.e. a phase fix that makes the pivot real followed by a real rotation.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double g = std::abs(apq);
    if (g == 0.0) return;
    const Complex phase = apq / g;
    const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex upp = c;
    const Complex upq = s;
    const Complex uqp = -s * std::conj(phase);
    const Complex uqq = c * std::conj(phase);

    const std::size_t n = a.dim();
    // A ← A·U
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    // A ← U†·A
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    // V ← V·U
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * upp + vkq * uqp;
        v(k, q) = vkp * upq + vkq * uqq;
    }
}

}  // namespace

EigDecomposition hermitian_eig(const ComplexMatrix& m, double tol) {
    const std::size_t n = m.dim();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty matrix");
    if (!m.all_finite()) throw Error(ErrorCode::NonFinite, "matrix entry is not finite");
    const double defect = hermiticity_defect(m);
    if (defect > tol) {
        throw Error(ErrorCode::NotHermitian,
                    "max |M_ij - conj(M_ji)| = " + std::to_string(defect) + " exceeds " +
                        std::to_string(tol));
    }

    ComplexMatrix a = m;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex h = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = h;
            a(j, i) = std::conj(h);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double threshold = kJacobiOffDiagTol * std::max(1.0, frobenius_norm(a));
    int sweep = 0;
    while (off_diagonal_norm(a) >= threshold) {
        if (sweep++ == kJacobiMaxSweeps) {
            throw Error(ErrorCode::NoConvergence,
                        "Jacobi iteration did not converge within " +
                            std::to_string(kJacobiMaxSweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    const EigDecomposition eig = hermitian_eig(m);
    const std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t k = 0; k < n; ++k) {
        double lambda = eig.eigenvalues[k];
        if (lambda < -kPsdSlack) {
            throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(lambda) + " is negative");
        }
        const double root = std::sqrt(std::max(lambda, 0.0));
        if (root == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) += root * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
    }
    for (std::size_t i = 0; i < n; ++i) {
        r(i, i) = r(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex h = 0.5 * (r(i, j) + std::conj(r(j, i)));
            r(i, j) = h;
            r(j, i) = std::conj(h);
        }
    }
    return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix r(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return r;
}

ComplexVector vec(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexVector v(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) v[j * n + i] = m(i, j);
    return v;
}

double unitarity_defect(const ComplexMatrix& m) {
    return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.dim()));
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    return m.dim() > 0 && m.all_finite() && unitarity_defect(m) <= tol;
}

Complex determinant(const ComplexMatrix& m) {
    ComplexMatrix a = m;
    const std::size_t n = a.dim();
    Complex det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (a(pivot, col) == Complex(0.0)) return 0.0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

}  // namespace uur
