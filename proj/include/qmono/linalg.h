// Copyright 2026 The qmonogamy Authors
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

#ifndef QMONO_LINALG_H
#define QMONO_LINALG_H

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qmono {

using Complex = std::complex<double>;

/// An ordered list of party labels, e.g. {"B", "C"}.
using PartySet = std::vector<std::string>;

/// Dense complex matrix in row-major storage.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::initializer_list<double> values);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    Complex &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }

    std::span<const Complex> entries() const noexcept {
        return entries_;
    }
    std::span<Complex> entries() noexcept {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    bool all_finite() const;
    double frobenius_norm() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
        return a *= s;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
        return a *= s;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend bool operator==(const ComplexMatrix &a, const ComplexMatrix &b) = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |m - m^dagger| entrywise.
double hermiticity_error(const ComplexMatrix &m);

/// Kronecker product: entry (i*b.rows+k, j*b.cols+l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// |v><v|
ComplexMatrix outer(std::span<const Complex> v);

struct EigenSystem {
    /// Descending.
    std::vector<double> values;
    /// Column k is the eigenvector for values[k].
    ComplexMatrix vectors;
    int sweeps = 0;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Throws NotHermitian when max |m - m^dagger| exceeds 1e-10 and NoConvergence
/// if the off-diagonal mass has not dropped below 1e-12 * max(1, ||m||_F)
/// after 100 sweeps.
EigenSystem hermitian_eig(const ComplexMatrix &m);

/// Same iteration as hermitian_eig without accumulating eigenvectors.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

/// Subsystem dimensions with their party labels. The first label is the most
/// significant tensor index.
class DimensionList {
   public:
    DimensionList() = default;
    DimensionList(std::vector<size_t> dims, std::vector<std::string> labels);

    /// n qubits labelled A, B, C, ...
    static DimensionList qubits(size_t n);

    size_t size() const noexcept {
        return dims_.size();
    }
    const std::vector<size_t> &dims() const noexcept {
        return dims_;
    }
    const std::vector<std::string> &labels() const noexcept {
        return labels_;
    }
    size_t total_dim() const;

    bool contains(const std::string &label) const;
    size_t index_of(const std::string &label) const;
    size_t dim_of(const std::string &label) const;
    size_t dim_of(const PartySet &parties) const;

    /// Restriction to the given parties, in the order given.
    DimensionList subset(const PartySet &parties) const;

    /// Labels not in `parties`, in this list's order.
    PartySet complement(const PartySet &parties) const;

    friend bool operator==(const DimensionList &, const DimensionList &) = default;

   private:
    std::vector<size_t> dims_;
    std::vector<std::string> labels_;
};

/// Throws OverlappingParties if a label repeats across the sets.
void require_disjoint(std::initializer_list<const PartySet *> sets);

PartySet join(const PartySet &a, const PartySet &b);

/// Hermitian, positive semidefinite, unit-trace matrix tagged with its
/// subsystem structure. Only produced by validate_density or by operations
/// that preserve those properties.
class DensityMatrix {
   public:
    struct Unchecked {};

    DensityMatrix(Unchecked, DimensionList dims, ComplexMatrix matrix)
        : dims_(std::move(dims)), matrix_(std::move(matrix)) {
    }

    const DimensionList &dims() const noexcept {
        return dims_;
    }
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    const std::vector<std::string> &labels() const noexcept {
        return dims_.labels();
    }
    size_t dim() const noexcept {
        return matrix_.rows();
    }

    /// Tr(rho^2)
    double purity() const;

   private:
    DimensionList dims_;
    ComplexMatrix matrix_;
};

/// Accepts m iff it is Hermitian (1e-8), has trace within 1e-8 of one and no
/// eigenvalue below -1e-8. Eigenvalues in [-1e-8, 0) are clamped to zero and
/// the trace renormalized.
DensityMatrix validate_density(const ComplexMatrix &m, const DimensionList &dims);

/// Reduced state on `keep`, with subsystems ordered as listed in `keep`.
DensityMatrix partial_trace(const DensityMatrix &rho, const PartySet &keep);

}  // namespace qmono

#endif
