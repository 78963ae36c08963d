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

#include "qmono/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qmono/errors.h"

namespace qmono {

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw Error(ErrorCode::OutOfRange, "matrix entry count does not match rows*cols");
    }
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (size_t k = 0; k < values.size(); k++) {
        m(k, k) = values[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out = *this;
    for (auto &z : out.entries_) {
        z = std::conj(z);
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (size_t k = 0; k < std::min(rows_, cols_); k++) {
        t += (*this)(k, k);
    }
    return t;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto &z : entries_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorCode::OutOfRange, "matrix shape mismatch in addition");
    }
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorCode::OutOfRange, "matrix shape mismatch in subtraction");
    }
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols_ != b.rows_) {
        throw Error(ErrorCode::OutOfRange, "matrix shape mismatch in product");
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; i++) {
        for (size_t k = 0; k < a.cols_; k++) {
            Complex aik = a(i, k);
            if (aik == Complex(0)) {
                continue;
            }
            for (size_t j = 0; j < b.cols_; j++) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::OutOfRange, "matrix shape mismatch in comparison");
    }
    double worst = 0;
    for (size_t k = 0; k < a.entries().size(); k++) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

double hermiticity_error(const ComplexMatrix &m) {
    if (!m.is_square()) {
        return INFINITY;
    }
    double worst = 0;
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = r; c < m.cols(); c++) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            Complex aij = a(i, j);
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix outer(std::span<const Complex> v) {
    ComplexMatrix out(v.size(), v.size());
    for (size_t r = 0; r < v.size(); r++) {
        for (size_t c = 0; c < v.size(); c++) {
            out(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return out;
}

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kOffDiagonalTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

// Runs the sweeps in place; a ends up (numerically) diagonal. When v is non-null
// it accumulates the rotations so that m = v * diag(a) * v^dagger.
int jacobi_sweeps(ComplexMatrix &a, ComplexMatrix *v) {
    const size_t n = a.rows();
    const double threshold = kOffDiagonalTolerance * std::max(1.0, a.frobenius_norm());
    for (int sweep = 0; sweep <= kMaxSweeps; sweep++) {
        if (off_diagonal_norm(a) < threshold) {
            return sweep;
        }
        if (sweep == kMaxSweeps) {
            break;
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                Complex apq = a(p, q);
                double mag = std::abs(apq);
                if (mag < 1e-300) {
                    continue;
                }
                // Phase the (p, q) entry real, then apply a real rotation.
                Complex phase = std::conj(apq) / mag;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double theta = (aqq - app) / (2 * mag);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                // J restricted to (p, q): [[c, s], [-s*phase, c*phase]].
                Complex jpp = c;
                Complex jpq = s;
                Complex jqp = -s * phase;
                Complex jqq = c * phase;
                for (size_t k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                for (size_t k = 0; k < n; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                if (v != nullptr) {
                    for (size_t k = 0; k < n; k++) {
                        Complex vkp = (*v)(k, p);
                        Complex vkq = (*v)(k, q);
                        (*v)(k, p) = vkp * jpp + vkq * jqp;
                        (*v)(k, q) = vkp * jpq + vkq * jqq;
                    }
                }
            }
        }
    }
    throw Error(ErrorCode::NoConvergence, "Jacobi iteration exceeded 100 sweeps");
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw Error(ErrorCode::NotHermitian, "matrix is not square");
    }
    double err = hermiticity_error(m);
    if (!(err <= kHermitianTolerance)) {
        throw Error(ErrorCode::NotHermitian, "max |m - m^dagger| = " + std::to_string(err));
    }
    ComplexMatrix a = m;
    for (size_t r = 0; r < a.rows(); r++) {
        a(r, r) = a(r, r).real();
        for (size_t c = r + 1; c < a.cols(); c++) {
            Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    return a;
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix &m) {
    ComplexMatrix a = hermitian_part(m);
    const size_t n = a.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    int sweeps = jacobi_sweeps(a, &v);

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() > a(y, y).real();
    });
    EigenSystem out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    out.sweeps = sweeps;
    for (size_t k = 0; k < n; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < n; r++) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) {
    ComplexMatrix a = hermitian_part(m);
    jacobi_sweeps(a, nullptr);
    std::vector<double> values(a.rows());
    for (size_t k = 0; k < values.size(); k++) {
        values[k] = a(k, k).real();
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

DimensionList::DimensionList(std::vector<size_t> dims, std::vector<std::string> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
    if (dims_.size() != labels_.size()) {
        throw Error(ErrorCode::OutOfRange, "dimension list and label list differ in length");
    }
    for (size_t d : dims_) {
        if (d < 2) {
            throw Error(ErrorCode::OutOfRange, "subsystem dimensions must be at least 2");
        }
    }
    std::set<std::string> seen;
    for (const auto &label : labels_) {
        if (label.empty() || !seen.insert(label).second) {
            throw Error(ErrorCode::OutOfRange, "party labels must be unique and nonempty");
        }
    }
}

DimensionList DimensionList::qubits(size_t n) {
    std::vector<std::string> labels;
    for (size_t k = 0; k < n; k++) {
        labels.emplace_back(1, static_cast<char>('A' + k));
    }
    return DimensionList(std::vector<size_t>(n, 2), labels);
}

size_t DimensionList::total_dim() const {
    size_t d = 1;
    for (size_t x : dims_) {
        d *= x;
    }
    return d;
}

bool DimensionList::contains(const std::string &label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

size_t DimensionList::index_of(const std::string &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw Error(ErrorCode::UnknownLabel, "no party labelled '" + label + "'");
    }
    return static_cast<size_t>(it - labels_.begin());
}

size_t DimensionList::dim_of(const std::string &label) const {
    return dims_[index_of(label)];
}

size_t DimensionList::dim_of(const PartySet &parties) const {
    size_t d = 1;
    for (const auto &p : parties) {
        d *= dim_of(p);
    }
    return d;
}

DimensionList DimensionList::subset(const PartySet &parties) const {
    std::vector<size_t> dims;
    for (const auto &p : parties) {
        dims.push_back(dim_of(p));
    }
    return DimensionList(std::move(dims), parties);
}

PartySet DimensionList::complement(const PartySet &parties) const {
    for (const auto &p : parties) {
        index_of(p);
    }
    PartySet out;
    for (const auto &label : labels_) {
        if (std::find(parties.begin(), parties.end(), label) == parties.end()) {
            out.push_back(label);
        }
    }
    return out;
}

void require_disjoint(std::initializer_list<const PartySet *> sets) {
    std::set<std::string> seen;
    for (const PartySet *s : sets) {
        for (const auto &label : *s) {
            if (!seen.insert(label).second) {
                throw Error(ErrorCode::OverlappingParties, "party '" + label + "' appears more than once");
            }
        }
    }
}

PartySet join(const PartySet &a, const PartySet &b) {
    PartySet out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    double s = 0;
    for (const auto &z : matrix_.entries()) {
        s += std::norm(z);
    }
    return s;
}

DensityMatrix validate_density(const ComplexMatrix &m, const DimensionList &dims) {
    constexpr double tol = 1e-8;
    if (!m.is_square() || m.rows() != dims.total_dim()) {
        throw Error(ErrorCode::NotDensityMatrix, "shape: matrix side does not match the product of dims");
    }
    if (!m.all_finite()) {
        throw Error(ErrorCode::NotDensityMatrix, "finite: matrix has NaN or infinite entries");
    }
    if (hermiticity_error(m) > tol) {
        throw Error(ErrorCode::NotDensityMatrix, "hermiticity: max |m - m^dagger| exceeds 1e-8");
    }
    Complex tr = m.trace();
    if (std::abs(tr.real() - 1) > tol || std::abs(tr.imag()) > tol) {
        throw Error(ErrorCode::NotDensityMatrix, "trace: trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    ComplexMatrix herm = m;
    for (size_t r = 0; r < herm.rows(); r++) {
        herm(r, r) = herm(r, r).real();
        for (size_t c = r + 1; c < herm.cols(); c++) {
            Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
            herm(r, c) = avg;
            herm(c, r) = std::conj(avg);
        }
    }
    EigenSystem eig = hermitian_eig(herm);
    double lowest = eig.values.back();
    if (lowest < -tol) {
        throw Error(ErrorCode::NotDensityMatrix, "positivity: eigenvalue " + std::to_string(lowest) + " below -1e-8");
    }
    if (lowest >= 0) {
        return DensityMatrix(DensityMatrix::Unchecked{}, dims, std::move(herm));
    }

    // Clamp and rebuild V diag(lambda) V^dagger with unit trace.
    std::vector<double> clamped = eig.values;
    double total = 0;
    for (double &x : clamped) {
        x = std::max(x, 0.0);
        total += x;
    }
    const size_t n = herm.rows();
    ComplexMatrix rebuilt(n, n);
    for (size_t k = 0; k < n; k++) {
        if (clamped[k] == 0) {
            continue;
        }
        double w = clamped[k] / total;
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                rebuilt(r, c) += w * eig.vectors(r, k) * std::conj(eig.vectors(c, k));
            }
        }
    }
    return DensityMatrix(DensityMatrix::Unchecked{}, dims, std::move(rebuilt));
}

DensityMatrix partial_trace(const DensityMatrix &rho, const PartySet &keep) {
    const DimensionList &dims = rho.dims();
    if (keep.empty()) {
        throw Error(ErrorCode::UnknownLabel, "partial trace needs at least one kept party");
    }
    require_disjoint({&keep});
    std::vector<size_t> keep_idx;
    for (const auto &label : keep) {
        keep_idx.push_back(dims.index_of(label));
    }
    std::vector<size_t> traced_idx;
    for (size_t k = 0; k < dims.size(); k++) {
        if (std::find(keep_idx.begin(), keep_idx.end(), k) == keep_idx.end()) {
            traced_idx.push_back(k);
        }
    }

    // Stride of each original subsystem (first label most significant).
    std::vector<size_t> stride(dims.size());
    size_t acc = 1;
    for (size_t k = dims.size(); k-- > 0;) {
        stride[k] = acc;
        acc *= dims.dims()[k];
    }

    auto offsets = [&](const std::vector<size_t> &which) {
        size_t count = 1;
        for (size_t k : which) {
            count *= dims.dims()[k];
        }
        std::vector<size_t> out(count, 0);
        for (size_t idx = 0; idx < count; idx++) {
            size_t rem = idx;
            size_t off = 0;
            for (size_t j = which.size(); j-- > 0;) {
                size_t d = dims.dims()[which[j]];
                off += (rem % d) * stride[which[j]];
                rem /= d;
            }
            out[idx] = off;
        }
        return out;
    };
    std::vector<size_t> keep_off = offsets(keep_idx);
    std::vector<size_t> traced_off = offsets(traced_idx);

    const ComplexMatrix &m = rho.matrix();
    const size_t dk = keep_off.size();
    ComplexMatrix out(dk, dk);
    for (size_t a = 0; a < dk; a++) {
        for (size_t b = 0; b < dk; b++) {
            Complex s = 0;
            for (size_t t : traced_off) {
                s += m(keep_off[a] + t, keep_off[b] + t);
            }
            out(a, b) = s;
        }
    }
    return DensityMatrix(DensityMatrix::Unchecked{}, dims.subset(keep), std::move(out));
}

}  // namespace qmono
