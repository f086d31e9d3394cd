#include "rankrange/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankrange/error.hpp"

namespace rankrange {

namespace {

void require_finite(std::span<const cplx> data) {
    for (const cplx& z : data) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw StructureError("matrix entries must be finite");
        }
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        throw DimensionError("entry count " + std::to_string(data_.size()) +
                             " does not match shape " + std::to_string(rows) + "x" +
                             std::to_string(cols));
    }
    require_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ragged row in matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) { return scalar(n, 1.0); }

ComplexMatrix ComplexMatrix::scalar(std::size_t n, cplx c) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    require_finite(m.data_);
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    require_finite(m.data_);
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<cplx> diag) {
    return diagonal(std::span<const cplx>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::column(std::size_t j) const {
    ComplexMatrix out(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("shape mismatch in matrix addition");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("shape mismatch in matrix subtraction");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("inner dimensions differ in matrix product");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const cplx ail = a(i, l);
            if (ail == cplx(0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += ail * b(l, j);
        }
    }
    return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a, double theta) {
    if (!a.is_square()) throw DimensionError("hermitian_part requires a square matrix");
    const cplx rot = theta == 0.0 ? cplx(1.0) : std::polar(1.0, theta);
    const std::size_t n = a.rows();
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = (rot * a(i, i)).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (rot * a(i, j) + std::conj(rot * a(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

double hermitian_defect(const ComplexMatrix& h) {
    if (!h.is_square()) throw DimensionError("Hermitian check requires a square matrix");
    double s = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) s += std::norm(h(i, j) - std::conj(h(j, i)));
    return std::sqrt(s) / std::max(1.0, h.frobenius_norm());
}

double spectral_norm(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("spectral_norm requires a square matrix");
    const std::size_t n = a.rows();
    ComplexMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t l = 0; l < n; ++l) s += std::conj(a(l, i)) * a(l, j);
            gram(i, j) = s;
            gram(j, i) = std::conj(s);
        }
        gram(i, i) = gram(i, i).real();
    }
    const auto values = eigvals_hermitian_desc(gram);
    return std::sqrt(std::max(0.0, values.front()));
}

std::optional<cplx> is_scalar(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) throw DimensionError("is_scalar requires a square matrix");
    const cplx c = a(0, 0);
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s += std::norm(a(i, j) - (i == j ? c : cplx(0.0)));
    if (std::sqrt(s) <= tol * std::max(1.0, a.frobenius_norm())) return c;
    return std::nullopt;
}

double isometry_defect(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.cols(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cplx g = 0.0;
            for (std::size_t l = 0; l < m.rows(); ++l) g += std::conj(m(l, i)) * m(l, j);
            if (i == j) g -= 1.0;
            s += std::norm(g);
        }
    }
    return std::sqrt(s);
}

}  // namespace rankrange
