#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace rankrange {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// Zero matrix of the given shape. Both dimensions must be positive.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// Takes ownership of row-major entries; throws on shape mismatch or
    /// non-finite values.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    /// Nested-list construction, mostly for tests: {{1, 2}, {3, 4}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const cplx> diag);
    static ComplexMatrix diagonal(std::initializer_list<cplx> diag);
    static ComplexMatrix scalar(std::size_t n, cplx c);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_ && rows_ > 0; }

    cplx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * cols_ + j];
    }

    std::span<const cplx> entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix column(std::size_t j) const;
    cplx trace() const;
    double frobenius_norm() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx s);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);

/// Eigen-decomposition of a Hermitian matrix, eigenvalues descending.
///
/// Within a repeated eigenvalue the choice of eigenvector basis is whatever
/// the solver produced and carries no guarantee.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;  // column i pairs with values[i]
};

/// H(e^{i theta} A) = (e^{i theta} A + e^{-i theta} A^*) / 2, exactly Hermitian.
ComplexMatrix hermitian_part(const ComplexMatrix& a, double theta = 0.0);

/// ||H - H^*||_F / max(1, ||H||_F).
double hermitian_defect(const ComplexMatrix& h);

/// Cyclic complex Jacobi. Throws StructureError when the Hermitian defect
/// exceeds 1e-12.
HermitianEigen eig_hermitian_desc(const ComplexMatrix& h);

/// Same sweep without eigenvector accumulation.
std::vector<double> eigvals_hermitian_desc(const ComplexMatrix& h);

/// Largest singular value, sqrt(lambda_1(A^* A)).
double spectral_norm(const ComplexMatrix& a);

/// Returns the scalar c when ||A - a_11 I||_F <= tol * max(1, ||A||_F).
std::optional<cplx> is_scalar(const ComplexMatrix& a, double tol = 1e-12);

/// ||M^* M - I||_F for an n x d matrix.
double isometry_defect(const ComplexMatrix& m);

}  // namespace rankrange
