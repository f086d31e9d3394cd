// Cyclic complex Jacobi eigensolver for Hermitian matrices.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rankrange/error.hpp"
#include "rankrange/matrix.hpp"

namespace rankrange {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kOffDiagonalTol = 1e-14;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& h) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = i + 1; j < h.cols(); ++j) s += 2.0 * std::norm(h(i, j));
    return std::sqrt(s);
}

// Diagonalizes `h` in place. When `vectors` is non-null it is multiplied on
// the right by every rotation applied.
void jacobi_diagonalize(ComplexMatrix& h, ComplexMatrix* vectors) {
    const std::size_t n = h.rows();
    const double scale = h.frobenius_norm();
    if (scale == 0.0 || n == 1) return;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(h) < kOffDiagonalTol * scale) return;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(h(p, q));
                if (g == 0.0) continue;
                const double a = h(p, p).real();
                const double b = h(q, q).real();
                if (sweep > 3 && std::abs(a) + 100.0 * g == std::abs(a) &&
                    std::abs(b) + 100.0 * g == std::abs(b)) {
                    h(p, q) = h(q, p) = 0.0;
                    continue;
                }

                // Phase-rotate the pair to a real symmetric 2x2 block, then
                // apply the classical Jacobi rotation to it.
                const cplx phase_conj = std::conj(h(p, q) / g);
                const double ratio = (b - a) / (2.0 * g);
                double t;
                if (std::abs(ratio) > 1e150) {
                    t = 0.5 / ratio;
                } else {
                    t = (ratio >= 0.0 ? 1.0 : -1.0) /
                        (std::abs(ratio) + std::sqrt(ratio * ratio + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // V restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
                const cplx vpp = c;
                const cplx vpq = s;
                const cplx vqp = -s * phase_conj;
                const cplx vqq = c * phase_conj;

                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const cplx hip = h(i, p);
                    const cplx hiq = h(i, q);
                    const cplx new_ip = hip * vpp + hiq * vqp;
                    const cplx new_iq = hip * vpq + hiq * vqq;
                    h(i, p) = new_ip;
                    h(p, i) = std::conj(new_ip);
                    h(i, q) = new_iq;
                    h(q, i) = std::conj(new_iq);
                }
                h(p, p) = a - t * g;
                h(q, q) = b + t * g;
                h(p, q) = h(q, p) = 0.0;

                if (vectors != nullptr) {
                    ComplexMatrix& v = *vectors;
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx vip = v(i, p);
                        const cplx viq = v(i, q);
                        v(i, p) = vip * vpp + viq * vqp;
                        v(i, q) = vip * vpq + viq * vqq;
                    }
                }
            }
        }
    }
}

void require_hermitian(const ComplexMatrix& h) {
    if (!h.is_square()) throw DimensionError("eigensolver requires a square matrix");
    const double defect = hermitian_defect(h);
    if (defect > kHermitianTol) {
        throw StructureError("matrix is not Hermitian (relative defect " + std::to_string(defect) +
                             ")");
    }
}

std::vector<std::size_t> descending_order(const ComplexMatrix& h) {
    std::vector<std::size_t> order(h.rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return h(i, i).real() > h(j, j).real();
    });
    return order;
}

}  // namespace

HermitianEigen eig_hermitian_desc(const ComplexMatrix& h) {
    require_hermitian(h);
    ComplexMatrix work = h;
    ComplexMatrix vectors = ComplexMatrix::identity(h.rows());
    jacobi_diagonalize(work, &vectors);

    const auto order = descending_order(work);
    HermitianEigen out;
    out.values.reserve(order.size());
    out.vectors = ComplexMatrix(h.rows(), h.cols());
    for (std::size_t k = 0; k < order.size(); ++k) {
        out.values.push_back(work(order[k], order[k]).real());
        for (std::size_t i = 0; i < h.rows(); ++i) out.vectors(i, k) = vectors(i, order[k]);
    }
    return out;
}

std::vector<double> eigvals_hermitian_desc(const ComplexMatrix& h) {
    require_hermitian(h);
    ComplexMatrix work = h;
    jacobi_diagonalize(work, nullptr);
    std::vector<double> values(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) values[i] = work(i, i).real();
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

}  // namespace rankrange
