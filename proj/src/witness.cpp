#include "rankrange/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "rankrange/compressions.hpp"
#include "rankrange/error.hpp"

namespace rankrange {

namespace {

constexpr double kIsometryTol = 1e-10;
constexpr double kArmijo = 1e-4;

// Exactly Hermitian y^* y.
ComplexMatrix gram(const ComplexMatrix& y) {
    const std::size_t d = y.cols();
    ComplexMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            cplx s = 0.0;
            for (std::size_t l = 0; l < y.rows(); ++l) s += std::conj(y(l, i)) * y(l, j);
            g(i, j) = s;
            g(j, i) = std::conj(s);
        }
        g(i, i) = g(i, i).real();
    }
    return g;
}

ComplexMatrix residual_matrix(const ComplexMatrix& a, const ComplexMatrix& n, cplx lambda) {
    ComplexMatrix r = compression(a, n);
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) -= lambda;
    return r;
}

double squared_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const cplx& z : m.entries()) s += std::norm(z);
    return s;
}

// Eigenvectors of H(e^{i theta0} A) whose eigenvalues sit closest to the k-th
// one, theta0 rotating lambda onto the positive real axis.
ComplexMatrix spectral_start(const ComplexMatrix& a, std::size_t k, cplx lambda) {
    const double theta0 = lambda == cplx(0.0) ? 0.0 : -std::arg(lambda);
    const HermitianEigen eig = eig_hermitian_desc(hermitian_part(a, theta0));
    const double pivot = eig.values[k - 1];
    std::vector<std::size_t> order(eig.values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return std::abs(eig.values[i] - pivot) < std::abs(eig.values[j] - pivot);
    });
    ComplexMatrix n(a.rows(), k);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < a.rows(); ++i) n(i, c) = eig.vectors(i, order[c]);
    return n;
}

struct DescentOutcome {
    ComplexMatrix n;
    double residual = 0.0;
    std::size_t iterations = 0;
};

DescentOutcome descend(const ComplexMatrix& a, cplx lambda, ComplexMatrix n, double tol,
                       std::size_t max_iters, double initial_step) {
    const ComplexMatrix a_adj = a.adjoint();
    double step = initial_step;
    ComplexMatrix r = residual_matrix(a, n, lambda);
    double f = squared_norm(r);

    std::size_t it = 0;
    for (; it < max_iters && std::sqrt(f) > tol; ++it) {
        // Euclidean gradient 2 (A N R^* + A^* N R), projected on the tangent
        // space of the isometry manifold at N.
        ComplexMatrix g = a * (n * r.adjoint()) + a_adj * (n * r);
        g *= 2.0;
        ComplexMatrix ng = n.adjoint() * g;
        ComplexMatrix sym = 0.5 * (ng + ng.adjoint());
        ComplexMatrix xi = g - n * sym;
        const double gnorm2 = squared_norm(xi);
        if (gnorm2 <= 1e-32 * std::max(1.0, f)) break;

        bool accepted = false;
        while (step > 1e-18) {
            ComplexMatrix trial = polar_isometry(n - step * xi);
            ComplexMatrix trial_r = residual_matrix(a, trial, lambda);
            const double trial_f = squared_norm(trial_r);
            if (trial_f <= f - kArmijo * step * gnorm2) {
                n = std::move(trial);
                r = std::move(trial_r);
                f = trial_f;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
        step *= 2.0;
    }
    return {std::move(n), std::sqrt(f), it};
}

}  // namespace

double witness_residual(const ComplexMatrix& a, const ComplexMatrix& n, cplx lambda) {
    return std::sqrt(squared_norm(residual_matrix(a, n, lambda)));
}

ComplexMatrix polar_isometry(const ComplexMatrix& y) {
    const HermitianEigen eig = eig_hermitian_desc(gram(y));
    const std::size_t d = y.cols();
    if (eig.values.back() <= 0.0) throw StructureError("cannot retract a rank-deficient matrix");
    ComplexMatrix inv_sqrt(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            cplx s = 0.0;
            for (std::size_t l = 0; l < d; ++l) {
                s += eig.vectors(i, l) * std::conj(eig.vectors(j, l)) / std::sqrt(eig.values[l]);
            }
            inv_sqrt(i, j) = s;
        }
    }
    return y * inv_sqrt;
}

WitnessResult find_witness(const ComplexMatrix& a, std::size_t k, cplx lambda,
                           const WitnessOptions& options) {
    if (!a.is_square()) throw DimensionError("witness search requires a square matrix");
    if (k < 1 || k > a.rows()) throw ParameterError("k outside [1, n]");
    if (!(options.tol > 0.0)) throw ParameterError("tolerance must be positive");
    if (options.restarts < 1) throw ParameterError("at least one restart is required");

    const double norm = std::max(1.0, spectral_norm(a));
    const double initial_step = 0.25 / (norm * norm);
    std::mt19937_64 rng(options.seed);

    WitnessResult best;
    best.lambda = lambda;
    best.residual = std::numeric_limits<double>::infinity();
    for (std::size_t attempt = 0; attempt < options.restarts; ++attempt) {
        ComplexMatrix start = attempt == 0 ? spectral_start(a, k, lambda)
                                           : haar_isometry(a.rows(), k, rng);
        DescentOutcome out = descend(a, lambda, std::move(start), options.tol,
                                     options.max_iters, initial_step);
        best.iterations += out.iterations;
        best.restarts_used = attempt + 1;
        if (out.residual < best.residual) {
            best.residual = out.residual;
            best.isometry = std::move(out.n);
        }
        if (best.residual <= options.tol) {
            best.found = true;
            break;
        }
    }
    return best;
}

bool verify_witness(const ComplexMatrix& a, const ComplexMatrix& n, cplx lambda, double tol) {
    if (!a.is_square() || n.rows() != a.rows()) {
        throw DimensionError("witness shape does not match the matrix");
    }
    if (isometry_defect(n) > kIsometryTol) throw StructureError("witness is not an isometry");
    return witness_residual(a, n, lambda) <= tol;
}

}  // namespace rankrange
