#pragma once

#include <cstddef>
#include <cstdint>

#include "rankrange/matrix.hpp"

namespace rankrange {

/// Outcome of a search for an n x k isometry N with N^* A N = lambda I_k.
///
/// `found == false` only means the search failed; it is not a proof that
/// lambda lies outside the rank-k numerical range.
struct WitnessResult {
    bool found = false;
    cplx lambda;
    ComplexMatrix isometry;     // best iterate (the witness when found)
    double residual = 0.0;      // ||N^* A N - lambda I||_F
    std::size_t iterations = 0; // descent steps over all restarts
    std::size_t restarts_used = 0;
};

struct WitnessOptions {
    double tol = 1e-9;
    std::size_t max_iters = 5000;  // per restart
    std::size_t restarts = 10;     // total attempts, the first one deterministic
    std::uint64_t seed = 42;
};

/// ||N^* A N - lambda I||_F.
double witness_residual(const ComplexMatrix& a, const ComplexMatrix& n, cplx lambda);

/// Nearest isometry to `y` in Frobenius norm, y (y^* y)^{-1/2}.
ComplexMatrix polar_isometry(const ComplexMatrix& y);

/// Riemannian gradient descent on the isometry manifold with Armijo
/// backtracking. Restarts run in index order; the first success is returned.
WitnessResult find_witness(const ComplexMatrix& a, std::size_t k, cplx lambda,
                           const WitnessOptions& options = {});

/// Throws StructureError when `n` is not an isometry within 1e-10.
bool verify_witness(const ComplexMatrix& a, const ComplexMatrix& n, cplx lambda, double tol);

}  // namespace rankrange
