#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "rankrange/convex.hpp"
#include "rankrange/matrix.hpp"
#include "rankrange/rank_range.hpp"

namespace rankrange {

/// Ordered family of n x d isometries M_1, M_2, ...
struct IsometryFamily {
    std::size_t n = 0;
    std::size_t d = 0;
    std::uint64_t seed = 0;
    std::vector<ComplexMatrix> members;

    /// Wraps explicit isometries, checking shape and ||M^* M - I||_F <= 1e-10.
    static IsometryFamily from_members(std::vector<ComplexMatrix> members);
};

/// Orthonormalizes the columns of `m` (twice-iterated modified Gram-Schmidt),
/// i.e. the Q factor of a QR factorization with positive diagonal in R.
/// Throws StructureError on rank deficiency.
ComplexMatrix orthonormalize_columns(const ComplexMatrix& m);

/// Haar-distributed n x d isometry drawn from `rng`.
ComplexMatrix haar_isometry(std::size_t n, std::size_t d, std::mt19937_64& rng);

/// `count` Haar isometries, reproducible from (n, d, count, seed).
IsometryFamily sample_family(std::size_t n, std::size_t d, std::size_t count,
                             std::uint64_t seed);

/// Columns e_i for the given zero-based coordinate indices.
ComplexMatrix coordinate_isometry(std::size_t n, std::span<const std::size_t> indices);

/// M^* A M.
ComplexMatrix compression(const ComplexMatrix& a, const ComplexMatrix& m);

struct TraceRecord {
    std::size_t nu = 0;                 // 1-based
    ConvexRegion region;                // J_nu on the shared grid
    double q = 0.0;                     // sup |z| over J_nu
    double t = 0.0;                     // inf |z| over J_nu (0 if origin inside)
    double hausdorff_to_range = 0.0;    // NaN when the reference range is empty
};

struct ConvergenceTrace {
    std::size_t k = 0;
    std::size_t grid = 0;
    RangeResult range;                  // reference Lambda_k on the same grid
    std::vector<TraceRecord> records;
    std::optional<std::size_t> empty_from;  // first nu with empty J_nu
};

struct TraceOptions {
    std::size_t grid = kDefaultGrid;
    /// Stop once hausdorff(J_nu, Lambda_k) drops below this; 0 runs the full family.
    double early_stop_tol = 0.0;
};

/// J_nu = intersection of F(M_p^* A M_p), p <= nu, with the running radii
/// q_nu and t_nu. Requires family width n - k + 1.
ConvergenceTrace intersection_trace(const ComplexMatrix& a, std::size_t k,
                                    const IsometryFamily& family, const TraceOptions& options = {});

struct BoundsReport {
    double r_k = 0.0;
    double min_compression_radius = 0.0;      // min_p r(M_p^* A M_p)
    bool outer_bound_holds = false;           // r_k <= min_p r(...) + 1e-9
    bool origin_in_range = false;             // membership(A, k, 0, m)
    std::optional<double> r_tilde_k;
    std::optional<double> min_compression_inner_radius;  // min_p r~(M_p^* A M_p)
    std::optional<bool> inner_bound_holds;    // r~_k >= min_p r~(...) - 1e-9
    double max_compression_distance = 0.0;    // max_p dist(0, F(M_p^* A M_p))
};

/// Upper bound on r_k and, when 0 is outside Lambda_k, lower bound on the
/// inner radius, both from the compression numerical ranges of the family.
/// Throws EmptinessError when Lambda_k is empty.
BoundsReport proposition_bounds(const ComplexMatrix& a, std::size_t k,
                                const IsometryFamily& family, std::size_t grid = kDefaultGrid);

}  // namespace rankrange
