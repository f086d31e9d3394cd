#pragma once

#include <cstddef>
#include <optional>

#include "rankrange/convex.hpp"
#include "rankrange/matrix.hpp"

namespace rankrange {

inline constexpr std::size_t kDefaultGrid = 1024;
inline constexpr std::size_t kMinGrid = 16;

struct RangeRequest {
    ComplexMatrix matrix;
    std::size_t k = 1;
    std::size_t grid = kDefaultGrid;

    /// Throws unless the matrix is square, 1 <= k <= n and grid >= 16.
    void validate() const;
};

/// Diagnostic for an empty rank-k range: the grid direction whose half-plane
/// is most violated at the least-infeasible point.
struct InfeasibilityCertificate {
    double angle = 0.0;
    double depth = 0.0;  // negative
};

struct RangeResult {
    ConvexRegion region;
    SupportSamples support;
    std::optional<RadiiPair> radii;  // present iff region is non-empty
    std::optional<InfeasibilityCertificate> certificate;  // present iff empty
};

/// k-th largest eigenvalue of H(e^{i theta} A).
double support_value(const ComplexMatrix& a, std::size_t k, double theta);

/// Support values lambda_k(H(e^{i theta_j} A)) on the uniform grid of size m.
SupportSamples support_samples(const ComplexMatrix& a, std::size_t k, std::size_t m);

/// Outer polygonal approximation of the rank-k numerical range on a uniform
/// angle grid. k = 1 gives the classical numerical range.
RangeResult compute_range(const RangeRequest& req);

/// Throws EmptinessError (carrying the infeasibility certificate) when the
/// range is empty.
RadiiPair k_rank_radii(const RangeRequest& req);

/// Necessary test: Re(e^{i theta_j} lambda) <= lambda_k(H(e^{i theta_j} A)) + 1e-9
/// at every grid angle.
bool membership(const ComplexMatrix& a, std::size_t k, cplx lambda, std::size_t m = kDefaultGrid);

}  // namespace rankrange
