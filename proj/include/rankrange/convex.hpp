#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rankrange/matrix.hpp"

namespace rankrange {

/// Half-plane description {z : Re(e^{i angles[j]} z) <= bounds[j]} of a
/// compact convex set. Angles are strictly increasing in [0, 2pi).
struct SupportSamples {
    std::vector<double> angles;
    std::vector<double> bounds;

    /// Throws ParameterError unless there are at least three samples, the
    /// angles are strictly increasing in [0, 2pi), all values are finite and
    /// the directions leave no angular gap of pi or more (bounded region).
    void validate() const;

    /// max(1, max_j |bounds[j]|), the reference length for tolerances.
    double scale() const;

    std::size_t size() const noexcept { return angles.size(); }
};

/// theta_j = 2 pi j / m, reduced so that index j and j + m give the same angle.
double grid_angle(std::size_t j, std::size_t m);
std::vector<double> uniform_angles(std::size_t m);

enum class RegionKind { empty, point, segment, polygon };

const char* to_string(RegionKind kind);

/// Compact convex planar set: empty, a point, a segment or a strictly convex
/// counterclockwise polygon.
class ConvexRegion {
public:
    ConvexRegion() = default;

    static ConvexRegion empty_set() { return {}; }
    static ConvexRegion point(cplx z);
    /// Collapses to a point when the endpoints coincide.
    static ConvexRegion segment(cplx a, cplx b);
    /// Vertices must already be strictly convex and counterclockwise.
    static ConvexRegion polygon(std::vector<cplx> vertices);
    /// Convex hull of arbitrary points, classified by dimension.
    static ConvexRegion hull_of(std::vector<cplx> points);

    RegionKind kind() const noexcept { return kind_; }
    bool empty() const noexcept { return kind_ == RegionKind::empty; }
    const std::vector<cplx>& vertices() const noexcept { return vertices_; }

    ConvexRegion translated(cplx offset) const;
    ConvexRegion rotated(double angle) const;

private:
    RegionKind kind_ = RegionKind::empty;
    std::vector<cplx> vertices_;
};

struct RadiiPair {
    double outer = 0.0;  // max |z| over the boundary
    double inner = 0.0;  // min |z| over the boundary
};

/// Optimum of max_z min_j (h_j - Re(e^{i theta_j} z)).
struct DepthResult {
    cplx point;
    double depth = 0.0;
    std::size_t tightest = 0;  // index of the smallest slack at `point`
};

DepthResult max_depth(const SupportSamples& s);

/// Polygon, segment, point or empty set cut out by the half-planes.
///
/// Depth below -1e-9 * scale means empty; depth within +-1e-9 * scale means
/// the set has empty interior and is reported as a segment or a point.
ConvexRegion intersect_halfplanes(const SupportSamples& s);

/// Throws EmptinessError on an empty region. Lower-dimensional sets are their
/// own boundary.
RadiiPair radii(const ConvexRegion& region);

/// Euclidean distance from `p` to the set (zero inside).
double distance_to(const ConvexRegion& region, cplx p);

/// max over the set of Re(conj(direction) z), direction of unit modulus.
double support(const ConvexRegion& region, cplx direction);

/// Every vertex of `inner` lies within `tol` of `outer`'s edge inequalities.
bool contains(const ConvexRegion& outer, const ConvexRegion& inner, double tol);

/// Symmetric Hausdorff distance between non-empty regions.
double hausdorff(const ConvexRegion& a, const ConvexRegion& b);

/// Center of the largest inscribed disk; midpoint for a segment.
cplx chebyshev_center(const ConvexRegion& region);

}  // namespace rankrange
