#include "rankrange/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lp.hpp"
#include "rankrange/error.hpp"

namespace rankrange {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBandFactor = 1e-9;

double dot(cplx a, cplx b) { return a.real() * b.real() + a.imag() * b.imag(); }
double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

double segment_distance(cplx p, cplx a, cplx b) {
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

double vertex_scale(const std::vector<cplx>& pts) {
    double s = 1.0;
    for (const cplx& z : pts) s = std::max(s, std::abs(z));
    return s;
}

// Andrew's monotone chain; collinear points are dropped. Counterclockwise.
std::vector<cplx> monotone_chain(std::vector<cplx> pts) {
    std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;

    std::vector<cplx> hull(2 * pts.size());
    std::size_t k = 0;
    for (const cplx& p : pts) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        const cplx p = pts[i];
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    return hull;
}

// Drops consecutive (cyclic) vertices closer than `tol`.
std::vector<cplx> dedupe_cyclic(std::vector<cplx> v, double tol) {
    std::vector<cplx> out;
    out.reserve(v.size());
    for (const cplx& z : v) {
        if (out.empty() || std::abs(z - out.back()) > tol) out.push_back(z);
    }
    while (out.size() > 1 && std::abs(out.front() - out.back()) <= tol) out.pop_back();
    return out;
}

std::pair<cplx, cplx> diameter_pair(const std::vector<cplx>& v) {
    std::pair<cplx, cplx> best{v.front(), v.front()};
    double best_d = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const double d = std::norm(v[i] - v[j]);
            if (d > best_d) {
                best_d = d;
                best = {v[i], v[j]};
            }
        }
    }
    return best;
}

// Half-planes dot(normals[j], z) <= offsets[j].
struct HalfPlanes {
    std::vector<cplx> normals;  // unit length
    std::vector<double> offsets;
    double scale = 1.0;
};

DepthResult solve_depth(const HalfPlanes& hp) {
    const std::size_t m = hp.normals.size();
    const double t0 = *std::min_element(hp.offsets.begin(), hp.offsets.end());

    // Variables (x+, x-, y+, y-, s) >= 0 with z = x + iy, t = t0 + s.
    constexpr std::size_t cols = 5;
    std::vector<double> a(m * cols);
    std::vector<double> b(m);
    for (std::size_t j = 0; j < m; ++j) {
        const cplx n = hp.normals[j];
        double* row = &a[j * cols];
        row[0] = n.real();
        row[1] = -n.real();
        row[2] = n.imag();
        row[3] = -n.imag();
        row[4] = 1.0;
        b[j] = (hp.offsets[j] - t0) / hp.scale;
    }
    const std::vector<double> c{0.0, 0.0, 0.0, 0.0, 1.0};
    const auto lp = detail::maximize(m, cols, a, b, c);
    if (lp.unbounded) {
        throw ParameterError("half-planes do not bound a compact region");
    }

    DepthResult out;
    out.point = hp.scale * cplx(lp.x[0] - lp.x[1], lp.x[2] - lp.x[3]);
    out.depth = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
        const double slack = hp.offsets[j] - dot(hp.normals[j], out.point);
        if (slack < out.depth) {
            out.depth = slack;
            out.tightest = j;
        }
    }
    return out;
}

// Vertices of {w : dot(n_j, w) <= g_j} for g_j > 0, via the convex hull of
// the polar points n_j / g_j. Returned counterclockwise, shifted by `center`.
std::vector<cplx> polar_polygon(const std::vector<cplx>& normals, const std::vector<double>& g,
                                cplx center) {
    std::vector<cplx> dual(normals.size());
    for (std::size_t j = 0; j < normals.size(); ++j) dual[j] = normals[j] / g[j];
    const auto hull = monotone_chain(std::move(dual));

    std::vector<cplx> verts;
    verts.reserve(hull.size());
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const cplx da = hull[i];
        const cplx db = hull[(i + 1) % hull.size()];
        const double det = cross(da, db);
        const cplx w((db.imag() - da.imag()) / det, (da.real() - db.real()) / det);
        verts.push_back(center + w);
    }
    return verts;
}

ConvexRegion region_from_halfplanes(const HalfPlanes& hp) {
    const DepthResult depth = solve_depth(hp);
    const double band = kBandFactor * hp.scale;
    if (depth.depth < -band) return ConvexRegion::empty_set();

    std::vector<double> slack(hp.normals.size());
    for (std::size_t j = 0; j < slack.size(); ++j) {
        slack[j] = hp.offsets[j] - dot(hp.normals[j], depth.point);
    }

    if (depth.depth > band) {
        auto verts = polar_polygon(hp.normals, slack, depth.point);
        verts = dedupe_cyclic(std::move(verts), 1e-12 * hp.scale);
        if (verts.size() >= 3) return ConvexRegion::polygon(std::move(verts));
        return ConvexRegion::hull_of(std::move(verts));
    }

    // Empty interior: relax every constraint and read the long axis off the
    // resulting sliver.
    std::vector<double> relaxed = slack;
    for (double& g : relaxed) g = std::max(g, 0.0) + 4.0 * band;
    const auto [p, q] = diameter_pair(polar_polygon(hp.normals, relaxed, depth.point));
    if (std::abs(p - q) <= 16.0 * band) return ConvexRegion::point(depth.point);

    // The sliver's axis is only accurate to ~band / length. Snap it to the
    // active wall most perpendicular to it, then clip that line against the
    // exact constraints so the endpoints carry no relaxation error.
    const cplx rough = (q - p) / std::abs(q - p);
    std::size_t wall = depth.tightest;
    for (std::size_t j = 0; j < slack.size(); ++j) {
        if (slack[j] <= band && std::abs(dot(hp.normals[j], rough)) <
                                    std::abs(dot(hp.normals[wall], rough))) {
            wall = j;
        }
    }
    cplx u = cplx(0.0, 1.0) * hp.normals[wall];
    if (dot(u, rough) < 0.0) u = -u;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < slack.size(); ++j) {
        const double nu = dot(hp.normals[j], u);
        if (std::abs(nu) <= 1e-12) continue;  // parallel walls
        const double t = slack[j] / nu;
        if (nu > 0.0) hi = std::min(hi, t);
        else lo = std::max(lo, t);
    }
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) return ConvexRegion::segment(p, q);
    if ((hi - lo) <= 16.0 * band) return ConvexRegion::point(depth.point + 0.5 * (lo + hi) * u);
    return ConvexRegion::segment(depth.point + lo * u, depth.point + hi * u);
}

// Support function of a non-empty region as a lookup on outward normal
// angles: vertex i is the maximizer for directions in [breaks[i], breaks[i+1]).
class SupportFan {
public:
    explicit SupportFan(const ConvexRegion& r) {
        const auto& v = r.vertices();
        if (v.size() == 1) {
            breaks_ = {0.0};
            verts_ = {v.front()};
            return;
        }
        std::vector<std::pair<double, cplx>> items;
        items.reserve(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            const cplx e = v[(i + 1) % v.size()] - v[i];
            items.emplace_back(wrap_angle(std::atan2(-e.real(), e.imag())), v[(i + 1) % v.size()]);
        }
        std::sort(items.begin(), items.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [angle, vertex] : items) {
            breaks_.push_back(angle);
            verts_.push_back(vertex);
        }
    }

    cplx vertex_at(double angle) const {
        angle = wrap_angle(angle);
        auto it = std::upper_bound(breaks_.begin(), breaks_.end(), angle);
        if (it == breaks_.begin()) return verts_.back();
        return verts_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
    }

    double value(double angle) const {
        return dot(vertex_at(angle), std::polar(1.0, angle));
    }

    const std::vector<double>& breaks() const noexcept { return breaks_; }

private:
    std::vector<double> breaks_;
    std::vector<cplx> verts_;
};

void require_nonempty(const ConvexRegion& r, const char* what) {
    if (r.empty()) throw EmptinessError(std::string(what) + " of an empty region");
}

}  // namespace

double grid_angle(std::size_t j, std::size_t m) {
    return kTwoPi * static_cast<double>(j % m) / static_cast<double>(m);
}

std::vector<double> uniform_angles(std::size_t m) {
    std::vector<double> out(m);
    for (std::size_t j = 0; j < m; ++j) out[j] = grid_angle(j, m);
    return out;
}

void SupportSamples::validate() const {
    const std::size_t m = angles.size();
    if (m < 3) throw ParameterError("support samples need at least 3 directions");
    if (bounds.size() != m) throw ParameterError("angles and bounds differ in length");
    for (std::size_t j = 0; j < m; ++j) {
        if (!std::isfinite(angles[j]) || !std::isfinite(bounds[j])) {
            throw ParameterError("support samples must be finite");
        }
        if (angles[j] < 0.0 || angles[j] >= kTwoPi) {
            throw ParameterError("sample angles must lie in [0, 2pi)");
        }
        if (j > 0 && angles[j] <= angles[j - 1]) {
            throw ParameterError("sample angles must be strictly increasing");
        }
    }
    double max_gap = kTwoPi - angles.back() + angles.front();
    for (std::size_t j = 1; j < m; ++j) max_gap = std::max(max_gap, angles[j] - angles[j - 1]);
    if (max_gap >= std::numbers::pi - 1e-12) {
        throw ParameterError("sample directions leave a gap of pi or more; region is unbounded");
    }
}

double SupportSamples::scale() const {
    double s = 1.0;
    for (double h : bounds) s = std::max(s, std::abs(h));
    return s;
}

const char* to_string(RegionKind kind) {
    switch (kind) {
        case RegionKind::empty: return "empty";
        case RegionKind::point: return "point";
        case RegionKind::segment: return "segment";
        case RegionKind::polygon: return "polygon";
    }
    return "unknown";
}

ConvexRegion ConvexRegion::point(cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw ParameterError("region vertices must be finite");
    }
    ConvexRegion r;
    r.kind_ = RegionKind::point;
    r.vertices_ = {z};
    return r;
}

ConvexRegion ConvexRegion::segment(cplx a, cplx b) {
    if (a == b) return point(a);
    ConvexRegion r = point(a);
    r.kind_ = RegionKind::segment;
    r.vertices_.push_back(point(b).vertices_.front());
    return r;
}

ConvexRegion ConvexRegion::polygon(std::vector<cplx> vertices) {
    if (vertices.size() < 3) throw ParameterError("a polygon needs at least 3 vertices");
    const double s = vertex_scale(vertices);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const cplx a = vertices[i];
        const cplx b = vertices[(i + 1) % vertices.size()];
        const cplx c = vertices[(i + 2) % vertices.size()];
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ParameterError("region vertices must be finite");
        }
        if (a == b) throw ParameterError("polygon has repeated vertices");
        if (cross(b - a, c - b) < -1e-12 * s * s) {
            throw ParameterError("polygon vertices are not convex and counterclockwise");
        }
    }
    ConvexRegion r;
    r.kind_ = RegionKind::polygon;
    r.vertices_ = std::move(vertices);
    return r;
}

ConvexRegion ConvexRegion::hull_of(std::vector<cplx> points) {
    if (points.empty()) return empty_set();
    auto hull = monotone_chain(std::move(points));
    if (hull.size() == 1) return point(hull.front());
    if (hull.size() == 2) return segment(hull[0], hull[1]);
    return polygon(std::move(hull));
}

ConvexRegion ConvexRegion::translated(cplx offset) const {
    ConvexRegion r = *this;
    for (cplx& z : r.vertices_) z += offset;
    return r;
}

ConvexRegion ConvexRegion::rotated(double angle) const {
    ConvexRegion r = *this;
    const cplx rot = std::polar(1.0, angle);
    for (cplx& z : r.vertices_) z *= rot;
    return r;
}

DepthResult max_depth(const SupportSamples& s) {
    s.validate();
    HalfPlanes hp;
    hp.scale = s.scale();
    hp.offsets = s.bounds;
    hp.normals.reserve(s.size());
    for (double theta : s.angles) hp.normals.push_back(std::polar(1.0, -theta));
    return solve_depth(hp);
}

ConvexRegion intersect_halfplanes(const SupportSamples& s) {
    s.validate();
    HalfPlanes hp;
    hp.scale = s.scale();
    hp.offsets = s.bounds;
    hp.normals.reserve(s.size());
    for (double theta : s.angles) hp.normals.push_back(std::polar(1.0, -theta));
    return region_from_halfplanes(hp);
}

RadiiPair radii(const ConvexRegion& region) {
    require_nonempty(region, "radii");
    const auto& v = region.vertices();
    RadiiPair out;
    for (const cplx& z : v) out.outer = std::max(out.outer, std::abs(z));
    switch (region.kind()) {
        case RegionKind::point:
            out.inner = out.outer;
            break;
        case RegionKind::segment:
            out.inner = segment_distance(0.0, v[0], v[1]);
            break;
        default: {
            out.inner = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < v.size(); ++i) {
                out.inner = std::min(out.inner, segment_distance(0.0, v[i], v[(i + 1) % v.size()]));
            }
        }
    }
    return out;
}

double distance_to(const ConvexRegion& region, cplx p) {
    require_nonempty(region, "distance");
    const auto& v = region.vertices();
    switch (region.kind()) {
        case RegionKind::point: return std::abs(p - v[0]);
        case RegionKind::segment: return segment_distance(p, v[0], v[1]);
        default: break;
    }
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const cplx a = v[i];
        const cplx b = v[(i + 1) % v.size()];
        if (cross(b - a, p - a) < 0.0) inside = false;
        best = std::min(best, segment_distance(p, a, b));
    }
    return inside ? 0.0 : best;
}

double support(const ConvexRegion& region, cplx direction) {
    require_nonempty(region, "support");
    double best = -std::numeric_limits<double>::infinity();
    for (const cplx& z : region.vertices()) best = std::max(best, dot(direction, z));
    return best;
}

bool contains(const ConvexRegion& outer, const ConvexRegion& inner, double tol) {
    if (inner.empty()) return true;
    if (outer.empty()) return false;
    if (outer.kind() != RegionKind::polygon) {
        return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                           [&](cplx z) { return distance_to(outer, z) <= tol; });
    }
    const SupportFan fan(inner);
    const auto& v = outer.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const cplx e = v[(i + 1) % v.size()] - v[i];
        const double angle = std::atan2(-e.real(), e.imag());
        const cplx normal = std::polar(1.0, angle);
        if (fan.value(angle) > dot(normal, v[i]) + tol) return false;
    }
    return true;
}

double hausdorff(const ConvexRegion& a, const ConvexRegion& b) {
    require_nonempty(a, "Hausdorff distance");
    require_nonempty(b, "Hausdorff distance");
    // d_H(A, B) = max over unit directions of |h_A(u) - h_B(u)|; on each arc
    // between breakpoints both maximizers are fixed vertices.
    const SupportFan fa(a);
    const SupportFan fb(b);
    std::vector<double> cuts = fa.breaks();
    cuts.insert(cuts.end(), fb.breaks().begin(), fb.breaks().end());
    cuts.push_back(0.0);
    cuts.push_back(kTwoPi);
    std::sort(cuts.begin(), cuts.end());

    double best = 0.0;
    for (std::size_t l = 0; l + 1 < cuts.size(); ++l) {
        const double lo = cuts[l];
        const double hi = cuts[l + 1];
        if (hi <= lo) continue;
        const double mid = 0.5 * (lo + hi);
        const cplx w = fa.vertex_at(mid) - fb.vertex_at(mid);
        auto eval = [&](double phi) { return std::abs(dot(w, std::polar(1.0, phi))); };
        best = std::max({best, eval(lo), eval(hi)});
        if (w != cplx(0.0)) {
            for (double phi : {std::arg(w), std::arg(-w)}) {
                phi = wrap_angle(phi);
                if (phi > lo && phi < hi) best = std::max(best, std::abs(w));
            }
        }
    }
    return best;
}

cplx chebyshev_center(const ConvexRegion& region) {
    require_nonempty(region, "Chebyshev center");
    const auto& v = region.vertices();
    if (region.kind() == RegionKind::point) return v[0];
    if (region.kind() == RegionKind::segment) return 0.5 * (v[0] + v[1]);

    HalfPlanes hp;
    hp.scale = vertex_scale(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const cplx e = v[(i + 1) % v.size()] - v[i];
        const cplx normal = cplx(e.imag(), -e.real()) / std::abs(e);
        hp.normals.push_back(normal);
        hp.offsets.push_back(dot(normal, v[i]));
    }
    return solve_depth(hp).point;
}

}  // namespace rankrange
