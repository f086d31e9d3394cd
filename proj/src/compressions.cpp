#include "rankrange/compressions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rankrange/error.hpp"

namespace rankrange {

namespace {

constexpr double kIsometryTol = 1e-10;
constexpr double kBoundTol = 1e-9;

void require_width(const ComplexMatrix& a, std::size_t k, const IsometryFamily& family) {
    if (!a.is_square()) throw DimensionError("compressions require a square matrix");
    const std::size_t n = a.rows();
    if (k < 1 || k > n) throw ParameterError("k outside [1, n]");
    if (family.members.empty()) throw ParameterError("isometry family is empty");
    if (family.n != n || family.d != n - k + 1) {
        throw ParameterError("family width " + std::to_string(family.d) + " differs from n - k + 1 = " +
                             std::to_string(n - k + 1));
    }
}

// lambda_1(H(e^{i theta_j} C)) on the uniform grid.
std::vector<double> top_support(const ComplexMatrix& c, std::size_t grid) {
    std::vector<double> h(grid);
    for (std::size_t j = 0; j < grid; ++j) {
        h[j] = eigvals_hermitian_desc(hermitian_part(c, grid_angle(j, grid))).front();
    }
    return h;
}

}  // namespace

IsometryFamily IsometryFamily::from_members(std::vector<ComplexMatrix> members) {
    if (members.empty()) throw ParameterError("isometry family is empty");
    IsometryFamily f;
    f.n = members.front().rows();
    f.d = members.front().cols();
    for (const auto& m : members) {
        if (m.rows() != f.n || m.cols() != f.d) {
            throw DimensionError("family members differ in shape");
        }
        if (isometry_defect(m) > kIsometryTol) {
            throw StructureError("family member is not an isometry");
        }
    }
    f.members = std::move(members);
    return f;
}

ComplexMatrix orthonormalize_columns(const ComplexMatrix& m) {
    const std::size_t n = m.rows();
    const std::size_t d = m.cols();
    if (d > n) throw DimensionError("more columns than rows; cannot orthonormalize");
    ComplexMatrix q = m;
    for (std::size_t j = 0; j < d; ++j) {
        const double original = std::sqrt([&] {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += std::norm(q(i, j));
            return s;
        }());
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t l = 0; l < j; ++l) {
                cplx proj = 0.0;
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, l)) * q(i, j);
                for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, l);
            }
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
        norm = std::sqrt(norm);
        if (norm <= 1e-13 * std::max(original, 1e-300)) {
            throw StructureError("columns are linearly dependent");
        }
        for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
    }
    return q;
}

ComplexMatrix haar_isometry(std::size_t n, std::size_t d, std::mt19937_64& rng) {
    if (d < 1 || d > n) throw ParameterError("isometry width must lie in [1, n]");
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix g(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = cplx(re, im);
        }
    return orthonormalize_columns(g);
}

IsometryFamily sample_family(std::size_t n, std::size_t d, std::size_t count, std::uint64_t seed) {
    if (n < 1 || d < 1 || d > n) {
        throw ParameterError("family needs 1 <= d <= n (got n = " + std::to_string(n) +
                             ", d = " + std::to_string(d) + ")");
    }
    if (count < 1) throw ParameterError("family count must be positive");
    IsometryFamily f;
    f.n = n;
    f.d = d;
    f.seed = seed;
    f.members.reserve(count);
    std::mt19937_64 rng(seed);
    for (std::size_t p = 0; p < count; ++p) f.members.push_back(haar_isometry(n, d, rng));
    return f;
}

ComplexMatrix coordinate_isometry(std::size_t n, std::span<const std::size_t> indices) {
    if (indices.empty() || indices.size() > n) throw ParameterError("bad coordinate selection");
    ComplexMatrix m(n, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] >= n) throw ParameterError("coordinate index out of range");
        m(indices[j], j) = 1.0;
    }
    if (isometry_defect(m) > kIsometryTol) throw ParameterError("repeated coordinate index");
    return m;
}

ComplexMatrix compression(const ComplexMatrix& a, const ComplexMatrix& m) {
    if (!a.is_square()) throw DimensionError("compression requires a square matrix");
    if (m.rows() != a.rows()) {
        throw DimensionError("isometry has " + std::to_string(m.rows()) + " rows, matrix is " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.rows()));
    }
    return m.adjoint() * (a * m);
}

ConvergenceTrace intersection_trace(const ComplexMatrix& a, std::size_t k,
                                    const IsometryFamily& family, const TraceOptions& options) {
    require_width(a, k, family);
    ConvergenceTrace trace;
    trace.k = k;
    trace.grid = options.grid;
    trace.range = compute_range(RangeRequest{a, k, options.grid});

    SupportSamples running;
    running.angles = trace.range.support.angles;
    running.bounds.assign(options.grid, std::numeric_limits<double>::infinity());

    for (std::size_t p = 0; p < family.members.size(); ++p) {
        const auto h = top_support(compression(a, family.members[p]), options.grid);
        for (std::size_t j = 0; j < options.grid; ++j) {
            running.bounds[j] = std::min(running.bounds[j], h[j]);
        }

        TraceRecord rec;
        rec.nu = p + 1;
        rec.region = intersect_halfplanes(running);
        if (rec.region.empty()) {
            rec.q = rec.t = rec.hausdorff_to_range = std::numeric_limits<double>::quiet_NaN();
            trace.records.push_back(std::move(rec));
            trace.empty_from = p + 1;
            break;
        }
        rec.q = radii(rec.region).outer;
        rec.t = distance_to(rec.region, 0.0);
        rec.hausdorff_to_range = trace.range.region.empty()
                                     ? std::numeric_limits<double>::quiet_NaN()
                                     : hausdorff(rec.region, trace.range.region);
        const bool done = options.early_stop_tol > 0.0 &&
                          rec.hausdorff_to_range < options.early_stop_tol;
        trace.records.push_back(std::move(rec));
        if (done) break;
    }
    return trace;
}

BoundsReport proposition_bounds(const ComplexMatrix& a, std::size_t k,
                                const IsometryFamily& family, std::size_t grid) {
    require_width(a, k, family);
    const RadiiPair rk = k_rank_radii(RangeRequest{a, k, grid});

    BoundsReport out;
    out.r_k = rk.outer;
    out.min_compression_radius = std::numeric_limits<double>::infinity();
    double min_inner = std::numeric_limits<double>::infinity();
    for (const auto& m : family.members) {
        const RangeResult f = compute_range(RangeRequest{compression(a, m), 1, grid});
        out.min_compression_radius = std::min(out.min_compression_radius, f.radii->outer);
        min_inner = std::min(min_inner, f.radii->inner);
        out.max_compression_distance =
            std::max(out.max_compression_distance, distance_to(f.region, 0.0));
    }
    out.outer_bound_holds = out.r_k <= out.min_compression_radius + kBoundTol;
    out.origin_in_range = membership(a, k, 0.0, grid);
    if (!out.origin_in_range) {
        out.r_tilde_k = rk.inner;
        out.min_compression_inner_radius = min_inner;
        out.inner_bound_holds = rk.inner >= min_inner - kBoundTol;
    }
    return out;
}

}  // namespace rankrange
