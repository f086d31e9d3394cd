#include "rankrange/rank_range.hpp"

#include <string>

#include "rankrange/error.hpp"

namespace rankrange {

namespace {

constexpr double kMembershipTol = 1e-9;

void require_k(const ComplexMatrix& a, std::size_t k) {
    if (!a.is_square()) throw DimensionError("rank-k range requires a square matrix");
    if (k < 1 || k > a.rows()) {
        throw ParameterError("k = " + std::to_string(k) + " outside [1, " +
                             std::to_string(a.rows()) + "]");
    }
}

}  // namespace

void RangeRequest::validate() const {
    require_k(matrix, k);
    if (grid < kMinGrid) {
        throw ParameterError("grid size " + std::to_string(grid) + " below minimum " +
                             std::to_string(kMinGrid));
    }
}

double support_value(const ComplexMatrix& a, std::size_t k, double theta) {
    require_k(a, k);
    return eigvals_hermitian_desc(hermitian_part(a, theta))[k - 1];
}

SupportSamples support_samples(const ComplexMatrix& a, std::size_t k, std::size_t m) {
    require_k(a, k);
    SupportSamples s;
    s.angles = uniform_angles(m);
    s.bounds.reserve(m);
    for (double theta : s.angles) {
        s.bounds.push_back(eigvals_hermitian_desc(hermitian_part(a, theta))[k - 1]);
    }
    return s;
}

RangeResult compute_range(const RangeRequest& req) {
    req.validate();
    RangeResult out;
    out.support = support_samples(req.matrix, req.k, req.grid);
    out.region = intersect_halfplanes(out.support);
    if (out.region.empty()) {
        const DepthResult d = max_depth(out.support);
        out.certificate = InfeasibilityCertificate{out.support.angles[d.tightest], d.depth};
    } else {
        out.radii = radii(out.region);
    }
    return out;
}

RadiiPair k_rank_radii(const RangeRequest& req) {
    const RangeResult r = compute_range(req);
    if (!r.radii) {
        throw EmptinessError("rank-" + std::to_string(req.k) + " numerical range is empty",
                             r.certificate->angle, r.certificate->depth);
    }
    return *r.radii;
}

bool membership(const ComplexMatrix& a, std::size_t k, cplx lambda, std::size_t m) {
    require_k(a, k);
    if (m < kMinGrid) throw ParameterError("grid size below minimum");
    for (std::size_t j = 0; j < m; ++j) {
        const double theta = grid_angle(j, m);
        const double lhs = (std::polar(1.0, theta) * lambda).real();
        if (lhs > support_value(a, k, theta) + kMembershipTol) return false;
    }
    return true;
}

}  // namespace rankrange
