#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rankrange/builtin.hpp"
#include "rankrange/error.hpp"
#include "rankrange/rank_range.hpp"

using namespace rankrange;
using std::numbers::pi;

namespace {

const ComplexMatrix kDiag5 = ComplexMatrix::diagonal({1.0, 2.0, 3.0, 4.0, 5.0});

}  // namespace

TEST_CASE("support values") {
    const ComplexMatrix d = ComplexMatrix::diagonal({3.0, 1.0});
    CHECK(support_value(d, 1, 0.0) == doctest::Approx(3.0));
    CHECK(support_value(d, 1, pi) == doctest::Approx(-1.0));
    for (double theta : {0.0, 0.7, 2.0, 4.5})
        CHECK(std::abs(support_value(jordan_block(3), 1, theta) - std::sqrt(2.0) / 2) < 1e-13);
    CHECK_THROWS_AS(support_value(d, 3, 0.0), ParameterError);
    CHECK_THROWS_AS(support_value(d, 0, 0.0), ParameterError);
}

TEST_CASE("request validation") {
    CHECK_THROWS_AS(compute_range(RangeRequest{kDiag5, 2, 8}), ParameterError);
    CHECK_THROWS_AS(compute_range(RangeRequest{ComplexMatrix(2, 3), 1, 64}), DimensionError);
    CHECK_THROWS_AS(compute_range(RangeRequest{kDiag5, 6, 64}), ParameterError);
}

TEST_CASE("scalar matrix, k = n") {
    const cplx c(2, 1);
    const RangeResult r = compute_range(RangeRequest{ComplexMatrix::scalar(3, c), 3, 256});
    REQUIRE(r.region.kind() == RegionKind::point);
    CHECK(std::abs(r.region.vertices()[0] - c) < 1e-9);
    CHECK(membership(ComplexMatrix::scalar(3, c), 3, c, 256));
    const RadiiPair rr = k_rank_radii(RangeRequest{ComplexMatrix::scalar(3, 2.0), 3, 256});
    CHECK(rr.outer == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rr.inner == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("nilpotent 2x2, k = 2 is empty with a certificate") {
    const RangeResult r = compute_range(RangeRequest{jordan_block(2), 2, 256});
    CHECK(r.region.empty());
    CHECK_FALSE(r.radii.has_value());
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->depth == doctest::Approx(-0.5).epsilon(1e-9));
    try {
        k_rank_radii(RangeRequest{jordan_block(2), 2, 256});
        FAIL("expected EmptinessError");
    } catch (const EmptinessError& e) {
        CHECK(e.violated_angle().has_value());
        CHECK(e.depth().has_value());
    }
}

TEST_CASE("diag(1..5), k = 2 is the segment [2, 4]") {
    const RangeResult r = compute_range(RangeRequest{kDiag5, 2, 1024});
    REQUIRE(r.region.kind() == RegionKind::segment);
    CHECK(hausdorff(r.region, ConvexRegion::segment(2.0, 4.0)) < 1e-6);
    const RadiiPair rr = k_rank_radii(RangeRequest{kDiag5, 2, 1024});
    CHECK(std::abs(rr.outer - 4.0) < 1e-6);
    CHECK(std::abs(rr.inner - 2.0) < 1e-6);
    CHECK(membership(kDiag5, 2, 3.0));
    CHECK_FALSE(membership(kDiag5, 2, 4.5));
}

TEST_CASE("Jordan blocks give disks of the Toeplitz radius") {
    struct Case {
        std::size_t n, k;
    };
    for (Case c : {Case{3, 1}, Case{4, 2}, Case{5, 2}}) {
        const RangeResult r = compute_range(RangeRequest{jordan_block(c.n), c.k, 4096});
        REQUIRE(r.region.kind() == RegionKind::polygon);
        const double want = oracle::toeplitz_eigenvalue(c.n, c.k);
        for (cplx v : r.region.vertices()) CHECK(std::abs(std::abs(v) - want) < 1e-4);
        CHECK(std::abs(r.radii->outer - want) < 1e-4);
        CHECK(std::abs(r.radii->inner - want) < 1e-4);
    }
}

TEST_CASE("nesting in k") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix a = oracle::random_matrix(5, rng);
        for (std::size_t k = 1; k < 5; ++k) {
            const RangeResult outer = compute_range(RangeRequest{a, k, 256});
            const RangeResult inner = compute_range(RangeRequest{a, k + 1, 256});
            CHECK(contains(outer.region, inner.region, 1e-9));
        }
    }
}

TEST_CASE("k = 1 on a normal matrix is the eigenvalue hull") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<cplx> eig;
        std::normal_distribution<double> normal;
        for (int i = 0; i < 5; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            eig.emplace_back(re, im);
        }
        const ComplexMatrix u = oracle::random_unitary(5, rng);
        const ComplexMatrix a = u * ComplexMatrix::diagonal(eig) * u.adjoint();
        const std::vector<cplx> hull = oracle::gift_wrap(eig);

        // The oracle hull itself: x^* A x samples never leave it.
        for (int s = 0; s < 200; ++s) {
            const cplx z = oracle::quadratic_form(a, oracle::random_unit_vector(5, rng));
            CHECK(oracle::distance_to_polygon(z, hull) < 1e-10);
        }

        // A flat edge of length L whose normal falls between two grid
        // directions gains a sliver of height at most L tan(pi/m) / 2 in the
        // outer approximation, so the error is first order in 1/m.
        double longest = 0.0;
        for (std::size_t i = 0; i < hull.size(); ++i)
            longest = std::max(longest, std::abs(hull[(i + 1) % hull.size()] - hull[i]));
        for (std::size_t m : {1024u, 4096u}) {
            const RangeResult r = compute_range(RangeRequest{a, 1, m});
            const double err = oracle::brute_hausdorff(r.region.vertices(), hull);
            CHECK(err <= longest * std::tan(pi / m) / 2 + 1e-12);
        }
    }
}

TEST_CASE("grid refinement never enlarges the region") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix a = oracle::random_matrix(4, rng);
        const RangeResult coarse = compute_range(RangeRequest{a, 2, 64});
        const RangeResult fine = compute_range(RangeRequest{a, 2, 128});
        CHECK(contains(coarse.region, fine.region, 1e-9));
    }
}

TEST_CASE("translation and rotation covariance") {
    std::mt19937_64 rng(24);
    const std::size_t m = 512;
    const ComplexMatrix a = oracle::random_matrix(4, rng);
    const RangeResult base = compute_range(RangeRequest{a, 2, m});
    REQUIRE_FALSE(base.region.empty());

    const cplx c(0.7, -1.3);
    const RangeResult shifted = compute_range(RangeRequest{a + ComplexMatrix::scalar(4, c), 2, m});
    const double scale = std::max(1.0, base.radii->outer);
    CHECK(hausdorff(shifted.region, base.region.translated(c)) <= 1e-9 * scale * 10);

    const double phi = 0.9;
    const RangeResult turned = compute_range(RangeRequest{std::polar(1.0, phi) * a, 2, m});
    CHECK(hausdorff(turned.region, base.region.rotated(phi)) <= 2 * pi / m * base.radii->outer);
}

TEST_CASE("membership is consistent with x^* A x for k = 1") {
    std::mt19937_64 rng(25);
    const ComplexMatrix a = oracle::random_matrix(4, rng);
    for (int s = 0; s < 50; ++s) {
        const cplx z = oracle::quadratic_form(a, oracle::random_unit_vector(4, rng));
        CHECK(membership(a, 1, z, 256));
    }
    CHECK_FALSE(membership(a, 1, 2.0 * spectral_norm(a), 256));
}

TEST_CASE("support samples are ordered by the grid index") {
    const SupportSamples s = support_samples(paper_example(), 2, 32);
    REQUIRE(s.size() == 32);
    for (std::size_t j = 0; j < 32; ++j) {
        CHECK(s.angles[j] == grid_angle(j, 32));
        CHECK(s.bounds[j] == support_value(paper_example(), 2, grid_angle(j, 32)));
    }
}

TEST_CASE("Hermitian matrices give segments at every grid size") {
    const ComplexMatrix d = ComplexMatrix::diagonal({1.0, 2.0, 3.0, 4.0, 5.0});
    for (std::size_t m = 16; m <= 1100; m += 36) {  // multiples of 4 keep pi/2 on the grid
        const RangeResult r = compute_range(RangeRequest{d, 2, m});
        REQUIRE(r.region.kind() == RegionKind::segment);
        CHECK(hausdorff(r.region, ConvexRegion::segment(2.0, 4.0)) < 1e-9);
    }
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix h = oracle::random_hermitian(4, rng);
        const auto ev = eigvals_hermitian_desc(h);
        const RangeResult r = compute_range(RangeRequest{h, 2, 256});
        REQUIRE(r.region.kind() == RegionKind::segment);
        CHECK(hausdorff(r.region, ConvexRegion::segment(ev[2], ev[1])) < 1e-9);
    }
}
