#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rankrange/compressions.hpp"
#include "rankrange/error.hpp"

using namespace rankrange;

namespace {

const ComplexMatrix kDiag5 = ComplexMatrix::diagonal({1.0, 2.0, 3.0, 4.0, 5.0});

IsometryFamily coordinate_family(std::size_t n, std::initializer_list<std::vector<std::size_t>> sets) {
    std::vector<ComplexMatrix> members;
    for (const auto& s : sets) members.push_back(coordinate_isometry(n, s));
    return IsometryFamily::from_members(std::move(members));
}

}  // namespace

TEST_CASE("families are reproducible from the seed") {
    const IsometryFamily a = sample_family(4, 3, 100, 7);
    const IsometryFamily b = sample_family(4, 3, 100, 7);
    REQUIRE(a.members.size() == 100);
    for (std::size_t p = 0; p < 100; ++p) CHECK(a.members[p] == b.members[p]);
    const IsometryFamily c = sample_family(4, 3, 100, 8);
    CHECK_FALSE(a.members[0] == c.members[0]);
}

TEST_CASE("full-width members are unitary") {
    for (const auto& u : sample_family(5, 5, 20, 3).members) {
        CHECK(isometry_defect(u) <= 1e-10);
        CHECK(isometry_defect(u.adjoint()) <= 1e-10);
    }
    CHECK_THROWS_AS(sample_family(3, 4, 1, 0), ParameterError);
    CHECK_THROWS_AS(sample_family(3, 2, 0, 0), ParameterError);
}

TEST_CASE("Haar first moment") {
    std::mt19937_64 rng(99);
    double sum = 0.0;
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) sum += std::norm(haar_isometry(2, 1, rng)(0, 0));
    CHECK(std::abs(sum / samples - 0.5) < 0.02);
}

TEST_CASE("orthonormalization fixes the R diagonal sign") {
    std::mt19937_64 rng(5);
    const ComplexMatrix g = oracle::random_matrix(5, rng);
    const ComplexMatrix q = orthonormalize_columns(g);
    CHECK(isometry_defect(q) < 1e-13);
    // R = Q^* G is upper triangular with a positive real diagonal.
    const ComplexMatrix r = q.adjoint() * g;
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(r(i, i).real() > 0.0);
        CHECK(std::abs(r(i, i).imag()) < 1e-12);
        for (std::size_t j = 0; j < i; ++j) CHECK(std::abs(r(i, j)) < 1e-12);
    }
    CHECK_THROWS_AS(orthonormalize_columns(ComplexMatrix{{1.0, 2.0}, {1.0, 2.0}}), StructureError);
}

TEST_CASE("compression examples") {
    const std::vector<std::size_t> first4{0, 1, 2, 3};
    CHECK(compression(kDiag5, coordinate_isometry(5, first4)) ==
          ComplexMatrix::diagonal({1.0, 2.0, 3.0, 4.0}));
    std::mt19937_64 rng(6);
    const ComplexMatrix a = oracle::random_matrix(3, rng);
    CHECK((compression(a, ComplexMatrix::identity(3)) - a).frobenius_norm() == 0.0);

    const ComplexMatrix h = oracle::random_hermitian(5, rng);
    const ComplexMatrix c = compression(h, haar_isometry(5, 3, rng));
    CHECK(hermitian_defect(c) < 1e-14);
    CHECK_THROWS_AS(compression(kDiag5, ComplexMatrix::identity(3)), DimensionError);
}

TEST_CASE("coordinate family trace on diag(1..5)") {
    const IsometryFamily fam = coordinate_family(5, {{0, 1, 2, 3}, {1, 2, 3, 4}});
    const ConvergenceTrace t = intersection_trace(kDiag5, 2, fam, TraceOptions{1024, 0.0});
    REQUIRE(t.records.size() == 2);
    CHECK(hausdorff(t.records[0].region, ConvexRegion::segment(1.0, 4.0)) < 1e-9);
    CHECK(hausdorff(t.records[1].region, ConvexRegion::segment(2.0, 4.0)) < 1e-9);
    CHECK(t.records[0].q == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(t.records[1].q == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(t.records[0].t == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(t.records[1].t == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(t.records[1].hausdorff_to_range < 1e-9);
    CHECK_FALSE(t.empty_from.has_value());

    // width mismatch
    CHECK_THROWS_AS(intersection_trace(kDiag5, 3, fam), ParameterError);
}

TEST_CASE("early stop") {
    const IsometryFamily fam = coordinate_family(5, {{0, 1, 2, 3}, {1, 2, 3, 4}, {0, 1, 3, 4}});
    const ConvergenceTrace t = intersection_trace(kDiag5, 2, fam, TraceOptions{256, 1e-6});
    CHECK(t.records.size() == 2);
}

TEST_CASE("scalar matrices give constant traces") {
    const cplx c(1, -2);
    const ComplexMatrix a = ComplexMatrix::scalar(4, c);
    const ConvergenceTrace t = intersection_trace(a, 2, sample_family(4, 3, 10, 1), TraceOptions{128, 0.0});
    for (const auto& rec : t.records) {
        REQUIRE(rec.region.kind() == RegionKind::point);
        CHECK(std::abs(rec.region.vertices()[0] - c) < 1e-9);
        CHECK(rec.q == doctest::Approx(std::abs(c)).epsilon(1e-9));
        CHECK(rec.t == doctest::Approx(std::abs(c)).epsilon(1e-9));
    }
}

TEST_CASE("Haar traces: monotone, sandwiched, contained") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 3; ++trial) {
        const ComplexMatrix a = oracle::random_matrix(4, rng);
        const ConvergenceTrace t = intersection_trace(a, 2, sample_family(4, 3, 30, trial), TraceOptions{256, 0.0});
        REQUIRE(t.range.radii.has_value());
        for (std::size_t i = 0; i < t.records.size(); ++i) {
            const auto& rec = t.records[i];
            CHECK(rec.nu == i + 1);
            CHECK(contains(rec.region, t.range.region, 1e-9));
            CHECK(rec.q >= t.range.radii->outer - 1e-9);
            if (i > 0) {
                CHECK(rec.q <= t.records[i - 1].q + 1e-9);
                CHECK(rec.t >= t.records[i - 1].t - 1e-9);
                CHECK(contains(t.records[i - 1].region, rec.region, 1e-9));
            }
        }
    }
}

TEST_CASE("compression support equals the projected support") {
    // lambda_1(H(e^{i theta} M^* A M)) is the largest eigenvalue of
    // H(e^{i theta} P A P) on range(P); it coincides with lambda_1(H(e^{i theta} PAP))
    // whenever that value is nonnegative (the complement contributes zeros).
    std::mt19937_64 rng(32);
    const ComplexMatrix a = oracle::random_matrix(5, rng) + ComplexMatrix::scalar(5, 10.0);
    const ComplexMatrix m = haar_isometry(5, 3, rng);
    const ComplexMatrix p = m * m.adjoint();
    for (double theta : {0.0, 0.4, 1.1}) {
        const double lhs = eigvals_hermitian_desc(hermitian_part(compression(a, m), theta))[0];
        const double rhs = eigvals_hermitian_desc(hermitian_part(p * a * p, theta))[0];
        REQUIRE(lhs > 0.0);
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("bounds examples") {
    const IsometryFamily fam = coordinate_family(5, {{0, 1, 2, 3}, {1, 2, 3, 4}});
    const BoundsReport rep = proposition_bounds(kDiag5, 2, fam, 1024);
    CHECK(rep.r_k == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(rep.min_compression_radius == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(rep.outer_bound_holds);
    CHECK_FALSE(rep.origin_in_range);
    CHECK(rep.inner_bound_holds.value());

    const ComplexMatrix shifted = ComplexMatrix::diagonal({2.0, 3.0, 4.0, 5.0, 6.0});
    const BoundsReport sh = proposition_bounds(shifted, 2, fam, 1024);
    CHECK(sh.r_tilde_k.value() == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(sh.min_compression_inner_radius.value() == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(sh.inner_bound_holds.value());

    const ComplexMatrix c = ComplexMatrix::scalar(4, cplx(0, 3));
    const BoundsReport sc = proposition_bounds(c, 2, sample_family(4, 3, 5, 1), 128);
    CHECK(sc.r_k == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(sc.min_compression_radius == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(sc.outer_bound_holds);

    const ComplexMatrix j2{{0.0, 1.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(proposition_bounds(j2, 2, sample_family(2, 1, 3, 1), 64), EmptinessError);
}
