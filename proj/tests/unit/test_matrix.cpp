#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rankrange/error.hpp"
#include "rankrange/matrix.hpp"

using namespace rankrange;
using doctest::Approx;

TEST_CASE("construction validates shape and entries") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<cplx>(3)), DimensionError);
    CHECK_THROWS_AS(ComplexMatrix(0, 2), DimensionError);
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {cplx(std::nan(""), 0.0)}), StructureError);
    CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), DimensionError);
    const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
    CHECK(a(1, 0) == cplx(3.0));
    CHECK(a.trace() == cplx(5.0));
}

TEST_CASE("products and adjoint") {
    const ComplexMatrix a{{1.0, cplx(0, 1)}, {0.0, 2.0}};
    const ComplexMatrix b = a * a.adjoint();
    CHECK(b(0, 0) == cplx(2.0));
    CHECK(b(0, 1) == cplx(0.0, 2.0));
    CHECK(b(1, 0) == cplx(0.0, -2.0));
    CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), DimensionError);
}

TEST_CASE("hermitian part") {
    const ComplexMatrix a{{0.0, 1.0}, {0.0, 0.0}};
    const ComplexMatrix h = hermitian_part(a);
    CHECK(h(0, 1) == cplx(0.5));
    CHECK(h(1, 0) == cplx(0.5));
    CHECK(hermitian_defect(h) == 0.0);

    std::mt19937_64 rng(7);
    const ComplexMatrix r = oracle::random_matrix(4, rng);
    // Periodic in theta with period 2 pi, and H(e^{i pi} A) = -H(A).
    const ComplexMatrix h0 = hermitian_part(r, 0.3);
    const ComplexMatrix h1 = hermitian_part(r, 0.3 + 2.0 * std::numbers::pi);
    CHECK((h0 - h1).frobenius_norm() < 1e-13);
    const ComplexMatrix hp = hermitian_part(r, std::numbers::pi);
    CHECK((hp + hermitian_part(r)).frobenius_norm() < 1e-13);
    CHECK(hermitian_defect(hermitian_part(r, 1.234)) == 0.0);
}

TEST_CASE("eigenvalues of small examples") {
    const auto v = eigvals_hermitian_desc(ComplexMatrix{{2.0, 1.0}, {1.0, 2.0}});
    CHECK(v[0] == Approx(3.0).epsilon(1e-14));
    CHECK(v[1] == Approx(1.0).epsilon(1e-14));

    const auto d = eigvals_hermitian_desc(ComplexMatrix::diagonal({3.0, -1.0, 7.0}));
    CHECK(d == std::vector<double>{7.0, 3.0, -1.0});

    // H(J_3) has eigenvalues cos(j pi / 4).
    const ComplexMatrix j3{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}};
    const auto t = eigvals_hermitian_desc(hermitian_part(j3));
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(t[j] - oracle::toeplitz_eigenvalue(3, j + 1)) < 1e-14);
}

TEST_CASE("eigenvalues agree with the cubic formula") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix h = oracle::random_hermitian(3, rng);
        const auto got = eigvals_hermitian_desc(h);
        const auto want = oracle::hermitian3_eigenvalues(h);
        for (int j = 0; j < 3; ++j) CHECK(std::abs(got[j] - want[j]) < 1e-10);
    }
}

TEST_CASE("eigenvectors reconstruct the matrix") {
    std::mt19937_64 rng(3);
    for (std::size_t n : {1u, 2u, 5u, 8u}) {
        const ComplexMatrix h = oracle::random_hermitian(n, rng);
        const HermitianEigen e = eig_hermitian_desc(h);
        CHECK(isometry_defect(e.vectors) < 1e-12);
        std::vector<cplx> dv(e.values.begin(), e.values.end());
        const ComplexMatrix rec = e.vectors * ComplexMatrix::diagonal(dv) * e.vectors.adjoint();
        CHECK((rec - h).frobenius_norm() < 1e-12 * std::max(1.0, h.frobenius_norm()));
        double sum = 0.0;
        for (double x : e.values) sum += x;
        CHECK(std::abs(sum - h.trace().real()) <= 1e-12 * std::max(1.0, std::abs(h.trace())));
        for (std::size_t i = 1; i < n; ++i) CHECK(e.values[i - 1] >= e.values[i]);
    }
}

TEST_CASE("eigenvalues are invariant under unitary similarity") {
    std::mt19937_64 rng(5);
    const ComplexMatrix h = oracle::random_hermitian(5, rng);
    const ComplexMatrix u = oracle::random_unitary(5, rng);
    const auto a = eigvals_hermitian_desc(h);
    const auto b = eigvals_hermitian_desc(hermitian_part(u.adjoint() * h * u));
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
}

TEST_CASE("non-hermitian input is rejected") {
    CHECK_THROWS_AS(eig_hermitian_desc(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), StructureError);
    CHECK_THROWS_AS(eig_hermitian_desc(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("spectral norm") {
    CHECK(spectral_norm(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}) == Approx(1.0).epsilon(1e-14));
    CHECK(spectral_norm(ComplexMatrix::diagonal({cplx(0, -3), 2.0})) == Approx(3.0).epsilon(1e-14));
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = oracle::random_matrix(4, rng);
        const ComplexMatrix b = oracle::random_matrix(4, rng);
        const double na = spectral_norm(a), nb = spectral_norm(b);
        CHECK(spectral_norm(a * b) <= na * nb * (1.0 + 1e-12));
        CHECK(na <= a.frobenius_norm() * (1.0 + 1e-12));
        // |x^* A x| <= ||A||_2 for unit x.
        const auto x = oracle::random_unit_vector(4, rng);
        CHECK(std::abs(oracle::quadratic_form(a, x)) <= na * (1.0 + 1e-12));
    }
}

TEST_CASE("scalar detection") {
    CHECK(is_scalar(ComplexMatrix::scalar(3, cplx(2, 1))) == cplx(2, 1));
    CHECK_FALSE(is_scalar(ComplexMatrix::diagonal({1.0, 1.0 + 1e-6})).has_value());
}
