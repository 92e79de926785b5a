#include <corona/roots.hpp>

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using corona::Polynomial;
using corona::Rational;
using corona::RootCluster;
using corona::all_roots_real;
using corona::numeric_roots;
using testutil::P;

TEST_CASE("roots of a cubic with a repeated factor") {
    // (λ − 2)(λ + 1)² = λ³ − 3λ − 2
    const auto roots = numeric_roots(P({-2, -3, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value.real() == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(roots[0].value.imag() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].value.real() == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(roots[1].multiplicity == 1);
}

TEST_CASE("multiplicities are computed exactly, not numerically") {
    const auto roots = numeric_roots(P({-1, 1}).pow(5));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].multiplicity == 5);
    CHECK(roots[0].value.real() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("complex conjugate roots are sorted by real then imaginary part") {
    const auto roots = numeric_roots(P({1, 0, 1}));  // λ² + 1
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value.imag() == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(roots[1].value.imag() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(roots[0].value.real() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("scaling the polynomial does not change its roots") {
    const auto a = numeric_roots(P({-2, -3, 0, 1}));
    const auto b = numeric_roots(P({-2, -3, 0, 1}) * Rational(7));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].multiplicity == b[i].multiplicity);
        CHECK(std::abs(a[i].value - b[i].value) < 1e-9);
    }
}

TEST_CASE("distinct integer roots of a factored product") {
    Polynomial p(1L);
    for (long k = 1; k <= 8; ++k) p *= P({-k, 1});
    const auto roots = numeric_roots(p);
    REQUIRE(roots.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(roots[i].multiplicity == 1);
        CHECK(std::abs(roots[i].value - std::complex<double>(static_cast<double>(i + 1), 0.0)) <
              1e-6);
    }
}

TEST_CASE("nonzero constants have no roots") {
    CHECK(numeric_roots(Polynomial(5L)).empty());
}

TEST_CASE("the zero polynomial has no well-defined root set") {
    CHECK_THROWS_AS(numeric_roots(Polynomial()), std::domain_error);
}

TEST_CASE("a negative merge tolerance is rejected") {
    CHECK_THROWS_AS(numeric_roots(P({-1, 1}), -1.0), std::invalid_argument);
}

TEST_CASE("all_roots_real distinguishes real from complex spectra") {
    CHECK(all_roots_real(P({-2, 0, 1})));       // ±√2
    CHECK_FALSE(all_roots_real(P({1, 0, 1})));  // ±i
    CHECK(all_roots_real(P({-2, -3, 0, 1})));
    CHECK(all_roots_real(Polynomial(3L)));
}

TEST_CASE("nearby roots merge into one cluster under a loose tolerance") {
    // (λ − 1)(λ − 1.000001) as exact rationals.
    const Polynomial p =
        P({-1, 1}) * Polynomial({corona::make_rational(-1000001, 1000000), Rational(1)});
    const auto tight = numeric_roots(p, 1e-9);
    CHECK(tight.size() == 2);
    const auto loose = numeric_roots(p, 1e-3);
    REQUIRE(loose.size() == 1);
    CHECK(loose[0].multiplicity == 2);
}
