#include <corona/polynomial.hpp>

#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using corona::Polynomial;
using corona::Rational;
using corona::divmod;
using corona::exact_div;
using corona::gcd;
using corona::make_rational;
using corona::square_free_decomposition;
using testutil::P;

TEST_CASE("trailing zero coefficients are trimmed away") {
    CHECK(Polynomial({Rational(0), Rational(0)}).is_zero());
    CHECK(Polynomial({Rational(0), Rational(0)}).degree() == -1);
    CHECK(P({1, 2, 0}) == P({1, 2}));
    CHECK(P({1, 2, 0}).degree() == 1);
}

TEST_CASE("the zero polynomial has no leading coefficient") {
    CHECK_THROWS_AS(Polynomial().leading_coeff(), std::domain_error);
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial().is_constant());
}

TEST_CASE("coefficient access outside the stored range is zero") {
    const Polynomial p = P({1, 2});
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(5) == 0);
    CHECK(p.coeff(-1) == 0);
}

TEST_CASE("ring arithmetic matches hand expansion") {
    const Polynomial x = Polynomial::variable();
    CHECK((P({-1, 1}) * P({1, 1})) == P({-1, 0, 1}));
    CHECK((x + Polynomial(1L)) * (x + Polynomial(1L)) == P({1, 2, 1}));
    CHECK(P({1, 1}).pow(3) == P({1, 3, 3, 1}));
    CHECK(P({1, 1}).pow(0) == Polynomial(1L));
    CHECK(-P({1, -2}) == P({-1, 2}));
    CHECK(P({1, 2}) * Rational(0) == Polynomial());
}

TEST_CASE("monomial builds c times a power of the variable") {
    CHECK(Polynomial::monomial(Rational(3), 2) == P({0, 0, 3}));
    CHECK(Polynomial::monomial(Rational(0), 2).is_zero());
}

TEST_CASE("Horner evaluation agrees with direct substitution") {
    const Polynomial p = P({-1, 0, 0, 1});  // λ³ − 1
    CHECK(p(Rational(2)) == 7);
    CHECK(p(Rational(1)) == 0);
    CHECK(p(make_rational(1, 2)) == make_rational(-7, 8));
}

TEST_CASE("compose substitutes a polynomial for the variable") {
    const Polynomial sq = P({0, 0, 1});
    CHECK(sq.compose(P({1, 1})) == P({1, 2, 1}));
    CHECK(P({1, 1}).compose(Polynomial()) == Polynomial(1L));
}

TEST_CASE("shifted composes with the variable plus a constant") {
    CHECK(P({0, 0, 1}).shifted(Rational(-1)) == P({1, -2, 1}));
    CHECK(P({0, 0, 1}).shifted(Rational(1)) == P({1, 2, 1}));
    CHECK(Polynomial().shifted(Rational(3)).is_zero());
}

TEST_CASE("derivative follows the power rule") {
    CHECK(P({5, 3, 0, 2}).derivative() == P({3, 0, 6}));
    CHECK(Polynomial(7L).derivative().is_zero());
}

TEST_CASE("monic rescales the leading coefficient to one") {
    CHECK(P({4, 2}).monic() == P({2, 1}));
    CHECK(Polynomial().monic().is_zero());
    CHECK(P({0, 0, 1}).is_monic());
    CHECK_FALSE(P({0, 0, 2}).is_monic());
}

TEST_CASE("Euclidean division of a cube by a linear factor") {
    const auto [q, r] = divmod(P({0, 0, 0, 1}), P({-1, 1}));
    CHECK(q == P({1, 1, 1}));
    CHECK(r == Polynomial(1L));
}

TEST_CASE("divmod satisfies a = q b + r with deg r < deg b") {
    const Polynomial a = P({3, -2, 7, 0, 1});
    const Polynomial b = P({1, 2, 1});
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
}

TEST_CASE("division by the zero polynomial is rejected") {
    CHECK_THROWS_AS(divmod(P({1, 1}), Polynomial()), std::domain_error);
    CHECK_THROWS_AS(exact_div(P({1, 1}), Polynomial()), std::domain_error);
}

TEST_CASE("exact_div succeeds only when the remainder vanishes") {
    CHECK(exact_div(P({-1, 0, 1}), P({-1, 1})) == P({1, 1}));
    CHECK_THROWS_AS(exact_div(P({0, 0, 0, 1}), P({-1, 1})), std::domain_error);
}

TEST_CASE("gcd of a difference of squares and one of its factors") {
    CHECK(gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
}

TEST_CASE("gcd is monic and handles zero operands") {
    CHECK(gcd(P({-2, 0, 2}), P({-2, 2})) == P({-1, 1}));
    CHECK(gcd(Polynomial(), Polynomial()).is_zero());
    CHECK(gcd(P({0, 4}), Polynomial()) == P({0, 1}));
}

TEST_CASE("square-free decomposition separates multiplicities") {
    // 3 (λ − 1)² (λ + 2)
    const Polynomial p = P({-1, 1}).pow(2) * P({2, 1}) * Rational(3);
    const auto factors = square_free_decomposition(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].first == P({2, 1}));
    CHECK(factors[0].second == 1);
    CHECK(factors[1].first == P({-1, 1}));
    CHECK(factors[1].second == 2);
    Polynomial rebuilt(p.leading_coeff());
    for (const auto& [f, m] : factors) rebuilt *= f.pow(m);
    CHECK(rebuilt == p);
}

TEST_CASE("human-readable rendering, highest power first") {
    CHECK(P({-1, -2, 0, 1}).str() == "λ^3 - 2 λ - 1");
    CHECK(Polynomial().str() == "0");
    CHECK(Polynomial(5L).str() == "5");
    CHECK(Polynomial::variable().str() == "λ");
    CHECK(Polynomial::variable().str("x") == "x");
    CHECK(P({1, -3}).str() == "-3 λ + 1");
    CHECK(Polynomial({make_rational(1, 2), Rational(1)}).str() == "λ + 1/2");
}
