#include <corona/rational_function.hpp>

#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using corona::Polynomial;
using corona::Rational;
using corona::RationalFunction;
using corona::compose;
using corona::make_rational;
using testutil::P;
using testutil::RF;

TEST_CASE("construction reduces the fraction") {
    const RationalFunction f = RF({-1, 0, 1}, {-1, 1});  // (λ²−1)/(λ−1)
    CHECK(f.num() == P({1, 1}));
    CHECK(f.den() == Polynomial(1L));
    CHECK(f.is_polynomial());
    CHECK(f.to_polynomial() == P({1, 1}));
}

TEST_CASE("the denominator is kept monic") {
    const RationalFunction f = RF({1}, {0, 2});  // 1/(2λ)
    CHECK(f.den() == P({0, 1}));
    CHECK(f.num() == Polynomial(make_rational(1, 2)));
}

TEST_CASE("a zero denominator is rejected") {
    CHECK_THROWS_AS(RationalFunction(P({1, 1}), Polynomial()), std::domain_error);
}

TEST_CASE("zero is canonical and detected") {
    CHECK(RationalFunction().is_zero());
    CHECK(RationalFunction().den() == Polynomial(1L));
    CHECK(RF({0}, {3, 1}).is_zero());
    CHECK(RF({0}, {3, 1}) == RationalFunction());
}

TEST_CASE("field arithmetic on partial fractions") {
    // 1/(λ−1) + 1/(λ+1) = 2λ/(λ²−1)
    CHECK(RF({1}, {-1, 1}) + RF({1}, {1, 1}) == RF({0, 2}, {-1, 0, 1}));
    CHECK(RF({0, 2}, {-1, 0, 1}) - RF({1}, {1, 1}) == RF({1}, {-1, 1}));
    CHECK(RF({1}, {-1, 1}) * RF({-1, 1}, {1}) == RationalFunction(Rational(1)));
    CHECK(RF({1, 1}, {2}) / RF({1, 1}, {2}) == RationalFunction(Rational(1)));
    CHECK(-RF({1}, {0, 1}) == RF({-1}, {0, 1}));
}

TEST_CASE("division by zero and reciprocal of zero are rejected") {
    CHECK_THROWS_AS(RF({1}, {0, 1}) / RationalFunction(), std::domain_error);
    CHECK_THROWS_AS(RationalFunction().reciprocal(), std::domain_error);
}

TEST_CASE("negative powers go through the reciprocal") {
    CHECK(RationalFunction::variable().pow(-2) == RF({1}, {0, 0, 1}));
    CHECK(RF({1}, {0, 1}).pow(2) == RF({1}, {0, 0, 1}));
    CHECK(RF({0, 3}, {1}).pow(0) == RationalFunction(Rational(1)));
}

TEST_CASE("to_polynomial requires a constant denominator") {
    CHECK_THROWS_AS(RF({1}, {0, 1}).to_polynomial(), std::domain_error);
}

TEST_CASE("evaluation away from poles, rejection at a pole") {
    const RationalFunction f = RF({0, 1}, {-1, 1});  // λ/(λ−1)
    CHECK(f(Rational(2)) == 2);
    CHECK(f(Rational(3)) == make_rational(3, 2));
    CHECK_THROWS_AS(f(Rational(1)), std::domain_error);
}

TEST_CASE("evaluation survives a removable singularity after reduction") {
    const RationalFunction f = RF({-1, 0, 1}, {-1, 1});  // reduces to λ+1
    CHECK(f(Rational(1)) == 2);
}

TEST_CASE("composing a polynomial with a rational function") {
    // (λ²) ∘ ((λ+1)/λ) = (λ+1)²/λ²
    const RationalFunction r = RF({1, 1}, {0, 1});
    CHECK(compose(P({0, 0, 1}), r) == RF({1, 2, 1}, {0, 0, 1}));
    // Constant polynomials ignore the inner function.
    CHECK(compose(Polynomial(5L), r) == RationalFunction(Rational(5)));
}

TEST_CASE("composing two rational functions") {
    // (1/λ) ∘ (1/λ) is the identity λ.
    const RationalFunction inv = RF({1}, {0, 1});
    CHECK(compose(inv, inv) == RationalFunction::variable());
    // (λ/(λ−1)) ∘ (λ+1) = (λ+1)/λ
    CHECK(compose(RF({0, 1}, {-1, 1}), RationalFunction(P({1, 1}))) == RF({1, 1}, {0, 1}));
}

TEST_CASE("rendering keeps numerator and denominator separated") {
    CHECK(RF({1, 2}, {0, 0, 1}).str() == "(2 λ + 1) / (λ^2)");
    CHECK(RationalFunction().str() == "0");
    CHECK(RF({0, 1}, {-1, 1}).str() == "(λ) / (λ - 1)");
}
