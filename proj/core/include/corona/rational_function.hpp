#pragma once

#include <corona/polynomial.hpp>

#include <string>
#include <string_view>

namespace corona {

/// Rational function num/den over Rational, kept reduced with a monic
/// denominator; zero is 0/1. Canonical form makes structural equality
/// semantic equality.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1L) {}
    explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(1L) {}
    explicit RationalFunction(const Rational& c) : num_(c), den_(1L) {}
    explicit RationalFunction(long c) : num_(c), den_(1L) {}
    /// Reduces; throws std::domain_error when den is the zero polynomial.
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// Throws std::domain_error when the denominator is not 1.
    Polynomial to_polynomial() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    bool operator==(const RationalFunction&) const = default;

    RationalFunction reciprocal() const;
    /// Negative exponents go through the reciprocal.
    RationalFunction pow(int e) const;

    /// Evaluation; throws std::domain_error at a pole.
    Rational operator()(const Rational& x) const;

    std::string str(std::string_view var = "λ") const;

private:
    Polynomial num_, den_;
    void reduce();
};

/// f(r) for a polynomial f: sum f_k p^k q^{d-k} over q^d, reduced.
RationalFunction compose(const Polynomial& f, const RationalFunction& r);

/// g(r) for rational functions g and r.
RationalFunction compose(const RationalFunction& g, const RationalFunction& r);

}  // namespace corona
