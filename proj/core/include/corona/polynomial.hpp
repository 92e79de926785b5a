#pragma once

#include <corona/rational.hpp>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace corona {

/// Univariate polynomial over Rational, stored densely in ascending order
/// (coeffs()[k] multiplies the k-th power of the variable). The zero
/// polynomial has an empty coefficient vector and degree -1; a trailing
/// zero coefficient is never stored, so structural equality is semantic
/// equality.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);
    explicit Polynomial(long constant);
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    /// The monomial x.
    static Polynomial variable();
    /// c * x^k.
    static Polynomial monomial(Rational c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const;
    /// Throws std::domain_error on the zero polynomial.
    const Rational& leading_coeff() const;
    /// Coefficient of x^k; zero outside the stored range.
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& s);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

    bool operator==(const Polynomial&) const = default;

    /// Horner evaluation.
    Rational operator()(const Rational& x) const;

    Polynomial pow(int e) const;
    Polynomial derivative() const;
    /// this(inner): substitute a polynomial for the variable.
    Polynomial compose(const Polynomial& inner) const;
    /// this(x + c).
    Polynomial shifted(const Rational& c) const;
    /// Same polynomial scaled to leading coefficient 1 (zero stays zero).
    Polynomial monic() const;

    /// Human-readable form, highest power first, e.g. "λ^3 - 2 λ - 1".
    std::string str(std::string_view var = "λ") const;

private:
    std::vector<Rational> c_;
    void trim();
};

struct DivModResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division; throws std::domain_error when b is zero.
DivModResult divmod(const Polynomial& a, const Polynomial& b);

/// Quotient of an exact division; throws std::domain_error when the
/// remainder is nonzero.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Square-free decomposition (Yun): returns factors f_i with multiplicities
/// m_1 < m_2 < ..., each f_i square-free and monic, such that the input
/// equals lc * prod f_i^{m_i}.
std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p);

}  // namespace corona
