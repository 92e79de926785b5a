#include <corona/rational_function.hpp>

#include <stdexcept>

namespace corona {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(1L);
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const Rational lead = den_.leading_coeff();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

Polynomial RationalFunction::to_polynomial() const {
    if (!is_polynomial())
        throw std::domain_error("RationalFunction::to_polynomial: denominator is not constant");
    return num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out(*this);
    out.num_ = -out.num_;
    return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    reduce();
    return *this;
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw std::domain_error("RationalFunction: reciprocal of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return reciprocal().pow(-e);
    RationalFunction acc(1L);
    RationalFunction base(*this);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational RationalFunction::operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d == 0) throw std::domain_error("RationalFunction: evaluation at a pole");
    return num_(x) / d;
}

std::string RationalFunction::str(std::string_view var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RationalFunction compose(const Polynomial& f, const RationalFunction& r) {
    if (f.is_zero()) return RationalFunction();
    const int d = f.degree();
    // Horner over the numerator while tracking powers of the denominator:
    // N = sum_k f_k p^k q^{d-k}, result N / q^d.
    Polynomial n;
    Polynomial qpow(1L);
    for (int k = d; k >= 0; --k) {
        n = n * r.num() + Polynomial(f.coeff(k)) * qpow;
        if (k > 0) qpow *= r.den();
    }
    return RationalFunction(std::move(n), std::move(qpow));
}

RationalFunction compose(const RationalFunction& g, const RationalFunction& r) {
    RationalFunction den = compose(g.den(), r);
    if (den.is_zero())
        throw std::domain_error("compose: denominator vanishes identically under substitution");
    return compose(g.num(), r) / den;
}

}  // namespace corona
