#include <corona/polynomial.hpp>

#include <sstream>
#include <stdexcept>

namespace corona {

Polynomial::Polynomial(Rational constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::monomial(Rational c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    if (c == 0) return Polynomial();
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Polynomial::is_monic() const { return !c_.empty() && c_.back() == 1; }

const Rational& Polynomial::leading_coeff() const {
    if (c_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return c_.back();
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rational(0));
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rational(0));
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial acc(1L);
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial acc;
    for (std::size_t k = c_.size(); k-- > 0;) {
        acc *= inner;
        acc += Polynomial(c_[k]);
    }
    return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
    return compose(Polynomial({c, Rational(1)}));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return Polynomial();
    Polynomial out(*this);
    const Rational inv = Rational(1) / out.c_.back();
    for (auto& x : out.c_) x *= inv;
    return out;
}

std::string Polynomial::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << " ";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

DivModResult divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem(a.coeffs());
    const int db = b.degree();
    const Rational& lead = b.leading_coeff();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
        if (q != 0) {
            quo[static_cast<std::size_t>(k)] = q;
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(db >= 0 ? db : 0));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a.monic();
    Polynomial y = b.monic();
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() < 1) return out;
    // Yun's algorithm on the monic part.
    Polynomial f = p.monic();
    Polynomial g = gcd(f, f.derivative());
    Polynomial w = exact_div(f, g);
    Polynomial y = exact_div(f.derivative(), g);
    int mult = 1;
    while (w.degree() > 0) {
        Polynomial z = y - w.derivative();
        Polynomial factor = gcd(w, z);
        if (factor.degree() > 0) out.emplace_back(factor, mult);
        w = exact_div(w, factor);
        y = exact_div(z, factor);
        ++mult;
    }
    return out;
}

}  // namespace corona
