#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace corona {

/// Arbitrary-precision rational scalar. Arithmetic on canonical values
/// stays canonical, but the raw two-integer constructor does not reduce;
/// build ratios through make_rational (or rational_from_string) instead.
using Rational = mpq_class;

/// Canonical num/den constructor: reduces to lowest terms and normalizes
/// the sign. Throws std::domain_error when den is zero.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses "p" or "p/q" with optional leading sign on p; q must be a
/// positive integer literal. Throws std::invalid_argument otherwise.
inline Rational rational_from_string(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    auto scan_digits = [&]() {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return i > start;
    };
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (!scan_digits()) return fail();
    if (i < text.size()) {
        if (text[i] != '/') return fail();
        ++i;
        if (!scan_digits() || i != text.size()) return fail();
    }
    // GMP's string parser rejects an explicit leading '+'.
    if (text.front() == '+') text.remove_prefix(1);
    Rational q(std::string(text), 10);
    if (q.get_den() == 0) return fail();
    q.canonicalize();
    return q;
}

}  // namespace corona
