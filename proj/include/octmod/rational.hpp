#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

#include "octmod/errors.hpp"

namespace octmod {

/// Exact rational scalar: arbitrary-precision integers, always held in
/// canonical form (gcd-reduced, positive denominator).  Every comparison in
/// this library is exact equality; there are no tolerances anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

[[nodiscard]] inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Canonical string form: "p/q" in lowest terms with q > 0, or just "p" when
/// q == 1.  Examples: "3", "-1/2", "0".
[[nodiscard]] inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

namespace detail {

/// Parses an optionally signed decimal integer starting at `pos`; advances
/// `pos` past it.  Throws ParseError (with offset `base + pos`) if no digits.
inline Integer parse_integer(std::string_view s, std::size_t& pos, std::size_t base) {
    std::size_t start = pos;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = (s[pos] == '-');
        ++pos;
    }
    if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') {
        throw ParseError(base + pos, "expected digit");
    }
    Integer value = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        value = value * 10 + (s[pos] - '0');
        ++pos;
    }
    (void)start;
    return negative ? Integer(-value) : value;
}

} // namespace detail

/// Parses "p" or "p/q" (q != 0).  Input need not be in lowest terms; the
/// result always is.  `base` offsets reported error positions, for callers
/// that parse rationals embedded in a larger literal.
[[nodiscard]] inline Rational rational_from_string(std::string_view s, std::size_t base = 0) {
    std::size_t pos = 0;
    Integer num = detail::parse_integer(s, pos, base);
    if (pos == s.size()) return Rational(num);
    if (s[pos] != '/') throw ParseError(base + pos, "expected '/' or end of number");
    ++pos;
    Integer den = detail::parse_integer(s, pos, base);
    if (pos != s.size()) throw ParseError(base + pos, "trailing characters after denominator");
    if (den == 0) throw ParseError(base + pos - 1, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

} // namespace octmod
