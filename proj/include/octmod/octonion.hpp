#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "octmod/errors.hpp"
#include "octmod/rational.hpp"

namespace octmod {

/// The octonion algebra over the rationals, with basis 1 = e0, e1, ..., e7.
///
/// Imaginary units multiply by e_i e_j = epsilon_{ijk} e_k - delta_{ij}, where
/// the structure constants epsilon are the totally antisymmetric tensor with
///   epsilon = +1 on (1,2,3), (1,4,5), (1,6,7), (2,4,6)
///   epsilon = -1 on (2,5,7), (3,4,7), (3,5,6)
/// (the calibration 3-form convention).  The algebra is alternative but not
/// associative; its nucleus and center are both the scalars.

/// e_i * e_j = sign * e_index.
struct BasisProduct {
    int sign;
    int index;
};

namespace detail {

struct SignedTriple {
    int i, j, k, sign;
};

inline constexpr std::array<SignedTriple, 7> kTriples{{
    {1, 2, 3, +1},
    {1, 4, 5, +1},
    {1, 6, 7, +1},
    {2, 4, 6, +1},
    {2, 5, 7, -1},
    {3, 4, 7, -1},
    {3, 5, 6, -1},
}};

/// Structure constants on imaginary indices 1..7, extended antisymmetrically
/// to all permutations of each generating triple; zero elsewhere.
constexpr std::array<std::array<std::array<int, 8>, 8>, 8> make_epsilon() {
    std::array<std::array<std::array<int, 8>, 8>, 8> eps{};
    for (const auto& t : kTriples) {
        const int i = t.i, j = t.j, k = t.k, s = t.sign;
        eps[i][j][k] = s;
        eps[j][k][i] = s;
        eps[k][i][j] = s;
        eps[j][i][k] = -s;
        eps[i][k][j] = -s;
        eps[k][j][i] = -s;
    }
    return eps;
}

inline constexpr auto kEpsilon = make_epsilon();

constexpr std::array<std::array<BasisProduct, 8>, 8> make_basis_table() {
    std::array<std::array<BasisProduct, 8>, 8> table{};
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (i == 0) {
                table[i][j] = {+1, j};
            } else if (j == 0) {
                table[i][j] = {+1, i};
            } else if (i == j) {
                table[i][j] = {-1, 0};
            } else {
                for (int k = 1; k < 8; ++k) {
                    if (kEpsilon[i][j][k] != 0) {
                        table[i][j] = {kEpsilon[i][j][k], k};
                        break;
                    }
                }
            }
        }
    }
    return table;
}

inline constexpr auto kBasisTable = make_basis_table();

} // namespace detail

/// epsilon_{ijk} for i,j,k in 1..7 (0 when any index repeats or the triple is
/// not a quaternionic line).
[[nodiscard]] constexpr int epsilon(int i, int j, int k) { return detail::kEpsilon[i][j][k]; }

/// Product of basis units: e_i * e_j as a signed unit.
[[nodiscard]] constexpr BasisProduct basis_mul(int i, int j) { return detail::kBasisTable[i][j]; }

class Octonion {
public:
    Octonion() : c_{} {}

    explicit Octonion(Rational real) : c_{} { c_[0] = std::move(real); }

    explicit Octonion(std::array<Rational, 8> coefficients) : c_(std::move(coefficients)) {}

    /// The unit e_i (e_0 is the multiplicative identity).
    [[nodiscard]] static Octonion basis(int i) {
        Octonion x;
        x.c_[static_cast<std::size_t>(i)] = 1;
        return x;
    }

    [[nodiscard]] static Octonion zero() { return Octonion{}; }
    [[nodiscard]] static Octonion one() { return basis(0); }

    [[nodiscard]] const Rational& operator[](std::size_t i) const { return c_[i]; }
    [[nodiscard]] Rational& operator[](std::size_t i) { return c_[i]; }

    [[nodiscard]] bool operator==(const Octonion& o) const = default;

    Octonion& operator+=(const Octonion& o) {
        for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
        return *this;
    }

    Octonion& operator-=(const Octonion& o) {
        for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
        return *this;
    }

    Octonion& operator*=(const Rational& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }

    [[nodiscard]] friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
    [[nodiscard]] friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }

    [[nodiscard]] friend Octonion operator-(const Octonion& a) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.c_[i] = -a.c_[i];
        return r;
    }

    [[nodiscard]] friend Octonion operator*(const Rational& s, Octonion a) { return a *= s; }
    [[nodiscard]] friend Octonion operator*(Octonion a, const Rational& s) { return a *= s; }

    [[nodiscard]] friend Octonion operator*(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) {
            if (octmod::is_zero(a.c_[static_cast<std::size_t>(i)])) continue;
            for (int j = 0; j < 8; ++j) {
                if (octmod::is_zero(b.c_[static_cast<std::size_t>(j)])) continue;
                const BasisProduct p = basis_mul(i, j);
                Rational term = a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
                if (p.sign < 0) {
                    r.c_[static_cast<std::size_t>(p.index)] -= term;
                } else {
                    r.c_[static_cast<std::size_t>(p.index)] += term;
                }
            }
        }
        return r;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& c : c_) {
            if (!octmod::is_zero(c)) return false;
        }
        return true;
    }

    /// True when all imaginary coefficients vanish.
    [[nodiscard]] bool is_real() const {
        for (std::size_t i = 1; i < 8; ++i) {
            if (!octmod::is_zero(c_[i])) return false;
        }
        return true;
    }

private:
    std::array<Rational, 8> c_;
};

/// Scalar (real) part.
[[nodiscard]] inline Rational re(const Octonion& a) { return a[0]; }

/// Conjugation: negates the imaginary part.  Anti-automorphism.
[[nodiscard]] inline Octonion conj(const Octonion& a) {
    Octonion r;
    r[0] = a[0];
    for (std::size_t i = 1; i < 8; ++i) r[i] = -a[i];
    return r;
}

/// Multiplicative norm: sum of squared coefficients; a * conj(a) = norm_sq(a).
[[nodiscard]] inline Rational norm_sq(const Octonion& a) {
    Rational n = 0;
    for (std::size_t i = 0; i < 8; ++i) n += a[i] * a[i];
    return n;
}

/// Associator [a,b,c] = (ab)c - a(bc).  Totally antisymmetric.
[[nodiscard]] inline Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
    return (a * b) * c - a * (b * c);
}

/// Commutator [a,b] = ab - ba.
[[nodiscard]] inline Octonion commutator(const Octonion& a, const Octonion& b) {
    return a * b - b * a;
}

/// Renders the canonical literal form: terms in basis order, "1" coefficients
/// elided next to units, e.g. "2", "e3", "-e6", "1/2+e1-3/4e7".  Zero is "0".
[[nodiscard]] inline std::string render_octonion(const Octonion& a) {
    std::string out;
    for (std::size_t i = 0; i < 8; ++i) {
        const Rational& c = a[i];
        if (is_zero(c)) continue;
        std::string coef = to_string(c);
        bool negative = false;
        if (coef.front() == '-') {
            negative = true;
            coef.erase(coef.begin());
        }
        if (!out.empty()) out += negative ? "-" : "+";
        else if (negative) out += "-";
        if (i == 0) {
            out += coef;
        } else {
            if (coef != "1") out += coef;
            out += "e";
            out += std::to_string(i);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

/// Parses a sum of signed terms "[coef][e<digit>]", coef a rational "p" or
/// "p/q"; at least one of coefficient or unit must be present per term.
/// Whitespace is ignored.  Examples: "e1", "-2e3+1/2", "0".
/// Throws ParseError with the offending position (offsets refer to the input
/// with whitespace removed).
[[nodiscard]] inline Octonion parse_octonion(std::string_view input) {
    std::string s;
    s.reserve(input.size());
    for (char ch : input) {
        if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') s += ch;
    }
    if (s.empty()) throw ParseError(0, "empty octonion literal");

    Octonion result;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = (s[pos] == '-');
            ++pos;
            if (pos == s.size()) throw ParseError(pos, "dangling sign");
        }
        Rational coef = 1;
        bool saw_coef = false;
        if (s[pos] >= '0' && s[pos] <= '9') {
            saw_coef = true;
            Integer num = detail::parse_integer(s, pos, 0);
            Integer den = 1;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                den = detail::parse_integer(s, pos, 0);
                if (den == 0) throw ParseError(pos - 1, "zero denominator");
                if (den < 0) {
                    num = -num;
                    den = -den;
                }
            }
            coef = Rational(num, den);
        }
        int unit = 0;
        if (pos < s.size() && s[pos] == 'e') {
            ++pos;
            if (pos == s.size() || s[pos] < '0' || s[pos] > '7') {
                throw ParseError(pos, "expected unit index 0..7 after 'e'");
            }
            unit = s[pos] - '0';
            ++pos;
        } else if (!saw_coef) {
            throw ParseError(pos, "expected coefficient or unit");
        }
        if (negative) coef = -coef;
        result[static_cast<std::size_t>(unit)] += coef;
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            throw ParseError(pos, "expected '+' or '-' between terms");
        }
    }
    return result;
}

} // namespace octmod
