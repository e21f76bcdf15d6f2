#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "octmod/errors.hpp"
#include "octmod/matrix.hpp"
#include "octmod/octonion.hpp"

namespace octmod {

/// Shape of a free octonionic bimodule.
///
/// rank n, conjugated = false: O^n with the coordinatewise actions
///   p . x = (p x^a),   x . p = (x^a p).
/// conjugated = true: the conjugate module, same coordinates but twisted
/// actions  p . x = (x^a conj(p)),  x . p = (conj(p) x^a).
struct ModuleShape {
    std::size_t rank = 1;
    bool conjugated = false;

    [[nodiscard]] bool operator==(const ModuleShape&) const = default;

    /// Dimension over the rationals: 8 * rank.
    [[nodiscard]] std::size_t real_dim() const { return 8 * rank; }

    [[nodiscard]] ModuleShape conjugate() const { return {rank, !conjugated}; }

    [[nodiscard]] std::string describe() const {
        std::string s = "O^" + std::to_string(rank);
        if (conjugated) s += "~";
        return s;
    }
};

/// Element of a free bimodule: a coordinate vector of octonions.
struct Element {
    ModuleShape shape;
    std::vector<Octonion> coords;

    Element() = default;

    explicit Element(ModuleShape s) : shape(s), coords(s.rank) {}

    Element(ModuleShape s, std::vector<Octonion> c) : shape(s), coords(std::move(c)) {
        if (coords.size() != shape.rank) throw ShapeError("element coordinate count != rank");
    }

    [[nodiscard]] bool operator==(const Element&) const = default;

    [[nodiscard]] bool is_zero() const {
        for (const auto& c : coords) {
            if (!c.is_zero()) return false;
        }
        return true;
    }

    Element& operator+=(const Element& o) {
        require_shape(o.shape);
        for (std::size_t a = 0; a < coords.size(); ++a) coords[a] += o.coords[a];
        return *this;
    }

    Element& operator-=(const Element& o) {
        require_shape(o.shape);
        for (std::size_t a = 0; a < coords.size(); ++a) coords[a] -= o.coords[a];
        return *this;
    }

    Element& operator*=(const Rational& s) {
        for (auto& c : coords) c *= s;
        return *this;
    }

    [[nodiscard]] friend Element operator+(Element a, const Element& b) { return a += b; }
    [[nodiscard]] friend Element operator-(Element a, const Element& b) { return a -= b; }
    [[nodiscard]] friend Element operator*(const Rational& s, Element a) { return a *= s; }

    [[nodiscard]] friend Element operator-(const Element& a) {
        Element r(a.shape);
        for (std::size_t i = 0; i < a.coords.size(); ++i) r.coords[i] = -a.coords[i];
        return r;
    }

    void require_shape(const ModuleShape& s) const {
        if (!(shape == s)) throw ShapeError("module shape mismatch");
    }
};

/// Flat coordinate layout: index 8a + i holds the e_i coefficient of
/// coordinate a.  All matrices over modules use this layout.
[[nodiscard]] inline std::size_t flat_index(std::size_t a, std::size_t i) { return 8 * a + i; }

[[nodiscard]] inline Vec flatten(const Element& x) {
    Vec v(x.shape.real_dim());
    for (std::size_t a = 0; a < x.shape.rank; ++a) {
        for (std::size_t i = 0; i < 8; ++i) v[flat_index(a, i)] = x.coords[a][i];
    }
    return v;
}

[[nodiscard]] inline Element unflatten(const ModuleShape& shape, const Vec& v) {
    if (v.size() != shape.real_dim()) throw ShapeError("unflatten: length != 8 * rank");
    Element x(shape);
    for (std::size_t a = 0; a < shape.rank; ++a) {
        for (std::size_t i = 0; i < 8; ++i) x.coords[a][i] = v[flat_index(a, i)];
    }
    return x;
}

/// The basis vector e_i in coordinate a.
[[nodiscard]] inline Element basis_element(const ModuleShape& shape, std::size_t a, std::size_t i) {
    Element x(shape);
    x.coords[a] = Octonion::basis(static_cast<int>(i));
    return x;
}

/// Module action p . x (left action of the bimodule structure).
[[nodiscard]] inline Element left_act(const Octonion& p, const Element& x) {
    Element r(x.shape);
    if (x.shape.conjugated) {
        const Octonion pc = conj(p);
        for (std::size_t a = 0; a < x.shape.rank; ++a) r.coords[a] = x.coords[a] * pc;
    } else {
        for (std::size_t a = 0; a < x.shape.rank; ++a) r.coords[a] = p * x.coords[a];
    }
    return r;
}

/// Module action x . p (right action of the bimodule structure).
[[nodiscard]] inline Element right_act(const Element& x, const Octonion& p) {
    Element r(x.shape);
    if (x.shape.conjugated) {
        const Octonion pc = conj(p);
        for (std::size_t a = 0; a < x.shape.rank; ++a) r.coords[a] = pc * x.coords[a];
    } else {
        for (std::size_t a = 0; a < x.shape.rank; ++a) r.coords[a] = x.coords[a] * p;
    }
    return r;
}

/// Real-part projection: keeps the e_0 coefficient of every coordinate.
/// Coincides with (5/12) x - (1/12) sum_i e_i x e_i computed through the
/// module actions, for both standard and conjugate shapes.
[[nodiscard]] inline Element re_project(const Element& x) {
    Element r(x.shape);
    for (std::size_t a = 0; a < x.shape.rank; ++a) r.coords[a] = Octonion(x.coords[a][0]);
    return r;
}

/// Polarization components x_i = Re(conj(e_i) . x); each is real and
/// x = sum_i e_i . x_i reassembles the element through the module action.
[[nodiscard]] inline std::array<Element, 8> polarize(const Element& x) {
    std::array<Element, 8> parts;
    for (int i = 0; i < 8; ++i) {
        parts[static_cast<std::size_t>(i)] =
            re_project(left_act(conj(Octonion::basis(i)), x));
    }
    return parts;
}

/// Module associator [p, q, x] = (pq) . x - p . (q . x).
[[nodiscard]] inline Element module_associator(const Octonion& p, const Octonion& q, const Element& x) {
    return left_act(p * q, x) - left_act(p, left_act(q, x));
}

/// Mixed associator [p, x, q] = (p . x) . q - p . (x . q).
[[nodiscard]] inline Element module_associator_mixed(const Octonion& p, const Element& x, const Octonion& q) {
    return right_act(left_act(p, x), q) - left_act(p, right_act(x, q));
}

/// Right associator [x, p, q] = (x . p) . q - x . (pq).
[[nodiscard]] inline Element module_associator_right(const Element& x, const Octonion& p, const Octonion& q) {
    return right_act(right_act(x, p), q) - right_act(x, p * q);
}

/// Module commutator [p, x] = p . x - x . p.
[[nodiscard]] inline Element module_commutator(const Octonion& p, const Element& x) {
    return left_act(p, x) - right_act(x, p);
}

/// Signed coordinate permutation describing the action of a basis unit on the
/// eight components of one octonion coordinate: component j is sent to
/// component idx[j] with sign sign[j].  Unit actions are multiplication free,
/// which keeps matrix assembly cheap.
struct SignedPerm {
    std::array<int, 8> idx;
    std::array<int, 8> sign;
};

/// Permutation of e_i . (component j) under the left action.
[[nodiscard]] inline SignedPerm lact_perm(int i, bool conjugated) {
    SignedPerm p{};
    for (int j = 0; j < 8; ++j) {
        if (conjugated) {
            // e_i . x = x conj(e_i): component j maps by e_j * conj(e_i).
            const BasisProduct b = basis_mul(j, i);
            p.idx[static_cast<std::size_t>(j)] = b.index;
            p.sign[static_cast<std::size_t>(j)] = (i == 0) ? b.sign : -b.sign;
        } else {
            const BasisProduct b = basis_mul(i, j);
            p.idx[static_cast<std::size_t>(j)] = b.index;
            p.sign[static_cast<std::size_t>(j)] = b.sign;
        }
    }
    return p;
}

/// Permutation of (component j) . e_i under the right action.
[[nodiscard]] inline SignedPerm ract_perm(int i, bool conjugated) {
    SignedPerm p{};
    for (int j = 0; j < 8; ++j) {
        if (conjugated) {
            // x . e_i = conj(e_i) x: component j maps by conj(e_i) * e_j.
            const BasisProduct b = basis_mul(i, j);
            p.idx[static_cast<std::size_t>(j)] = b.index;
            p.sign[static_cast<std::size_t>(j)] = (i == 0) ? b.sign : -b.sign;
        } else {
            const BasisProduct b = basis_mul(j, i);
            p.idx[static_cast<std::size_t>(j)] = b.index;
            p.sign[static_cast<std::size_t>(j)] = b.sign;
        }
    }
    return p;
}

} // namespace octmod
