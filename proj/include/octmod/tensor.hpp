#pragma once

#include <array>
#include <cstddef>

#include "octmod/bimodule.hpp"
#include "octmod/errors.hpp"
#include "octmod/homalg.hpp"
#include "octmod/paralinear.hpp"

namespace octmod {

/// Tensor product of free bimodules over the octonions:
///   M (x) M' = (Re M (x)_R Re M') (x)_R O,
/// a free bimodule of rank rank(M) * rank(M').  Coordinates are indexed by
/// pairs (a, b), b fastest: flat pair index a * rank(M') + b.
struct TensorModule {
    ModuleShape left;
    ModuleShape right;
    ModuleShape shape;

    TensorModule(ModuleShape l, ModuleShape r)
        : left(l), right(r), shape{l.rank * r.rank, false} {}

    [[nodiscard]] std::size_t pair_index(std::size_t a, std::size_t b) const {
        return a * right.rank + b;
    }
};

[[nodiscard]] inline TensorModule tensor_module(const ModuleShape& l, const ModuleShape& r) {
    return {l, r};
}

/// m (x) m' = sum_{i,j} (m_i (x) m'_j) (e_i e_j), where m_i, m'_j are the
/// polarization components.  Bilinear over the rationals but not over O; the
/// defect of middle O-linearity is tensor_defect.
[[nodiscard]] inline Element elementary_tensor(const TensorModule& t, const Element& m, const Element& mp) {
    m.require_shape(t.left);
    mp.require_shape(t.right);
    const std::array<Element, 8> mi = polarize(m);
    const std::array<Element, 8> mj = polarize(mp);
    Element out(t.shape);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const Octonion unit = Octonion::basis(i) * Octonion::basis(j);
            for (std::size_t a = 0; a < t.left.rank; ++a) {
                const Rational& ca = mi[static_cast<std::size_t>(i)].coords[a][0];
                if (is_zero(ca)) continue;
                for (std::size_t b = 0; b < t.right.rank; ++b) {
                    const Rational& cb = mj[static_cast<std::size_t>(j)].coords[b][0];
                    if (is_zero(cb)) continue;
                    out.coords[t.pair_index(a, b)] += (ca * cb) * unit;
                }
            }
        }
    }
    return out;
}

/// The middle-slot defect: m . p (x) m' - m (x) p . m' equals
/// sum_{i,j} (m_i (x) m'_j) [e_i, p, e_j].
[[nodiscard]] inline Element tensor_defect(const TensorModule& t, const Element& m, const Octonion& p,
                                           const Element& mp) {
    m.require_shape(t.left);
    mp.require_shape(t.right);
    const std::array<Element, 8> mi = polarize(m);
    const std::array<Element, 8> mj = polarize(mp);
    Element out(t.shape);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const Octonion assoc = associator(Octonion::basis(i), p, Octonion::basis(j));
            if (assoc.is_zero()) continue;
            for (std::size_t a = 0; a < t.left.rank; ++a) {
                const Rational& ca = mi[static_cast<std::size_t>(i)].coords[a][0];
                if (is_zero(ca)) continue;
                for (std::size_t b = 0; b < t.right.rank; ++b) {
                    const Rational& cb = mj[static_cast<std::size_t>(j)].coords[b][0];
                    if (is_zero(cb)) continue;
                    out.coords[t.pair_index(a, b)] += (ca * cb) * assoc;
                }
            }
        }
    }
    return out;
}

/// Which para-linear extension the induced map uses on M (x) -.
/// The first letter is the chirality of the input morphism, the second the
/// chirality of the output: ll and rl extend on the left, lr and rr on the
/// right (computed by transporting the left extension through conjugation).
enum class InducedVariant { ll, lr, rr, rl };

/// Functorial action of M (x) - on a morphism f: X -> X': the para-linear
/// extension of  m (x) x |-> m (x) f(x)  over the real basis of M (x) X.
[[nodiscard]] inline ParaLinearMap induced_map(const ModuleShape& m, const ParaLinearMap& f,
                                               InducedVariant variant) {
    const bool expects_left_input = (variant == InducedVariant::ll || variant == InducedVariant::lr);
    if (expects_left_input != (f.chirality == Chirality::Left)) {
        throw ShapeError("induced_map: variant does not match the chirality of f");
    }
    const TensorModule tdom = tensor_module(m, f.dom);
    const TensorModule tcod = tensor_module(m, f.cod);
    // f_M on the real basis of Re M (x) Re X.
    Matrix packed(tcod.shape.real_dim(), tdom.shape.rank);
    for (std::size_t b = 0; b < f.dom.rank; ++b) {
        const Element fx = eval(f, basis_element(f.dom, b, 0));
        for (std::size_t a = 0; a < m.rank; ++a) {
            const Element col = elementary_tensor(tcod, basis_element(m, a, 0), fx);
            const Vec flat = flatten(col);
            for (std::size_t r = 0; r < flat.size(); ++r) {
                packed.at(r, tdom.pair_index(a, b)) = flat[r];
            }
        }
    }
    const bool left_output = (variant == InducedVariant::ll || variant == InducedVariant::rl);
    if (left_output) {
        return ext(packed, tdom.shape, tcod.shape, Chirality::Left);
    }
    // Right extensions are obtained from the left extension in the conjugate
    // modules: (l-ext g on conjugates)(x . conj(p)) = g(x) . conj(p).
    const ParaLinearMap via_conj =
        ext(packed, tdom.shape.conjugate(), tcod.shape.conjugate(), Chirality::Left);
    return {Chirality::Right, tdom.shape, tcod.shape, via_conj.re_matrix};
}

} // namespace octmod
