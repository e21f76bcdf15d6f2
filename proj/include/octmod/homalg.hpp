#pragma once

#include <cstddef>
#include <utility>

#include "octmod/bimodule.hpp"
#include "octmod/errors.hpp"
#include "octmod/matrix.hpp"
#include "octmod/octonion.hpp"
#include "octmod/paralinear.hpp"

namespace octmod {

/// Scalar multiplications that make each Hom space of para-linear maps an
/// octonionic bimodule.  For f between left-chirality modules:
///   (f (.) r)(x) = f(x) r - A_r(x, f)
///   (r (.) f)(x) = f(x r) + A_r(x, f)
/// and for right-chirality maps:
///   (r (.) f)(x) = r f(x) + B_r(f, x)
///   (f (.) r)(x) = f(r x) - B_r(f, x)
/// The real-linear overloads evaluate the same defining formulas on arbitrary
/// real maps; the para-linear overloads stay inside the canonical re_matrix
/// representation.

[[nodiscard]] inline RealLinearMap odot_right(const RealLinearMap& f, const Octonion& r, Chirality chi) {
    const RealLinearMap lr_dom = left_mult_real(r, f.dom);
    const RealLinearMap rr_dom = right_mult_real(r, f.dom);
    const RealLinearMap lr_cod = left_mult_real(r, f.cod);
    const RealLinearMap rr_cod = right_mult_real(r, f.cod);
    if (chi == Chirality::Left) {
        // f(x) r - f(r x) + r f(x)
        return {f.dom, f.cod, rr_cod.mat * f.mat - f.mat * lr_dom.mat + lr_cod.mat * f.mat};
    }
    // f(r x) - f(x) r + f(x r)
    return {f.dom, f.cod, f.mat * lr_dom.mat - rr_cod.mat * f.mat + f.mat * rr_dom.mat};
}

[[nodiscard]] inline RealLinearMap odot_left(const Octonion& r, const RealLinearMap& f, Chirality chi) {
    const RealLinearMap lr_dom = left_mult_real(r, f.dom);
    const RealLinearMap rr_dom = right_mult_real(r, f.dom);
    const RealLinearMap lr_cod = left_mult_real(r, f.cod);
    const RealLinearMap rr_cod = right_mult_real(r, f.cod);
    if (chi == Chirality::Left) {
        // f(x r) + f(r x) - r f(x)
        return {f.dom, f.cod, f.mat * rr_dom.mat + f.mat * lr_dom.mat - lr_cod.mat * f.mat};
    }
    // r f(x) + f(x) r - f(x r)
    return {f.dom, f.cod, lr_cod.mat * f.mat + rr_cod.mat * f.mat - f.mat * rr_dom.mat};
}

namespace detail {

/// Re rows of C.F + F.D where C and D are block-diagonal with identical 8x8
/// blocks cblock and dblock.  The bimodule operations preserve para-linearity,
/// so those rows are a faithful representation of the result; computing only
/// them avoids the full matrix products.
[[nodiscard]] inline Matrix odot_re_rows(const Matrix& full, const ModuleShape& dom,
                                         const ModuleShape& cod, const Matrix& cblock,
                                         const Matrix& dblock) {
    Matrix re(cod.rank, dom.real_dim());
    for (std::size_t c = 0; c < cod.rank; ++c) {
        // Row flat(c,0) of C.F combines the rows of block c of F.
        for (std::size_t j = 0; j < 8; ++j) {
            const Rational& s = cblock.at(0, j);
            if (is_zero(s)) continue;
            for (std::size_t col = 0; col < dom.real_dim(); ++col) {
                const Rational& v = full.at(flat_index(c, j), col);
                if (!is_zero(v)) re.at(c, col) += s * v;
            }
        }
        // Row flat(c,0) of F.D mixes columns within each domain block.
        for (std::size_t b = 0; b < dom.rank; ++b) {
            for (std::size_t j = 0; j < 8; ++j) {
                const Rational& v = full.at(flat_index(c, 0), flat_index(b, j));
                if (is_zero(v)) continue;
                for (std::size_t jp = 0; jp < 8; ++jp) {
                    const Rational& d = dblock.at(j, jp);
                    if (!is_zero(d)) re.at(c, flat_index(b, jp)) += v * d;
                }
            }
        }
    }
    return re;
}

} // namespace detail

[[nodiscard]] inline ParaLinearMap odot_right(const ParaLinearMap& f, const Octonion& r) {
    const ModuleShape d1{1, f.dom.conjugated}, c1{1, f.cod.conjugated};
    Matrix cb(8, 8), db(8, 8);
    if (f.chirality == Chirality::Left) {
        // f(x) r - f(r x) + r f(x)
        cb = right_mult_real(r, c1).mat + left_mult_real(r, c1).mat;
        db = Rational(-1) * left_mult_real(r, d1).mat;
    } else {
        // f(r x) - f(x) r + f(x r)
        cb = Rational(-1) * right_mult_real(r, c1).mat;
        db = left_mult_real(r, d1).mat + right_mult_real(r, d1).mat;
    }
    return {f.chirality, f.dom, f.cod,
            detail::odot_re_rows(full_matrix(f), f.dom, f.cod, cb, db)};
}

[[nodiscard]] inline ParaLinearMap odot_left(const Octonion& r, const ParaLinearMap& f) {
    const ModuleShape d1{1, f.dom.conjugated}, c1{1, f.cod.conjugated};
    Matrix cb(8, 8), db(8, 8);
    if (f.chirality == Chirality::Left) {
        // f(x r) + f(r x) - r f(x)
        cb = Rational(-1) * left_mult_real(r, c1).mat;
        db = right_mult_real(r, d1).mat + left_mult_real(r, d1).mat;
    } else {
        // r f(x) + f(x) r - f(x r)
        cb = left_mult_real(r, c1).mat + right_mult_real(r, c1).mat;
        db = Rational(-1) * right_mult_real(r, d1).mat;
    }
    return {f.chirality, f.dom, f.cod,
            detail::odot_re_rows(full_matrix(f), f.dom, f.cod, cb, db)};
}

/// Real part of a map: Re f = ext(f_R restricted to Re M), the module
/// homomorphism part.  Equals (5/12) f - (1/12) sum_i e_i (.) f (.) e_i.
[[nodiscard]] inline ParaLinearMap re_of_map(const ParaLinearMap& f) {
    Matrix packed(f.cod.real_dim(), f.dom.rank);
    for (std::size_t c = 0; c < f.cod.rank; ++c) {
        for (std::size_t a = 0; a < f.dom.rank; ++a) {
            packed.at(flat_index(c, 0), a) = f.re_matrix.at(c, flat_index(a, 0));
        }
    }
    return ext(packed, f.dom, f.cod, f.chirality);
}

/// Regular composition f (*) g.  The defect bracket is purely imaginary, so
/// the real part of the composite is f_R applied after the full matrix of g;
/// that product is the canonical representation of the result.
[[nodiscard]] inline ParaLinearMap regular_compose(const ParaLinearMap& f, const ParaLinearMap& g) {
    if (f.chirality != g.chirality) throw ShapeError("regular_compose: mixed chirality");
    if (!(g.cod == f.dom)) throw ShapeError("regular_compose: inner shapes differ");
    return {f.chirality, g.dom, f.cod, f.re_matrix * full_matrix(g)};
}

[[nodiscard]] inline ParaLinearMap regular_compose_left(const ParaLinearMap& f, const ParaLinearMap& g) {
    if (f.chirality != Chirality::Left) throw ShapeError("regular_compose_left: expected left maps");
    return regular_compose(f, g);
}

[[nodiscard]] inline ParaLinearMap regular_compose_right(const ParaLinearMap& f, const ParaLinearMap& g) {
    if (f.chirality != Chirality::Right) throw ShapeError("regular_compose_right: expected right maps");
    return regular_compose(f, g);
}

/// Composing with a merely real-linear right factor still yields a map of the
/// same chirality as f; only the real part of f enters the product.
[[nodiscard]] inline ParaLinearMap regular_compose(const ParaLinearMap& f, const RealLinearMap& g) {
    if (!(g.cod == f.dom)) throw ShapeError("regular_compose: inner shapes differ");
    return {f.chirality, g.dom, f.cod, f.re_matrix * g.mat};
}

/// Composition defect for left maps:
///   [f, g, x] = - sum_{j=1..7} e_j . re(f(A_{e_j}(x, g)))
/// so that (f (*) g)(x) = f(g(x)) + [f, g, x].
[[nodiscard]] inline Element bracket_left(const ParaLinearMap& f, const ParaLinearMap& g, const Element& x) {
    Element acc(f.cod);
    for (int j = 1; j < 8; ++j) {
        const Octonion ej = Octonion::basis(j);
        const Element a = second_associator_left(ej, x, g);
        acc += left_act(ej, re_project(eval(f, a)));
    }
    return -acc;
}

/// Composition defect for right maps:
///   [x, f, g] = sum_{j=1..7} re(f(B_{e_j}(g, x))) . e_j
/// so that (f (*) g)(x) = f(g(x)) + [x, f, g].
[[nodiscard]] inline Element bracket_right(const Element& x, const ParaLinearMap& f, const ParaLinearMap& g) {
    Element acc(f.cod);
    for (int j = 1; j < 8; ++j) {
        const Octonion ej = Octonion::basis(j);
        const Element b = second_associator_right(ej, g, x);
        acc += right_act(re_project(eval(f, b)), ej);
    }
    return acc;
}

/// Pointwise composition defects at full real-linear generality.  These agree
/// with the canonical-form brackets above whenever f and g are the underlying
/// real maps of same-chirality canonical maps.
[[nodiscard]] inline Element bracket_left(const RealLinearMap& f, const RealLinearMap& g, const Element& x) {
    Element acc(f.cod);
    for (int j = 1; j < 8; ++j) {
        const Octonion ej = Octonion::basis(j);
        acc += left_act(ej, re_project(apply(f, second_associator_left(ej, x, g))));
    }
    return -acc;
}

[[nodiscard]] inline Element bracket_right(const Element& x, const RealLinearMap& f, const RealLinearMap& g) {
    Element acc(f.cod);
    for (int j = 1; j < 8; ++j) {
        const Octonion ej = Octonion::basis(j);
        acc += right_act(re_project(apply(f, second_associator_right(ej, g, x))), ej);
    }
    return acc;
}

/// Pointwise regular composition of arbitrary real-linear maps:
///   left  (f (*) g)(x) = f(g(x)) + [f, g, x]
///   right (f (*) g)(x) = f(g(x)) + [x, f, g].
[[nodiscard]] inline Element compose_eval_left(const RealLinearMap& f, const RealLinearMap& g, const Element& x) {
    return apply(f, apply(g, x)) + bracket_left(f, g, x);
}

[[nodiscard]] inline Element compose_eval_right(const RealLinearMap& f, const RealLinearMap& g, const Element& x) {
    return apply(f, apply(g, x)) + bracket_right(x, f, g);
}

/// Second-order associator (f (*) g) (*) h - f (*) (g (*) h).  Its values on
/// real points are purely imaginary, so its Hom-module real part is zero; it
/// vanishes entirely whenever any factor is a module homomorphism.
[[nodiscard]] inline ParaLinearMap map_associator(const ParaLinearMap& f, const ParaLinearMap& g,
                                                  const ParaLinearMap& h) {
    return regular_compose(regular_compose(f, g), h) - regular_compose(f, regular_compose(g, h));
}

/// R_p: x |-> x . p as a left para-linear operator.
[[nodiscard]] inline ParaLinearMap right_mult_operator(const Octonion& p, const ModuleShape& shape) {
    return from_real_linear(right_mult_real(p, shape), Chirality::Left);
}

/// L_p: x |-> p . x as a right para-linear operator.
[[nodiscard]] inline ParaLinearMap left_mult_operator(const Octonion& p, const ModuleShape& shape) {
    return from_real_linear(left_mult_real(p, shape), Chirality::Right);
}

/// Transpose: the opposite-chirality map with the same real part.  An
/// involution, and an isomorphism between the two Hom bimodules; its fixed
/// maps (same underlying real map both ways) are the module homomorphisms.
[[nodiscard]] inline ParaLinearMap transpose(const ParaLinearMap& f) {
    return {f.chirality == Chirality::Left ? Chirality::Right : Chirality::Left, f.dom, f.cod, f.re_matrix};
}

/// Free-module structure of Hom_para(M, M'): the map space is a free
/// bimodule of rank dom.rank * cod.rank.  Coordinates are indexed by pairs
/// (a, b), a over the codomain, b over the domain, flattened as
/// a * dom.rank + b; the real basis maps are the elementary homomorphisms
/// E_ab sending the real basis vector b to the real basis vector a.
///
/// forward decomposes f = sum_i e_i (.) f_(i) with f_(i) = Re(conj(e_i) (.) f)
/// and reads the matrix of each homomorphism component; backward rebuilds the
/// sum.  Both directions are exact inverses and intertwine the bimodule
/// actions.
struct HomModuleIso {
    ModuleShape dom;
    ModuleShape cod;
    Chirality chirality;
    ModuleShape hom_shape;

    HomModuleIso(ModuleShape d, ModuleShape c, Chirality chi)
        : dom(d), cod(c), chirality(chi), hom_shape{d.rank * c.rank, false} {}

    [[nodiscard]] std::size_t pair_index(std::size_t a, std::size_t b) const {
        return a * dom.rank + b;
    }

    [[nodiscard]] Element forward(const ParaLinearMap& f) const {
        if (f.chirality != chirality || !(f.dom == dom) || !(f.cod == cod)) {
            throw ShapeError("hom iso forward: map does not belong to this Hom module");
        }
        const Matrix full = full_matrix(f);
        Element y(hom_shape);
        const ModuleShape d1{1, dom.conjugated}, c1{1, cod.conjugated};
        for (int i = 0; i < 8; ++i) {
            // Only the real cell (flat(a,0), flat(b,0)) of conj(e_i) (.) f is
            // needed; the module actions are block diagonal, so that entry is
            // a combination of row flat(a,0) and column flat(b,0) of f's full
            // matrix weighted by single-coordinate action blocks.
            const Octonion r = conj(Octonion::basis(i));
            const Matrix dl = left_mult_real(r, d1).mat;
            const Matrix dr = right_mult_real(r, d1).mat;
            const Matrix cl = left_mult_real(r, c1).mat;
            const Matrix cr = right_mult_real(r, c1).mat;
            for (std::size_t a = 0; a < cod.rank; ++a) {
                for (std::size_t b = 0; b < dom.rank; ++b) {
                    Rational v;
                    if (chirality == Chirality::Left) {
                        // f(x r) + f(r x) - r f(x)
                        for (std::size_t j = 0; j < 8; ++j) {
                            const Rational w = dr.at(j, 0) + dl.at(j, 0);
                            if (!is_zero(w)) v += full.at(flat_index(a, 0), flat_index(b, j)) * w;
                            const Rational& s = cl.at(0, j);
                            if (!is_zero(s)) v -= s * full.at(flat_index(a, j), flat_index(b, 0));
                        }
                    } else {
                        // r f(x) + f(x) r - f(x r)
                        for (std::size_t j = 0; j < 8; ++j) {
                            const Rational s = cl.at(0, j) + cr.at(0, j);
                            if (!is_zero(s)) v += s * full.at(flat_index(a, j), flat_index(b, 0));
                            const Rational& w = dr.at(j, 0);
                            if (!is_zero(w)) v -= full.at(flat_index(a, 0), flat_index(b, j)) * w;
                        }
                    }
                    y.coords[pair_index(a, b)][static_cast<std::size_t>(i)] = v;
                }
            }
        }
        return y;
    }

    [[nodiscard]] ParaLinearMap backward(const Element& y) const {
        y.require_shape(hom_shape);
        ParaLinearMap f = zero_para(chirality, dom, cod);
        for (int i = 0; i < 8; ++i) {
            Matrix packed(cod.real_dim(), dom.rank);
            bool any = false;
            for (std::size_t a = 0; a < cod.rank; ++a) {
                for (std::size_t b = 0; b < dom.rank; ++b) {
                    const Rational& v = y.coords[pair_index(a, b)][static_cast<std::size_t>(i)];
                    if (!is_zero(v)) {
                        packed.at(flat_index(a, 0), b) = v;
                        any = true;
                    }
                }
            }
            if (!any) continue;
            const ParaLinearMap component = ext(packed, dom, cod, chirality);
            f = f + odot_left(Octonion::basis(i), component);
        }
        return f;
    }
};

[[nodiscard]] inline HomModuleIso hom_module(const ModuleShape& dom, const ModuleShape& cod,
                                             Chirality chi = Chirality::Left) {
    return {dom, cod, chi};
}

} // namespace octmod
