#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "octmod/bimodule.hpp"
#include "octmod/errors.hpp"
#include "octmod/homalg.hpp"
#include "octmod/matrix.hpp"
#include "octmod/paralinear.hpp"
#include "octmod/report.hpp"
#include "octmod/tensor.hpp"

namespace octmod {

[[nodiscard]] constexpr Chirality opposite(Chirality c) {
    return c == Chirality::Left ? Chirality::Right : Chirality::Left;
}

/// Conjugation functor: swaps the chirality of a map and replaces domain and
/// codomain by their conjugate modules.  The stored real part is unchanged;
/// only the reconstruction rule changes.  An involution.
[[nodiscard]] inline ParaLinearMap conjugate_functor(const ParaLinearMap& f) {
    return {opposite(f.chirality), f.dom.conjugate(), f.cod.conjugate(), f.re_matrix};
}

/// Covariant Hom functor at M: sends f: X -> Y to the map
/// Hom(M, X) -> Hom(M, Y), g |-> f (*) g, expressed between the free models
/// of the Hom modules.  Preserves chirality and is O-linear.
[[nodiscard]] inline ParaLinearMap hom_covariant(const ModuleShape& m, const ParaLinearMap& f) {
    const HomModuleIso hx = hom_module(m, f.dom, f.chirality);
    const HomModuleIso hy = hom_module(m, f.cod, f.chirality);
    Matrix re(hy.hom_shape.rank, hx.hom_shape.real_dim());
    for (std::size_t q = 0; q < hx.hom_shape.rank; ++q) {
        for (int i = 0; i < 8; ++i) {
            const ParaLinearMap g = hx.backward(basis_element(hx.hom_shape, q, i));
            const Element y = hy.forward(regular_compose(f, g));
            for (std::size_t c = 0; c < hy.hom_shape.rank; ++c) {
                re.at(c, flat_index(q, i)) = y.coords[c][0];
            }
        }
    }
    return {f.chirality, hx.hom_shape, hy.hom_shape, re};
}

/// Contravariant Hom functor at M: sends f: X -> Y to the map
/// Hom(Y, M) -> Hom(X, M), g |-> g (*) f.  Swaps chirality and is O-linear.
[[nodiscard]] inline ParaLinearMap hom_contravariant(const ModuleShape& m, const ParaLinearMap& f) {
    const HomModuleIso hy = hom_module(f.cod, m, f.chirality);
    const HomModuleIso hx = hom_module(f.dom, m, f.chirality);
    Matrix re(hx.hom_shape.rank, hy.hom_shape.real_dim());
    for (std::size_t q = 0; q < hy.hom_shape.rank; ++q) {
        for (int i = 0; i < 8; ++i) {
            const ParaLinearMap g = hy.backward(basis_element(hy.hom_shape, q, i));
            const Element y = hx.forward(regular_compose(g, f));
            for (std::size_t c = 0; c < hx.hom_shape.rank; ++c) {
                re.at(c, flat_index(q, i)) = y.coords[c][0];
            }
        }
    }
    return {opposite(f.chirality), hy.hom_shape, hx.hom_shape, re};
}

/// Tensor-Hom adjunction between left-map spaces:
///   Hom(M (x) X, Y)  ~  Hom(X, Hom(M, Y)),
/// realized on the free models.  forward sends alpha to
/// tau(alpha): x |-> (m |-> alpha(m (x) x)); backward inverts it.
struct AdjointIso {
    ModuleShape m;
    ModuleShape x;
    ModuleShape y;
    TensorModule mx;
    HomModuleIso hom_my;

    AdjointIso(ModuleShape m_, ModuleShape x_, ModuleShape y_)
        : m(m_), x(x_), y(y_), mx(tensor_module(m_, x_)), hom_my(hom_module(m_, y_, Chirality::Left)) {}

    [[nodiscard]] ParaLinearMap forward(const ParaLinearMap& alpha) const {
        if (alpha.chirality != Chirality::Left || !(alpha.dom == mx.shape) || !(alpha.cod == y)) {
            throw ShapeError("AdjointIso::forward: expected a left map M (x) X -> Y");
        }
        Matrix packed(hom_my.hom_shape.real_dim(), x.rank);
        for (std::size_t b = 0; b < x.rank; ++b) {
            Matrix vals(y.real_dim(), m.rank);
            for (std::size_t a = 0; a < m.rank; ++a) {
                const Element v = eval(alpha, basis_element(mx.shape, mx.pair_index(a, b), 0));
                const Vec flat = flatten(v);
                for (std::size_t r = 0; r < flat.size(); ++r) vals.at(r, a) = flat[r];
            }
            const ParaLinearMap g = ext(vals, m, y, Chirality::Left);
            const Vec flat = flatten(hom_my.forward(g));
            for (std::size_t r = 0; r < flat.size(); ++r) packed.at(r, b) = flat[r];
        }
        return ext(packed, x, hom_my.hom_shape, Chirality::Left);
    }

    [[nodiscard]] ParaLinearMap backward(const ParaLinearMap& beta) const {
        if (beta.chirality != Chirality::Left || !(beta.dom == x) || !(beta.cod == hom_my.hom_shape)) {
            throw ShapeError("AdjointIso::backward: expected a left map X -> Hom(M, Y)");
        }
        Matrix packed(y.real_dim(), mx.shape.rank);
        for (std::size_t b = 0; b < x.rank; ++b) {
            const ParaLinearMap g = hom_my.backward(eval(beta, basis_element(x, b, 0)));
            for (std::size_t a = 0; a < m.rank; ++a) {
                const Vec flat = flatten(eval(g, basis_element(m, a, 0)));
                for (std::size_t r = 0; r < flat.size(); ++r) {
                    packed.at(r, mx.pair_index(a, b)) = flat[r];
                }
            }
        }
        return ext(packed, mx.shape, y, Chirality::Left);
    }
};

[[nodiscard]] inline AdjointIso adjoint_iso(const ModuleShape& m, const ModuleShape& x, const ModuleShape& y) {
    return {m, x, y};
}

[[nodiscard]] inline ModuleShape scalar_shape() { return ModuleShape{1, false}; }

/// Evaluation functional x'' = (f |-> f(x)) on the free model of the dual
/// M* = Hom of left maps M -> O.  A right para-linear map; its defining
/// second associator satisfies B_p(x'', f) = A_p(x, f).
[[nodiscard]] inline ParaLinearMap dual_element(const ModuleShape& m, const Element& x) {
    x.require_shape(m);
    const HomModuleIso dual = hom_module(m, scalar_shape(), Chirality::Left);
    Matrix re(1, dual.hom_shape.real_dim());
    for (std::size_t q = 0; q < dual.hom_shape.rank; ++q) {
        for (int i = 0; i < 8; ++i) {
            const ParaLinearMap f = dual.backward(basis_element(dual.hom_shape, q, i));
            re.at(0, flat_index(q, i)) = eval(f, x).coords[0][0];
        }
    }
    return {Chirality::Right, dual.hom_shape, scalar_shape(), re};
}

/// Canonical map M -> M** on free models (O-linear, injective).  M* is
/// modelled on O^rank(M) via the left Hom module, M** on the right Hom module
/// of that model.
[[nodiscard]] inline ParaLinearMap double_dual_embedding(const ModuleShape& m) {
    const HomModuleIso dual = hom_module(m, scalar_shape(), Chirality::Left);
    const HomModuleIso ddual = hom_module(dual.hom_shape, scalar_shape(), Chirality::Right);
    Matrix packed(ddual.hom_shape.real_dim(), m.rank);
    for (std::size_t a = 0; a < m.rank; ++a) {
        const ParaLinearMap xdd = dual_element(m, basis_element(m, a, 0));
        const Vec flat = flatten(ddual.forward(xdd));
        for (std::size_t r = 0; r < flat.size(); ++r) packed.at(r, a) = flat[r];
    }
    return ext(packed, m, ddual.hom_shape, Chirality::Left);
}

/// Block extension of a real-linear endomorphism of O to a module: acts by
/// alpha on every octonion coordinate slot through the polarization
/// components, alpha_M(x) = sum_i alpha(e_i) . x_i.
[[nodiscard]] inline RealLinearMap alpha_map(const Matrix& alpha, const ModuleShape& m) {
    if (alpha.rows() != 8 || alpha.cols() != 8) {
        throw ShapeError("alpha_map: alpha must be 8x8");
    }
    std::vector<Octonion> cols;
    cols.reserve(8);
    for (int i = 0; i < 8; ++i) {
        Octonion c;
        for (int r = 0; r < 8; ++r) c[r] = alpha.at(static_cast<std::size_t>(r), static_cast<std::size_t>(i));
        cols.push_back(c);
    }
    Matrix out(m.real_dim(), m.real_dim());
    for (std::size_t b = 0; b < m.rank; ++b) {
        for (int k = 0; k < 8; ++k) {
            const std::array<Element, 8> comps = polarize(basis_element(m, b, k));
            Element y(m);
            for (int i = 0; i < 8; ++i) {
                if (comps[static_cast<std::size_t>(i)].is_zero()) continue;
                y += left_act(cols[static_cast<std::size_t>(i)], comps[static_cast<std::size_t>(i)]);
            }
            const Vec flat = flatten(y);
            for (std::size_t r = 0; r < flat.size(); ++r) {
                out.at(r, flat_index(b, k)) = flat[r];
            }
        }
    }
    return {m, m, out};
}

/// Matrix unit alpha(i, j): the real-linear map O -> O with e_k |-> delta_jk e_i.
[[nodiscard]] inline Matrix alpha_unit(int i, int j) {
    Matrix a(8, 8);
    a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(1);
    return a;
}

/// Decomposition of an arbitrary real-linear map f: M -> M' as
/// f = sum_{i,j} f_ij o alpha(i,j)_M with every f_ij O-linear: the matrix
/// model of the enveloping algebra action.  Components are indexed (i, j).
struct EnvelopingDecomposition {
    ModuleShape dom;
    ModuleShape cod;
    std::vector<ParaLinearMap> components; // 64 entries, row-major over (i, j)

    [[nodiscard]] const ParaLinearMap& at(int i, int j) const {
        return components[static_cast<std::size_t>(i * 8 + j)];
    }
};

[[nodiscard]] inline EnvelopingDecomposition enveloping_decompose(const RealLinearMap& f) {
    EnvelopingDecomposition d{f.dom, f.cod, {}};
    d.components.reserve(64);
    for (int i = 0; i < 8; ++i) {
        const Octonion ei_conj = conj(Octonion::basis(i));
        for (int j = 0; j < 8; ++j) {
            Matrix packed(f.cod.real_dim(), f.dom.rank);
            for (std::size_t a = 0; a < f.dom.rank; ++a) {
                const Element v = apply(f, left_act(Octonion::basis(j), basis_element(f.dom, a, 0)));
                const Element w = re_project(left_act(ei_conj, v));
                for (std::size_t c = 0; c < f.cod.rank; ++c) {
                    packed.at(flat_index(c, 0), a) = w.coords[c][0];
                }
            }
            d.components.push_back(ext(packed, f.dom, f.cod, Chirality::Left));
        }
    }
    return d;
}

[[nodiscard]] inline RealLinearMap enveloping_reassemble(const EnvelopingDecomposition& d) {
    RealLinearMap sum = zero_map(d.dom, d.cod);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const RealLinearMap comp = to_real_linear(d.at(i, j));
            sum = sum + compose(comp, alpha_map(alpha_unit(i, j), d.dom));
        }
    }
    return sum;
}

[[nodiscard]] inline std::vector<Vec> kernel_of(const RealLinearMap& f) { return kernel_basis(f.mat); }
[[nodiscard]] inline std::vector<Vec> image_of(const RealLinearMap& f) { return image_basis(f.mat); }

/// Exactness of the pair (f, g) at cod(f) = dom(g): image f = kernel g.
[[nodiscard]] inline bool is_exact_pair(const RealLinearMap& f, const RealLinearMap& g) {
    if (!(g.dom == f.cod)) throw ShapeError("is_exact_pair: maps are not composable");
    return same_span(image_basis(f.mat), kernel_basis(g.mat), f.cod.real_dim());
}

/// Exactness of a sequence at the domain of seq[k] (equivalently the codomain
/// of seq[k-1]); k ranges over 1 .. seq.size()-1.
[[nodiscard]] inline bool is_exact_at(const std::vector<RealLinearMap>& seq, std::size_t k) {
    if (k == 0 || k >= seq.size()) throw std::out_of_range("is_exact_at: position out of range");
    return is_exact_pair(seq[k - 1], seq[k]);
}

/// 0 -> dom(i) -> cod(i) -> cod(p) -> 0 exact: i injective, image i = kernel p,
/// p surjective.
[[nodiscard]] inline bool is_short_exact(const RealLinearMap& i, const RealLinearMap& p) {
    const bool inj = rank(i.mat) == i.dom.real_dim();
    const bool surj = rank(p.mat) == p.cod.real_dim();
    return inj && surj && is_exact_pair(i, p);
}

/// Left exactness of the covariant Hom functor at M applied to a short exact
/// sequence 0 -> X -> X' -> X'' -> 0 of left maps: checks that
/// 0 -> Hom(M,X) -> Hom(M,X') -> Hom(M,X'') is exact at the first two spots.
[[nodiscard]] inline IdentityReport hom_left_exactness_check(const ModuleShape& m, const ParaLinearMap& i,
                                                             const ParaLinearMap& p) {
    if (i.chirality != p.chirality || !(p.dom == i.cod)) {
        throw ShapeError("hom_left_exactness_check: maps do not form a composable pair");
    }
    IdentityReport rep;
    rep.name = "hom_left_exact";
    rep.trials = 1;
    if (!is_short_exact(to_real_linear(i), to_real_linear(p))) {
        throw std::invalid_argument("hom_left_exactness_check: input is not a short exact sequence");
    }
    const RealLinearMap ti = to_real_linear(hom_covariant(m, i));
    const RealLinearMap tp = to_real_linear(hom_covariant(m, p));
    const bool inj = rank(ti.mat) == ti.dom.real_dim();
    const bool mid = is_exact_pair(ti, tp);
    if (inj && mid) {
        rep.status = CheckStatus::Pass;
    } else {
        rep.status = CheckStatus::Fail;
        rep.counterexample = {{"hom_map_injective", inj}, {"exact_at_middle", mid}};
    }
    rep.note = "module rank " + std::to_string(m.rank);
    return rep;
}

/// Restriction of Re o f to real parts, as a rank(cod) x rank(dom) matrix:
/// the action of the real-part functor on a morphism.
[[nodiscard]] inline Matrix re_restriction(const ParaLinearMap& f) {
    Matrix c(f.cod.rank, f.dom.rank);
    for (std::size_t r = 0; r < f.cod.rank; ++r) {
        for (std::size_t a = 0; a < f.dom.rank; ++a) {
            c.at(r, a) = f.re_matrix.at(r, flat_index(a, 0));
        }
    }
    return c;
}

/// Defect of the underlying-real-map assignment against regular composition:
/// zero exactly when the pair composes strictly (for example when either
/// factor is O-linear).
[[nodiscard]] inline Matrix underlying_compose_defect(const ParaLinearMap& f, const ParaLinearMap& g) {
    return to_real_linear(regular_compose(f, g)).mat - to_real_linear(f).mat * to_real_linear(g).mat;
}

/// Defect of the real-part functor against composition.
[[nodiscard]] inline Matrix re_compose_defect(const ParaLinearMap& f, const ParaLinearMap& g) {
    return re_restriction(regular_compose(f, g)) - re_restriction(f) * re_restriction(g);
}

} // namespace octmod
