#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "octmod/bimodule.hpp"
#include "octmod/errors.hpp"
#include "octmod/matrix.hpp"
#include "octmod/octonion.hpp"

namespace octmod {

/// A real-linear map between free bimodules, as a matrix on flat coordinates.
struct RealLinearMap {
    ModuleShape dom;
    ModuleShape cod;
    Matrix mat; // (8 * cod.rank) x (8 * dom.rank)

    RealLinearMap() = default;

    RealLinearMap(ModuleShape d, ModuleShape c, Matrix m)
        : dom(d), cod(c), mat(std::move(m)) {
        if (mat.rows() != cod.real_dim() || mat.cols() != dom.real_dim()) {
            throw ShapeError("real-linear map: matrix size does not match shapes");
        }
    }

    [[nodiscard]] bool operator==(const RealLinearMap&) const = default;
};

[[nodiscard]] inline RealLinearMap identity_map(const ModuleShape& shape) {
    return {shape, shape, Matrix::identity(shape.real_dim())};
}

[[nodiscard]] inline RealLinearMap zero_map(const ModuleShape& dom, const ModuleShape& cod) {
    return {dom, cod, Matrix(cod.real_dim(), dom.real_dim())};
}

[[nodiscard]] inline Element apply(const RealLinearMap& f, const Element& x) {
    x.require_shape(f.dom);
    return unflatten(f.cod, f.mat.apply(flatten(x)));
}

/// Composition g after f.
[[nodiscard]] inline RealLinearMap compose(const RealLinearMap& g, const RealLinearMap& f) {
    if (!(g.dom == f.cod)) throw ShapeError("compose: inner shapes differ");
    return {f.dom, g.cod, g.mat * f.mat};
}

[[nodiscard]] inline RealLinearMap operator+(const RealLinearMap& a, const RealLinearMap& b) {
    if (!(a.dom == b.dom && a.cod == b.cod)) throw ShapeError("map sum: shape mismatch");
    return {a.dom, a.cod, a.mat + b.mat};
}

[[nodiscard]] inline RealLinearMap operator-(const RealLinearMap& a, const RealLinearMap& b) {
    if (!(a.dom == b.dom && a.cod == b.cod)) throw ShapeError("map difference: shape mismatch");
    return {a.dom, a.cod, a.mat - b.mat};
}

/// x |-> x . p as a real-linear map.
[[nodiscard]] inline RealLinearMap right_mult_real(const Octonion& p, const ModuleShape& shape) {
    Matrix m(shape.real_dim(), shape.real_dim());
    for (std::size_t a = 0; a < shape.rank; ++a) {
        for (std::size_t j = 0; j < 8; ++j) {
            const Element col = right_act(basis_element(shape, a, j), p);
            for (std::size_t k = 0; k < 8; ++k) m.at(flat_index(a, k), flat_index(a, j)) = col.coords[a][k];
        }
    }
    return {shape, shape, std::move(m)};
}

/// x |-> p . x as a real-linear map.
[[nodiscard]] inline RealLinearMap left_mult_real(const Octonion& p, const ModuleShape& shape) {
    Matrix m(shape.real_dim(), shape.real_dim());
    for (std::size_t a = 0; a < shape.rank; ++a) {
        for (std::size_t j = 0; j < 8; ++j) {
            const Element col = left_act(p, basis_element(shape, a, j));
            for (std::size_t k = 0; k < 8; ++k) m.at(flat_index(a, k), flat_index(a, j)) = col.coords[a][k];
        }
    }
    return {shape, shape, std::move(m)};
}

/// Second associator A_p(x, f) = f(p . x) - p . f(x).
[[nodiscard]] inline Element second_associator_left(const Octonion& p, const Element& x, const RealLinearMap& f) {
    return apply(f, left_act(p, x)) - left_act(p, apply(f, x));
}

/// Second associator B_p(f, x) = f(x) . p - f(x . p).
[[nodiscard]] inline Element second_associator_right(const Octonion& p, const RealLinearMap& f, const Element& x) {
    return right_act(apply(f, x), p) - apply(f, right_act(x, p));
}

/// Chirality of a para-linear map: left means re A_p(x, f) = 0 for all p, x;
/// right means re B_p(f, x) = 0 for all p, x.
enum class Chirality { Left, Right };

[[nodiscard]] constexpr const char* to_string(Chirality c) {
    return c == Chirality::Left ? "left" : "right";
}

/// A para-linear map, stored canonically by its real part
///   re_matrix = Re o f : M -> Re M',  an (m x 8n) rational matrix.
///
/// The map itself is reconstructed exactly from the real part:
///   left:  f(x) = f_R(x) + sum_{i=1..7} e_i . f_R(conj(e_i) . x)
///   right: f(x) = f_R(x) - sum_{i=1..7} f_R(x . e_i) . e_i
/// where f_R values embed into the real-coordinate subspace of the codomain
/// and all actions are the module actions of the stated shapes.
struct ParaLinearMap {
    Chirality chirality = Chirality::Left;
    ModuleShape dom;
    ModuleShape cod;
    Matrix re_matrix; // cod.rank x (8 * dom.rank)

    ParaLinearMap() = default;

    ParaLinearMap(Chirality chi, ModuleShape d, ModuleShape c, Matrix re)
        : chirality(chi), dom(d), cod(c), re_matrix(std::move(re)) {
        if (re_matrix.rows() != cod.rank || re_matrix.cols() != dom.real_dim()) {
            throw ShapeError("para-linear map: re_matrix size does not match shapes");
        }
    }

    [[nodiscard]] bool operator==(const ParaLinearMap&) const = default;
};

[[nodiscard]] inline ParaLinearMap zero_para(Chirality chi, const ModuleShape& dom, const ModuleShape& cod) {
    return {chi, dom, cod, Matrix(cod.rank, dom.real_dim())};
}

[[nodiscard]] inline ParaLinearMap identity_para(Chirality chi, const ModuleShape& shape) {
    Matrix re(shape.rank, shape.real_dim());
    for (std::size_t a = 0; a < shape.rank; ++a) re.at(a, flat_index(a, 0)) = 1;
    return {chi, shape, shape, std::move(re)};
}

[[nodiscard]] inline ParaLinearMap operator+(const ParaLinearMap& a, const ParaLinearMap& b) {
    if (a.chirality != b.chirality || !(a.dom == b.dom) || !(a.cod == b.cod)) {
        throw ShapeError("para-linear sum: mismatched maps");
    }
    return {a.chirality, a.dom, a.cod, a.re_matrix + b.re_matrix};
}

[[nodiscard]] inline ParaLinearMap operator-(const ParaLinearMap& a, const ParaLinearMap& b) {
    if (a.chirality != b.chirality || !(a.dom == b.dom) || !(a.cod == b.cod)) {
        throw ShapeError("para-linear difference: mismatched maps");
    }
    return {a.chirality, a.dom, a.cod, a.re_matrix - b.re_matrix};
}

[[nodiscard]] inline ParaLinearMap operator*(const Rational& s, ParaLinearMap f) {
    f.re_matrix *= s;
    return f;
}

namespace detail {

/// Index j* with perm.idx[j*] == 0: the unique component that a unit action
/// sends to the real slot.
[[nodiscard]] inline std::size_t real_preimage(const SignedPerm& p) {
    for (std::size_t j = 0; j < 8; ++j) {
        if (p.idx[j] == 0) return j;
    }
    return 0; // unreachable: unit actions are signed permutations
}

} // namespace detail

/// Full (8m x 8n) matrix of the reconstructed map.  Unit actions are signed
/// permutations, so assembly uses no rational multiplication.
[[nodiscard]] inline Matrix full_matrix(const ParaLinearMap& f) {
    const std::size_t n = f.dom.rank, m = f.cod.rank;
    Matrix full(8 * m, 8 * n);
    for (int i = 0; i < 8; ++i) {
        const SignedPerm dp = (f.chirality == Chirality::Left) ? lact_perm(i, f.dom.conjugated)
                                                               : ract_perm(i, f.dom.conjugated);
        const SignedPerm cp = (f.chirality == Chirality::Left) ? lact_perm(i, f.cod.conjugated)
                                                               : ract_perm(i, f.cod.conjugated);
        // Global sign of the reconstruction term: left uses conj(e_i) on the
        // domain (sign -1 for i >= 1), right subtracts the i >= 1 terms.
        const int term_sign = (i == 0) ? +1 : -1;
        const int out_component = cp.idx[0];
        const int out_sign = cp.sign[0];
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t j = 0; j < 8; ++j) {
                const std::size_t src_col = flat_index(a, static_cast<std::size_t>(dp.idx[j]));
                const int s = term_sign * dp.sign[j] * out_sign;
                for (std::size_t c = 0; c < m; ++c) {
                    const Rational& v = f.re_matrix.at(c, src_col);
                    if (is_zero(v)) continue;
                    auto& slot = full.at(flat_index(c, static_cast<std::size_t>(out_component)), flat_index(a, j));
                    if (s > 0) slot += v;
                    else slot -= v;
                }
            }
        }
    }
    return full;
}

[[nodiscard]] inline RealLinearMap to_real_linear(const ParaLinearMap& f) {
    return {f.dom, f.cod, full_matrix(f)};
}

/// Evaluates the para-linear map by its reconstruction formula.
[[nodiscard]] inline Element eval(const ParaLinearMap& f, const Element& x) {
    x.require_shape(f.dom);
    const Vec z = flatten(x);
    const std::size_t n = f.dom.rank, m = f.cod.rank;
    Vec out(8 * m);
    for (int i = 0; i < 8; ++i) {
        const SignedPerm dp = (f.chirality == Chirality::Left) ? lact_perm(i, f.dom.conjugated)
                                                               : ract_perm(i, f.dom.conjugated);
        const SignedPerm cp = (f.chirality == Chirality::Left) ? lact_perm(i, f.cod.conjugated)
                                                               : ract_perm(i, f.cod.conjugated);
        const int term_sign = (i == 0) ? +1 : -1;
        // w = (signed permutation of z) per the domain-side unit action.
        Vec w(8 * n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t j = 0; j < 8; ++j) {
                const Rational& v = z[flat_index(a, j)];
                if (is_zero(v)) continue;
                const std::size_t tgt = flat_index(a, static_cast<std::size_t>(dp.idx[j]));
                // dp maps component j to dp.idx[j]; accumulate the source
                // value into the image slot with its sign.
                if (term_sign * dp.sign[j] > 0) w[tgt] += v;
                else w[tgt] -= v;
            }
        }
        const int out_component = cp.idx[0];
        const int out_sign = cp.sign[0];
        for (std::size_t c = 0; c < m; ++c) {
            Rational acc = 0;
            for (std::size_t col = 0; col < 8 * n; ++col) {
                const Rational& rm = f.re_matrix.at(c, col);
                if (!is_zero(rm) && !is_zero(w[col])) acc += rm * w[col];
            }
            if (is_zero(acc)) continue;
            auto& slot = out[flat_index(c, static_cast<std::size_t>(out_component))];
            if (out_sign > 0) slot += acc;
            else slot -= acc;
        }
    }
    return unflatten(f.cod, out);
}

[[nodiscard]] inline Element second_associator_left(const Octonion& p, const Element& x, const ParaLinearMap& f) {
    return eval(f, left_act(p, x)) - left_act(p, eval(f, x));
}

[[nodiscard]] inline Element second_associator_right(const Octonion& p, const ParaLinearMap& f, const Element& x) {
    return right_act(eval(f, x), p) - eval(f, right_act(x, p));
}

/// Witness that a map is not para-linear: re A_{e_unit}(basis, f) != 0 (or
/// re B for right chirality), with `basis` a flat domain index.
struct ParaWitness {
    int unit;
    std::size_t basis;
};

/// Checks the defining identities on the unit/basis grid, which suffices by
/// bilinearity of the second associators.
[[nodiscard]] inline bool is_para_linear(const RealLinearMap& g, Chirality chi,
                                         ParaWitness* witness = nullptr) {
    const std::size_t n = g.dom.rank, m = g.cod.rank;
    for (int t = 1; t < 8; ++t) {
        const SignedPerm dp = (chi == Chirality::Left) ? lact_perm(t, g.dom.conjugated)
                                                       : ract_perm(t, g.dom.conjugated);
        const SignedPerm cp = (chi == Chirality::Left) ? lact_perm(t, g.cod.conjugated)
                                                       : ract_perm(t, g.cod.conjugated);
        const std::size_t jstar = detail::real_preimage(cp);
        const int cp_sign = cp.sign[jstar];
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t j = 0; j < 8; ++j) {
                const std::size_t acted_col = flat_index(a, static_cast<std::size_t>(dp.idx[j]));
                const std::size_t plain_col = flat_index(a, j);
                for (std::size_t c = 0; c < m; ++c) {
                    // re of g(e_t . b) - e_t . g(b)  (left), or of
                    // g(b) . e_t - g(b . e_t)        (right).
                    Rational acted = g.mat.at(flat_index(c, 0), acted_col);
                    if (dp.sign[j] < 0) acted = -acted;
                    Rational mixed = g.mat.at(flat_index(c, jstar), plain_col);
                    if (cp_sign < 0) mixed = -mixed;
                    const Rational diff = (chi == Chirality::Left) ? Rational(acted - mixed)
                                                                   : Rational(mixed - acted);
                    if (!is_zero(diff)) {
                        if (witness) *witness = {t, plain_col};
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// Canonicalizes a para-linear real map to its re_matrix representation.
/// Throws NotParaLinearError with a witness otherwise.
[[nodiscard]] inline ParaLinearMap from_real_linear(const RealLinearMap& g, Chirality chi) {
    ParaWitness w{};
    if (!is_para_linear(g, chi, &w)) throw NotParaLinearError(w.unit, w.basis);
    Matrix re(g.cod.rank, g.dom.real_dim());
    for (std::size_t c = 0; c < g.cod.rank; ++c) {
        for (std::size_t col = 0; col < g.dom.real_dim(); ++col) {
            re.at(c, col) = g.mat.at(flat_index(c, 0), col);
        }
    }
    return {chi, g.dom, g.cod, std::move(re)};
}

/// A para-linear map is a module homomorphism exactly when it maps the real
/// part into the real part.
[[nodiscard]] inline bool is_o_linear(const ParaLinearMap& f) {
    const Matrix full = full_matrix(f);
    for (std::size_t a = 0; a < f.dom.rank; ++a) {
        const std::size_t col = flat_index(a, 0);
        for (std::size_t c = 0; c < f.cod.rank; ++c) {
            for (std::size_t k = 1; k < 8; ++k) {
                if (!is_zero(full.at(flat_index(c, k), col))) return false;
            }
        }
    }
    return true;
}

/// lift: inverse of re_star.  Takes g in Hom_R(M, Re M') as an (m x 8n)
/// matrix of real components and returns the unique para-linear map with
/// re_matrix g.
[[nodiscard]] inline ParaLinearMap lift(const Matrix& g, const ModuleShape& dom, const ModuleShape& cod,
                                        Chirality chi) {
    return {chi, dom, cod, g};
}

/// lift from a full real-linear map whose image lies in the real part.
/// Throws ShapeError when a non-real output row is nonzero.
[[nodiscard]] inline ParaLinearMap lift(const RealLinearMap& g, Chirality chi) {
    for (std::size_t c = 0; c < g.cod.rank; ++c) {
        for (std::size_t k = 1; k < 8; ++k) {
            for (std::size_t col = 0; col < g.dom.real_dim(); ++col) {
                if (!is_zero(g.mat.at(flat_index(c, k), col))) {
                    throw ShapeError("lift: codomain not contained in the real part");
                }
            }
        }
    }
    Matrix re(g.cod.rank, g.dom.real_dim());
    for (std::size_t c = 0; c < g.cod.rank; ++c) {
        for (std::size_t col = 0; col < g.dom.real_dim(); ++col) {
            re.at(c, col) = g.mat.at(flat_index(c, 0), col);
        }
    }
    return {chi, g.dom, g.cod, std::move(re)};
}

/// re_star: f |-> Re o f as a full real-linear map into the real subspace.
[[nodiscard]] inline RealLinearMap re_star(const ParaLinearMap& f) {
    Matrix m(f.cod.real_dim(), f.dom.real_dim());
    for (std::size_t c = 0; c < f.cod.rank; ++c) {
        for (std::size_t col = 0; col < f.dom.real_dim(); ++col) {
            m.at(flat_index(c, 0), col) = f.re_matrix.at(c, col);
        }
    }
    return {f.dom, f.cod, std::move(m)};
}

/// ext: para-linear extension of g in Hom_R(Re M, M'), given as an (8m x n)
/// matrix whose column a is the flat image of the real basis vector of
/// coordinate a.  Defined by (ext g)(p . x) = p . g(x) for real x (left), or
/// (ext g)(x . p) = g(x) . p (right).  Inverse of re_upper_star.
[[nodiscard]] inline ParaLinearMap ext(const Matrix& g, const ModuleShape& dom, const ModuleShape& cod,
                                       Chirality chi) {
    if (g.rows() != cod.real_dim() || g.cols() != dom.rank) {
        throw ShapeError("ext: matrix must be (8 * cod.rank) x dom.rank");
    }
    const std::size_t n = dom.rank, m = cod.rank;
    Matrix re(m, 8 * n);
    for (int i = 0; i < 8; ++i) {
        const SignedPerm dp = (chi == Chirality::Left) ? lact_perm(i, dom.conjugated)
                                                       : ract_perm(i, dom.conjugated);
        const SignedPerm cp = (chi == Chirality::Left) ? lact_perm(i, cod.conjugated)
                                                       : ract_perm(i, cod.conjugated);
        // basis(a, i) = dp.sign[0] * (e_i acting on the real basis vector).
        const int unit_sign = dp.sign[0];
        const std::size_t jstar = detail::real_preimage(cp);
        const int s = unit_sign * cp.sign[jstar];
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t c = 0; c < m; ++c) {
                const Rational& v = g.at(flat_index(c, jstar), a);
                if (is_zero(v)) continue;
                re.at(c, flat_index(a, static_cast<std::size_t>(i))) = (s > 0) ? v : Rational(-v);
            }
        }
    }
    return {chi, dom, cod, std::move(re)};
}

/// ext from a full real-linear map that is only meaningful on the real basis;
/// all non-real columns must be zero.
[[nodiscard]] inline ParaLinearMap ext(const RealLinearMap& g, Chirality chi) {
    Matrix packed(g.cod.real_dim(), g.dom.rank);
    for (std::size_t col = 0; col < g.dom.real_dim(); ++col) {
        const bool real_col = (col % 8 == 0);
        for (std::size_t r = 0; r < g.cod.real_dim(); ++r) {
            if (real_col) {
                packed.at(r, col / 8) = g.mat.at(r, col);
            } else if (!is_zero(g.mat.at(r, col))) {
                throw ShapeError("ext: map must be supported on the real basis");
            }
        }
    }
    return ext(packed, g.dom, g.cod, chi);
}

/// re_upper_star: restriction of f to the real basis, as an (8m x n) matrix.
[[nodiscard]] inline Matrix re_upper_star(const ParaLinearMap& f) {
    const Matrix full = full_matrix(f);
    Matrix g(f.cod.real_dim(), f.dom.rank);
    for (std::size_t a = 0; a < f.dom.rank; ++a) {
        for (std::size_t r = 0; r < f.cod.real_dim(); ++r) {
            g.at(r, a) = full.at(r, flat_index(a, 0));
        }
    }
    return g;
}

/// Linear system whose kernel is the space of para-linear maps M -> M':
/// one row per (unit, domain basis, real output coordinate).
[[nodiscard]] inline Matrix para_linear_constraints(const ModuleShape& dom, const ModuleShape& cod,
                                                    Chirality chi) {
    const std::size_t n = dom.rank, m = cod.rank;
    const std::size_t unknowns = (8 * m) * (8 * n);
    const auto cell = [n](std::size_t r, std::size_t c) { return r * (8 * n) + c; };
    Matrix sys(7 * (8 * n) * m, unknowns);
    std::size_t row = 0;
    for (int t = 1; t < 8; ++t) {
        const SignedPerm dp = (chi == Chirality::Left) ? lact_perm(t, dom.conjugated)
                                                       : ract_perm(t, dom.conjugated);
        const SignedPerm cp = (chi == Chirality::Left) ? lact_perm(t, cod.conjugated)
                                                       : ract_perm(t, cod.conjugated);
        const std::size_t jstar = detail::real_preimage(cp);
        const int cp_sign = cp.sign[jstar];
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t j = 0; j < 8; ++j) {
                const std::size_t acted_col = flat_index(a, static_cast<std::size_t>(dp.idx[j]));
                const std::size_t plain_col = flat_index(a, j);
                for (std::size_t c = 0; c < m; ++c, ++row) {
                    sys.at(row, cell(flat_index(c, 0), acted_col)) += dp.sign[j];
                    sys.at(row, cell(flat_index(c, jstar), plain_col)) -= cp_sign;
                }
            }
        }
    }
    return sys;
}

/// Dimension over the rationals of Hom_para(M, M') for the given chirality,
/// computed as a kernel dimension.  Always 8 * n * m.
[[nodiscard]] inline std::size_t para_linear_dimension(const ModuleShape& dom, const ModuleShape& cod,
                                                       Chirality chi) {
    const Matrix sys = para_linear_constraints(dom, cod, chi);
    return sys.cols() - rank(sys);
}

} // namespace octmod
