#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "octmod/bimodule.hpp"
#include "octmod/errors.hpp"
#include "octmod/functors.hpp"
#include "octmod/homalg.hpp"
#include "octmod/octonion.hpp"
#include "octmod/paralinear.hpp"
#include "octmod/report.hpp"
#include "octmod/rng.hpp"
#include "octmod/serialize.hpp"
#include "octmod/tensor.hpp"

namespace octmod {

/// Sampling context handed to each property trial.  All randomness flows
/// through `rng`, which the runner seeds deterministically per trial.
struct TrialCtx {
    Rng rng;
    int coeff_bound = 5;
    int max_rank = 2;

    [[nodiscard]] Rational rat() { return gen_rational(rng, coeff_bound); }
    [[nodiscard]] Octonion oct() { return gen_octonion(rng, coeff_bound); }
    [[nodiscard]] ModuleShape shape(bool allow_conjugated = true) {
        return gen_shape(rng, max_rank, allow_conjugated);
    }
    [[nodiscard]] Element elem(const ModuleShape& s) { return gen_element(rng, s, coeff_bound); }
    [[nodiscard]] ParaLinearMap para(const ModuleShape& d, const ModuleShape& c,
                                     Chirality chi = Chirality::Left) {
        return gen_para_linear(rng, d, c, chi, coeff_bound);
    }
    [[nodiscard]] ParaLinearMap olin(const ModuleShape& d, const ModuleShape& c,
                                     Chirality chi = Chirality::Left) {
        return gen_o_linear(rng, d, c, chi, coeff_bound);
    }
    [[nodiscard]] RealLinearMap real_map(const ModuleShape& d, const ModuleShape& c) {
        return RealLinearMap{d, c, gen_matrix(rng, c.real_dim(), d.real_dim(), coeff_bound)};
    }
};

/// One catalog entry: a named, randomized property.  `trial` runs a single
/// instance, returning true on success and filling `ce` with the offending
/// inputs otherwise.  Entries with `discovery` set record claims that exact
/// arithmetic refutes; their failures report as discovery-fail and do not
/// count as hard failures.
struct IdentityCheck {
    std::string name;
    std::string statement;
    bool discovery = false;
    std::function<bool(TrialCtx&, nlohmann::json&)> trial;
};

namespace checks_detail {

/// Same coordinates, different housing.  Transports an element between a
/// module and its conjugate (or any equal-rank shape) without touching data.
[[nodiscard]] inline Element rehouse(const Element& x, const ModuleShape& s) {
    if (x.shape.rank != s.rank) throw ShapeError("rehouse: rank mismatch");
    return Element(s, x.coords);
}

/// The real-component map of f applied to x, housed as a real element of the
/// codomain: row c holds Re of the c-th output coordinate.
[[nodiscard]] inline Element apply_re(const ParaLinearMap& f, const Element& x) {
    x.require_shape(f.dom);
    const Vec v = f.re_matrix.apply(flatten(x));
    Element out(f.cod);
    for (std::size_t c = 0; c < v.size(); ++c) out.coords[c][0] = v[c];
    return out;
}

/// Applies a packed (8m x n) matrix, the format used by ext, to a real
/// element: column a is the image of the a-th real basis vector.
[[nodiscard]] inline Element apply_packed(const Matrix& packed, const Element& x_real,
                                          const ModuleShape& cod) {
    Vec v(x_real.shape.rank);
    for (std::size_t a = 0; a < v.size(); ++a) v[a] = x_real.coords[a][0];
    return unflatten(cod, packed.apply(v));
}

[[nodiscard]] inline Octonion scalar_oct(const Rational& v) {
    Octonion s;
    s[0] = v;
    return s;
}

/// p^k with p^0 = 1.  Powers of one octonion live in a commutative
/// associative subalgebra, so the bracketing is immaterial.
[[nodiscard]] inline Octonion oct_pow(const Octonion& p, int k) {
    Octonion acc = Octonion::basis(0);
    for (int i = 0; i < k; ++i) acc = acc * p;
    return acc;
}

[[nodiscard]] inline nlohmann::json real_map_json(const RealLinearMap& f) {
    return {{"dom", to_json(f.dom)}, {"cod", to_json(f.cod)}, {"mat", to_json(f.mat)}};
}

[[nodiscard]] inline bool is_zero_para(const ParaLinearMap& f) {
    return f.re_matrix.is_zero_matrix();
}

} // namespace checks_detail

/// The identity catalog.  Every algebraic law the library exposes is encoded
/// here once, as an executable property over exact rational inputs.
[[nodiscard]] inline const std::vector<IdentityCheck>& identity_catalog() {
    using checks_detail::apply_packed;
    using checks_detail::apply_re;
    using checks_detail::is_zero_para;
    using checks_detail::oct_pow;
    using checks_detail::real_map_json;
    using checks_detail::rehouse;
    using checks_detail::scalar_oct;
    using J = nlohmann::json;

    static const std::vector<IdentityCheck> catalog = [] {
        std::vector<IdentityCheck> cat;
        const auto add = [&cat](std::string name, std::string statement,
                                std::function<bool(TrialCtx&, J&)> fn) {
            cat.push_back({std::move(name), std::move(statement), false, std::move(fn)});
        };
        const auto add_discovery = [&cat](std::string name, std::string statement,
                                          std::function<bool(TrialCtx&, J&)> fn) {
            cat.push_back({std::move(name), std::move(statement), true, std::move(fn)});
        };

        // ---------------------------------------------------------------
        // Octonion algebra
        // ---------------------------------------------------------------

        add("octonion_alternative",
            "x(xy) = (xx)y, (yx)x = y(xx), and x(yx) = (xy)x",
            [](TrialCtx& t, J& ce) {
                const Octonion x = t.oct(), y = t.oct();
                const bool ok = x * (x * y) == (x * x) * y && (y * x) * x == y * (x * x) &&
                                x * (y * x) == (x * y) * x;
                if (!ok) ce = {{"x", to_json(x)}, {"y", to_json(y)}};
                return ok;
            });

        add("octonion_norm_composition",
            "N(xy) = N(x) N(y) for the quadratic norm",
            [](TrialCtx& t, J& ce) {
                const Octonion x = t.oct(), y = t.oct();
                const bool ok = norm_sq(x * y) == norm_sq(x) * norm_sq(y);
                if (!ok) ce = {{"x", to_json(x)}, {"y", to_json(y)}};
                return ok;
            });

        add("octonion_conj_antiautomorphism",
            "conj(xy) = conj(y) conj(x) and Re(xy) = Re(yx)",
            [](TrialCtx& t, J& ce) {
                const Octonion x = t.oct(), y = t.oct();
                const bool ok = conj(x * y) == conj(y) * conj(x) && re(x * y) == re(y * x);
                if (!ok) ce = {{"x", to_json(x)}, {"y", to_json(y)}};
                return ok;
            });

        add("octonion_associator_antisymmetry",
            "[x,y,z] changes sign under transpositions and is fixed by 3-cycles",
            [](TrialCtx& t, J& ce) {
                const Octonion x = t.oct(), y = t.oct(), z = t.oct();
                const Octonion s = associator(x, y, z);
                const bool ok = associator(y, x, z) == -s && associator(x, z, y) == -s &&
                                associator(z, y, x) == -s && associator(y, z, x) == s &&
                                associator(z, x, y) == s;
                if (!ok) ce = {{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}};
                return ok;
            });

        add("octonion_conj_identities",
            "x + conj(x) = 2 Re(x) and x conj(x) = N(x)",
            [](TrialCtx& t, J& ce) {
                const Octonion x = t.oct();
                const bool ok = x + conj(x) == scalar_oct(2 * re(x)) &&
                                x * conj(x) == scalar_oct(norm_sq(x));
                if (!ok) ce = {{"x", to_json(x)}};
                return ok;
            });

        // ---------------------------------------------------------------
        // Bimodules and the real-part projection
        // ---------------------------------------------------------------

        add("bimodule_axioms",
            "unit acts trivially; p(px) = (pp)x and (xp)p = x(pp); the three "
            "module associators agree up to cyclic order",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape();
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const Octonion one = Octonion::basis(0);
                const Element a1 = module_associator(p, q, x);
                const Element a2 = module_associator_right(x, p, q);
                const Element a3 = module_associator_mixed(q, x, p);
                const bool ok = left_act(one, x) == x && right_act(x, one) == x &&
                                left_act(p, left_act(p, x)) == left_act(p * p, x) &&
                                right_act(right_act(x, p), p) == right_act(x, p * p) &&
                                a1 == a2 && a2 == a3;
                if (!ok) ce = {{"shape", to_json(s)}, {"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}};
                return ok;
            });

        add("re_projection_formula",
            "Re is idempotent and equals (5/12) x - (1/12) sum_{i>0} e_i x e_i",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape();
                const Element x = t.elem(s);
                const Element r = re_project(x);
                Element acc = Rational(5, 12) * x;
                for (int i = 1; i < 8; ++i) {
                    const Octonion ei = Octonion::basis(i);
                    acc -= Rational(1, 12) * left_act(ei, right_act(x, ei));
                }
                const bool ok = re_project(r) == r && acc == r;
                if (!ok) ce = {{"shape", to_json(s)}, {"x", to_json(x)}};
                return ok;
            });

        add("re_scalar_rule",
            "Re(p x) = Re(x p) = Re(p) x for real x",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape();
                const Element rx = re_project(t.elem(s));
                const Octonion p = t.oct();
                const Element want = re(p) * rx;
                const bool ok = re_project(left_act(p, rx)) == want &&
                                re_project(right_act(rx, p)) == want;
                if (!ok) ce = {{"shape", to_json(s)}, {"p", to_json(p)}, {"x", to_json(rx)}};
                return ok;
            });

        add("re_kills_associator_commutator",
            "Re vanishes on module associators and commutators",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape();
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const bool ok = re_project(module_associator(p, q, x)).is_zero() &&
                                re_project(module_associator_mixed(p, x, q)).is_zero() &&
                                re_project(module_associator_right(x, p, q)).is_zero() &&
                                re_project(module_commutator(p, x)).is_zero();
                if (!ok) ce = {{"shape", to_json(s)}, {"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}};
                return ok;
            });

        add("re_center",
            "real elements commute with every scalar: p x = x p for x in Re M",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape();
                const Element rx = re_project(t.elem(s));
                const Octonion p = t.oct();
                const bool ok = left_act(p, rx) == right_act(rx, p);
                if (!ok) ce = {{"shape", to_json(s)}, {"p", to_json(p)}, {"x", to_json(rx)}};
                return ok;
            });

        add("polarization_identity",
            "x = sum_i e_i x_i with x_i = Re(conj(e_i) x), all x_i real",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape();
                const Element x = t.elem(s);
                const std::array<Element, 8> comps = polarize(x);
                Element acc(s);
                bool real_ok = true;
                for (int i = 0; i < 8; ++i) {
                    const Element& xi = comps[static_cast<std::size_t>(i)];
                    real_ok = real_ok && re_project(xi) == xi &&
                              xi == re_project(left_act(conj(Octonion::basis(i)), x));
                    acc += left_act(Octonion::basis(i), xi);
                }
                const bool ok = real_ok && acc == x;
                if (!ok) ce = {{"shape", to_json(s)}, {"x", to_json(x)}};
                return ok;
            });

        add("conjugate_module_convention",
            "on the conjugate module, p . x = x conj(p) and x . p = conj(p) x",
            [](TrialCtx& t, J& ce) {
                const std::size_t n = 1 + t.rng.next_int(0, t.max_rank - 1);
                const ModuleShape s{n, false};
                const ModuleShape cs = s.conjugate();
                const Element xc = t.elem(cs);
                const Element xs = rehouse(xc, s);
                const Octonion p = t.oct();
                const bool ok = rehouse(left_act(p, xc), s) == right_act(xs, conj(p)) &&
                                rehouse(right_act(xc, p), s) == left_act(conj(p), xs);
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(xc)}};
                return ok;
            });

        // ---------------------------------------------------------------
        // Second associators of real-linear maps
        // ---------------------------------------------------------------

        add("second_assoc_real_scalar_vanishes",
            "A_a(x, f) = 0 and B_a(f, x) = 0 for real scalars a",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion a = scalar_oct(t.rat());
                const bool ok = second_associator_left(a, x, f).is_zero() &&
                                second_associator_right(a, f, x).is_zero();
                if (!ok) ce = {{"a", to_json(a)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("second_assoc_conjugate_flip",
            "A_conj(p) = -A_p and B_conj(p) = -B_p",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                const bool ok =
                    second_associator_left(conj(p), x, f) == -second_associator_left(p, x, f) &&
                    second_associator_right(conj(p), f, x) == -second_associator_right(p, f, x);
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("second_assoc_product_rule_left",
            "A_{pq}(x,f) = f([p,q,x]) - [p,q,f(x)] + p A_q(x,f) + A_p(qx,f)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const Element lhs = second_associator_left(p * q, x, f);
                const Element rhs = apply(f, module_associator(p, q, x)) -
                                    module_associator(p, q, apply(f, x)) +
                                    left_act(p, second_associator_left(q, x, f)) +
                                    second_associator_left(p, left_act(q, x), f);
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("second_assoc_product_rule_right",
            "B_{pq}(f,x) = f([x,p,q]) - [f(x),p,q] + B_p(f,x) q + B_q(f,xp)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const Element lhs = second_associator_right(p * q, f, x);
                const Element rhs = apply(f, module_associator_right(x, p, q)) -
                                    module_associator_right(apply(f, x), p, q) +
                                    right_act(second_associator_right(p, f, x), q) +
                                    second_associator_right(q, f, right_act(x, p));
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("second_assoc_square_rule",
            "A_{pp}(x,f) = p A_p(x,f) + A_p(px,f)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                const bool ok = second_associator_left(p * p, x, f) ==
                                left_act(p, second_associator_left(p, x, f)) +
                                    second_associator_left(p, left_act(p, x), f);
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("second_assoc_conjugate_shift",
            "A_p(conj(p) x, f) = p A_p(x,f) and A_p(px,f) = conj(p) A_p(x,f)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                const Element a = second_associator_left(p, x, f);
                const bool ok =
                    second_associator_left(p, left_act(conj(p), x), f) == left_act(p, a) &&
                    second_associator_left(p, left_act(p, x), f) == left_act(conj(p), a);
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("second_assoc_conjugate_power",
            "A_p(conj(p)^k x, f) = p^k A_p(x,f) for k = 0..4",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                const Element a = second_associator_left(p, x, f);
                for (int k = 0; k <= 4; ++k) {
                    if (second_associator_left(p, left_act(oct_pow(conj(p), k), x), f) !=
                        left_act(oct_pow(p, k), a)) {
                        ce = {{"k", k}, {"p", to_json(p)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                        return false;
                    }
                }
                return true;
            });

        add("second_assoc_power_recursion",
            "A_{p^{k+1}}(x,f) = p A_{p^k}(x,f) + conj(p)^k A_p(x,f) for k = 1..4",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                for (int k = 1; k <= 4; ++k) {
                    const Element lhs = second_associator_left(oct_pow(p, k + 1), x, f);
                    const Element rhs =
                        left_act(p, second_associator_left(oct_pow(p, k), x, f)) +
                        left_act(oct_pow(conj(p), k), second_associator_left(p, x, f));
                    if (lhs != rhs) {
                        ce = {{"k", k}, {"p", to_json(p)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                        return false;
                    }
                }
                return true;
            });

        // ---------------------------------------------------------------
        // Para-linear maps: canonical form and defining properties
        // ---------------------------------------------------------------

        add("para_vanishes_on_real",
            "A_p(x, f) = 0 on real x for left maps; B_p(f, x) = 0 for right maps",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c, Chirality::Left);
                const ParaLinearMap g = t.para(s, c, Chirality::Right);
                const Element rx = re_project(t.elem(s));
                const Octonion p = t.oct();
                const bool ok = second_associator_left(p, rx, f).is_zero() &&
                                second_associator_right(p, g, rx).is_zero();
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(rx)}};
                return ok;
            });

        add("para_flex_relation",
            "p A_p(x,f) = A_p(x,f) conj(p) for left para-linear f",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                const Element a = second_associator_left(p, x, f);
                const bool ok = left_act(p, a) == right_act(a, conj(p));
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        add("para_re_antisymmetry",
            "Re(A_p(x,f) q) = -Re(A_q(x,f) p) for left para-linear f",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const bool ok =
                    re_project(right_act(second_associator_left(p, x, f), q)) ==
                    -re_project(right_act(second_associator_left(q, x, f), p));
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        add("para_re_left_associator",
            "Re f([p,q,x]) = Re(A_p(x,f) q) for left para-linear f",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const bool ok = re_project(eval(f, module_associator(p, q, x))) ==
                                re_project(right_act(second_associator_left(p, x, f), q));
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        add("para_re_middle_associator",
            "Re f([p,x,q]) = Re(p A_q(x,f)) for left para-linear f",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const bool ok = re_project(eval(f, module_associator_mixed(p, x, q))) ==
                                re_project(left_act(p, second_associator_left(q, x, f)));
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        add("para_shift_by_own_scalar",
            "A_r(xr,f) = r A_r(x,f) = A_r(x,f) conj(r) for left para-linear f",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const Element x = t.elem(s);
                const Octonion r = t.oct();
                const Element shifted = second_associator_left(r, right_act(x, r), f);
                const Element a = second_associator_left(r, x, f);
                const bool ok = shifted == left_act(r, a) && shifted == right_act(a, conj(r));
                if (!ok) ce = {{"r", to_json(r)}, {"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        add("para_reconstruction",
            "f(x) = sum_i e_i f_R(conj(e_i) x) for left maps and "
            "f(x) = sum_i f_R(x conj(e_i)) e_i for right maps",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const Element x = t.elem(s);
                const ParaLinearMap f = t.para(s, c, Chirality::Left);
                const ParaLinearMap g = t.para(s, c, Chirality::Right);
                Element accf(c), accg(c);
                for (int i = 0; i < 8; ++i) {
                    const Octonion ei = Octonion::basis(i);
                    accf += left_act(ei, apply_re(f, left_act(conj(ei), x)));
                    accg += right_act(apply_re(g, right_act(x, conj(ei))), ei);
                }
                const bool ok = accf == eval(f, x) && accg == eval(g, x);
                if (!ok) ce = {{"x", to_json(x)}, {"f", to_json(f)}, {"g", to_json(g)}};
                return ok;
            });

        add("second_assoc_re_formula_left",
            "A_p(x,f) = sum_{i>0} e_i f_R([e_i,p,x]) for left para-linear f",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                Element acc(c);
                for (int i = 1; i < 8; ++i) {
                    const Octonion ei = Octonion::basis(i);
                    acc += left_act(ei, apply_re(f, module_associator(ei, p, x)));
                }
                const bool ok = acc == second_associator_left(p, x, f);
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        add("second_assoc_re_formula_right",
            "B_p(f,x) = sum_{i>0} f_R([x,p,e_i]) e_i for right para-linear f",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c, Chirality::Right);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                Element acc(c);
                for (int i = 1; i < 8; ++i) {
                    const Octonion ei = Octonion::basis(i);
                    acc += right_act(apply_re(f, module_associator_right(x, p, ei)), ei);
                }
                const bool ok = acc == second_associator_right(p, f, x);
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        add("ext_second_assoc_formula",
            "A_p(x, ext g) = sum_{i>0} [p, e_i, g(x_i)] over the components of x",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const Matrix packed = gen_matrix(t.rng, c.real_dim(), s.rank, t.coeff_bound);
                const ParaLinearMap g = ext(packed, s, c, Chirality::Left);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                const std::array<Element, 8> comps = polarize(x);
                Element acc(c);
                for (int i = 1; i < 8; ++i) {
                    const Element gi = apply_packed(packed, comps[static_cast<std::size_t>(i)], c);
                    acc += module_associator(p, Octonion::basis(i), gi);
                }
                const bool ok = acc == second_associator_left(p, x, g);
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(x)}, {"g", to_json(g)}};
                return ok;
            });

        add("canonical_real_roundtrip",
            "to_real_linear followed by from_real_linear is the identity, and "
            "the assembled map passes the para-linearity test",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const Chirality chi = (t.rng.next_int(0, 1) == 0) ? Chirality::Left : Chirality::Right;
                const ParaLinearMap f = t.para(s, c, chi);
                const RealLinearMap g = to_real_linear(f);
                const bool ok = is_para_linear(g, chi, nullptr) && from_real_linear(g, chi) == f;
                if (!ok) ce = {{"f", to_json(f)}};
                return ok;
            });

        add("para_determined_by_real_restriction",
            "a para-linear map is rebuilt from its values on real points and "
            "from its real components; a zero in either data set forces the "
            "zero map",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const Chirality chi = (t.rng.next_int(0, 1) == 0) ? Chirality::Left : Chirality::Right;
                const ParaLinearMap f = t.para(s, c, chi);
                const ParaLinearMap zero = zero_para(chi, s, c);
                const bool ok = ext(re_upper_star(f), s, c, chi) == f &&
                                lift(re_star(f), chi) == f &&
                                ext(Matrix(c.real_dim(), s.rank), s, c, chi) == zero &&
                                lift(Matrix(c.rank, s.real_dim()), s, c, chi) == zero;
                if (!ok) ce = {{"f", to_json(f)}};
                return ok;
            });

        add("lift_round_trip",
            "lift inverts Re composition: lift(re_star f) = f and re_star(lift m) has re rows m",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const Chirality chi = (t.rng.next_int(0, 1) == 0) ? Chirality::Left : Chirality::Right;
                const ParaLinearMap f = t.para(s, c, chi);
                const Matrix m = gen_matrix(t.rng, c.rank, s.real_dim(), t.coeff_bound);
                const ParaLinearMap lifted = lift(m, s, c, chi);
                const bool ok = lift(re_star(f), chi) == f && lifted.re_matrix == m &&
                                lift(re_star(lifted), chi) == lifted;
                if (!ok) ce = {{"f", to_json(f)}};
                return ok;
            });

        add("ext_round_trip",
            "ext inverts restriction to the real basis, in both directions",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const Chirality chi = (t.rng.next_int(0, 1) == 0) ? Chirality::Left : Chirality::Right;
                const Matrix packed = gen_matrix(t.rng, c.real_dim(), s.rank, t.coeff_bound);
                const ParaLinearMap g = ext(packed, s, c, chi);
                const bool ok = re_upper_star(g) == packed &&
                                ext(re_upper_star(g), s, c, chi) == g;
                if (!ok) ce = {{"g", to_json(g)}};
                return ok;
            });

        add("para_dimension_matches",
            "the solution space of the defining constraints has dimension 8 n m",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const Chirality chi = (t.rng.next_int(0, 1) == 0) ? Chirality::Left : Chirality::Right;
                const std::size_t d = para_linear_dimension(s, c, chi);
                const bool ok = d == 8 * s.rank * c.rank;
                if (!ok) ce = {{"dom", to_json(s)}, {"cod", to_json(c)}, {"dim", d}};
                return ok;
            });

        // ---------------------------------------------------------------
        // The scalar actions on maps and the Hom module
        // ---------------------------------------------------------------

        add("odot_definitions_pointwise",
            "(f . r)(x) = f(x) r - A_r(x,f) and (r . f)(x) = f(xr) + A_r(x,f)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion r = t.oct();
                const Element a = second_associator_left(r, x, f);
                const bool ok =
                    apply(odot_right(f, r, Chirality::Left), x) == right_act(apply(f, x), r) - a &&
                    apply(odot_left(r, f, Chirality::Left), x) == apply(f, right_act(x, r)) + a;
                if (!ok) ce = {{"r", to_json(r)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add_discovery("odot_intro_duplicate_rhs",
            "recorded claim (f . r)(x) = f(xr) + A_r(x,f), which duplicates the "
            "other action; refuted by exact arithmetic",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion r = t.oct();
                const Element lhs = apply(odot_right(f, r, Chirality::Left), x);
                const Element rhs =
                    apply(f, right_act(x, r)) + second_associator_left(r, x, f);
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"r", to_json(r)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("odot_right_second_assoc_expansion",
            "A_p(x, f . r) = [p, f(x), r] + A_p(x,f) r - A_r(px,f) + p A_r(x,f)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), r = t.oct();
                const Element lhs =
                    second_associator_left(p, x, odot_right(f, r, Chirality::Left));
                const Element rhs = module_associator_mixed(p, apply(f, x), r) +
                                    right_act(second_associator_left(p, x, f), r) -
                                    second_associator_left(r, left_act(p, x), f) +
                                    left_act(p, second_associator_left(r, x, f));
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"r", to_json(r)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("odot_right_map_associator_expansion",
            "((f.p).q - f.(pq))(x) = [f(x),p,q] - A_p(x,f) q - A_q(x, f.p) + A_{pq}(x,f)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const RealLinearMap fp = odot_right(f, p, Chirality::Left);
                const Element lhs = apply(odot_right(fp, q, Chirality::Left), x) -
                                    apply(odot_right(f, p * q, Chirality::Left), x);
                const Element rhs = module_associator_right(apply(f, x), p, q) -
                                    right_act(second_associator_left(p, x, f), q) -
                                    second_associator_left(q, x, fp) +
                                    second_associator_left(p * q, x, f);
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("odot_left_second_assoc_expansion",
            "A_p(x, r . f) = f([p,x,r]) + A_p(xr,f) + A_r(px,f) - p A_r(x,f)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), r = t.oct();
                const Element lhs =
                    second_associator_left(p, x, odot_left(r, f, Chirality::Left));
                const Element rhs = apply(f, module_associator_mixed(p, x, r)) +
                                    second_associator_left(p, right_act(x, r), f) +
                                    second_associator_left(r, left_act(p, x), f) -
                                    left_act(p, second_associator_left(r, x, f));
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"r", to_json(r)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("odot_left_map_associator_expansion",
            "((pq).f - p.(q.f))(x) = A_{pq}(x,f) - A_q(xp,f) - A_p(x, q.f) - f([x,p,q])",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const RealLinearMap qf = odot_left(q, f, Chirality::Left);
                const Element lhs = apply(odot_left(p * q, f, Chirality::Left), x) -
                                    apply(odot_left(p, qf, Chirality::Left), x);
                const Element rhs = second_associator_left(p * q, x, f) -
                                    second_associator_left(q, right_act(x, p), f) -
                                    second_associator_left(p, x, qf) -
                                    apply(f, module_associator_right(x, p, q));
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add_discovery("odot_left_right_expansion_printed",
            "recorded expansion B_p(r.f, x) = [r,f(x),p] + r B_p(f,x) with the "
            "two B_r terms cancelling; refuted by exact arithmetic",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), r = t.oct();
                const Element lhs =
                    second_associator_right(p, odot_left(r, f, Chirality::Right), x);
                const Element rhs = module_associator_mixed(r, apply(f, x), p) +
                                    left_act(r, second_associator_right(p, f, x));
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"r", to_json(r)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("odot_left_right_expansion",
            "B_p(r.f, x) = [r,f(x),p] + r B_p(f,x) + B_r(f,x) p - B_r(f, xp)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), r = t.oct();
                const Element lhs =
                    second_associator_right(p, odot_left(r, f, Chirality::Right), x);
                const Element rhs = module_associator_mixed(r, apply(f, x), p) +
                                    left_act(r, second_associator_right(p, f, x)) +
                                    right_act(second_associator_right(r, f, x), p) -
                                    second_associator_right(r, f, right_act(x, p));
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"r", to_json(r)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("odot_left_right_map_associator",
            "((pq).f - p.(q.f))(x) = B_{pq}(f,x) - p B_q(f,x) - B_p(q.f, x) + [p,q,f(x)]",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const RealLinearMap qf = odot_left(q, f, Chirality::Right);
                const Element lhs = apply(odot_left(p * q, f, Chirality::Right), x) -
                                    apply(odot_left(p, qf, Chirality::Right), x);
                const Element rhs = second_associator_right(p * q, f, x) -
                                    left_act(p, second_associator_right(q, f, x)) -
                                    second_associator_right(p, qf, x) +
                                    module_associator(p, q, apply(f, x));
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("odot_right_right_expansion",
            "B_p(f.r, x) = f([r,x,p]) - B_r(f,x) p + B_p(f, rx) + B_r(f, xp)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), r = t.oct();
                const Element lhs =
                    second_associator_right(p, odot_right(f, r, Chirality::Right), x);
                const Element rhs = apply(f, module_associator_mixed(r, x, p)) -
                                    right_act(second_associator_right(r, f, x), p) +
                                    second_associator_right(p, f, left_act(r, x)) +
                                    second_associator_right(r, f, right_act(x, p));
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"r", to_json(r)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add_discovery("odot_right_right_map_associator_printed",
            "recorded expansion of (f.p).q - f.(pq) ending in +f([p,q,x]); "
            "exact arithmetic flips that sign",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const RealLinearMap fp = odot_right(f, p, Chirality::Right);
                const Element lhs = apply(odot_right(fp, q, Chirality::Right), x) -
                                    apply(odot_right(f, p * q, Chirality::Right), x);
                const Element rhs = second_associator_right(p * q, f, x) -
                                    second_associator_right(q, fp, x) -
                                    second_associator_right(p, f, left_act(q, x)) +
                                    apply(f, module_associator(p, q, x));
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("odot_right_right_map_associator",
            "((f.p).q - f.(pq))(x) = B_{pq}(f,x) - B_q(f.p, x) - B_p(f, qx) - f([p,q,x])",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const RealLinearMap fp = odot_right(f, p, Chirality::Right);
                const Element lhs = apply(odot_right(fp, q, Chirality::Right), x) -
                                    apply(odot_right(f, p * q, Chirality::Right), x);
                const Element rhs = second_associator_right(p * q, f, x) -
                                    second_associator_right(q, fp, x) -
                                    second_associator_right(p, f, left_act(q, x)) -
                                    apply(f, module_associator(p, q, x));
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("odot_mixed_associator_left_form",
            "((q.f).p - q.(f.p))(x) = A_q(x,f) p - A_p(x, q.f) + A_p(xq,f) - A_q(x, f.p)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const RealLinearMap qf = odot_left(q, f, Chirality::Left);
                const RealLinearMap fp = odot_right(f, p, Chirality::Left);
                const Element lhs = apply(odot_right(qf, p, Chirality::Left), x) -
                                    apply(odot_left(q, fp, Chirality::Left), x);
                const Element rhs = right_act(second_associator_left(q, x, f), p) -
                                    second_associator_left(p, x, qf) +
                                    second_associator_left(p, right_act(x, q), f) -
                                    second_associator_left(q, x, fp);
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("odot_mixed_associator_right_form",
            "((q.f).p - q.(f.p))(x) = q B_p(f,x) - B_p(q.f, x) + B_q(f, px) - B_q(f.p, x)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct(), q = t.oct();
                const RealLinearMap qf = odot_left(q, f, Chirality::Right);
                const RealLinearMap fp = odot_right(f, p, Chirality::Right);
                const Element lhs = apply(odot_right(qf, p, Chirality::Right), x) -
                                    apply(odot_left(q, fp, Chirality::Right), x);
                const Element rhs = left_act(q, second_associator_right(p, f, x)) -
                                    second_associator_right(p, qf, x) +
                                    second_associator_right(q, f, left_act(p, x)) -
                                    second_associator_right(q, fp, x);
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"x", to_json(x)}, {"f", real_map_json(f)}};
                return ok;
            });

        add("hom_module_square_laws",
            "(f . r) . r = f . (rr) and r . (r . f) = (rr) . f for para-linear f",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const Octonion r = t.oct();
                const bool ok =
                    odot_right(odot_right(f, r), r) == odot_right(f, r * r) &&
                    odot_left(r, odot_left(r, f)) == odot_left(r * r, f);
                if (!ok) ce = {{"r", to_json(r)}, {"f", to_json(f)}};
                return ok;
            });

        add("odot_square_law_fails_without_para",
            "without para-linearity the scalar action is not quadratic: the "
            "map sending the e2 component to e1 breaks (f . e1) . e1 = f . e1^2",
            [](TrialCtx&, J& ce) {
                const ModuleShape o{1, false};
                Matrix mat(8, 8);
                mat.at(1, 2) = 1;
                const RealLinearMap f{o, o, mat};
                const Octonion r = Octonion::basis(1);
                const RealLinearMap twice =
                    odot_right(odot_right(f, r, Chirality::Left), r, Chirality::Left);
                const RealLinearMap once = odot_right(f, r * r, Chirality::Left);
                const bool ok = !(twice == once);
                if (!ok) ce = {{"note", "square law held for a non-para map"}};
                return ok;
            });

        add("hom_module_associator_symmetry",
            "on para-linear maps the three map-level associators agree up to "
            "cyclic order",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const Octonion p = t.oct(), q = t.oct();
                const ParaLinearMap a1 =
                    odot_left(p * q, f) - odot_left(p, odot_left(q, f));
                const ParaLinearMap a2 =
                    odot_right(odot_left(q, f), p) - odot_left(q, odot_right(f, p));
                const ParaLinearMap a3 =
                    odot_right(odot_right(f, p), q) - odot_right(f, p * q);
                const bool ok = a1 == a2 && a2 == a3;
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"f", to_json(f)}};
                return ok;
            });

        add("re_of_map_projection",
            "Re on maps is idempotent, lands in module homomorphisms, and "
            "fixes them",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const ParaLinearMap g = t.olin(s, c);
                const ParaLinearMap rf = re_of_map(f);
                const bool ok = re_of_map(rf) == rf && is_o_linear(rf) && re_of_map(g) == g;
                if (!ok) ce = {{"f", to_json(f)}};
                return ok;
            });

        add("re_of_map_odot_stack",
            "Re f = (5/12) f - (1/12) sum_{i>0} e_i . (f . e_i)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                ParaLinearMap acc = Rational(5, 12) * f;
                for (int i = 1; i < 8; ++i) {
                    const Octonion ei = Octonion::basis(i);
                    acc = acc - Rational(1, 12) * odot_left(ei, odot_right(f, ei));
                }
                const bool ok = acc == re_of_map(f);
                if (!ok) ce = {{"f", to_json(f)}};
                return ok;
            });

        add("hom_component_decomposition",
            "f = sum_i e_i . f_(i) with components f_(i) = Re(conj(e_i) . f)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                ParaLinearMap acc = zero_para(f.chirality, s, c);
                for (int i = 0; i < 8; ++i) {
                    const Octonion ei = Octonion::basis(i);
                    acc = acc + odot_left(ei, re_of_map(odot_left(conj(ei), f)));
                }
                const bool ok = acc == f;
                if (!ok) ce = {{"f", to_json(f)}};
                return ok;
            });

        add("hom_component_right_action",
            "(e_i . f_(i))(x) = f_(i)(x) e_i for the homomorphism components",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const Element x = t.elem(s);
                const int i = t.rng.next_int(0, 7);
                const Octonion ei = Octonion::basis(i);
                const ParaLinearMap fi = re_of_map(odot_left(conj(ei), f));
                const bool ok = eval(odot_left(ei, fi), x) == right_act(eval(fi, x), ei);
                if (!ok) ce = {{"i", i}, {"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        // ---------------------------------------------------------------
        // Regular composition
        // ---------------------------------------------------------------

        add("compose_preserves_para",
            "the canonical composite evaluates as f(g(x)) plus the bracket, "
            "for para-linear f and both para-linear and plain real-linear g",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), mid = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(mid, c);
                const ParaLinearMap g = t.para(s, mid);
                const RealLinearMap gr = t.real_map(s, mid);
                const Element x = t.elem(s);
                const bool ok1 =
                    eval(regular_compose(f, g), x) ==
                    compose_eval_left(to_real_linear(f), to_real_linear(g), x);
                const bool ok2 = eval(regular_compose(f, gr), x) ==
                                 compose_eval_left(to_real_linear(f), gr, x);
                const bool ok = ok1 && ok2;
                if (!ok) ce = {{"x", to_json(x)}, {"f", to_json(f)}, {"g", to_json(g)}};
                return ok;
            });

        add("compose_second_assoc_expansion",
            "A_p(x, f # g) = A_p(g(x), f) + f(A_p(x,g)) + [f,g,px] - p [f,g,x]",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), mid = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(mid, c);
                const RealLinearMap g = t.real_map(s, mid);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                const Element lhs = compose_eval_left(f, g, left_act(p, x)) -
                                    left_act(p, compose_eval_left(f, g, x));
                const Element rhs = second_associator_left(p, apply(g, x), f) +
                                    apply(f, second_associator_left(p, x, g)) +
                                    bracket_left(f, g, left_act(p, x)) -
                                    left_act(p, bracket_left(f, g, x));
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(x)}};
                return ok;
            });

        add("compose_second_assoc_expansion_right",
            "B_p(f #r g, x) = B_p(f, g(x)) + f(B_p(g,x)) - [xp,f,g] + [x,f,g] p",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), mid = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(mid, c);
                const RealLinearMap g = t.real_map(s, mid);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                const Element lhs = right_act(compose_eval_right(f, g, x), p) -
                                    compose_eval_right(f, g, right_act(x, p));
                const Element rhs = second_associator_right(p, f, apply(g, x)) +
                                    apply(f, second_associator_right(p, g, x)) -
                                    bracket_right(right_act(x, p), f, g) +
                                    right_act(bracket_right(x, f, g), p);
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(x)}};
                return ok;
            });

        add("compose_collapse_when_olinear",
            "the composition bracket vanishes when g is a homomorphism, when "
            "x is real, or when f is a homomorphism",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), mid = t.shape(), c = t.shape();
                const int which = t.rng.next_int(0, 2);
                RealLinearMap f = t.real_map(mid, c);
                RealLinearMap g = t.real_map(s, mid);
                Element x = t.elem(s);
                if (which == 0) {
                    g = to_real_linear(t.olin(s, mid));
                } else if (which == 1) {
                    g = to_real_linear(t.para(s, mid));
                    x = re_project(x);
                } else {
                    f = to_real_linear(t.olin(mid, c));
                    g = to_real_linear(t.para(s, mid));
                }
                const bool ok = bracket_left(f, g, x).is_zero() &&
                                compose_eval_left(f, g, x) == apply(f, apply(g, x));
                if (!ok) ce = {{"case", which}, {"x", to_json(x)}};
                return ok;
            });

        add("map_associator_pointwise_expansion",
            "[f,g,h](x) + f([g,h,x]) = [f,g,h(x)] - [f, g#h, x] + [f#g, h, x]",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s0 = t.shape(), s1 = t.shape(), s2 = t.shape(), s3 = t.shape();
                const ParaLinearMap f = t.para(s2, s3);
                const ParaLinearMap g = t.para(s1, s2);
                const ParaLinearMap h = t.para(s0, s1);
                const Element x = t.elem(s0);
                const Element lhs =
                    eval(map_associator(f, g, h), x) + eval(f, bracket_left(g, h, x));
                const Element rhs = bracket_left(f, g, eval(h, x)) -
                                    bracket_left(f, regular_compose(g, h), x) +
                                    bracket_left(regular_compose(f, g), h, x);
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"x", to_json(x)}, {"f", to_json(f)}, {"g", to_json(g)}, {"h", to_json(h)}};
                return ok;
            });

        add("map_associator_re_vanishes",
            "the composition associator has zero real part: it kills real "
            "points up to imaginary values, and Re of the map is the zero map",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s0 = t.shape(), s1 = t.shape(), s2 = t.shape(), s3 = t.shape();
                const ParaLinearMap f = t.para(s2, s3);
                const ParaLinearMap g = t.para(s1, s2);
                const ParaLinearMap h = t.para(s0, s1);
                const ParaLinearMap a = map_associator(f, g, h);
                const Element rx = re_project(t.elem(s0));
                const bool ok = is_zero_para(re_of_map(a)) && re_project(eval(a, rx)).is_zero();
                if (!ok) ce = {{"f", to_json(f)}, {"g", to_json(g)}, {"h", to_json(h)}};
                return ok;
            });

        add("map_associator_olinear_vanishes",
            "the composition associator dies when any factor is a module "
            "homomorphism",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s0 = t.shape(), s1 = t.shape(), s2 = t.shape(), s3 = t.shape();
                const int slot = t.rng.next_int(0, 2);
                const ParaLinearMap f = (slot == 0) ? t.olin(s2, s3) : t.para(s2, s3);
                const ParaLinearMap g = (slot == 1) ? t.olin(s1, s2) : t.para(s1, s2);
                const ParaLinearMap h = (slot == 2) ? t.olin(s0, s1) : t.para(s0, s1);
                const bool ok = is_zero_para(map_associator(f, g, h));
                if (!ok) ce = {{"slot", slot}, {"f", to_json(f)}, {"g", to_json(g)}, {"h", to_json(h)}};
                return ok;
            });

        add("right_mult_bracket",
            "[R_p, f, x] = -A_p(x,f) and [f, R_p, x] = A_p(x,f)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                const Element a = second_associator_left(p, x, f);
                const bool ok =
                    bracket_left(right_mult_operator(p, c), f, x) == -a &&
                    bracket_left(f, right_mult_operator(p, s), x) == a;
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        add("right_mult_compose_odot",
            "R_p # f = f . p and f # R_p = p . f",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const Octonion p = t.oct();
                const bool ok =
                    regular_compose(right_mult_operator(p, c), f) == odot_right(f, p) &&
                    regular_compose(f, right_mult_operator(p, s)) == odot_left(p, f);
                if (!ok) ce = {{"p", to_json(p)}, {"f", to_json(f)}};
                return ok;
            });

        add("compose_order_oracle",
            "R_p # R_q = R_{qp} and R_q # R_p = R_{pq}",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape();
                const Octonion p = t.oct(), q = t.oct();
                const bool ok =
                    regular_compose(right_mult_operator(p, s), right_mult_operator(q, s)) ==
                        right_mult_operator(q * p, s) &&
                    regular_compose(right_mult_operator(q, s), right_mult_operator(p, s)) ==
                        right_mult_operator(p * q, s);
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"shape", to_json(s)}};
                return ok;
            });

        add_discovery("compose_order_intro_claim",
            "recorded claim R_p # R_q = R_{pq}; exact arithmetic shows the "
            "product reverses to R_{qp}",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape();
                const Octonion p = t.oct(), q = t.oct();
                const bool ok =
                    regular_compose(right_mult_operator(p, s), right_mult_operator(q, s)) ==
                    right_mult_operator(p * q, s);
                if (!ok) ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"shape", to_json(s)}};
                return ok;
            });

        add("olinear_odot_associative",
            "p . (q . f) = (pq) . f exactly when f is a module homomorphism",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap fo = t.olin(s, c);
                const Octonion p = t.oct(), q = t.oct();
                if (odot_left(p, odot_left(q, fo)) != odot_left(p * q, fo)) {
                    ce = {{"p", to_json(p)}, {"q", to_json(q)}, {"f", to_json(fo)}};
                    return false;
                }
                const ParaLinearMap fp = t.para(s, c);
                if (is_o_linear(fp)) return true;
                for (int i = 0; i < 8; ++i) {
                    for (int j = 0; j < 8; ++j) {
                        const Octonion ei = Octonion::basis(i), ej = Octonion::basis(j);
                        if (odot_left(ei, odot_left(ej, fp)) != odot_left(ei * ej, fp)) return true;
                    }
                }
                ce = {{"f", to_json(fp)}, {"note", "no basis pair separates a non-homomorphism"}};
                return false;
            });

        // ---------------------------------------------------------------
        // Conjugation and transposition of maps
        // ---------------------------------------------------------------

        add("conjugate_involution",
            "conjugating a map twice gives the map back",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const Chirality chi = (t.rng.next_int(0, 1) == 0) ? Chirality::Left : Chirality::Right;
                const ParaLinearMap f = t.para(s, c, chi);
                const bool ok = conjugate_functor(conjugate_functor(f)) == f;
                if (!ok) ce = {{"f", to_json(f)}};
                return ok;
            });

        add("conjugate_second_assoc_transport",
            "B_p(f, x) = A_p(x, f^C): right associators become left ones on "
            "the conjugate modules",
            [](TrialCtx& t, J& ce) {
                const std::size_t n = 1 + t.rng.next_int(0, t.max_rank - 1);
                const std::size_t m = 1 + t.rng.next_int(0, t.max_rank - 1);
                const ModuleShape s{n, false}, c{m, false};
                const ParaLinearMap f = t.para(s, c, Chirality::Right);
                const ParaLinearMap fc = conjugate_functor(f);
                const Element x = t.elem(s);
                const Octonion p = t.oct();
                const Element lhs = second_associator_right(p, f, x);
                const Element rhs =
                    rehouse(second_associator_left(p, rehouse(x, fc.dom), fc), c);
                const bool ok = lhs == rhs;
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        add("conjugate_scalar_transport",
            "f^C . r = (conj(r) . f)^C and r . f^C = (f . conj(r))^C",
            [](TrialCtx& t, J& ce) {
                const std::size_t n = 1 + t.rng.next_int(0, t.max_rank - 1);
                const std::size_t m = 1 + t.rng.next_int(0, t.max_rank - 1);
                const ModuleShape s{n, false}, c{m, false};
                const ParaLinearMap f = t.para(s, c, Chirality::Right);
                const ParaLinearMap fc = conjugate_functor(f);
                const Octonion r = t.oct();
                const bool ok =
                    odot_right(fc, r) == conjugate_functor(odot_left(conj(r), f)) &&
                    odot_left(r, fc) == conjugate_functor(odot_right(f, conj(r)));
                if (!ok) ce = {{"r", to_json(r)}, {"f", to_json(f)}};
                return ok;
            });

        add("conjugate_compose_transport",
            "(f # g)^C = f^C # g^C, and the right bracket matches the left "
            "bracket of the conjugated pair",
            [](TrialCtx& t, J& ce) {
                const std::size_t n0 = 1 + t.rng.next_int(0, t.max_rank - 1);
                const std::size_t n1 = 1 + t.rng.next_int(0, t.max_rank - 1);
                const std::size_t n2 = 1 + t.rng.next_int(0, t.max_rank - 1);
                const ModuleShape s{n0, false}, mid{n1, false}, c{n2, false};
                const ParaLinearMap f = t.para(mid, c, Chirality::Right);
                const ParaLinearMap g = t.para(s, mid, Chirality::Right);
                const Element x = t.elem(s);
                const bool ok1 = conjugate_functor(regular_compose(f, g)) ==
                                 regular_compose(conjugate_functor(f), conjugate_functor(g));
                const bool ok2 =
                    bracket_right(x, f, g) ==
                    rehouse(bracket_left(conjugate_functor(f), conjugate_functor(g),
                                         rehouse(x, s.conjugate())),
                            c);
                const bool ok = ok1 && ok2;
                if (!ok) ce = {{"x", to_json(x)}, {"f", to_json(f)}, {"g", to_json(g)}};
                return ok;
            });

        add("transpose_involution",
            "transposing twice gives the map back; transposition flips "
            "chirality and keeps the real components",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const ParaLinearMap ft = transpose(f);
                const bool ok = ft.chirality == Chirality::Right &&
                                ft.re_matrix == f.re_matrix && transpose(ft) == f;
                if (!ok) ce = {{"f", to_json(f)}};
                return ok;
            });

        add("transpose_preserves_re",
            "Re f(x) = Re f^T(x) pointwise",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const Element x = t.elem(s);
                const bool ok = re_project(eval(f, x)) == re_project(eval(transpose(f), x));
                if (!ok) ce = {{"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        add("transpose_odot_equivariance",
            "(e_i . f)^T = e_i . f^T on basis scalars",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.para(s, c);
                const int i = t.rng.next_int(0, 7);
                const Octonion ei = Octonion::basis(i);
                const bool ok = transpose(odot_left(ei, f)) == odot_left(ei, transpose(f));
                if (!ok) ce = {{"i", i}, {"f", to_json(f)}};
                return ok;
            });

        add("olinear_intersection",
            "a map agrees pointwise with its transpose exactly when it is a "
            "module homomorphism",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap fo = t.olin(s, c);
                const ParaLinearMap fot = transpose(fo);
                for (std::size_t a = 0; a < s.rank; ++a) {
                    for (int i = 0; i < 8; ++i) {
                        const Element b = basis_element(s, a, i);
                        if (eval(fo, b) != eval(fot, b)) {
                            ce = {{"f", to_json(fo)}, {"coord", a}, {"unit", i}};
                            return false;
                        }
                    }
                }
                const ParaLinearMap fp = t.para(s, c);
                if (is_o_linear(fp)) return true;
                const ParaLinearMap fpt = transpose(fp);
                for (std::size_t a = 0; a < s.rank; ++a) {
                    for (int i = 0; i < 8; ++i) {
                        const Element b = basis_element(s, a, i);
                        if (eval(fp, b) != eval(fpt, b)) return true;
                    }
                }
                ce = {{"f", to_json(fp)}, {"note", "transpose agrees with a non-homomorphism"}};
                return false;
            });

        // ---------------------------------------------------------------
        // Hom functors and the Hom-module isomorphism
        // ---------------------------------------------------------------

        add("hom_iso_roundtrip",
            "the free Hom model is an isomorphism in both directions",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const HomModuleIso h = hom_module(s, c, Chirality::Left);
                const ParaLinearMap f = t.para(s, c);
                const Element y = t.elem(h.hom_shape);
                const bool ok = h.backward(h.forward(f)) == f && h.forward(h.backward(y)) == y;
                if (!ok) ce = {{"f", to_json(f)}, {"y", to_json(y)}};
                return ok;
            });

        add("hom_iso_equivariance",
            "the Hom model intertwines both scalar actions: p . f maps to "
            "p (model f) and f . p to (model f) p",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const HomModuleIso h = hom_module(s, c, Chirality::Left);
                const ParaLinearMap f = t.para(s, c);
                const Octonion p = t.oct();
                const bool ok = h.forward(odot_left(p, f)) == left_act(p, h.forward(f)) &&
                                h.forward(odot_right(f, p)) == right_act(h.forward(f), p);
                if (!ok) ce = {{"p", to_json(p)}, {"f", to_json(f)}};
                return ok;
            });

        add("hom_functor_identity",
            "both Hom functors send identities to identities",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(), x = t.shape();
                const ParaLinearMap idx = identity_para(Chirality::Left, x);
                const ModuleShape hshape = hom_module(m, x, Chirality::Left).hom_shape;
                const bool ok =
                    hom_covariant(m, idx) == identity_para(Chirality::Left, hshape) &&
                    hom_contravariant(m, idx) == identity_para(Chirality::Right, hshape);
                if (!ok) ce = {{"m", to_json(m)}, {"x", to_json(x)}};
                return ok;
            });

        add("hom_covariant_composition",
            "post-composition is functorial for the regular product: "
            "T(f1 # f2) = T(f1) # T(f2)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(), x0 = t.shape(), x1 = t.shape(), x2 = t.shape();
                const ParaLinearMap f1 = t.para(x1, x2);
                const ParaLinearMap f2 = t.para(x0, x1);
                const bool ok = hom_covariant(m, regular_compose(f1, f2)) ==
                                regular_compose(hom_covariant(m, f1), hom_covariant(m, f2));
                if (!ok) ce = {{"f1", to_json(f1)}, {"f2", to_json(f2)}, {"m", to_json(m)}};
                return ok;
            });

        add("hom_covariant_scalar",
            "post-composition commutes with both scalar actions",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(), x0 = t.shape(), x1 = t.shape();
                const ParaLinearMap f = t.para(x0, x1);
                const Octonion p = t.oct();
                const bool ok =
                    hom_covariant(m, odot_left(p, f)) == odot_left(p, hom_covariant(m, f)) &&
                    hom_covariant(m, odot_right(f, p)) == odot_right(hom_covariant(m, f), p);
                if (!ok) ce = {{"p", to_json(p)}, {"f", to_json(f)}, {"m", to_json(m)}};
                return ok;
            });

        add("hom_contravariant_composition",
            "pre-composition is contravariantly functorial: "
            "S(f1 # f2) = S(f2) # S(f1)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(), x0 = t.shape(), x1 = t.shape(), x2 = t.shape();
                const ParaLinearMap f1 = t.para(x1, x2);
                const ParaLinearMap f2 = t.para(x0, x1);
                const bool ok = hom_contravariant(m, regular_compose(f1, f2)) ==
                                regular_compose(hom_contravariant(m, f2), hom_contravariant(m, f1));
                if (!ok) ce = {{"f1", to_json(f1)}, {"f2", to_json(f2)}, {"m", to_json(m)}};
                return ok;
            });

        add("hom_contravariant_scalar",
            "pre-composition commutes with both scalar actions",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(), x0 = t.shape(), x1 = t.shape();
                const ParaLinearMap f = t.para(x0, x1);
                const Octonion p = t.oct();
                const bool ok = hom_contravariant(m, odot_left(p, f)) ==
                                    odot_left(p, hom_contravariant(m, f)) &&
                                hom_contravariant(m, odot_right(f, p)) ==
                                    odot_right(hom_contravariant(m, f), p);
                if (!ok) ce = {{"p", to_json(p)}, {"f", to_json(f)}, {"m", to_json(m)}};
                return ok;
            });

        // ---------------------------------------------------------------
        // Tensor products
        // ---------------------------------------------------------------

        add("tensor_defect_formula",
            "mp (x) m' - m (x) pm' = sum_{i,j} (m_i (x) m'_j) [e_i, p, e_j]",
            [](TrialCtx& t, J& ce) {
                const ModuleShape l = t.shape(false), r = t.shape(false);
                const TensorModule tm = tensor_module(l, r);
                const Element m = t.elem(l), mp = t.elem(r);
                const Octonion p = t.oct();
                const Element direct = elementary_tensor(tm, right_act(m, p), mp) -
                                       elementary_tensor(tm, m, left_act(p, mp));
                const bool ok = direct == tensor_defect(tm, m, p, mp);
                if (!ok) ce = {{"p", to_json(p)}, {"m", to_json(m)}, {"mp", to_json(mp)}};
                return ok;
            });

        add("tensor_nuclear_transport",
            "a real entry in any slot makes the elementary tensor balanced "
            "and equivariant on that side",
            [](TrialCtx& t, J& ce) {
                const ModuleShape l = t.shape(false), r = t.shape(false);
                const TensorModule tm = tensor_module(l, r);
                Element m = t.elem(l), mp = t.elem(r);
                Octonion p = t.oct();
                const int slot = t.rng.next_int(0, 2);
                if (slot == 0) m = re_project(m);
                if (slot == 1) p = scalar_oct(t.rat());
                if (slot == 2) mp = re_project(mp);
                const Element base = elementary_tensor(tm, m, mp);
                const bool ok =
                    elementary_tensor(tm, right_act(m, p), mp) ==
                        elementary_tensor(tm, m, left_act(p, mp)) &&
                    elementary_tensor(tm, left_act(p, m), mp) == left_act(p, base) &&
                    elementary_tensor(tm, m, right_act(mp, p)) == right_act(base, p);
                if (!ok) ce = {{"slot", slot}, {"p", to_json(p)}, {"m", to_json(m)}, {"mp", to_json(mp)}};
                return ok;
            });

        add("tensor_re_subspace",
            "tensors of real elements are real",
            [](TrialCtx& t, J& ce) {
                const ModuleShape l = t.shape(false), r = t.shape(false);
                const TensorModule tm = tensor_module(l, r);
                const Element m = re_project(t.elem(l)), mp = re_project(t.elem(r));
                const Element et = elementary_tensor(tm, m, mp);
                const bool ok = re_project(et) == et;
                if (!ok) ce = {{"m", to_json(m)}, {"mp", to_json(mp)}};
                return ok;
            });

        add("tensor_induced_eval",
            "the induced map sends m (x) x to m (x) f(x) for real m when the "
            "output chirality matches the input; the chirality-swapping "
            "variants are the matched extensions of the transpose",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(false), x0 = t.shape(false), x1 = t.shape(false);
                const int v = t.rng.next_int(0, 3);
                const InducedVariant variant = static_cast<InducedVariant>(v);
                const bool left_input =
                    variant == InducedVariant::ll || variant == InducedVariant::lr;
                const bool left_output =
                    variant == InducedVariant::ll || variant == InducedVariant::rl;
                const ParaLinearMap f =
                    t.para(x0, x1, left_input ? Chirality::Left : Chirality::Right);
                const bool matched = left_input == left_output;
                const ParaLinearMap target = matched ? f : transpose(f);
                const TensorModule tdom = tensor_module(m, x0);
                const TensorModule tcod = tensor_module(m, x1);
                const Element mr = re_project(t.elem(m));
                const Element x = t.elem(x0);
                const ParaLinearMap ind = induced_map(m, f, variant);
                const Element lhs = eval(ind, elementary_tensor(tdom, mr, x));
                const Element rhs = elementary_tensor(tcod, mr, eval(target, x));
                bool ok = lhs == rhs;
                if (ok && !matched) {
                    const InducedVariant mv =
                        left_output ? InducedVariant::ll : InducedVariant::rr;
                    ok = ind == induced_map(m, target, mv);
                }
                if (!ok) ce = {{"variant", v}, {"m", to_json(mr)}, {"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        add("tensor_induced_functorial",
            "inducing on the second factor preserves identities and the "
            "regular product",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(false), x0 = t.shape(false), x1 = t.shape(false),
                                  x2 = t.shape(false);
                const ParaLinearMap f = t.para(x1, x2);
                const ParaLinearMap g = t.para(x0, x1);
                const TensorModule tm = tensor_module(m, x0);
                const bool ok =
                    induced_map(m, identity_para(Chirality::Left, x0), InducedVariant::ll) ==
                        identity_para(Chirality::Left, tm.shape) &&
                    induced_map(m, regular_compose(f, g), InducedVariant::ll) ==
                        regular_compose(induced_map(m, f, InducedVariant::ll),
                                        induced_map(m, g, InducedVariant::ll));
                if (!ok) ce = {{"f", to_json(f)}, {"g", to_json(g)}, {"m", to_json(m)}};
                return ok;
            });

        add("tensor_variant_duality_agreement",
            "right-output variants equal the direct right extension of the "
            "same real data",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(false), x0 = t.shape(false), x1 = t.shape(false);
                const bool from_left = t.rng.next_int(0, 1) == 0;
                const InducedVariant variant = from_left ? InducedVariant::lr : InducedVariant::rr;
                const ParaLinearMap f =
                    t.para(x0, x1, from_left ? Chirality::Left : Chirality::Right);
                const TensorModule tdom = tensor_module(m, x0);
                const TensorModule tcod = tensor_module(m, x1);
                Matrix packed(tcod.shape.real_dim(), tdom.shape.rank);
                for (std::size_t b = 0; b < x0.rank; ++b) {
                    const Element fx = eval(f, basis_element(x0, b, 0));
                    for (std::size_t a = 0; a < m.rank; ++a) {
                        const Element col = elementary_tensor(tcod, basis_element(m, a, 0), fx);
                        const Vec flat = flatten(col);
                        for (std::size_t rr = 0; rr < flat.size(); ++rr) {
                            packed.at(rr, tdom.pair_index(a, b)) = flat[rr];
                        }
                    }
                }
                const bool ok = induced_map(m, f, variant) ==
                                ext(packed, tdom.shape, tcod.shape, Chirality::Right);
                if (!ok) ce = {{"variant", from_left ? "lr" : "rr"}, {"f", to_json(f)}};
                return ok;
            });

        // ---------------------------------------------------------------
        // Weak functors, the enveloping decomposition, exactness
        // ---------------------------------------------------------------

        add("iota_weak_olinear",
            "the underlying-map assignment respects composition when either "
            "factor is a module homomorphism",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), mid = t.shape(), c = t.shape();
                const bool first = t.rng.next_int(0, 1) == 0;
                const ParaLinearMap f = first ? t.olin(mid, c) : t.para(mid, c);
                const ParaLinearMap g = first ? t.para(s, mid) : t.olin(s, mid);
                const bool ok = underlying_compose_defect(f, g).is_zero_matrix();
                if (!ok) ce = {{"f", to_json(f)}, {"g", to_json(g)}};
                return ok;
            });

        add("iota_weakness_witness",
            "the underlying-map assignment is not a functor: R_{e1}, R_{e2} "
            "compose with a nonzero defect",
            [](TrialCtx&, J& ce) {
                const ModuleShape o{1, false};
                const Matrix defect = underlying_compose_defect(
                    right_mult_operator(Octonion::basis(1), o),
                    right_mult_operator(Octonion::basis(2), o));
                const bool ok = !defect.is_zero_matrix();
                if (!ok) ce = {{"note", "defect unexpectedly vanished"}};
                return ok;
            });

        add("re_weak_functor_olinear",
            "the real-part functor respects composition when either factor "
            "is a module homomorphism",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), mid = t.shape(), c = t.shape();
                const bool first = t.rng.next_int(0, 1) == 0;
                const ParaLinearMap f = first ? t.olin(mid, c) : t.para(mid, c);
                const ParaLinearMap g = first ? t.para(s, mid) : t.olin(s, mid);
                const bool ok = re_compose_defect(f, g).is_zero_matrix();
                if (!ok) ce = {{"f", to_json(f)}, {"g", to_json(g)}};
                return ok;
            });

        add("lift_naturality",
            "lift(g o f) = lift(g) # f for real-valued g and para-linear f",
            [](TrialCtx& t, J& ce) {
                const ModuleShape y = t.shape(), x = t.shape(), m = t.shape();
                const ParaLinearMap f = t.para(y, x);
                const Matrix gmat = gen_matrix(t.rng, m.rank, x.real_dim(), t.coeff_bound);
                const bool ok = lift(gmat * full_matrix(f), y, m, Chirality::Left) ==
                                regular_compose(lift(gmat, x, m, Chirality::Left), f);
                if (!ok) ce = {{"f", to_json(f)}};
                return ok;
            });

        add("ext_naturality",
            "ext(f o g) = f # ext(g) for g defined on real points and "
            "para-linear f",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(), x = t.shape(), y = t.shape();
                const Matrix packed = gen_matrix(t.rng, x.real_dim(), m.rank, t.coeff_bound);
                const ParaLinearMap f = t.para(x, y);
                const bool ok =
                    ext(to_real_linear(f).mat * packed, m, y, Chirality::Left) ==
                    regular_compose(f, ext(packed, m, x, Chirality::Left));
                if (!ok) ce = {{"f", to_json(f)}};
                return ok;
            });

        add("olinear_commutes_with_alpha",
            "module homomorphisms commute with every coordinate-wise real "
            "endomorphism",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const ParaLinearMap f = t.olin(s, c);
                const Matrix alpha = gen_matrix(t.rng, 8, 8, t.coeff_bound);
                const bool ok = compose(to_real_linear(f), alpha_map(alpha, s)) ==
                                compose(alpha_map(alpha, c), to_real_linear(f));
                if (!ok) ce = {{"f", to_json(f)}, {"alpha", to_json(alpha)}};
                return ok;
            });

        add("enveloping_reassembly",
            "every real-linear map is the sum of its 64 homomorphism "
            "components against the coordinate matrix units",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                const RealLinearMap f = t.real_map(s, c);
                const EnvelopingDecomposition d = enveloping_decompose(f);
                bool comps_ok = true;
                for (const ParaLinearMap& comp : d.components) comps_ok = comps_ok && is_o_linear(comp);
                const bool ok = comps_ok && enveloping_reassemble(d) == f;
                if (!ok) ce = {{"f", real_map_json(f)}};
                return ok;
            });

        add("enveloping_uniqueness",
            "decomposing a sum of homomorphism components against matrix "
            "units recovers exactly those components",
            [](TrialCtx& t, J& ce) {
                const ModuleShape s = t.shape(), c = t.shape();
                EnvelopingDecomposition d{s, c, {}};
                d.components.reserve(64);
                for (int k = 0; k < 64; ++k) d.components.push_back(t.olin(s, c));
                const EnvelopingDecomposition back = enveloping_decompose(enveloping_reassemble(d));
                for (int k = 0; k < 64; ++k) {
                    if (!(back.components[static_cast<std::size_t>(k)] ==
                          d.components[static_cast<std::size_t>(k)])) {
                        ce = {{"component", k}};
                        return false;
                    }
                }
                return true;
            });

        add("hom_left_exact",
            "Hom out of any module keeps a split short exact sequence exact "
            "on the left",
            [](TrialCtx& t, J& ce) {
                const ModuleShape o{1, false}, o2{2, false};
                Matrix ipacked(o2.real_dim(), o.rank);
                ipacked.at(0, 0) = 1;
                Matrix ppacked(o.real_dim(), o2.rank);
                ppacked.at(0, 1) = 1;
                const ParaLinearMap i = ext(ipacked, o, o2, Chirality::Left);
                const ParaLinearMap p = ext(ppacked, o2, o, Chirality::Left);
                const ModuleShape m = t.shape();
                const IdentityReport rep = hom_left_exactness_check(m, i, p);
                const bool ok = rep.passed();
                if (!ok) ce = {{"m", to_json(m)}, {"inner", rep.counterexample}};
                return ok;
            });

        // ---------------------------------------------------------------
        // Adjunction and double dual
        // ---------------------------------------------------------------

        add("adjoint_roundtrip",
            "currying against the tensor factor is a bijection",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(false), x = t.shape(false), y = t.shape(false);
                const AdjointIso adj = adjoint_iso(m, x, y);
                const ParaLinearMap alpha = t.para(adj.mx.shape, y);
                const ParaLinearMap beta = t.para(x, adj.hom_my.hom_shape);
                const bool ok = adj.backward(adj.forward(alpha)) == alpha &&
                                adj.forward(adj.backward(beta)) == beta;
                if (!ok) ce = {{"alpha", to_json(alpha)}};
                return ok;
            });

        add("adjoint_olinear",
            "currying commutes with both scalar actions",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(false), x = t.shape(false), y = t.shape(false);
                const AdjointIso adj = adjoint_iso(m, x, y);
                const ParaLinearMap alpha = t.para(adj.mx.shape, y);
                const Octonion p = t.oct();
                const bool ok =
                    adj.forward(odot_left(p, alpha)) == odot_left(p, adj.forward(alpha)) &&
                    adj.forward(odot_right(alpha, p)) == odot_right(adj.forward(alpha), p);
                if (!ok) ce = {{"p", to_json(p)}, {"alpha", to_json(alpha)}};
                return ok;
            });

        add("adjoint_naturality_dom",
            "currying is natural in the non-tensored argument: "
            "curry(alpha # (1 (x) f)) = curry(alpha) # f",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(false), x = t.shape(false), xp = t.shape(false),
                                  y = t.shape(false);
                const AdjointIso adj = adjoint_iso(m, x, y);
                const AdjointIso adjp = adjoint_iso(m, xp, y);
                const ParaLinearMap alpha = t.para(adj.mx.shape, y);
                const ParaLinearMap f = t.para(xp, x);
                const ParaLinearMap tf = induced_map(m, f, InducedVariant::ll);
                const bool ok = adjp.forward(regular_compose(alpha, tf)) ==
                                regular_compose(adj.forward(alpha), f);
                if (!ok) ce = {{"alpha", to_json(alpha)}, {"f", to_json(f)}};
                return ok;
            });

        add("adjoint_naturality_cod",
            "currying is natural in the codomain: "
            "curry(g # alpha) = T(g) # curry(alpha)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(false), x = t.shape(false), y = t.shape(false),
                                  yp = t.shape(false);
                const AdjointIso adj = adjoint_iso(m, x, y);
                const AdjointIso adjp = adjoint_iso(m, x, yp);
                const ParaLinearMap alpha = t.para(adj.mx.shape, y);
                const ParaLinearMap g = t.para(y, yp);
                const bool ok = adjp.forward(regular_compose(g, alpha)) ==
                                regular_compose(hom_covariant(m, g), adj.forward(alpha));
                if (!ok) ce = {{"alpha", to_json(alpha)}, {"g", to_json(g)}};
                return ok;
            });

        add("double_dual_pairing",
            "the evaluation embedding pairs by B_p(x'', f) = A_p(x, f)",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(false);
                const HomModuleIso dual = hom_module(m, scalar_shape(), Chirality::Left);
                const HomModuleIso ddual =
                    hom_module(dual.hom_shape, scalar_shape(), Chirality::Right);
                const ParaLinearMap emb = double_dual_embedding(m);
                const Element x = t.elem(m);
                const ParaLinearMap f = t.para(m, scalar_shape());
                const Octonion p = t.oct();
                const ParaLinearMap xdd = ddual.backward(eval(emb, x));
                const Element felem = dual.forward(f);
                const Element lhs = second_associator_right(p, xdd, felem);
                const Element rhs = second_associator_left(p, x, f);
                const bool ok = lhs.coords[0] == rhs.coords[0];
                if (!ok) ce = {{"p", to_json(p)}, {"x", to_json(x)}, {"f", to_json(f)}};
                return ok;
            });

        add("double_dual_olinear",
            "the evaluation embedding is an injective module homomorphism",
            [](TrialCtx& t, J& ce) {
                const std::size_t n = 1 + t.rng.next_int(0, t.max_rank - 1);
                const ModuleShape m{n, false};
                const ParaLinearMap emb = double_dual_embedding(m);
                const bool ok = is_o_linear(emb) &&
                                rank(to_real_linear(emb).mat) == m.real_dim();
                if (!ok) ce = {{"rank", to_json(m)}};
                return ok;
            });

        add("double_dual_scalar",
            "evaluation functionals transport the scalar action: "
            "(r x)'' = r . x''",
            [](TrialCtx& t, J& ce) {
                const ModuleShape m = t.shape(false);
                const HomModuleIso dual = hom_module(m, scalar_shape(), Chirality::Left);
                const HomModuleIso ddual =
                    hom_module(dual.hom_shape, scalar_shape(), Chirality::Right);
                const ParaLinearMap emb = double_dual_embedding(m);
                const Element x = t.elem(m);
                const Octonion r = t.oct();
                const bool ok = ddual.backward(eval(emb, left_act(r, x))) ==
                                odot_left(r, ddual.backward(eval(emb, x)));
                if (!ok) ce = {{"r", to_json(r)}, {"x", to_json(x)}};
                return ok;
            });

        add("double_dual_naturality",
            "the evaluation embedding is natural against the double "
            "contravariant Hom",
            [](TrialCtx& t, J& ce) {
                const ModuleShape x = t.shape(false), y = t.shape(false);
                const ParaLinearMap phi = t.para(x, y);
                const ParaLinearMap phi_star = hom_contravariant(scalar_shape(), phi);
                const ParaLinearMap phi_star_star = hom_contravariant(scalar_shape(), phi_star);
                const bool ok = regular_compose(phi_star_star, double_dual_embedding(x)) ==
                                regular_compose(double_dual_embedding(y), phi);
                if (!ok) ce = {{"phi", to_json(phi)}};
                return ok;
            });

        return cat;
    }();
    return catalog;
}

/// Looks up a catalog entry by name; null when absent.
[[nodiscard]] inline const IdentityCheck* find_check(const std::string& name) {
    for (const IdentityCheck& c : identity_catalog()) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

/// Runs one check for `trials` rounds.  Each trial reseeds the generator from
/// (seed, name, trial index), so reports are reproducible and independent of
/// evaluation order.  Stops at the first failing trial.
[[nodiscard]] inline IdentityReport run_check(const IdentityCheck& check, int trials = 100,
                                              std::uint64_t seed = 42, int max_rank = 2,
                                              int coeff_bound = 5) {
    IdentityReport rep;
    rep.name = check.name;
    rep.trials = trials;
    rep.seed = seed;
    if (trials <= 0) {
        rep.status = CheckStatus::Pass;
        rep.note = "vacuous: zero trials requested";
        return rep;
    }
    for (int k = 0; k < trials; ++k) {
        const std::uint64_t trial_seed =
            derive_trial_seed(seed, check.name, static_cast<std::uint64_t>(k));
        TrialCtx ctx{Rng(trial_seed), coeff_bound, max_rank};
        nlohmann::json ce;
        bool ok = false;
        try {
            ok = check.trial(ctx, ce);
        } catch (const std::exception& e) {
            ce["exception"] = e.what();
        }
        if (!ok) {
            ce["trial"] = k;
            ce["trial_seed"] = std::to_string(trial_seed);
            rep.counterexample = ce;
            rep.status = check.discovery ? CheckStatus::DiscoveryFail : CheckStatus::Fail;
            if (check.discovery) rep.note = "recorded claim refuted, as expected";
            return rep;
        }
    }
    rep.status = CheckStatus::Pass;
    if (check.discovery) rep.note = "recorded claim survived all trials";
    return rep;
}

/// Runs a check by name.  Throws std::invalid_argument for unknown names.
[[nodiscard]] inline IdentityReport run_check(const std::string& name, int trials = 100,
                                              std::uint64_t seed = 42, int max_rank = 2,
                                              int coeff_bound = 5) {
    const IdentityCheck* check = find_check(name);
    if (check == nullptr) throw std::invalid_argument("unknown identity: " + name);
    return run_check(*check, trials, seed, max_rank, coeff_bound);
}

/// Runs the whole catalog in order.
[[nodiscard]] inline std::vector<IdentityReport> run_all(int trials = 100, std::uint64_t seed = 42,
                                                         int max_rank = 2, int coeff_bound = 5) {
    std::vector<IdentityReport> reports;
    reports.reserve(identity_catalog().size());
    for (const IdentityCheck& c : identity_catalog()) {
        reports.push_back(run_check(c, trials, seed, max_rank, coeff_bound));
    }
    return reports;
}

} // namespace octmod
