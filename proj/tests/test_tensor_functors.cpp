// Tensor, Hom-functor, adjunction, dual, and enveloping fixtures.  The two
// anchor values: the middle-slot tensor defect e1.e4 (x) e2 - e1 (x) e4.e2
// equals 2e7, and L_{e1} decomposes over the matrix units with exactly eight
// nonzero O-linear components of coefficient +-1.

#include <catch2/catch_amalgamated.hpp>

#include <octmod/octmod.hpp>

using namespace octmod;

namespace {
const ModuleShape kO{1, false};
const ModuleShape kO2{2, false};

[[nodiscard]] Element point(const Octonion& p) {
    Element x(kO);
    x.coords[0] = p;
    return x;
}

[[nodiscard]] ParaLinearMap rmul(const Octonion& p) { return right_mult_operator(p, kO); }
}  // namespace

TEST_CASE("elementary tensors in O (x) O multiply the coordinates") {
    const TensorModule t = tensor_module(kO, kO);
    CHECK(t.shape.rank == 1);
    const Octonion a = parse_octonion("1+e1");
    const Octonion b = parse_octonion("2-e5");
    CHECK(elementary_tensor(t, point(a), point(b)).coords[0] == a * b);
}

TEST_CASE("tensor defect fixture: single coordinate 2e7") {
    const TensorModule t = tensor_module(kO, kO);
    const Element d = tensor_defect(t, point(Octonion::basis(1)), Octonion::basis(4),
                                    point(Octonion::basis(2)));
    CHECK(d.coords[0] == Rational(2) * Octonion::basis(7));

    // The defect is the difference of the two elementary tensors.
    const Element lhs = elementary_tensor(
        t, point(Octonion::basis(1) * Octonion::basis(4)), point(Octonion::basis(2)));
    const Element rhs = elementary_tensor(
        t, point(Octonion::basis(1)), point(Octonion::basis(4) * Octonion::basis(2)));
    CHECK(d == lhs - rhs);

    // Real middle scalars slide through without defect.
    CHECK(tensor_defect(t, point(parse_octonion("1+e1")), Octonion(Rational(7)),
                        point(Octonion::basis(3)))
              .is_zero());
}

TEST_CASE("tensor of higher-rank modules indexes pairs") {
    const TensorModule t = tensor_module(kO2, kO);
    CHECK(t.shape.rank == 2);
    CHECK(t.pair_index(1, 0) == 1);
    Element m(kO2);
    m.coords[0] = Octonion::basis(1);
    m.coords[1] = Octonion(Rational(2));
    const Element y = elementary_tensor(t, m, point(Octonion::basis(2)));
    CHECK(y.coords[0] == Octonion::basis(1) * Octonion::basis(2));
    CHECK(y.coords[1] == Rational(2) * Octonion::basis(2));
}

TEST_CASE("induced map on the matched left variant evaluates pointwise") {
    const ParaLinearMap f = rmul(Octonion::basis(1));
    const ParaLinearMap ind = induced_map(kO, f, InducedVariant::ll);
    const TensorModule t = tensor_module(kO, kO);

    // 1 (x) x |-> 1 (x) f(x) for every x, not only real ones.
    const Element in = elementary_tensor(t, point(Octonion::one()), point(Octonion::basis(2)));
    const Element out = elementary_tensor(
        t, point(Octonion::one()), point(Octonion::basis(2) * Octonion::basis(1)));
    CHECK(eval(ind, in) == out);

    // Mismatched variant names are rejected.
    CHECK_THROWS_AS(induced_map(kO, f, InducedVariant::rr), ShapeError);

    // The right-output variant of f is the matched extension of transpose(f).
    const ParaLinearMap mixed = induced_map(kO, f, InducedVariant::lr);
    CHECK(mixed == induced_map(kO, transpose(f), InducedVariant::rr));
}

TEST_CASE("hom functors act by composition on the free models") {
    const HomModuleIso iso = hom_module(kO, kO, Chirality::Left);
    const ParaLinearMap f = rmul(Octonion::basis(1));
    const ParaLinearMap tf = hom_covariant(kO, f);
    const ParaLinearMap g = rmul(Octonion::basis(2));

    CHECK(eval(tf, iso.forward(g)) == iso.forward(regular_compose(f, g)));
    CHECK(hom_covariant(kO, identity_para(Chirality::Left, kO2)) ==
          identity_para(Chirality::Left, ModuleShape{2, false}));

    const ParaLinearMap sf = hom_contravariant(kO, f);
    CHECK(sf.chirality == Chirality::Right);
    CHECK(eval(sf, iso.forward(g)) == iso.forward(regular_compose(g, f)));
}

TEST_CASE("conjugate functor flips chirality and shapes, twice is identity") {
    const ParaLinearMap f = rmul(parse_octonion("1+e3"));
    const ParaLinearMap cf = conjugate_functor(f);
    CHECK(cf.chirality == Chirality::Right);
    CHECK(cf.dom.conjugated);
    CHECK(cf.cod.conjugated);
    CHECK(conjugate_functor(cf) == f);
}

TEST_CASE("adjunction round-trips on a concrete map") {
    const AdjointIso adj = adjoint_iso(kO, kO, kO);
    // alpha: O (x) O -> O, the identity of the rank-one model.
    const ParaLinearMap alpha = identity_para(Chirality::Left, adj.mx.shape);
    const ParaLinearMap beta = adj.forward(alpha);
    CHECK(beta.dom == kO);
    CHECK(beta.cod == adj.hom_my.hom_shape);
    CHECK(adj.backward(beta) == alpha);

    // And in the other direction.
    const ParaLinearMap beta2 = rmul(Octonion::basis(5));
    CHECK(adj.forward(adj.backward(beta2)) == beta2);
}

TEST_CASE("dual pairing and the double dual embedding") {
    const ParaLinearMap xdd = dual_element(kO, point(Octonion::basis(3)));
    CHECK(xdd.chirality == Chirality::Right);

    // x'' evaluates functionals at x: on f = R_{e1}, (e3)'' gives e3 e1 = e4... no:
    // the model functional with coordinates e1 is R_{e1}, and f(e3) = e3 e1.
    const HomModuleIso dual = hom_module(kO, scalar_shape(), Chirality::Left);
    Element coord(dual.hom_shape);
    coord.coords[0] = Octonion::basis(1);
    const ParaLinearMap f = dual.backward(coord);
    CHECK(eval(xdd, coord).coords[0] == eval(f, point(Octonion::basis(3))).coords[0]);

    const ParaLinearMap tau = double_dual_embedding(kO);
    CHECK(rank(full_matrix(tau)) == 8);
    CHECK(is_o_linear(tau));
}

TEST_CASE("enveloping decomposition of L_{e1}") {
    const RealLinearMap l1 = left_mult_real(Octonion::basis(1), kO);
    const EnvelopingDecomposition dec = enveloping_decompose(l1);

    struct Entry {
        int i, j, sign;
    };
    constexpr Entry kNonzero[8] = {{1, 0, 1}, {0, 1, -1}, {3, 2, 1}, {2, 3, -1},
                                   {5, 4, 1}, {4, 5, -1}, {7, 6, 1}, {6, 7, -1}};
    const ParaLinearMap id = identity_para(Chirality::Left, kO);
    for (const auto& e : kNonzero) {
        INFO("component (" << e.i << ", " << e.j << ")");
        CHECK(dec.at(e.i, e.j) == Rational(e.sign) * id);
    }
    int nonzero = 0;
    for (const auto& c : dec.components) {
        if (!c.re_matrix.is_zero_matrix()) ++nonzero;
    }
    CHECK(nonzero == 8);
    CHECK(enveloping_reassemble(dec) == l1);
}

TEST_CASE("alpha matrix units extend blockwise") {
    const RealLinearMap a = alpha_map(alpha_unit(1, 0), kO);
    Matrix expect(8, 8);
    expect.at(1, 0) = Rational(1);
    CHECK(a.mat == expect);

    const RealLinearMap a2 = alpha_map(alpha_unit(1, 0), kO2);
    CHECK(a2.mat.at(1, 0) == Rational(1));
    CHECK(a2.mat.at(9, 8) == Rational(1));
    CHECK(a2.mat.at(9, 0) == Rational(0));
}

TEST_CASE("split short exact sequence and left exactness of Hom") {
    // i: O -> O^2, x |-> (x, 0); p: O^2 -> O, (x, y) |-> y.
    Matrix pi(16, 1);
    pi.at(0, 0) = Rational(1);
    const ParaLinearMap i = ext(pi, kO, kO2, Chirality::Left);
    Matrix pp(8, 2);
    pp.at(0, 1) = Rational(1);
    const ParaLinearMap p = ext(pp, kO2, kO, Chirality::Left);

    CHECK(is_short_exact(to_real_linear(i), to_real_linear(p)));
    CHECK(is_exact_pair(to_real_linear(i), to_real_linear(p)));

    for (const ModuleShape& m : {kO, kO2}) {
        const IdentityReport rep = hom_left_exactness_check(m, i, p);
        INFO(rep.note);
        CHECK(rep.status == CheckStatus::Pass);
    }
}
