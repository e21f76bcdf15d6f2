// Module arithmetic over hand-computed values: coordinatewise actions, the
// conjugate-module convention p.x = x.conj(p), the real-part projector, and
// the polarization decomposition x = sum e_i . x_i.

#include <catch2/catch_amalgamated.hpp>

#include <octmod/octmod.hpp>

using namespace octmod;

namespace {
const ModuleShape kO{1, false};
const ModuleShape kOc{1, true};
const ModuleShape kO2{2, false};
}  // namespace

TEST_CASE("flat indexing and flatten round-trip") {
    CHECK(flat_index(0, 3) == 3);
    CHECK(flat_index(1, 0) == 8);
    CHECK(flat_index(2, 7) == 23);
    CHECK(kO2.real_dim() == 16);

    Element x(kO2);
    x.coords[0] = parse_octonion("1+e1");
    x.coords[1] = parse_octonion("-1/2e7");
    CHECK(unflatten(kO2, flatten(x)) == x);
}

TEST_CASE("actions on the standard module are plain octonion products") {
    Element x(kO);
    x.coords[0] = parse_octonion("1+e2");
    CHECK(left_act(Octonion::basis(1), x).coords[0] == parse_octonion("e1+e3"));
    CHECK(right_act(x, Octonion::basis(1)).coords[0] == parse_octonion("e1-e3"));
}

TEST_CASE("conjugate module swaps the actions through conjugation") {
    Element x(kOc);
    x.coords[0] = Octonion::basis(2);

    // p . x = x conj(p) and x . p = conj(p) x, both evaluated in O.
    CHECK(left_act(Octonion::basis(1), x).coords[0] == Octonion::basis(3));
    CHECK(right_act(x, Octonion::basis(1)).coords[0] == -Octonion::basis(3));

    CHECK(kOc.conjugate() == kO);
    CHECK(kO.conjugate() == kOc);

    // r(rm) = r^2 m holds in the conjugate module too.
    const Octonion r = parse_octonion("1+e1");
    CHECK(left_act(r, left_act(r, x)) == left_act(r * r, x));
}

TEST_CASE("module associator fixture in O^2") {
    Element m(kO2);
    m.coords[0] = Octonion::basis(4);
    m.coords[1] = Octonion::one();
    const Element a = module_associator(Octonion::basis(1), Octonion::basis(2), m);
    CHECK(a.coords[0] == Rational(-2) * Octonion::basis(7));
    CHECK(a.coords[1] == Octonion::zero());

    // Cyclic symmetry of the three bimodule placements: [p,q,m]=[m,p,q]=[q,m,p].
    CHECK(a == module_associator_right(m, Octonion::basis(1), Octonion::basis(2)));
    CHECK(a == module_associator_mixed(Octonion::basis(2), m, Octonion::basis(1)));
}

TEST_CASE("re_project keeps scalar coordinates only") {
    Element x(kO2);
    x.coords[0] = parse_octonion("2+e3");
    x.coords[1] = Octonion::basis(5);
    const Element r = re_project(x);
    CHECK(r.coords[0] == Octonion(Rational(2)));
    CHECK(r.coords[1] == Octonion::zero());
    CHECK(re_project(r) == r);
}

TEST_CASE("re_project agrees with the averaged sandwich formula") {
    Element x(kO);
    x.coords[0] = parse_octonion("1+2e3-1/2e7");
    Element sandwich(kO);
    for (int i = 1; i < 8; ++i) {
        sandwich += right_act(left_act(Octonion::basis(i), x), Octonion::basis(i));
    }
    const Element formula =
        Rational(5, 12) * x - Rational(1, 12) * sandwich;
    CHECK(formula == re_project(x));
}

TEST_CASE("polarization of 2 + e3") {
    Element x(kO);
    x.coords[0] = parse_octonion("2+e3");
    const std::array<Element, 8> comps = polarize(x);
    CHECK(comps[0].coords[0] == Octonion(Rational(2)));
    CHECK(comps[3].coords[0] == Octonion::one());
    for (int i : {1, 2, 4, 5, 6, 7}) CHECK(comps[static_cast<std::size_t>(i)].is_zero());

    Element back(kO);
    for (int i = 0; i < 8; ++i) {
        back += left_act(Octonion::basis(i), comps[static_cast<std::size_t>(i)]);
    }
    CHECK(back == x);
}

TEST_CASE("real elements commute with every scalar") {
    Element r(kO2);
    r.coords[0] = Octonion(Rational(3));
    r.coords[1] = Octonion(Rational(-1, 2));
    const Octonion p = parse_octonion("1/2+e4-e6");
    CHECK(left_act(p, r) == right_act(r, p));
    CHECK(module_commutator(p, r).is_zero());
}

TEST_CASE("shape mismatches are rejected") {
    Element x(kO);
    CHECK_THROWS_AS(x.require_shape(kO2), ShapeError);
    Element y(kO2);
    CHECK_THROWS_AS((void)(x + y), ShapeError);
}
