// Regular composition and the Hom-module structure on hand-computed data.
// The pivotal fixture: composing right multiplications reverses the
// subscripts, R_{e1} (*) R_{e2} = R_{e2 e1}, and the composition defect
// [R_{e1}, R_{e2}, e4] equals -2e7.

#include <catch2/catch_amalgamated.hpp>

#include <octmod/octmod.hpp>

using namespace octmod;

namespace {
const ModuleShape kO{1, false};

[[nodiscard]] Element point(const Octonion& p) {
    Element x(kO);
    x.coords[0] = p;
    return x;
}

[[nodiscard]] ParaLinearMap rmul(const Octonion& p) { return right_mult_operator(p, kO); }
}  // namespace

TEST_CASE("regular composition of right multiplications reverses the product") {
    const ParaLinearMap rp = rmul(Octonion::basis(1));
    const ParaLinearMap rq = rmul(Octonion::basis(2));
    const ParaLinearMap composed = regular_compose(rp, rq);

    CHECK(composed == rmul(Octonion::basis(2) * Octonion::basis(1)));
    CHECK(composed == rmul(-Octonion::basis(3)));
    CHECK_FALSE(composed == rmul(Octonion::basis(1) * Octonion::basis(2)));

    // The same order holds for non-unit scalars.
    const Octonion p = parse_octonion("1+e4");
    const Octonion q = parse_octonion("2-e7");
    CHECK(regular_compose(rmul(p), rmul(q)) == rmul(q * p));
}

TEST_CASE("composition defect fixture") {
    const ParaLinearMap rp = rmul(Octonion::basis(1));
    const ParaLinearMap rq = rmul(Octonion::basis(2));

    const Element defect = bracket_left(rp, rq, point(Octonion::basis(4)));
    CHECK(defect.coords[0] == Rational(-2) * Octonion::basis(7));

    // (f (*) g)(x) = f(g(x)) + [f, g, x], here at x = e4.
    const Element composed_at = eval(regular_compose(rp, rq), point(Octonion::basis(4)));
    const Element strict = eval(rp, eval(rq, point(Octonion::basis(4))));
    CHECK(composed_at == strict + defect);

    // On real points the defect vanishes.
    CHECK(bracket_left(rp, rq, point(Octonion(Rational(3)))).is_zero());

    // The underlying real maps do not compose strictly: iota is only weak.
    CHECK_FALSE(underlying_compose_defect(rp, rq).is_zero_matrix());
}

TEST_CASE("map associator fixture") {
    const ParaLinearMap a =
        map_associator(rmul(Octonion::basis(1)), rmul(Octonion::basis(2)), rmul(Octonion::basis(4)));
    CHECK(a == rmul(Rational(-2) * Octonion::basis(7)));
}

TEST_CASE("transpose swaps chirality and keeps the real rows") {
    const ParaLinearMap rq = rmul(Octonion::basis(2));
    const ParaLinearMap t = transpose(rq);
    CHECK(t.chirality == Chirality::Right);
    CHECK(t == left_mult_operator(Octonion::basis(2), kO));
    CHECK(transpose(t) == rq);

    // A module homomorphism has the same underlying map in both chiralities.
    const ParaLinearMap id = identity_para(Chirality::Left, kO);
    CHECK(to_real_linear(transpose(id)).mat == to_real_linear(id).mat);
    // A strictly para-linear map does not.
    CHECK_FALSE(to_real_linear(t).mat == to_real_linear(rq).mat);
}

TEST_CASE("Hom(O, O) is a free rank-one bimodule via f |-> forward(f)") {
    const HomModuleIso iso = hom_module(kO, kO, Chirality::Left);
    CHECK(iso.hom_shape.rank == 1);

    const Octonion p = parse_octonion("1+2e3-1/2e7");
    CHECK(iso.forward(rmul(p)).coords[0] == p);
    CHECK(iso.forward(identity_para(Chirality::Left, kO)).coords[0] == Octonion::one());
    CHECK(iso.backward(iso.forward(rmul(p))) == rmul(p));

    // Scalar actions transport to the octonion coordinates.
    const Octonion q = Octonion::basis(2);
    CHECK(iso.forward(odot_left(q, rmul(Octonion::basis(1)))).coords[0] ==
          q * Octonion::basis(1));
    CHECK(iso.forward(odot_right(rmul(Octonion::basis(1)), q)).coords[0] ==
          Octonion::basis(1) * q);
}

TEST_CASE("hom modules of higher rank") {
    const ModuleShape o2{2, false};
    const HomModuleIso iso = hom_module(o2, kO, Chirality::Left);
    CHECK(iso.hom_shape.rank == 2);
    CHECK(iso.pair_index(0, 1) == 1);

    // First projection O^2 -> O: an O-linear map, coordinates (1, 0).
    Matrix packed(8, 2);
    packed.at(0, 0) = Rational(1);
    const ParaLinearMap proj = ext(packed, o2, kO, Chirality::Left);
    const Element y = iso.forward(proj);
    CHECK(y.coords[0] == Octonion::one());
    CHECK(y.coords[1] == Octonion::zero());
    CHECK(iso.backward(y) == proj);
}

TEST_CASE("map real part extracts the homomorphism component") {
    CHECK(re_of_map(rmul(parse_octonion("1+2e3"))) == identity_para(Chirality::Left, kO));
    CHECK(re_of_map(rmul(Octonion::basis(3))).re_matrix.is_zero_matrix());
    const ParaLinearMap f = rmul(parse_octonion("-1/2+e1"));
    CHECK(re_of_map(f) == Rational(-1, 2) * identity_para(Chirality::Left, kO));
}

TEST_CASE("scalar square law holds for para-linear maps and fails in general") {
    const Octonion r = Octonion::basis(1);
    const ParaLinearMap f = rmul(Octonion::basis(5));
    CHECK(odot_right(odot_right(f, r), r) == odot_right(f, r * r));
    CHECK(odot_left(r, odot_left(r, f)) == odot_left(r * r, f));

    // The matrix unit e2 |-> e1 is real-linear but not para-linear, and the
    // square law breaks on it.
    Matrix unit(8, 8);
    unit.at(1, 2) = Rational(1);
    const RealLinearMap g{kO, kO, unit};
    const RealLinearMap once = odot_right(odot_right(g, r, Chirality::Left), r, Chirality::Left);
    const RealLinearMap twice = odot_right(g, r * r, Chirality::Left);
    CHECK_FALSE(once == twice);
}
