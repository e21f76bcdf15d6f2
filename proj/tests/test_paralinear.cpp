// Para-linear maps against hand-computed data: right multiplication is the
// canonical left para-linear map, left multiplication only passes the
// right-chirality test, the canonical re_matrix of R_{e1} is the single row
// re(x e1) = -x_1, and every para-linear endomorphism of O is a one-sided
// multiplication by its value at 1.

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
}  // namespace

TEST_CASE("right multiplication is left para-linear, left multiplication is not") {
    const RealLinearMap r1 = right_mult_real(Octonion::basis(1), kO);
    const RealLinearMap l1 = left_mult_real(Octonion::basis(1), kO);

    CHECK(is_para_linear(r1, Chirality::Left));
    CHECK_FALSE(is_para_linear(r1, Chirality::Right));
    CHECK_FALSE(is_para_linear(l1, Chirality::Left));
    CHECK(is_para_linear(l1, Chirality::Right));

    ParaWitness w{};
    CHECK_FALSE(is_para_linear(l1, Chirality::Left, &w));
    // The witness names a unit whose second associator has nonzero real part.
    CHECK(w.unit >= 1);
    CHECK(w.unit <= 7);

    CHECK_THROWS_AS(from_real_linear(l1, Chirality::Left), NotParaLinearError);
    CHECK_NOTHROW(from_real_linear(l1, Chirality::Right));
}

TEST_CASE("canonical data of R_{e1}") {
    const ParaLinearMap f = right_mult_operator(Octonion::basis(1), kO);

    CHECK(f.chirality == Chirality::Left);
    CHECK(eval(f, point(Octonion::basis(2))).coords[0] == -Octonion::basis(3));
    CHECK(eval(f, point(Octonion::one())).coords[0] == Octonion::basis(1));

    // re(x e1) = -x_1: a single hand-entered row.
    Matrix row(1, 8);
    row.at(0, 1) = Rational(-1);
    CHECK(f.re_matrix == row);

    // re_star embeds that row into the full codomain (output row 0 of 8).
    Matrix embedded(8, 8);
    embedded.at(0, 1) = Rational(-1);
    CHECK(re_star(f).mat == embedded);

    // Values on the real basis: f(1) = e1, packed as one column.
    Matrix packed(8, 1);
    packed.at(1, 0) = Rational(1);
    CHECK(re_upper_star(f) == packed);

    CHECK(full_matrix(f) == right_mult_real(Octonion::basis(1), kO).mat);
    CHECK(lift(re_star(f), Chirality::Left) == f);
    CHECK(ext(re_upper_star(f), kO, kO, Chirality::Left) == f);
}

TEST_CASE("second associator fixtures") {
    const RealLinearMap r4 = right_mult_real(Octonion::basis(4), kO);
    // A_p(x, R_q) = (px)q - p(xq) = [p, x, q].
    const Element a = second_associator_left(Octonion::basis(1), point(Octonion::basis(2)), r4);
    CHECK(a.coords[0] == Rational(-2) * Octonion::basis(7));

    // B_p(L_q, x) = (qx)p - q(xp) = [q, x, p].
    const RealLinearMap l4 = left_mult_real(Octonion::basis(4), kO);
    const Element b = second_associator_right(Octonion::basis(2), l4, point(Octonion::basis(1)));
    CHECK(b.coords[0] == associator(Octonion::basis(4), Octonion::basis(1), Octonion::basis(2)));

    // Real scalars never contribute.
    const Element z = second_associator_left(Octonion(Rational(3)), point(Octonion::basis(2)), r4);
    CHECK(z.is_zero());
}

TEST_CASE("para-linear dimension is 8nm") {
    CHECK(para_linear_dimension(kO, kO, Chirality::Left) == 8);
    CHECK(para_linear_dimension(kO, kO, Chirality::Right) == 8);
    CHECK(para_linear_dimension(kO2, kO, Chirality::Left) == 16);
    CHECK(para_linear_dimension(kO, kO2, Chirality::Left) == 16);
}

TEST_CASE("para-linear endomorphisms of O are one-sided multiplications") {
    Matrix row(1, 8);
    for (int j = 0; j < 8; ++j) row.at(0, static_cast<std::size_t>(j)) = Rational(j - 3, 2);

    const ParaLinearMap f = lift(row, kO, kO, Chirality::Left);
    const Octonion f1 = eval(f, point(Octonion::one())).coords[0];
    CHECK(f == right_mult_operator(f1, kO));

    const ParaLinearMap g = lift(row, kO, kO, Chirality::Right);
    const Octonion g1 = eval(g, point(Octonion::one())).coords[0];
    CHECK(g == left_mult_operator(g1, kO));
}

TEST_CASE("identity and zero maps") {
    const ParaLinearMap id = identity_para(Chirality::Left, kO2);
    Element x(kO2);
    x.coords[0] = parse_octonion("1+e5");
    x.coords[1] = parse_octonion("-2/3e1");
    CHECK(eval(id, x) == x);
    CHECK(is_o_linear(id));
    CHECK_FALSE(is_o_linear(right_mult_operator(Octonion::basis(1), kO)));
    CHECK(eval(zero_para(Chirality::Right, kO2, kO), x).is_zero());
}

TEST_CASE("canonical storage round-trips through the full real map") {
    const ParaLinearMap f = right_mult_operator(parse_octonion("1+2e3-1/2e7"), kO);
    CHECK(from_real_linear(to_real_linear(f), f.chirality) == f);
}
