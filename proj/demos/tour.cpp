// A guided tour: exact octonion arithmetic, para-linear maps and their
// canonical data, regular composition order, the Hom-module witness for
// non-associativity, enveloping decomposition, and a seeded identity check.

#include <iostream>
#include <string>

#include <octmod/octmod.hpp>

using namespace octmod;

namespace {

void banner(const std::string& s) { std::cout << "\n== " << s << " ==\n"; }

[[nodiscard]] std::string show(const Octonion& p) { return render_octonion(p); }

}  // namespace

int main() {
    banner("exact arithmetic");
    const Octonion a = parse_octonion("1+e1");
    const Octonion b = parse_octonion("1+e2");
    std::cout << "(" << show(a) << ")(" << show(b) << ") = " << show(a * b) << "\n";
    std::cout << "associator [e1,e2,e4] = " << show(associator(Octonion::basis(1), Octonion::basis(2), Octonion::basis(4)))
              << "  (nonzero: O is not associative)\n";
    std::cout << "norm_sq(e2e5) = " << to_string(norm_sq(Octonion::basis(2) * Octonion::basis(5)))
              << "  (composition algebra)\n";

    banner("right multiplications are the para-linear maps O -> O");
    const ModuleShape o{1, false};
    const ParaLinearMap rp = right_mult_operator(Octonion::basis(1), o);
    const ParaLinearMap rq = right_mult_operator(Octonion::basis(2), o);
    std::cout << "R_{e1}(e2) = " << show(eval(rp, basis_element(o, 0, 2)).coords[0]) << "\n";
    std::cout << "dim of the para-linear space O -> O: "
              << para_linear_dimension(o, o, Chirality::Left) << " (= 8, one R_p per p)\n";

    banner("regular composition reverses the subscripts");
    const ParaLinearMap comp = regular_compose(rp, rq);
    const ParaLinearMap r_qp = right_mult_operator(Octonion::basis(2) * Octonion::basis(1), o);
    const ParaLinearMap r_pq = right_mult_operator(Octonion::basis(1) * Octonion::basis(2), o);
    std::cout << "R_{e1} (*) R_{e2} == R_{e2e1}: " << (comp == r_qp ? "yes" : "no") << "\n";
    std::cout << "R_{e1} (*) R_{e2} == R_{e1e2}: " << (comp == r_pq ? "yes" : "no") << "\n";

    banner("the composition defect is a genuine obstruction");
    const Matrix under = underlying_compose_defect(rp, rq);
    std::cout << "plain matrix composition differs from the regular one: "
              << (under.is_zero_matrix() ? "no" : "yes") << "\n";

    banner("scalar action on Hom fails the square law for non-para maps");
    Matrix unit(8, 8);
    unit.at(1, 2) = Rational(1);
    const RealLinearMap f{o, o, unit};
    const RealLinearMap once = odot_right(odot_right(f, Octonion::basis(1), Chirality::Left), Octonion::basis(1),
                                          Chirality::Left);
    const RealLinearMap twice = odot_right(f, Octonion::basis(1) * Octonion::basis(1), Chirality::Left);
    std::cout << "(f . e1) . e1 == f . e1^2: " << (once == twice ? "yes" : "no")
              << "  (fails: Hom_R is not an O-module)\n";

    banner("left multiplication decomposes over the enveloping sum");
    const RealLinearMap lift_l = left_mult_real(Octonion::basis(1), o);
    const EnvelopingDecomposition dec = enveloping_decompose(lift_l);
    int nonzero = 0;
    for (const auto& piece : dec.components)
        if (!piece.re_matrix.is_zero_matrix()) ++nonzero;
    std::cout << "L_{e1} = sum of e_i f_(i) with " << nonzero << " nonzero para components\n";
    std::cout << "reassembly returns the original map: "
              << (enveloping_reassemble(dec) == lift_l ? "yes" : "no") << "\n";

    banner("tensor defect measures mid-scalar slippage");
    const TensorModule t = tensor_module(o, o);
    const Element defect = tensor_defect(t, basis_element(o, 0, 1), Octonion::basis(4),
                                         basis_element(o, 0, 2));
    std::cout << "e1 e4 (x) e2 - e1 (x) e4 e2 = " << show(defect.coords[0]) << " in O (x) O\n";

    banner("one seeded identity check");
    const IdentityReport rep = run_check("hom_module_square_laws", 25, 42, 2, 5);
    std::cout << rep.name << ": " << to_string(rep.status) << " over " << rep.trials
              << " trials\n";
    return 0;
}
