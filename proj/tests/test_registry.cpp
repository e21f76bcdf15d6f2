// Catalog registry: the checker must expose exactly the identities listed
// here, in this order.  Adding an invariant to the library without a catalog
// entry (or renaming one) fails this test.  Also pins the reporting contract:
// derived per-trial seeds, byte-identical reruns, vacuous zero-trial passes.

#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <octmod/octmod.hpp>

using namespace octmod;

namespace {

const std::vector<std::string> kExpectedNames = {
    "octonion_alternative",
    "octonion_norm_composition",
    "octonion_conj_antiautomorphism",
    "octonion_associator_antisymmetry",
    "octonion_conj_identities",
    "bimodule_axioms",
    "re_projection_formula",
    "re_scalar_rule",
    "re_kills_associator_commutator",
    "re_center",
    "polarization_identity",
    "conjugate_module_convention",
    "second_assoc_real_scalar_vanishes",
    "second_assoc_conjugate_flip",
    "second_assoc_product_rule_left",
    "second_assoc_product_rule_right",
    "second_assoc_square_rule",
    "second_assoc_conjugate_shift",
    "second_assoc_conjugate_power",
    "second_assoc_power_recursion",
    "para_vanishes_on_real",
    "para_flex_relation",
    "para_re_antisymmetry",
    "para_re_left_associator",
    "para_re_middle_associator",
    "para_shift_by_own_scalar",
    "para_reconstruction",
    "second_assoc_re_formula_left",
    "second_assoc_re_formula_right",
    "ext_second_assoc_formula",
    "canonical_real_roundtrip",
    "para_determined_by_real_restriction",
    "lift_round_trip",
    "ext_round_trip",
    "para_dimension_matches",
    "odot_definitions_pointwise",
    "odot_intro_duplicate_rhs",
    "odot_right_second_assoc_expansion",
    "odot_right_map_associator_expansion",
    "odot_left_second_assoc_expansion",
    "odot_left_map_associator_expansion",
    "odot_left_right_expansion_printed",
    "odot_left_right_expansion",
    "odot_left_right_map_associator",
    "odot_right_right_expansion",
    "odot_right_right_map_associator_printed",
    "odot_right_right_map_associator",
    "odot_mixed_associator_left_form",
    "odot_mixed_associator_right_form",
    "hom_module_square_laws",
    "odot_square_law_fails_without_para",
    "hom_module_associator_symmetry",
    "re_of_map_projection",
    "re_of_map_odot_stack",
    "hom_component_decomposition",
    "hom_component_right_action",
    "compose_preserves_para",
    "compose_second_assoc_expansion",
    "compose_second_assoc_expansion_right",
    "compose_collapse_when_olinear",
    "map_associator_pointwise_expansion",
    "map_associator_re_vanishes",
    "map_associator_olinear_vanishes",
    "right_mult_bracket",
    "right_mult_compose_odot",
    "compose_order_oracle",
    "compose_order_intro_claim",
    "olinear_odot_associative",
    "conjugate_involution",
    "conjugate_second_assoc_transport",
    "conjugate_scalar_transport",
    "conjugate_compose_transport",
    "transpose_involution",
    "transpose_preserves_re",
    "transpose_odot_equivariance",
    "olinear_intersection",
    "hom_iso_roundtrip",
    "hom_iso_equivariance",
    "hom_functor_identity",
    "hom_covariant_composition",
    "hom_covariant_scalar",
    "hom_contravariant_composition",
    "hom_contravariant_scalar",
    "tensor_defect_formula",
    "tensor_nuclear_transport",
    "tensor_re_subspace",
    "tensor_induced_eval",
    "tensor_induced_functorial",
    "tensor_variant_duality_agreement",
    "iota_weak_olinear",
    "iota_weakness_witness",
    "re_weak_functor_olinear",
    "lift_naturality",
    "ext_naturality",
    "olinear_commutes_with_alpha",
    "enveloping_reassembly",
    "enveloping_uniqueness",
    "hom_left_exact",
    "adjoint_roundtrip",
    "adjoint_olinear",
    "adjoint_naturality_dom",
    "adjoint_naturality_cod",
    "double_dual_pairing",
    "double_dual_olinear",
    "double_dual_scalar",
    "double_dual_naturality",
};

const std::set<std::string> kDiscovery = {
    "odot_intro_duplicate_rhs",
    "odot_left_right_expansion_printed",
    "odot_right_right_map_associator_printed",
    "compose_order_intro_claim",
};

}  // namespace

TEST_CASE("catalog lists every expected identity, in order, without duplicates") {
    const auto& catalog = identity_catalog();
    REQUIRE(catalog.size() == kExpectedNames.size());

    std::set<std::string> seen;
    for (std::size_t k = 0; k < catalog.size(); ++k) {
        INFO("index " << k);
        CHECK(catalog[k].name == kExpectedNames[k]);
        CHECK(seen.insert(catalog[k].name).second);
        CHECK_FALSE(catalog[k].statement.empty());
        CHECK(catalog[k].discovery == (kDiscovery.count(catalog[k].name) > 0));
    }
}

TEST_CASE("find_check resolves names and rejects unknowns") {
    const IdentityCheck* c = find_check("compose_order_oracle");
    REQUIRE(c != nullptr);
    CHECK(c->name == "compose_order_oracle");
    CHECK(find_check("no_such_identity") == nullptr);
    CHECK_THROWS_AS(run_check("no_such_identity", 1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("per-trial seeds derive from (seed, name, index)") {
    CHECK(derive_trial_seed(42, "a", 0) == derive_trial_seed(42, "a", 0));
    CHECK(derive_trial_seed(42, "a", 0) != derive_trial_seed(42, "a", 1));
    CHECK(derive_trial_seed(42, "a", 0) != derive_trial_seed(42, "b", 0));
    CHECK(derive_trial_seed(42, "a", 0) != derive_trial_seed(43, "a", 0));
}

TEST_CASE("reports are byte-identical across reruns") {
    const IdentityReport a = run_check("para_flex_relation", 5, 99, 2, 5);
    const IdentityReport b = run_check("para_flex_relation", 5, 99, 2, 5);
    CHECK(to_json(a).dump() == to_json(b).dump());

    // A different seed still passes: the identity holds on all inputs.
    const IdentityReport c = run_check("para_flex_relation", 5, 1234, 2, 5);
    CHECK(c.status == CheckStatus::Pass);
}

TEST_CASE("zero trials is a vacuous pass with a warning note") {
    const IdentityReport rep = run_check("octonion_alternative", 0, 42, 2, 5);
    CHECK(rep.status == CheckStatus::Pass);
    CHECK_FALSE(rep.note.empty());
    CHECK(rep.trials == 0);
}

TEST_CASE("discovery entries report discovery-fail, never a hard failure") {
    for (const std::string& name : kDiscovery) {
        const IdentityReport rep = run_check(name, 20, 42, 2, 5);
        INFO(name);
        CHECK(rep.status == CheckStatus::DiscoveryFail);
        CHECK_FALSE(rep.hard_failure());
        CHECK_FALSE(rep.counterexample.is_null());
    }
}

TEST_CASE("run_all returns one report per catalog entry in order") {
    const std::vector<IdentityReport> reports = run_all(1, 7, 2, 3);
    REQUIRE(reports.size() == identity_catalog().size());
    for (std::size_t k = 0; k < reports.size(); ++k) {
        CHECK(reports[k].name == kExpectedNames[k]);
        CHECK_FALSE(reports[k].hard_failure());
    }
}
