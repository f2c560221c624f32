#include <catch2/catch_amalgamated.hpp>

#include <termspace/corpus.hpp>
#include <termspace/verify.hpp>

#include "test_util.hpp"

using namespace termspace;

namespace {

std::vector<std::pair<std::string, bool>> props_of(const VerificationReport& rep) {
    return rep.properties;
}

}  // namespace

TEST_CASE("registry ids are unique and reports follow them in order") {
    const auto& reg = check_registry();
    REQUIRE(reg.size() == 23);
    for (std::size_t i = 0; i < reg.size(); ++i)
        for (std::size_t j = i + 1; j < reg.size(); ++j) CHECK(reg[i] != reg[j]);

    VerificationReport rep = run_all(testutil::z4(), "z4");
    REQUIRE(rep.checks.size() == reg.size());
    for (std::size_t i = 0; i < reg.size(); ++i) CHECK(rep.checks[i].id == reg[i]);
    CHECK(rep.name == "z4");
    CHECK(rep.order == 4);
    CHECK(rep.hash == table_hash(testutil::z4()));
    CHECK(rep.find("no_such_row") == nullptr);
    CHECK_FALSE(rep.property("no_such_key").has_value());
}

TEST_CASE("multiplication mod 4: every claim holds") {
    VerificationReport rep = run_all(testutil::z4(), "z4");
    CHECK(rep.ok());
    CHECK(rep.pass_count == 22);
    CHECK(rep.fail_count == 0);
    CHECK(rep.vacuous_count == 0);
    CHECK(rep.degenerate_count == 1);

    const CheckResult* dcc = rep.find("noetherian_dcc");
    REQUIRE(dcc != nullptr);
    CHECK(dcc->status == CheckStatus::degenerate);
    CHECK(dcc->witness == "finite scale; longest closed-set chain 3");

    CHECK(rep.find("quasi_compactness")->witness == "subcover size 1 of 2 opens");
    CHECK(rep.find("t1_iff_antichain")->witness == "both false: {0} below {0,2}");
    CHECK(rep.find("components_minimal_si_bijection")->witness == "1 component(s)");
    CHECK(rep.find("closure_class_proper")->witness.empty());  // family is a closure class

    std::vector<std::pair<std::string, bool>> expected = {
        {"distributive_lattice", true},
        {"every_ideal_meet_of_si", true},
        {"t1", false},
        {"specialization_antichain", false},
        {"hull_radical_two_sided", false},
        {"pointset_union_identity", false},
        {"pointset_intersection_identity", false},
        {"spec_dense", false},
        {"max_dense", false},
        {"prime_radical_eq_space_radical", false},
        {"max_radical_eq_space_radical", false},
        {"swapped_density_pairing", true},
        {"proper_class_kuratowski", true},
        {"max_at_most_one", true},
        {"subset_scan_exhaustive", true},
    };
    CHECK(props_of(rep) == expected);
}

TEST_CASE("multiplication mod 6: every claim holds") {
    VerificationReport rep = run_all(testutil::z6(), "z6");
    CHECK(rep.ok());
    CHECK(rep.pass_count == 22);
    CHECK(rep.degenerate_count == 1);

    CHECK(rep.property("spec_dense") == true);
    CHECK(rep.property("max_dense") == false);
    CHECK(rep.property("prime_radical_eq_space_radical") == true);
    CHECK(rep.property("max_radical_eq_space_radical") == false);
    CHECK(rep.property("swapped_density_pairing") == false);
    CHECK(rep.property("proper_class_kuratowski") == false);
    CHECK(rep.property("hull_radical_two_sided") == true);
    CHECK(rep.property("t1") == false);

    const CheckResult* proper = rep.find("closure_class_proper");
    REQUIRE(proper != nullptr);
    CHECK(proper->status == CheckStatus::pass);
    CHECK(proper->witness ==
          "family is not a closure class; absorption fails at A={0,3} B={0,2,4} I={0}");
    CHECK(rep.find("quasi_compactness")->witness == "subcover size 1 of 4 opens");
    CHECK(rep.find("components_minimal_si_bijection")->witness == "2 component(s)");
    CHECK(rep.find("noetherian_dcc")->witness == "finite scale; longest closed-set chain 4");
}

TEST_CASE("groups have empty terminal spaces and mostly vacuous rows") {
    for (FiniteMonoid m : {make_family(FamilySpec::z_mult(1)), testutil::cyclic_group(2),
                           testutil::cyclic_group(5)}) {
        VerificationReport rep = run_all(m, "group");
        CAPTURE(m.order);
        CHECK(rep.ok());
        CHECK(rep.pass_count == 10);
        CHECK(rep.fail_count == 0);
        CHECK(rep.vacuous_count == 12);
        CHECK(rep.degenerate_count == 1);
        CHECK(rep.find("kuratowski_axioms")->status == CheckStatus::vacuous);
        CHECK(rep.find("closure_class_proper")->status == CheckStatus::vacuous);
        CHECK(rep.find("density_corrected_pairing")->status == CheckStatus::vacuous);
        // The one space row that still runs: {empty} is a topology on no points.
        CHECK(rep.find("closed_sets_topology")->status == CheckStatus::pass);
        CHECK(rep.find("maximal_ideal_structure")->status == CheckStatus::pass);
        CHECK(rep.property("proper_class_kuratowski") == false);
        CHECK(rep.property("spec_dense") == true);  // empty space: both closures are empty
        CHECK(rep.property("max_at_most_one") == true);
    }
}

TEST_CASE("one-point space: the meet semilattice on two elements") {
    VerificationReport rep = run_all(testutil::boolean2(), "boolean");
    CHECK(rep.ok());
    CHECK(rep.pass_count == 22);
    CHECK(rep.vacuous_count == 0);
    CHECK(rep.property("t1") == true);
    CHECK(rep.property("specialization_antichain") == true);
    CHECK(rep.property("pointset_union_identity") == false);
    CHECK(rep.property("proper_class_kuratowski") == true);
    CHECK(rep.find("t1_iff_antichain")->witness.empty());
}

TEST_CASE("long chains hit the sampling and capacity guards") {
    FiniteMonoid c14 = make_family(FamilySpec::chain_semilattice(14));
    try {
        run_all(c14, "chain14");
        FAIL("expected a sampling-seed error");
    } catch (const AnalysisError& e) {
        CHECK(e.kind == AnalysisErrorKind::SamplingSeedRequired);
    }
    AnalysisOptions seeded;
    seeded.seed = 7;
    VerificationReport rep = run_all(c14, "chain14", seeded);
    CHECK(rep.ok());
    CHECK(rep.property("subset_scan_exhaustive") == false);
    CHECK(rep.property("t1") == false);

    FiniteMonoid c22 = make_family(FamilySpec::chain_semilattice(22));
    try {
        run_all(c22, "chain22");
        FAIL("expected a point-cap error");
    } catch (const AnalysisError& e) {
        CHECK(e.kind == AnalysisErrorKind::TooManyPoints);
    }
    AnalysisOptions wide;
    wide.max_points = 25;
    wide.seed = 11;
    VerificationReport wrep = run_all(c22, "chain22", wide);
    CHECK(wrep.ok());
    CHECK(wrep.find("noetherian_dcc")->witness == "finite scale; longest closed-set chain 22");
}

TEST_CASE("every monoid of order up to three verifies clean") {
    for (int n = 1; n <= 3; ++n) {
        for (const FiniteMonoid& m : enumerate_commutative_monoids(n)) {
            VerificationReport rep = run_all(m, "census");
            CAPTURE(n, table_hash(m));
            CHECK(rep.ok());
            CHECK(rep.pass_count + rep.vacuous_count + rep.degenerate_count == 23);
        }
    }
}

TEST_CASE("reports are deterministic run to run") {
    VerificationReport a = run_all(testutil::z6(), "z6");
    VerificationReport b = run_all(testutil::z6(), "z6");
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].id == b.checks[i].id);
        CHECK(a.checks[i].status == b.checks[i].status);
        CHECK(a.checks[i].witness == b.checks[i].witness);
    }
    CHECK(a.properties == b.properties);
}
