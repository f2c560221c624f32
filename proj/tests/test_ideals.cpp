#include <catch2/catch_amalgamated.hpp>

#include <termspace/corpus.hpp>
#include <termspace/ideals.hpp>

#include "test_util.hpp"

using namespace termspace;

namespace {

ElementSet set_of(int universe, std::initializer_list<int> elems) {
    ElementSet s = ElementSet::empty(universe);
    for (int e : elems) s.insert(e);
    return s;
}

std::vector<std::uint64_t> lattice_masks(const IdealLattice& lat) {
    std::vector<std::uint64_t> out;
    for (const Ideal& i : lat.ideals) out.push_back(i.members.bits);
    return out;
}

}  // namespace

TEST_CASE("ideal membership test") {
    FiniteMonoid m = testutil::z6();
    CHECK(is_ideal(m, set_of(6, {0, 3})));
    CHECK(is_ideal(m, set_of(6, {0, 2, 4})));
    CHECK(is_ideal(m, ElementSet::full(6)));
    CHECK_FALSE(is_ideal(m, set_of(6, {3})));      // 3.2 = 0 escapes
    CHECK_FALSE(is_ideal(m, set_of(6, {1, 2})));
    CHECK_FALSE(is_ideal(m, ElementSet::empty(6)));
}

TEST_CASE("generated and principal ideals") {
    FiniteMonoid m = testutil::z6();
    CHECK(principal_ideal(m, 2).members == set_of(6, {0, 2, 4}));
    CHECK(principal_ideal(m, 3).members == set_of(6, {0, 3}));
    CHECK(principal_ideal(m, 1).members == ElementSet::full(6));
    CHECK(generated_ideal(m, set_of(6, {2, 3})).members == set_of(6, {0, 2, 3, 4}));
    CHECK_THROWS_AS(generated_ideal(m, ElementSet::empty(6)), AnalysisError);
}

TEST_CASE("ideal enumeration matches the frozen structures") {
    IdealLattice z4lat = enumerate_ideals(testutil::z4());
    REQUIRE(z4lat.ideals.size() == 3);
    CHECK(z4lat.ideals[0].members == set_of(4, {0}));
    CHECK(z4lat.ideals[1].members == set_of(4, {0, 2}));
    CHECK(z4lat.ideals[2].members == ElementSet::full(4));

    IdealLattice z6lat = enumerate_ideals(testutil::z6());
    REQUIRE(z6lat.ideals.size() == 5);
    CHECK(z6lat.ideals[0].members == set_of(6, {0}));
    CHECK(z6lat.ideals[1].members == set_of(6, {0, 3}));
    CHECK(z6lat.ideals[2].members == set_of(6, {0, 2, 4}));
    CHECK(z6lat.ideals[3].members == set_of(6, {0, 2, 3, 4}));
    CHECK(z6lat.ideals[4].members == ElementSet::full(6));
    CHECK(z6lat.leq[0][1]);
    CHECK_FALSE(z6lat.leq[1][2]);
    CHECK(z6lat.index_of(set_of(6, {0, 3})) == 1);
    CHECK(z6lat.index_of(set_of(6, {1, 3})) == -1);

    // A group has no proper ideal.
    CHECK(enumerate_ideals(testutil::cyclic_group(4)).ideals.size() == 1);
}

TEST_CASE("enumeration agrees with the subset-scan oracle") {
    std::vector<FiniteMonoid> corpus{testutil::z4(),     testutil::z6(),
                                     testutil::boolean2(), testutil::diamond(),
                                     testutil::cyclic_group(3),
                                     make_family(FamilySpec::chain_semilattice(5)),
                                     make_family(FamilySpec::cyclic(2, 2)),
                                     make_family(FamilySpec::z_mult(8))};
    for (const FiniteMonoid& m : corpus) {
        CAPTURE(m.order, table_hash(m));
        CHECK(lattice_masks(enumerate_ideals(m)) == testutil::oracle_ideals(m));
    }
}

TEST_CASE("product ideals stay inside the intersection") {
    FiniteMonoid m = testutil::z6();
    IdealLattice lat = enumerate_ideals(m);
    Ideal p = product_ideal(m, lat.ideals[1], lat.ideals[2]);  // {0,3}.{0,2,4}
    CHECK(p.members == set_of(6, {0}));
    for (const Ideal& a : lat.ideals)
        for (const Ideal& b : lat.ideals)
            CHECK(product_ideal(m, a, b).members.subset_of(a.members & b.members));
}

TEST_CASE("radicals") {
    FiniteMonoid m4 = testutil::z4();
    CHECK(radical(m4, Ideal{set_of(4, {0})}).members == set_of(4, {0, 2}));
    CHECK(radical(m4, Ideal{set_of(4, {0, 2})}).members == set_of(4, {0, 2}));
    FiniteMonoid m6 = testutil::z6();
    CHECK(radical(m6, Ideal{set_of(6, {0})}).members == set_of(6, {0}));
    CHECK(radical(m6, Ideal{set_of(6, {0, 3})}).members == set_of(6, {0, 3}));
    CHECK(radical(m6, Ideal{ElementSet::full(6)}).members == ElementSet::full(6));
}

TEST_CASE("classification of the mod-4 ideals") {
    FiniteMonoid m = testutil::z4();
    IdealLattice lat = enumerate_ideals(m);
    auto cls = classify_all(m, lat);

    const IdealClassification& zero = cls[0];  // {0}
    CHECK(zero.proper);
    CHECK_FALSE(zero.prime);
    CHECK(zero.prime_witness == std::make_pair(2, 2));
    CHECK_FALSE(zero.maximal);
    CHECK(zero.maximal_witness == 1);
    CHECK(zero.irreducible);
    CHECK(zero.strongly_irreducible);
    CHECK_FALSE(zero.semiprime);
    CHECK(zero.semiprime_witness == 2);

    const IdealClassification& even = cls[1];  // {0,2}
    CHECK(even.prime);
    CHECK(even.maximal);
    CHECK(even.irreducible);
    CHECK(even.strongly_irreducible);
    CHECK(even.semiprime);

    const IdealClassification& whole = cls[2];
    CHECK_FALSE(whole.proper);
    CHECK_FALSE(whole.prime);
    CHECK_FALSE(whole.maximal);
    CHECK_FALSE(whole.irreducible);
    CHECK_FALSE(whole.strongly_irreducible);
    CHECK(whole.semiprime);  // the whole monoid is its own radical
}

TEST_CASE("classification of the mod-6 ideals") {
    FiniteMonoid m = testutil::z6();
    IdealLattice lat = enumerate_ideals(m);
    auto cls = classify_all(m, lat);

    const IdealClassification& zero = cls[0];  // {0}
    CHECK_FALSE(zero.prime);
    CHECK(zero.prime_witness == std::make_pair(2, 3));
    CHECK_FALSE(zero.strongly_irreducible);
    CHECK(zero.strongly_irreducible_witness == std::make_pair(1, 2));  // {0,3} and {0,2,4}
    CHECK_FALSE(zero.irreducible);
    CHECK(zero.irreducible_witness == std::make_pair(1, 2));
    CHECK(zero.semiprime);

    for (int i : {1, 2, 3}) {  // {0,3}, {0,2,4}, {0,2,3,4}
        CAPTURE(i);
        CHECK(cls[i].prime);
        CHECK(cls[i].strongly_irreducible);
        CHECK(cls[i].irreducible);
        CHECK(cls[i].semiprime);
    }
    CHECK_FALSE(cls[1].maximal);
    CHECK(cls[1].maximal_witness == 3);
    CHECK_FALSE(cls[2].maximal);
    CHECK(cls[3].maximal);
}

TEST_CASE("classification flags agree with the definition oracles") {
    std::vector<FiniteMonoid> corpus{testutil::z4(), testutil::z6(), testutil::diamond(),
                                     make_family(FamilySpec::chain_semilattice(4)),
                                     make_family(FamilySpec::cyclic(3, 2)),
                                     make_family(FamilySpec::z_mult(12))};
    for (const FiniteMonoid& m : corpus) {
        CAPTURE(m.order, table_hash(m));
        IdealLattice lat = enumerate_ideals(m);
        auto cls = classify_all(m, lat);
        std::vector<std::uint64_t> masks = testutil::oracle_ideals(m);
        std::uint64_t full = ElementSet::full(m.order).bits;
        REQUIRE(masks.size() == lat.ideals.size());
        for (std::size_t i = 0; i < masks.size(); ++i) {
            CAPTURE(masks[i]);
            CHECK(cls[i].prime == testutil::oracle_is_prime(m, masks[i], full));
            CHECK(cls[i].strongly_irreducible == testutil::oracle_is_si(masks, masks[i], full));
        }
    }
}

TEST_CASE("classify rejects sets outside the lattice") {
    FiniteMonoid m = testutil::z4();
    IdealLattice lat = enumerate_ideals(m);
    CHECK_THROWS_AS(classify_ideal(m, Ideal{set_of(4, {0, 1})}, lat), AnalysisError);
}

TEST_CASE("the ideal lattice is distributive and arithmetic sides agree") {
    for (const FiniteMonoid& m : {testutil::z4(), testutil::z6(), testutil::diamond(),
                                  testutil::cyclic_group(5),
                                  make_family(FamilySpec::z_mult(12))}) {
        CAPTURE(m.order, table_hash(m));
        IdealLattice lat = enumerate_ideals(m);
        auto cls = classify_all(m, lat);
        DistributivityResult d = lattice_analysis(lat);
        CHECK(d.is_distributive);
        CHECK_FALSE(d.counterexample.has_value());
        ArithmeticResult ar = arithmetic_check(m, lat, cls);
        CHECK(ar.side_distributive);
        CHECK(ar.side_si_intersection);
        CHECK(ar.agree);
    }
}
