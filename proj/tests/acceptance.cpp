// Acceptance gate: one line per criterion, PASS/FAIL, exit 0 only when all
// pass. Kept as a plain binary (no test framework) so the output reads as a
// checklist.

#include <termspace/cli.hpp>

#include <iostream>

#include "test_util.hpp"

using namespace termspace;

namespace {

int failures = 0;

template <typename Fn>
void criterion(int idx, const std::string& what, Fn&& fn) {
    bool ok = false;
    std::string note;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        ok = false;
        note = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << what;
    if (!ok && !note.empty()) std::cout << " [" << note << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

struct CliRun {
    int exit_code;
    std::string out, err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<FiniteMonoid> family_corpus() {
    std::vector<FiniteMonoid> out;
    for (int n : {1, 2, 3, 4, 6, 8, 9, 10, 12}) out.push_back(make_family(FamilySpec::z_mult(n)));
    for (auto [i, p] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {3, 1}, {2, 3}})
        out.push_back(make_family(FamilySpec::cyclic(i, p)));
    for (int k = 1; k <= 8; ++k) out.push_back(make_family(FamilySpec::chain_semilattice(k)));
    out.push_back(make_family(FamilySpec::direct_product(
        {FamilySpec::boolean_monoid(), FamilySpec::boolean_monoid()})));
    out.push_back(make_family(
        FamilySpec::direct_product({FamilySpec::z_mult(3), FamilySpec::boolean_monoid()})));
    out.push_back(make_family(
        FamilySpec::direct_product({FamilySpec::z_mult(4), FamilySpec::z_mult(3)})));
    return out;
}

std::vector<int> members_of(const ElementSet& s) { return s.members(); }

}  // namespace

int main() {
    criterion(1, "corpus sweep: every monoid verifies clean", [] {
        AnalysisOptions opts;
        opts.max_points = 32;
        opts.seed = 1;
        int count = 0;
        bool ok = true;
        for (int n = 1; n <= 4; ++n)
            for (const FiniteMonoid& m : enumerate_commutative_monoids(n)) {
                ok = ok && run_all(m, "census", opts).ok();
                ++count;
            }
        for (const FiniteMonoid& m : family_corpus()) {
            ok = ok && run_all(m, "family", opts).ok();
            ++count;
        }
        return ok && count == 106 + 25;
    });

    criterion(2, "multiplication mod 6: landmark structure is exactly as computed", [] {
        FiniteMonoid m = testutil::z6();
        Analysis a = analyze(m);
        VerificationReport rep = run_all(m, "z6");
        bool ok = rep.ok();
        ok = ok && a.space.size() == 3;
        ok = ok && members_of(a.space.points[0].members) == std::vector<int>{0, 3};
        ok = ok && members_of(a.space.points[1].members) == std::vector<int>{0, 2, 4};
        ok = ok && members_of(a.space.points[2].members) == std::vector<int>{0, 2, 3, 4};
        ok = ok && a.density.spec_dense && !a.density.max_dense;
        ok = ok && a.density.corrected_pairing_holds && !a.density.swapped_pairing_holds;
        ok = ok && rep.property("swapped_density_pairing") == std::optional<bool>(false);
        ok = ok && rep.property("proper_class_kuratowski") == std::optional<bool>(false);
        ok = ok && a.components.components.size() == 2;
        ok = ok && a.noetherian.longest_chain == 4;
        ok = ok && members_of(a.radical_triple.m_radical.members) == std::vector<int>{0, 2, 3, 4};
        ok = ok && members_of(a.radical_triple.p_radical.members) == std::vector<int>{0};
        ok = ok && members_of(a.radical_triple.s_radical.members) == std::vector<int>{0};
        std::vector<int> proper;
        for (int i = 0; i < static_cast<int>(a.lattice.ideals.size()); ++i)
            if (a.cls[i].proper) proper.push_back(i);
        ClosureClassResult cc = closure_class_check(m, a.lattice, proper, AnalysisOptions{});
        ok = ok && cc.agree && !cc.is_kuratowski && cc.witness &&
             *cc.witness == std::array<int, 3>{1, 2, 0};
        return ok;
    });

    criterion(3, "multiplication mod 4: landmark structure is exactly as computed", [] {
        FiniteMonoid m = testutil::z4();
        Analysis a = analyze(m);
        VerificationReport rep = run_all(m, "z4");
        bool ok = rep.ok();
        ok = ok && a.space.size() == 2;
        ok = ok && members_of(a.space.points[0].members) == std::vector<int>{0};
        ok = ok && members_of(a.space.points[1].members) == std::vector<int>{0, 2};
        ok = ok && members_of(a.radical_triple.m_radical.members) == std::vector<int>{0, 2};
        ok = ok && members_of(a.radical_triple.p_radical.members) == std::vector<int>{0, 2};
        ok = ok && members_of(a.radical_triple.s_radical.members) == std::vector<int>{0};
        ok = ok && !a.density.spec_dense && !a.density.max_dense && !a.density.p_eq_s &&
             !a.density.m_eq_s;
        ok = ok && a.density.corrected_pairing_holds && a.density.swapped_pairing_holds;
        ok = ok && rep.property("hull_radical_two_sided") == std::optional<bool>(false);
        std::vector<int> proper;
        for (int i = 0; i < static_cast<int>(a.lattice.ideals.size()); ++i)
            if (a.cls[i].proper) proper.push_back(i);
        ClosureClassResult cc = closure_class_check(m, a.lattice, proper, AnalysisOptions{});
        ok = ok && cc.agree && cc.is_kuratowski;
        return ok;
    });

    criterion(4, "independent oracles agree on ideals, primes, strong irreducibility", [] {
        std::vector<FiniteMonoid> corpus;
        for (int n = 1; n <= 4; ++n)
            for (const FiniteMonoid& m : enumerate_commutative_monoids(n)) corpus.push_back(m);
        for (int n = 1; n <= 6; ++n) corpus.push_back(make_family(FamilySpec::z_mult(n)));
        for (auto [i, p] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {3, 1}, {2, 3}})
            corpus.push_back(make_family(FamilySpec::cyclic(i, p)));
        for (int k = 1; k <= 6; ++k) corpus.push_back(make_family(FamilySpec::chain_semilattice(k)));
        corpus.push_back(make_family(FamilySpec::direct_product(
            {FamilySpec::boolean_monoid(), FamilySpec::boolean_monoid()})));
        corpus.push_back(make_family(
            FamilySpec::direct_product({FamilySpec::z_mult(3), FamilySpec::boolean_monoid()})));

        bool ok = true;
        for (const FiniteMonoid& m : corpus) {
            std::vector<std::uint64_t> expected = testutil::oracle_ideals(m);
            IdealLattice lat = enumerate_ideals(m);
            std::vector<IdealClassification> cls = classify_all(m, lat);
            if (lat.ideals.size() != expected.size()) return false;
            std::uint64_t full = ElementSet::full(m.order).bits;
            for (std::size_t i = 0; i < expected.size(); ++i) {
                ok = ok && lat.ideals[i].members.bits == expected[i];
                ok = ok && cls[i].prime == testutil::oracle_is_prime(m, expected[i], full);
                ok = ok && cls[i].strongly_irreducible ==
                               testutil::oracle_is_si(expected, expected[i], full);
            }
            if (!ok) return false;
        }
        return ok;
    });

    criterion(5, "both closure-class decision routes agree everywhere tried", [] {
        bool ok = true;
        for (FiniteMonoid m : {testutil::z6(), make_family(FamilySpec::z_mult(12))}) {
            IdealLattice lat = enumerate_ideals(m);
            std::vector<IdealClassification> cls = classify_all(m, lat);
            std::vector<int> si, spec, proper;
            for (int i = 0; i < static_cast<int>(lat.ideals.size()); ++i) {
                if (cls[i].strongly_irreducible) si.push_back(i);
                if (cls[i].prime) spec.push_back(i);
                if (cls[i].proper) proper.push_back(i);
            }
            AnalysisOptions opts;
            ClosureClassResult a = closure_class_check(m, lat, si, opts);
            ClosureClassResult b = closure_class_check(m, lat, spec, opts);
            ClosureClassResult c = closure_class_check(m, lat, proper, opts);
            ok = ok && a.agree && a.is_kuratowski;
            ok = ok && b.agree && b.is_kuratowski;
            ok = ok && c.agree;
            if (m.order == 6) ok = ok && !c.is_kuratowski;

            std::mt19937_64 rng(0xC0FFEE);
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<int> fam;
                for (int idx : proper)
                    if (rng() & 1u) fam.push_back(idx);
                if (fam.empty()) fam.push_back(proper.front());
                ok = ok && closure_class_check(m, lat, fam, opts).agree;
            }
        }
        return ok;
    });

    criterion(6, "reports are deterministic and invariant under relabeling", [] {
        std::string path = testutil::data_path("z6.mon");
        CliRun first = run_cli({"--format", "machine", "verify", path});
        CliRun second = run_cli({"--format", "machine", "verify", path});
        bool ok = first.exit_code == 0 && second.exit_code == 0 && first.out == second.out;

        FiniteMonoid m = testutil::z6();
        VerificationReport base = run_all(m, "z6");
        Analysis ba = analyze(m);
        std::mt19937_64 rng(12345);
        std::vector<int> perm{0, 1, 2, 3, 4, 5};
        for (int trial = 0; trial < 3; ++trial) {
            for (int i = 5; i > 0; --i) {
                int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
                std::swap(perm[i], perm[j]);
            }
            FiniteMonoid mp = apply_permutation(m, perm);
            VerificationReport prep = run_all(mp, "z6p");
            if (prep.checks.size() != base.checks.size()) return false;
            for (std::size_t i = 0; i < base.checks.size(); ++i) {
                ok = ok && base.checks[i].id == prep.checks[i].id;
                ok = ok && base.checks[i].status == prep.checks[i].status;
            }
            ok = ok && base.properties == prep.properties;
            Analysis pa = analyze(mp);
            ok = ok && pa.lattice.ideals.size() == ba.lattice.ideals.size();
            ok = ok && pa.space.size() == ba.space.size();
            ok = ok && pa.closed_sets.size() == ba.closed_sets.size();
            ok = ok && pa.components.components.size() == ba.components.components.size();
            ok = ok && pa.noetherian.longest_chain == ba.noetherian.longest_chain;
            ok = ok && pa.canonical_subcover.size() == ba.canonical_subcover.size();
        }
        return ok;
    });

    criterion(7, "file formats round-trip and match the golden outputs", [] {
        bool ok = true;
        for (const char* name : {"z4.mon", "z6.mon", "boolean.mon", "trivial.mon", "diamond.mon"}) {
            FiniteMonoid m = parse_monoid_file(testutil::data_path(name));
            std::string s1 = serialize_monoid(m);
            FiniteMonoid back = parse_monoid_text(s1);
            ok = ok && serialize_monoid(back) == s1;
            ok = ok && back.names == m.names && back.table == m.table &&
                 back.identity == m.identity;
        }

        for (const char* stem : {"z4", "z6"}) {
            CliRun rep = run_cli({"--format", "machine", "verify",
                                  testutil::data_path(std::string(stem) + ".mon")});
            ok = ok && rep.exit_code == 0;
            ok = ok && rep.out == testutil::read_file(
                                      testutil::golden_path(std::string(stem) + "_report.json"));
            CliRun dot = run_cli({"export", "--dot", testutil::data_path(std::string(stem) + ".mon")});
            ok = ok && dot.exit_code == 0;
            ok = ok && dot.out == testutil::read_file(testutil::golden_path(std::string(stem) + ".dot"));
        }

        std::ostringstream counts;
        for (int n = 1; n <= 4; ++n) {
            CensusOptions iso;
            iso.up_to_iso = true;
            counts << "order " << n << ": labeled " << enumerate_commutative_monoids(n).size()
                   << " iso " << enumerate_commutative_monoids(n, iso).size() << "\n";
        }
        ok = ok && counts.str() == testutil::read_file(testutil::golden_path("census_counts.txt"));
        return ok;
    });

    std::cout << (failures == 0 ? "acceptance: all criteria pass"
                                : "acceptance: " + std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
