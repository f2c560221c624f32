#pragma once

// The terminal space of a finite commutative monoid: strongly irreducible
// ideals as points, closed sets generated by the hull-kernel operator, and
// the battery of per-space analyses (separation, compactness, components,
// radicals, density, chain structure).

#include <random>

#include "ideals.hpp"

namespace termspace {

// Subsets of the point list reuse ElementSet with universe = point count.
using PointSet = ElementSet;

struct TerminalSpace {
    int monoid_order = 0;
    std::vector<Ideal> points;       // strongly irreducible ideals, canonical order
    std::vector<int> lattice_index;  // points[i] == lattice.ideals[lattice_index[i]]
    std::vector<std::vector<bool>> leq;  // specialization: points[i] subset of points[j]

    int size() const { return static_cast<int>(points.size()); }
};

// A closed set is determined by its members; the kernel ideal rides along
// for every nonempty one (the empty set has no kernel by convention).
struct ClosedSet {
    PointSet members;
    std::optional<Ideal> kernel_ideal;

    friend bool operator==(const ClosedSet& a, const ClosedSet& b) {
        return a.members == b.members;
    }
};

struct AnalysisOptions {
    int max_points = 20;        // hard cap on the space size
    int exhaustive_limit = 12;  // largest point count scanned over all 2^p subsets
    int sample_count = 1024;    // subset sample size beyond that
    std::optional<std::uint64_t> seed;  // required for sampled subset scans
};

inline TerminalSpace build_terminal_space(const FiniteMonoid& m, const IdealLattice& lat,
                                          const std::vector<IdealClassification>& cls,
                                          const AnalysisOptions& opts = {}) {
    TerminalSpace s;
    s.monoid_order = m.order;
    for (int i = 0; i < static_cast<int>(lat.ideals.size()); ++i)
        if (cls[i].strongly_irreducible) {
            s.points.push_back(lat.ideals[i]);
            s.lattice_index.push_back(i);
        }
    if (s.size() > opts.max_points)
        throw AnalysisError(AnalysisErrorKind::TooManyPoints,
                            "terminal space has " + std::to_string(s.size()) +
                                " points, above the configured cap " + std::to_string(opts.max_points),
                            s.size());
    const int p = s.size();
    s.leq.assign(p, std::vector<bool>(p, false));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            s.leq[i][j] = s.points[i].members.subset_of(s.points[j].members);
    return s;
}

namespace detail {

// Hull-kernel composite on raw masks: points whose ideal contains the
// intersection of the ideals indexed by x. Empty input stays empty.
inline std::uint64_t hk_mask(const std::vector<Ideal>& pts, std::uint64_t x) {
    if (x == 0) return 0;
    std::uint64_t kernel = ~std::uint64_t{0};
    for (std::size_t i = 0; i < pts.size(); ++i)
        if ((x >> i) & 1u) kernel &= pts[i].members.bits;
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if ((kernel & ~pts[i].members.bits) == 0) out |= std::uint64_t{1} << i;
    return out;
}

inline std::uint64_t hull_mask(const std::vector<Ideal>& pts, std::uint64_t ideal_bits) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if ((ideal_bits & ~pts[i].members.bits) == 0) out |= std::uint64_t{1} << i;
    return out;
}

}  // namespace detail

// Intersection of the ideals at the given points; rejects the empty family
// (there is no sensible kernel for it at this level).
inline Ideal kernel(const TerminalSpace& s, const PointSet& x) {
    if (x.universe != s.size())
        throw AnalysisError(AnalysisErrorKind::MismatchedUniverse, "kernel: point set from another space");
    if (x.is_empty())
        throw AnalysisError(AnalysisErrorKind::EmptyPointSet, "kernel: empty point set has no kernel");
    ElementSet k = ElementSet::full(s.monoid_order);
    for (int i = 0; i < s.size(); ++i)
        if (x.contains(i)) k = k & s.points[i].members;
    return Ideal{k};
}

inline ClosedSet hull(const TerminalSpace& s, const Ideal& a) {
    PointSet members{detail::hull_mask(s.points, a.members.bits), s.size()};
    ClosedSet c{members, std::nullopt};
    if (!members.is_empty()) c.kernel_ideal = kernel(s, members);
    return c;
}

// Closure of an arbitrary point set: hull of its kernel, with the empty set
// fixed. This is the operator whose Kuratowski behaviour gets verified.
inline ClosedSet hk_closure(const TerminalSpace& s, const PointSet& x) {
    if (x.universe != s.size())
        throw AnalysisError(AnalysisErrorKind::MismatchedUniverse,
                            "hk_closure: point set from another space");
    PointSet members{detail::hk_mask(s.points, x.bits), s.size()};
    ClosedSet c{members, std::nullopt};
    if (!members.is_empty()) c.kernel_ideal = kernel(s, members);
    return c;
}

// All closed sets: the empty set plus the hull of every ideal (the kernel of
// any point set is an ideal, so nothing else can occur). Sorted canonically
// and sanity-checked for closure under union and intersection.
inline std::vector<ClosedSet> enumerate_closed_sets(const TerminalSpace& s, const IdealLattice& lat) {
    std::set<std::uint64_t> masks;
    masks.insert(0);
    for (const Ideal& a : lat.ideals) masks.insert(detail::hull_mask(s.points, a.members.bits));
    std::vector<ClosedSet> out;
    for (std::uint64_t bits : masks) {
        PointSet members{bits, s.size()};
        ClosedSet c{members, std::nullopt};
        if (bits != 0) c.kernel_ideal = kernel(s, members);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const ClosedSet& a, const ClosedSet& b) {
        return set_order_less(a.members, b.members);
    });
    for (const ClosedSet& a : out)
        for (const ClosedSet& b : out) {
            if (!masks.count(a.members.bits & b.members.bits) ||
                !masks.count(a.members.bits | b.members.bits))
                throw std::logic_error("enumerate_closed_sets: family not closed under union/intersection");
        }
    return out;
}

// Subset masks to scan: every subset when the point count is small, else a
// seeded deterministic sample that always includes the empty set, the full
// set and all singletons.
inline std::vector<std::uint64_t> subset_pool(int p, const AnalysisOptions& opts) {
    std::vector<std::uint64_t> pool;
    if (p <= opts.exhaustive_limit) {
        pool.resize(std::size_t{1} << p);
        for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
        return pool;
    }
    if (!opts.seed)
        throw AnalysisError(AnalysisErrorKind::SamplingSeedRequired,
                            "subset scan over " + std::to_string(p) +
                                " points is sampled and needs an explicit seed");
    std::set<std::uint64_t> seen;
    const std::uint64_t full = (p == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1;
    seen.insert(0);
    seen.insert(full);
    for (int i = 0; i < p; ++i) seen.insert(std::uint64_t{1} << i);
    std::mt19937_64 rng(*opts.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, full);
    while (static_cast<int>(seen.size()) < opts.sample_count + p + 2) seen.insert(dist(rng));
    pool.assign(seen.begin(), seen.end());
    return pool;
}

struct KuratowskiReport {
    // The four closure axioms for the hull-kernel operator.
    bool preserves_empty = false;
    bool extensive = false;
    bool idempotent = false;
    bool additive = false;
    std::optional<std::uint64_t> extensive_witness, idempotent_witness;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> additive_witness;

    bool hull_of_full_is_empty = false;   // hull(M) = empty set
    bool matches_topology = false;        // closure = least enumerated closed superset
    std::optional<std::uint64_t> topology_witness;

    // Ideal-level identities the closure operator satisfies...
    bool hull_union_identity = false;         // hull(A) u hull(B) = hull(A n B)
    bool hull_intersection_identity = false;  // hull(A) n hull(B) = hull(A u B)
    bool radical_chain = false;               // closure(X) = hull(<K(X)>) >= hull(rad <K(X)>)
    std::optional<std::pair<int, int>> hull_union_witness, hull_intersection_witness;
    std::optional<std::uint64_t> radical_chain_witness;

    // ...and their naive point-set transcriptions, which are recorded as
    // observations (they fail on most spaces and nothing claims otherwise).
    bool pointset_union_identity = false;         // cl(X) u cl(X') = cl(X n X')
    bool pointset_intersection_identity = false;  // cl(X) n cl(X') = cl(X u X')
    std::optional<std::pair<std::uint64_t, std::uint64_t>> pointset_union_witness,
        pointset_intersection_witness;

    std::uint64_t subsets_checked = 0;
    bool exhaustive = true;
};

inline KuratowskiReport verify_kuratowski(const FiniteMonoid& m, const TerminalSpace& s,
                                          const IdealLattice& lat,
                                          const std::vector<ClosedSet>& closed,
                                          const AnalysisOptions& opts = {}) {
    KuratowskiReport r;
    const int p = s.size();
    const std::vector<std::uint64_t> pool = subset_pool(p, opts);
    r.subsets_checked = pool.size();
    r.exhaustive = p <= opts.exhaustive_limit;

    // Precompute closures for the whole pool; with an exhaustive pool the
    // table is directly indexable by mask.
    std::vector<std::uint64_t> cl(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) cl[i] = detail::hk_mask(s.points, pool[i]);
    auto closure_of = [&](std::uint64_t x) {
        if (r.exhaustive) return cl[x];
        return detail::hk_mask(s.points, x);
    };

    r.preserves_empty = closure_of(0) == 0;
    r.extensive = r.idempotent = true;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if ((pool[i] & ~cl[i]) != 0) {
            if (r.extensive) r.extensive_witness = pool[i];
            r.extensive = false;
        }
        if (closure_of(cl[i]) != cl[i]) {
            if (r.idempotent) r.idempotent_witness = pool[i];
            r.idempotent = false;
        }
    }
    r.additive = true;
    for (std::size_t i = 0; i < pool.size() && r.additive; ++i)
        for (std::size_t j = i; j < pool.size(); ++j)
            if (closure_of(pool[i] | pool[j]) != (cl[i] | cl[j])) {
                r.additive = false;
                r.additive_witness = {pool[i], pool[j]};
                break;
            }

    r.hull_of_full_is_empty =
        detail::hull_mask(s.points, ElementSet::full(m.order).bits) == 0;

    r.matches_topology = true;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        std::uint64_t least = ~std::uint64_t{0};
        for (const ClosedSet& c : closed)
            if ((pool[i] & ~c.members.bits) == 0) least &= c.members.bits;
        if (least != cl[i]) {
            r.matches_topology = false;
            r.topology_witness = pool[i];
            break;
        }
    }

    const int k = static_cast<int>(lat.ideals.size());
    r.hull_union_identity = r.hull_intersection_identity = true;
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            std::uint64_t ha = detail::hull_mask(s.points, lat.ideals[a].members.bits);
            std::uint64_t hb = detail::hull_mask(s.points, lat.ideals[b].members.bits);
            std::uint64_t meet = lat.ideals[a].members.bits & lat.ideals[b].members.bits;
            std::uint64_t join = lat.ideals[a].members.bits | lat.ideals[b].members.bits;
            if (r.hull_union_identity && (ha | hb) != detail::hull_mask(s.points, meet)) {
                r.hull_union_identity = false;
                r.hull_union_witness = {a, b};
            }
            if (r.hull_intersection_identity && (ha & hb) != detail::hull_mask(s.points, join)) {
                r.hull_intersection_identity = false;
                r.hull_intersection_witness = {a, b};
            }
        }

    r.radical_chain = true;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i] == 0) continue;
        Ideal kx = kernel(s, PointSet{pool[i], p});
        Ideal gen = generated_ideal(m, kx.members);  // equals kx; exercises the op
        std::uint64_t h_gen = detail::hull_mask(s.points, gen.members.bits);
        std::uint64_t h_rad = detail::hull_mask(s.points, radical(m, gen).members.bits);
        if (cl[i] != h_gen || (h_rad & ~h_gen) != 0) {
            r.radical_chain = false;
            r.radical_chain_witness = pool[i];
            break;
        }
    }

    r.pointset_union_identity = r.pointset_intersection_identity = true;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) {
            if (r.pointset_union_identity &&
                (cl[i] | cl[j]) != closure_of(pool[i] & pool[j])) {
                r.pointset_union_identity = false;
                r.pointset_union_witness = {pool[i], pool[j]};
            }
            if (r.pointset_intersection_identity &&
                (cl[i] & cl[j]) != closure_of(pool[i] | pool[j])) {
                r.pointset_intersection_identity = false;
                r.pointset_intersection_witness = {pool[i], pool[j]};
            }
            if (!r.pointset_union_identity && !r.pointset_intersection_identity) break;
        }
    return r;
}

struct ClosureClassResult {
    // Route (a): the restricted hull-kernel operator of the family is a
    // closure operator, including additivity at the ideal level.
    bool direct_kuratowski = false;
    // Route (b): every member absorbs finite intersections.
    bool absorption = false;
    bool agree = false;
    bool is_kuratowski = false;  // the agreed verdict
    std::optional<std::array<int, 3>> witness;  // lattice indices (A, B, I)
};

// Decides whether a family F of proper ideals induces a closure operator,
// by two independent routes that must coincide: a Kuratowski check of the
// restricted operator and the absorption property of each member.
inline ClosureClassResult closure_class_check(const FiniteMonoid& m, const IdealLattice& lat,
                                              const std::vector<int>& family,
                                              const AnalysisOptions& opts = {}) {
    std::vector<int> fam = family;
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    std::vector<Ideal> pts;
    for (int idx : fam) {
        if (idx < 0 || idx >= static_cast<int>(lat.ideals.size()))
            throw AnalysisError(AnalysisErrorKind::IdealNotInLattice,
                                "closure_class_check: family index out of range", idx);
        if (lat.ideals[idx].members == ElementSet::full(m.order))
            throw AnalysisError(AnalysisErrorKind::IdealNotInLattice,
                                "closure_class_check: family members must be proper ideals", idx);
        pts.push_back(lat.ideals[idx]);
    }
    const int p = static_cast<int>(pts.size());
    const int k = static_cast<int>(lat.ideals.size());
    ClosureClassResult r;

    // Route (a): subset-level closure axioms plus ideal-level additivity of
    // the induced hull. The subset axioms alone cannot see absorption
    // failures (they hold for any family), so the ideal-level identity is
    // what gives this route teeth.
    r.direct_kuratowski = true;
    const std::vector<std::uint64_t> pool = subset_pool(p, opts);
    std::vector<std::uint64_t> cl(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) cl[i] = detail::hk_mask(pts, pool[i]);
    auto closure_of = [&](std::uint64_t x) {
        if (p <= opts.exhaustive_limit) return cl[x];
        return detail::hk_mask(pts, x);
    };
    if (closure_of(0) != 0) r.direct_kuratowski = false;
    for (std::size_t i = 0; i < pool.size() && r.direct_kuratowski; ++i)
        if ((pool[i] & ~cl[i]) != 0 || closure_of(cl[i]) != cl[i]) r.direct_kuratowski = false;
    for (std::size_t i = 0; i < pool.size() && r.direct_kuratowski; ++i)
        for (std::size_t j = i; j < pool.size(); ++j)
            if (closure_of(pool[i] | pool[j]) != (cl[i] | cl[j])) {
                r.direct_kuratowski = false;
                break;
            }
    for (int a = 0; a < k && r.direct_kuratowski; ++a)
        for (int b = a; b < k; ++b) {
            std::uint64_t ha = detail::hull_mask(pts, lat.ideals[a].members.bits);
            std::uint64_t hb = detail::hull_mask(pts, lat.ideals[b].members.bits);
            std::uint64_t meet = lat.ideals[a].members.bits & lat.ideals[b].members.bits;
            if ((ha | hb) != detail::hull_mask(pts, meet)) {
                r.direct_kuratowski = false;
                break;
            }
        }

    // Route (b): absorption, with the first counterexample in scan order.
    r.absorption = true;
    for (std::size_t f = 0; f < fam.size() && r.absorption; ++f) {
        const ElementSet& i_members = lat.ideals[fam[f]].members;
        for (int a = 0; a < k && r.absorption; ++a)
            for (int b = a; b < k; ++b) {
                if (!(lat.ideals[a].members & lat.ideals[b].members).subset_of(i_members)) continue;
                if (lat.ideals[a].members.subset_of(i_members) ||
                    lat.ideals[b].members.subset_of(i_members))
                    continue;
                r.absorption = false;
                r.witness = {{a, b, fam[f]}};
                break;
            }
    }

    r.agree = r.direct_kuratowski == r.absorption;
    r.is_kuratowski = r.absorption;
    return r;
}

struct SeparationResult {
    bool t0 = false;
    bool t1 = false;
    bool antichain = false;
    std::optional<std::pair<int, int>> t0_witness;     // distinct points, equal closures
    std::optional<std::pair<int, int>> chain_witness;  // points[i] strictly below points[j]
};

// T0/T1 are computed topologically (via singleton closures); the antichain
// property order-theoretically. Their relationships are asserted downstream,
// never here.
inline SeparationResult separation_check(const TerminalSpace& s) {
    SeparationResult r;
    const int p = s.size();
    std::vector<std::uint64_t> closure(p);
    for (int i = 0; i < p; ++i) closure[i] = detail::hk_mask(s.points, std::uint64_t{1} << i);
    r.t0 = true;
    for (int i = 0; i < p && r.t0; ++i)
        for (int j = i + 1; j < p; ++j)
            if (closure[i] == closure[j]) {
                r.t0 = false;
                r.t0_witness = {i, j};
                break;
            }
    r.t1 = true;
    for (int i = 0; i < p; ++i)
        if (closure[i] != (std::uint64_t{1} << i)) {
            r.t1 = false;
            break;
        }
    r.antichain = true;
    for (int i = 0; i < p && r.antichain; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j && s.leq[i][j]) {
                r.antichain = false;
                r.chain_witness = {i, j};
                break;
            }
    return r;
}

// Greedy subcover extraction from a cover by open sets (given as point-set
// masks). Preference: the open whose closed complement has the largest
// kernel ideal, ties by input position; an empty closed complement counts as
// kernel M. Throws NotACover (with an uncovered point) on non-covers.
inline std::vector<int> compactness_witness(const TerminalSpace& s,
                                            const std::vector<PointSet>& opens) {
    const int p = s.size();
    std::uint64_t full = ElementSet::full(p).bits;
    std::uint64_t covered = 0;
    for (const PointSet& o : opens) covered |= o.bits;
    if (covered != full) {
        int missing = 0;
        for (int i = 0; i < p; ++i)
            if (!((covered >> i) & 1u)) {
                missing = i;
                break;
            }
        throw AnalysisError(AnalysisErrorKind::NotACover,
                            "compactness_witness: open family misses point " + std::to_string(missing),
                            missing);
    }
    std::vector<int> order(opens.size());
    for (std::size_t i = 0; i < opens.size(); ++i) order[i] = static_cast<int>(i);
    auto kernel_size = [&](int idx) {
        std::uint64_t closed_bits = full & ~opens[idx].bits;
        if (closed_bits == 0) return s.monoid_order;  // complement is empty: kernel is all of M
        return kernel(s, PointSet{closed_bits, p}).members.size();
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ka = kernel_size(a), kb = kernel_size(b);
        if (ka != kb) return ka > kb;
        return a < b;
    });
    std::uint64_t have = 0;
    std::vector<int> chosen;
    for (int idx : order) {
        if (have == full) break;
        if ((opens[idx].bits & ~have) != 0) {
            chosen.push_back(idx);
            have |= opens[idx].bits;
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// The canonical cover used by the verifier: every nonempty open set, i.e.
// the complements of the enumerated closed sets other than the full space.
inline std::vector<PointSet> canonical_cover(const TerminalSpace& s,
                                             const std::vector<ClosedSet>& closed) {
    std::vector<PointSet> opens;
    for (const ClosedSet& c : closed) {
        PointSet o = c.members.complement();
        if (!o.is_empty()) opens.push_back(o);
    }
    return opens;
}

struct IrreducibleClosedResult {
    bool irreducible = false;             // not a union of two strictly smaller closed sets
    bool kernel_strongly_irreducible = false;
    std::optional<std::pair<int, int>> reducibility_witness;  // closed-set indices
    std::optional<int> generic_point;     // first point whose closure is the set
    int generic_count = 0;
    bool generic_is_kernel = false;       // that point's ideal equals the kernel
};

inline IrreducibleClosedResult irreducible_closed_analysis(const TerminalSpace& s,
                                                           const std::vector<ClosedSet>& closed,
                                                           int target,
                                                           const IdealLattice& lat,
                                                           const std::vector<IdealClassification>& cls) {
    const ClosedSet& c = closed[target];
    if (c.members.is_empty())
        throw AnalysisError(AnalysisErrorKind::EmptyClosedSet,
                            "irreducible_closed_analysis: the empty set is not irreducible by fiat");
    IrreducibleClosedResult r;
    r.irreducible = true;
    const int nc = static_cast<int>(closed.size());
    for (int a = 0; a < nc && r.irreducible; ++a)
        for (int b = a; b < nc; ++b) {
            std::uint64_t u = closed[a].members.bits | closed[b].members.bits;
            if ((c.members.bits & ~u) != 0) continue;  // not covered by the pair
            if ((c.members.bits & ~closed[a].members.bits) == 0 ||
                (c.members.bits & ~closed[b].members.bits) == 0)
                continue;
            r.irreducible = false;
            r.reducibility_witness = {a, b};
            break;
        }
    int ker_idx = lat.index_of(c.kernel_ideal->members);
    r.kernel_strongly_irreducible = ker_idx >= 0 && cls[ker_idx].strongly_irreducible;
    for (int g = 0; g < s.size(); ++g) {
        if (!c.members.contains(g)) continue;
        if (detail::hk_mask(s.points, std::uint64_t{1} << g) == c.members.bits) {
            if (r.generic_count == 0) {
                r.generic_point = g;
                r.generic_is_kernel = s.points[g].members == c.kernel_ideal->members;
            }
            ++r.generic_count;
        }
    }
    return r;
}

struct ComponentsResult {
    std::vector<int> components;      // closed-set indices, maximal irreducible
    std::vector<int> minimal_points;  // points minimal in the specialization order
    std::vector<std::pair<int, int>> pairing;  // (minimal point, its hull's closed-set index)
    bool bijection_ok = false;
};

inline ComponentsResult irreducible_components(const TerminalSpace& s,
                                               const std::vector<ClosedSet>& closed,
                                               const IdealLattice& lat,
                                               const std::vector<IdealClassification>& cls) {
    ComponentsResult r;
    const int nc = static_cast<int>(closed.size());
    std::vector<bool> irr(nc, false);
    for (int i = 0; i < nc; ++i)
        if (!closed[i].members.is_empty())
            irr[i] = irreducible_closed_analysis(s, closed, i, lat, cls).irreducible;
    for (int i = 0; i < nc; ++i) {
        if (!irr[i]) continue;
        bool maximal = true;
        for (int j = 0; j < nc && maximal; ++j)
            if (j != i && irr[j] && closed[i].members.subset_of(closed[j].members) &&
                !(closed[i].members == closed[j].members))
                maximal = false;
        if (maximal) r.components.push_back(i);
    }
    for (int i = 0; i < s.size(); ++i) {
        bool minimal = true;
        for (int j = 0; j < s.size() && minimal; ++j)
            if (j != i && s.leq[j][i]) minimal = false;
        if (minimal) r.minimal_points.push_back(i);
    }
    // Hulls of minimal points should enumerate the components exactly once.
    std::vector<int> hit;
    for (int pt : r.minimal_points) {
        std::uint64_t h = detail::hull_mask(s.points, s.points[pt].members.bits);
        int found = -1;
        for (int ci = 0; ci < nc; ++ci)
            if (closed[ci].members.bits == h) {
                found = ci;
                break;
            }
        r.pairing.push_back({pt, found});
        hit.push_back(found);
    }
    std::sort(hit.begin(), hit.end());
    std::vector<int> comps = r.components;
    std::sort(comps.begin(), comps.end());
    r.bijection_ok = hit == comps && std::adjacent_find(hit.begin(), hit.end()) == hit.end();
    return r;
}

struct InvertibilityResult {
    std::vector<bool> criterion;  // hull(<e>) is empty
    std::vector<bool> unit;
    bool equivalence = false;
    std::optional<int> witness;  // element where the two differ
};

inline InvertibilityResult invertibility_check(const FiniteMonoid& m, const TerminalSpace& s) {
    InvertibilityResult r;
    ElementSet u = units(m);
    for (int e = 0; e < m.order; ++e) {
        Ideal pe = principal_ideal(m, e);
        r.criterion.push_back(detail::hull_mask(s.points, pe.members.bits) == 0);
        r.unit.push_back(u.contains(e));
    }
    r.equivalence = true;
    for (int e = 0; e < m.order; ++e)
        if (r.criterion[e] != r.unit[e]) {
            r.equivalence = false;
            if (!r.witness) r.witness = e;
        }
    return r;
}

struct NoetherianResult {
    bool dcc = true;       // every descending chain of closed sets stabilizes
    int longest_chain = 0; // length of the longest strict chain of closed sets
};

// At this scale both chain conditions hold for free; the check computes the
// actual longest chain so the degeneracy is at least quantified.
inline NoetherianResult noetherian_check(const std::vector<ClosedSet>& closed) {
    NoetherianResult r;
    const int nc = static_cast<int>(closed.size());
    std::vector<int> longest(nc, 1);
    // Closed sets arrive sorted by cardinality, so strict subsets precede.
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < i; ++j)
            if (closed[j].members.subset_of(closed[i].members) &&
                !(closed[j].members == closed[i].members))
                longest[i] = std::max(longest[i], longest[j] + 1);
    for (int v : longest) r.longest_chain = std::max(r.longest_chain, v);
    r.dcc = true;
    return r;
}

struct RadicalTriple {
    Ideal m_radical, p_radical, s_radical;  // meets of Max, Spec, the whole space
    bool max_empty = false, spec_empty = false, si_empty = false;
    int max_count = 0, spec_count = 0, si_count = 0;
};

// Intersections of the maximal, prime and strongly irreducible families;
// an empty family meets to the whole monoid by convention.
inline RadicalTriple radicals(const FiniteMonoid& m, const IdealLattice& lat,
                              const std::vector<IdealClassification>& cls) {
    RadicalTriple r;
    ElementSet mm = ElementSet::full(m.order), pp = mm, ss = mm;
    for (int i = 0; i < static_cast<int>(lat.ideals.size()); ++i) {
        if (cls[i].maximal) {
            mm = mm & lat.ideals[i].members;
            ++r.max_count;
        }
        if (cls[i].prime) {
            pp = pp & lat.ideals[i].members;
            ++r.spec_count;
        }
        if (cls[i].strongly_irreducible) {
            ss = ss & lat.ideals[i].members;
            ++r.si_count;
        }
    }
    r.m_radical = Ideal{mm};
    r.p_radical = Ideal{pp};
    r.s_radical = Ideal{ss};
    r.max_empty = r.max_count == 0;
    r.spec_empty = r.spec_count == 0;
    r.si_empty = r.si_count == 0;
    return r;
}

struct DensityResult {
    bool max_in_spec = false;    // every maximal ideal is prime
    bool spec_in_space = false;  // every prime ideal is strongly irreducible
    bool spec_dense = false;     // closure of the prime points is the whole space
    bool max_dense = false;
    bool p_eq_s = false;  // prime radical equals the space radical
    bool m_eq_s = false;
    bool corrected_pairing_holds = false;  // spec_dense <=> p_eq_s, max_dense <=> m_eq_s
    bool swapped_pairing_holds = false;    // the crosswise pairing, recorded as data
};

inline DensityResult density_check(const TerminalSpace& s, const IdealLattice& lat,
                                   const std::vector<IdealClassification>& cls,
                                   const RadicalTriple& rad) {
    DensityResult r;
    r.max_in_spec = r.spec_in_space = true;
    for (int i = 0; i < static_cast<int>(lat.ideals.size()); ++i) {
        if (cls[i].maximal && !cls[i].prime) r.max_in_spec = false;
        if (cls[i].prime && !cls[i].strongly_irreducible) r.spec_in_space = false;
    }
    std::uint64_t spec_pts = 0, max_pts = 0;
    for (int i = 0; i < s.size(); ++i) {
        if (cls[s.lattice_index[i]].prime) spec_pts |= std::uint64_t{1} << i;
        if (cls[s.lattice_index[i]].maximal) max_pts |= std::uint64_t{1} << i;
    }
    std::uint64_t full = ElementSet::full(s.size()).bits;
    r.spec_dense = detail::hk_mask(s.points, spec_pts) == full;
    r.max_dense = detail::hk_mask(s.points, max_pts) == full;
    r.p_eq_s = rad.p_radical == rad.s_radical;
    r.m_eq_s = rad.m_radical == rad.s_radical;
    r.corrected_pairing_holds = (r.spec_dense == r.p_eq_s) && (r.max_dense == r.m_eq_s);
    r.swapped_pairing_holds = (r.max_dense == r.p_eq_s) && (r.spec_dense == r.m_eq_s);
    return r;
}

// Everything computable without subset scans, bundled. The verifier builds
// its report rows on top of this.
struct Analysis {
    FiniteMonoid monoid;
    IdealLattice lattice;
    std::vector<IdealClassification> cls;
    DistributivityResult distributivity;
    ArithmeticResult arithmetic;
    TerminalSpace space;
    std::vector<ClosedSet> closed_sets;
    std::vector<std::optional<IrreducibleClosedResult>> closed_analysis;  // parallel; none for empty
    SeparationResult separation;
    ComponentsResult components;
    InvertibilityResult invertibility;
    NoetherianResult noetherian;
    RadicalTriple radical_triple;
    DensityResult density;
    std::vector<int> canonical_subcover;  // greedy subcover of the all-opens cover
    int canonical_cover_size = 0;
};

inline Analysis analyze(const FiniteMonoid& m, const AnalysisOptions& opts = {}) {
    Analysis a;
    a.monoid = m;
    a.lattice = enumerate_ideals(m);
    a.cls = classify_all(m, a.lattice);
    a.distributivity = lattice_analysis(a.lattice);
    a.arithmetic = arithmetic_check(m, a.lattice, a.cls);
    a.space = build_terminal_space(m, a.lattice, a.cls, opts);
    a.closed_sets = enumerate_closed_sets(a.space, a.lattice);
    for (int i = 0; i < static_cast<int>(a.closed_sets.size()); ++i) {
        if (a.closed_sets[i].members.is_empty())
            a.closed_analysis.push_back(std::nullopt);
        else
            a.closed_analysis.push_back(
                irreducible_closed_analysis(a.space, a.closed_sets, i, a.lattice, a.cls));
    }
    a.separation = separation_check(a.space);
    a.components = irreducible_components(a.space, a.closed_sets, a.lattice, a.cls);
    a.invertibility = invertibility_check(m, a.space);
    a.noetherian = noetherian_check(a.closed_sets);
    a.radical_triple = radicals(m, a.lattice, a.cls);
    a.density = density_check(a.space, a.lattice, a.cls, a.radical_triple);
    std::vector<PointSet> opens = canonical_cover(a.space, a.closed_sets);
    a.canonical_cover_size = static_cast<int>(opens.size());
    a.canonical_subcover = compactness_witness(a.space, opens);
    return a;
}

}  // namespace termspace
