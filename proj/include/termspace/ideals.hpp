#pragma once

// Ideals of a finite commutative monoid: enumeration, the containment
// lattice, products, radicals, and the classification flags used to carve
// out the terminal space.

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "monoid.hpp"

namespace termspace {

// A nonempty subset I with IM subset of I. Stored by members; emptiness is
// ruled out at every construction site.
struct Ideal {
    ElementSet members;

    friend bool operator==(const Ideal&, const Ideal&) = default;
};

inline bool is_ideal(const FiniteMonoid& m, const ElementSet& s) {
    if (s.universe != m.order)
        throw AnalysisError(AnalysisErrorKind::MismatchedUniverse, "is_ideal: set from another monoid");
    if (s.is_empty()) return false;
    for (int a = 0; a < m.order; ++a) {
        if (!s.contains(a)) continue;
        for (int b = 0; b < m.order; ++b)
            if (!s.contains(m.at(a, b))) return false;
    }
    return true;
}

// Smallest ideal containing gens; equals gens.M because the identity is
// present, so no closure iteration is needed.
inline Ideal generated_ideal(const FiniteMonoid& m, const ElementSet& gens) {
    if (gens.universe != m.order)
        throw AnalysisError(AnalysisErrorKind::MismatchedUniverse,
                            "generated_ideal: set from another monoid");
    if (gens.is_empty())
        throw AnalysisError(AnalysisErrorKind::EmptyGeneratorSet,
                            "generated_ideal: generator set is empty");
    return Ideal{set_product(m, gens, ElementSet::full(m.order))};
}

inline Ideal principal_ideal(const FiniteMonoid& m, int e) {
    return generated_ideal(m, ElementSet::single(m.order, e));
}

// All ideals, in the canonical (cardinality, then member-lex) order, with
// the containment relation. Built as the union closure of the principal
// ideals; every ideal is the union of the principal ideals of its members,
// so this is exhaustive.
struct IdealLattice {
    std::vector<Ideal> ideals;
    std::vector<std::vector<bool>> leq;  // leq[i][j] <=> ideals[i] subset of ideals[j]

    int index_of(const ElementSet& s) const {
        for (int i = 0; i < static_cast<int>(ideals.size()); ++i)
            if (ideals[i].members == s) return i;
        return -1;
    }
    int bottom() const { return 0; }
    int top() const { return static_cast<int>(ideals.size()) - 1; }
};

inline IdealLattice enumerate_ideals(const FiniteMonoid& m) {
    std::set<std::uint64_t> masks;
    std::vector<std::uint64_t> principal;
    for (int e = 0; e < m.order; ++e) {
        std::uint64_t p = principal_ideal(m, e).members.bits;
        principal.push_back(p);
        masks.insert(p);
    }
    // Union closure: unions of ideals are ideals, and every ideal arises as
    // a union of principal ones.
    std::vector<std::uint64_t> frontier(masks.begin(), masks.end());
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t a : frontier)
            for (std::uint64_t p : principal) {
                std::uint64_t u = a | p;
                if (masks.insert(u).second) next.push_back(u);
            }
        frontier = std::move(next);
    }

    IdealLattice lat;
    for (std::uint64_t bits : masks) lat.ideals.push_back(Ideal{{bits, m.order}});
    std::sort(lat.ideals.begin(), lat.ideals.end(),
              [](const Ideal& a, const Ideal& b) { return set_order_less(a.members, b.members); });
    const int k = static_cast<int>(lat.ideals.size());
    lat.leq.assign(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            lat.leq[i][j] = lat.ideals[i].members.subset_of(lat.ideals[j].members);
    return lat;
}

// Product ideal IJ = { i.j : i in I, j in J }. Always an ideal, and always
// inside the intersection; both facts are enforced here as postconditions.
inline Ideal product_ideal(const FiniteMonoid& m, const Ideal& a, const Ideal& b) {
    ElementSet p = set_product(m, a.members, b.members);
    if (!is_ideal(m, p)) throw std::logic_error("product_ideal: product is not an ideal");
    if (!p.subset_of(a.members & b.members))
        throw std::logic_error("product_ideal: product escapes the intersection");
    return Ideal{p};
}

// Radical: elements with some power landing in I. Powers are scanned up to
// the monoid order, which is far enough for any power orbit to cycle.
inline Ideal radical(const FiniteMonoid& m, const Ideal& i) {
    ElementSet r = ElementSet::empty(m.order);
    for (int a = 0; a < m.order; ++a) {
        int v = a;
        for (int k = 1; k <= m.order; ++k) {
            if (i.members.contains(v)) {
                r.insert(a);
                break;
            }
            v = m.at(v, a);
        }
    }
    return Ideal{r};
}

struct IdealClassification {
    bool proper = false;
    bool prime = false;
    bool maximal = false;
    bool irreducible = false;
    bool strongly_irreducible = false;
    bool semiprime = false;

    // First counterexample found in the canonical scan order, when a flag is
    // false for a non-vacuous reason.
    std::optional<std::pair<int, int>> prime_witness;               // element pair (a,b)
    std::optional<int> maximal_witness;                             // lattice index strictly between
    std::optional<std::pair<int, int>> irreducible_witness;         // lattice index pair
    std::optional<std::pair<int, int>> strongly_irreducible_witness;// lattice index pair
    std::optional<int> semiprime_witness;                           // element of radical minus I
};

// Flags are computed independently of one another, each straight from its
// definition, so implications between them stay checkable downstream.
inline IdealClassification classify_ideal(const FiniteMonoid& m, const Ideal& ideal,
                                          const IdealLattice& lat) {
    const int self = lat.index_of(ideal.members);
    if (self < 0)
        throw AnalysisError(AnalysisErrorKind::IdealNotInLattice,
                            "classify_ideal: ideal is not in the lattice");
    const int k = static_cast<int>(lat.ideals.size());
    IdealClassification c;
    c.proper = ideal.members != ElementSet::full(m.order);

    if (c.proper) {
        c.prime = true;
        for (int a = 0; a < m.order && c.prime; ++a)
            for (int b = a; b < m.order; ++b)
                if (ideal.members.contains(m.at(a, b)) && !ideal.members.contains(a) &&
                    !ideal.members.contains(b)) {
                    c.prime = false;
                    c.prime_witness = {a, b};
                    break;
                }

        c.maximal = true;
        for (int j = 0; j < k; ++j)
            if (j != self && j != lat.top() && lat.leq[self][j]) {
                c.maximal = false;
                c.maximal_witness = j;
                break;
            }

        c.irreducible = true;
        for (int a = 0; a < k && c.irreducible; ++a)
            for (int b = a; b < k; ++b)
                if ((lat.ideals[a].members & lat.ideals[b].members) == ideal.members && a != self &&
                    b != self) {
                    c.irreducible = false;
                    c.irreducible_witness = {a, b};
                    break;
                }

        c.strongly_irreducible = true;
        for (int a = 0; a < k && c.strongly_irreducible; ++a)
            for (int b = a; b < k; ++b)
                if ((lat.ideals[a].members & lat.ideals[b].members).subset_of(ideal.members) &&
                    !lat.leq[a][self] && !lat.leq[b][self]) {
                    c.strongly_irreducible = false;
                    c.strongly_irreducible_witness = {a, b};
                    break;
                }
    }

    // Semiprime (radical ideal) has no properness requirement: the whole
    // monoid is its own radical.
    Ideal r = radical(m, ideal);
    c.semiprime = r.members == ideal.members;
    if (!c.semiprime)
        for (int e = 0; e < m.order; ++e)
            if (r.members.contains(e) && !ideal.members.contains(e)) {
                c.semiprime_witness = e;
                break;
            }
    return c;
}

inline std::vector<IdealClassification> classify_all(const FiniteMonoid& m, const IdealLattice& lat) {
    std::vector<IdealClassification> out;
    out.reserve(lat.ideals.size());
    for (const Ideal& i : lat.ideals) out.push_back(classify_ideal(m, i, lat));
    return out;
}

struct DistributivityResult {
    bool is_distributive = true;
    std::optional<std::array<int, 3>> counterexample;  // lattice indices (a,b,c)
};

// Meet is intersection and join is union, so the lattice is a ring of sets
// and distributivity should hold identically; it is still checked by brute
// force rather than assumed.
inline DistributivityResult lattice_analysis(const IdealLattice& lat) {
    DistributivityResult r;
    const int k = static_cast<int>(lat.ideals.size());
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c) {
                ElementSet lhs = lat.ideals[a].members & (lat.ideals[b].members | lat.ideals[c].members);
                ElementSet rhs = (lat.ideals[a].members & lat.ideals[b].members) |
                                 (lat.ideals[a].members & lat.ideals[c].members);
                if (!(lhs == rhs)) {
                    r.is_distributive = false;
                    r.counterexample = {{a, b, c}};
                    return r;
                }
            }
    return r;
}

struct ArithmeticResult {
    bool side_distributive = false;       // the lattice is distributive
    bool side_si_intersection = false;    // every ideal is the meet of the
                                          // strongly irreducible ideals above it
    bool agree = false;
    std::optional<int> witness_ideal;     // lattice index where the meet side fails
};

// Two characterizations that are supposed to coincide: lattice
// distributivity versus every ideal being an intersection of strongly
// irreducible ideals containing it (empty intersection meaning the whole
// monoid). Both sides are computed outright.
inline ArithmeticResult arithmetic_check(const FiniteMonoid& m, const IdealLattice& lat,
                                         const std::vector<IdealClassification>& cls) {
    ArithmeticResult r;
    r.side_distributive = lattice_analysis(lat).is_distributive;
    r.side_si_intersection = true;
    const int k = static_cast<int>(lat.ideals.size());
    for (int i = 0; i < k; ++i) {
        ElementSet meet = ElementSet::full(m.order);
        for (int j = 0; j < k; ++j)
            if (cls[j].strongly_irreducible && lat.leq[i][j]) meet = meet & lat.ideals[j].members;
        if (!(meet == lat.ideals[i].members)) {
            r.side_si_intersection = false;
            if (!r.witness_ideal) r.witness_ideal = i;
        }
    }
    r.agree = r.side_distributive == r.side_si_intersection;
    return r;
}

}  // namespace termspace
