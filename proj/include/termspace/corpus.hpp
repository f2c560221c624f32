#pragma once

// Instance generators: the named families used throughout the test corpus,
// and an exhaustive census of commutative monoids of tiny order.

#include <set>

#include "monoid.hpp"

namespace termspace {

// A generator family with integer parameters; direct products take factor
// specs instead.
struct FamilySpec {
    enum class Id { z_mult, cyclic, boolean_monoid, chain_semilattice, direct_product };
    Id id;
    std::vector<long long> params;
    std::vector<FamilySpec> factors;

    static FamilySpec z_mult(long long n) { return {Id::z_mult, {n}, {}}; }
    static FamilySpec cyclic(long long index, long long period) {
        return {Id::cyclic, {index, period}, {}};
    }
    static FamilySpec boolean_monoid() { return {Id::boolean_monoid, {}, {}}; }
    static FamilySpec chain_semilattice(long long k) { return {Id::chain_semilattice, {k}, {}}; }
    static FamilySpec direct_product(std::vector<FamilySpec> fs) {
        return {Id::direct_product, {}, std::move(fs)};
    }
};

inline FiniteMonoid make_family(const FamilySpec& spec);

namespace detail {

inline FiniteMonoid make_z_mult(long long n) {
    if (n < 1 || n > kMaxOrder)
        throw AnalysisError(AnalysisErrorKind::InvalidFamilyParams,
                            "z_mult: modulus must be between 1 and " + std::to_string(kMaxOrder));
    std::vector<std::string> names;
    for (long long i = 0; i < n; ++i) names.push_back(std::to_string(i));
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) table[a][b] = static_cast<int>((a * b) % n);
    // Mod 1 there is a single residue and it is the identity.
    return validate_monoid(names, table, n == 1 ? "0" : "1");
}

// Monogenic monoid <a> with a^(i+p) = a^i: elements 1, a, ..., a^(i+p-1).
inline FiniteMonoid make_cyclic(long long index, long long period) {
    if (index < 1 || period < 1 || index + period > kMaxOrder)
        throw AnalysisError(AnalysisErrorKind::InvalidFamilyParams,
                            "cyclic: need index >= 1, period >= 1, index+period <= " +
                                std::to_string(kMaxOrder));
    const long long n = index + period;
    std::vector<std::string> names{"1"};
    for (long long e = 1; e < n; ++e) names.push_back(e == 1 ? "a" : "a" + std::to_string(e));
    auto reduce = [&](long long e) { return e < n ? e : index + (e - index) % period; };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) table[a][b] = static_cast<int>(reduce(a + b));
    return validate_monoid(names, table, "1");
}

inline FiniteMonoid make_chain(long long k) {
    if (k < 1 || k > kMaxOrder)
        throw AnalysisError(AnalysisErrorKind::InvalidFamilyParams,
                            "chain_semilattice: size must be between 1 and " + std::to_string(kMaxOrder));
    std::vector<std::string> names;
    for (long long i = 0; i < k; ++i) names.push_back("c" + std::to_string(i));
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (long long a = 0; a < k; ++a)
        for (long long b = 0; b < k; ++b) table[a][b] = static_cast<int>(std::min(a, b));
    // Meet with the top element is the identity.
    return validate_monoid(names, table, "c" + std::to_string(k - 1));
}

inline FiniteMonoid make_product(const std::vector<FamilySpec>& fs) {
    if (fs.empty())
        throw AnalysisError(AnalysisErrorKind::InvalidFamilyParams,
                            "direct_product: needs at least one factor");
    FiniteMonoid acc = make_family(fs[0]);
    for (std::size_t fi = 1; fi < fs.size(); ++fi) {
        FiniteMonoid f = make_family(fs[fi]);
        long long n = static_cast<long long>(acc.order) * f.order;
        if (n > kMaxOrder)
            throw AnalysisError(AnalysisErrorKind::InvalidFamilyParams,
                                "direct_product: order " + std::to_string(n) + " exceeds " +
                                    std::to_string(kMaxOrder));
        std::vector<std::string> names;
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        auto code = [&](int x, int y) { return x * f.order + y; };
        for (int x = 0; x < acc.order; ++x)
            for (int y = 0; y < f.order; ++y) names.push_back(acc.names[x] + "*" + f.names[y]);
        for (int x1 = 0; x1 < acc.order; ++x1)
            for (int y1 = 0; y1 < f.order; ++y1)
                for (int x2 = 0; x2 < acc.order; ++x2)
                    for (int y2 = 0; y2 < f.order; ++y2)
                        table[code(x1, y1)][code(x2, y2)] =
                            code(acc.at(x1, x2), f.at(y1, y2));
        acc = validate_monoid(names, table, names[code(acc.identity, f.identity)]);
    }
    return acc;
}

}  // namespace detail

inline FiniteMonoid make_family(const FamilySpec& spec) {
    switch (spec.id) {
        case FamilySpec::Id::z_mult: return detail::make_z_mult(spec.params.at(0));
        case FamilySpec::Id::cyclic: return detail::make_cyclic(spec.params.at(0), spec.params.at(1));
        case FamilySpec::Id::boolean_monoid: return detail::make_z_mult(2);
        case FamilySpec::Id::chain_semilattice: return detail::make_chain(spec.params.at(0));
        case FamilySpec::Id::direct_product: return detail::make_product(spec.factors);
    }
    throw std::logic_error("make_family: unreachable");
}

// Lexicographically least flattened table over all relabelings that keep the
// identity at index 0. This is the census's canonical form.
inline std::vector<int> canonical_table(const FiniteMonoid& m) {
    if (m.identity != 0) throw std::invalid_argument("canonical_table: identity must sit at index 0");
    const int n = m.order;
    std::vector<int> perm(n), best;
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        std::vector<int> flat(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                flat[static_cast<std::size_t>(perm[a]) * n + perm[b]] = perm[m.at(a, b)];
        if (best.empty() || flat < best) best = std::move(flat);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));  // identity stays put
    return best;
}

struct CensusOptions {
    bool up_to_iso = false;
    bool allow_order_6 = false;  // raises the hard cap from 5 to 6
};

namespace detail {

struct CensusSearch {
    int n;
    std::vector<int> table;          // row-major, -1 for unset
    std::vector<std::vector<int>>* out;

    int& at(int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; }
    int get(int a, int b) const { return table[static_cast<std::size_t>(a) * n + b]; }

    // Checks every triple whose three lookups are all defined so far.
    bool associative_so_far() const {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int xy = get(x, y);
                if (xy < 0) continue;
                for (int z = 0; z < n; ++z) {
                    int yz = get(y, z);
                    if (yz < 0) continue;
                    int l = get(xy, z), r = get(x, yz);
                    if (l < 0 || r < 0) continue;
                    if (l != r) return false;
                }
            }
        return true;
    }

    void fill(int a, int b) {
        if (a >= n) {
            out->push_back(table);
            return;
        }
        int na = b == n - 1 ? a + 1 : a;
        int nb = b == n - 1 ? na : b + 1;
        if (b < a) {  // symmetric half already decided
            fill(na, nb);
            return;
        }
        for (int v = 0; v < n; ++v) {
            at(a, b) = v;
            at(b, a) = v;
            if (associative_so_far()) fill(na, nb);
        }
        at(a, b) = -1;
        at(b, a) = -1;
    }
};

}  // namespace detail

// Every commutative monoid structure on {0..n-1} with identity 0, found by
// backtracking over the upper triangle with associativity pruning. With
// up_to_iso set, tables are deduplicated by canonical form and the canonical
// representative is what gets returned. Output is sorted by flattened table.
inline std::vector<FiniteMonoid> enumerate_commutative_monoids(int order,
                                                               const CensusOptions& opts = {}) {
    const int cap = opts.allow_order_6 ? 6 : 5;
    if (order < 1 || order > cap)
        throw AnalysisError(AnalysisErrorKind::OrderTooLarge,
                            "census supports orders 1.." + std::to_string(cap), order);
    static const char* kNames[] = {"1", "a", "b", "c", "d", "e"};
    std::vector<std::string> names(kNames, kNames + order);

    std::vector<std::vector<int>> flats;
    detail::CensusSearch search;
    search.n = order;
    search.table.assign(static_cast<std::size_t>(order) * order, -1);
    search.out = &flats;
    for (int i = 0; i < order; ++i) {  // identity row and column are forced
        search.at(0, i) = i;
        search.at(i, 0) = i;
    }
    search.fill(1, 1);

    auto build = [&](const std::vector<int>& flat) {
        std::vector<std::vector<int>> rows(order, std::vector<int>(order));
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b) rows[a][b] = flat[static_cast<std::size_t>(a) * order + b];
        return validate_monoid(names, rows, "1");  // defensive full validation
    };

    if (opts.up_to_iso) {
        std::set<std::vector<int>> canon;
        for (const auto& flat : flats) canon.insert(canonical_table(build(flat)));
        flats.assign(canon.begin(), canon.end());
    } else {
        std::sort(flats.begin(), flats.end());
    }
    std::vector<FiniteMonoid> out;
    out.reserve(flats.size());
    for (const auto& flat : flats) out.push_back(build(flat));
    return out;
}

}  // namespace termspace
