#pragma once

// Finite commutative monoids given by explicit Cayley tables.
// Elements are dense indices 0..n-1; names exist only at the I/O boundary.
// Everything here is an immutable value type; operations are pure.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace termspace {

// Element sets are packed into a single 64-bit word, which bounds the
// representable monoid order.
inline constexpr int kMaxOrder = 64;

// Subset of the index range [0, universe) of one monoid (or of one point
// list, when used for subsets of a terminal space).
struct ElementSet {
    std::uint64_t bits = 0;
    int universe = 0;

    static ElementSet empty(int universe) { return {0, universe}; }
    static ElementSet full(int universe) {
        return {universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1, universe};
    }
    static ElementSet single(int universe, int e) { return {std::uint64_t{1} << e, universe}; }

    bool contains(int e) const { return (bits >> e) & 1u; }
    void insert(int e) { bits |= std::uint64_t{1} << e; }
    void erase(int e) { bits &= ~(std::uint64_t{1} << e); }
    int size() const { return std::popcount(bits); }
    bool is_empty() const { return bits == 0; }
    bool subset_of(const ElementSet& o) const { return (bits & ~o.bits) == 0; }

    ElementSet complement() const { return {full(universe).bits & ~bits, universe}; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int e = 0; e < universe; ++e)
            if (contains(e)) out.push_back(e);
        return out;
    }

    friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
        return {a.bits | b.bits, a.universe};
    }
    friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
        return {a.bits & b.bits, a.universe};
    }
    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.bits == b.bits && a.universe == b.universe;
    }
};

// Canonical ordering used everywhere output must be deterministic:
// cardinality first, then lexicographic on the sorted member lists.
inline bool set_order_less(const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint64_t d = a.bits ^ b.bits;
    if (d == 0) return false;
    std::uint64_t low = d & (~d + 1);
    // With equal cardinality, the set holding the lowest differing index
    // has the lexicographically smaller member list.
    return (a.bits & low) != 0;
}

enum class MonoidErrorKind {
    DuplicateName,
    OutOfRangeEntry,
    NotCommutative,
    NotAssociative,
    IdentityLawFails,
    UnknownIdentityName,
    OrderTooLarge,
};

inline const char* to_string(MonoidErrorKind k) {
    switch (k) {
        case MonoidErrorKind::DuplicateName: return "DuplicateName";
        case MonoidErrorKind::OutOfRangeEntry: return "OutOfRangeEntry";
        case MonoidErrorKind::NotCommutative: return "NotCommutative";
        case MonoidErrorKind::NotAssociative: return "NotAssociative";
        case MonoidErrorKind::IdentityLawFails: return "IdentityLawFails";
        case MonoidErrorKind::UnknownIdentityName: return "UnknownIdentityName";
        case MonoidErrorKind::OrderTooLarge: return "OrderTooLarge";
    }
    return "?";
}

// Axiom violation found while validating a Cayley table. `witness` holds the
// indices that exhibit the failure (meaning depends on the kind).
class MonoidError : public std::runtime_error {
  public:
    MonoidErrorKind kind;
    std::array<int, 3> witness{-1, -1, -1};

    MonoidError(MonoidErrorKind k, const std::string& msg, std::array<int, 3> w = {-1, -1, -1})
        : std::runtime_error(msg), kind(k), witness(w) {}
};

enum class AnalysisErrorKind {
    MismatchedUniverse,
    EmptyGeneratorSet,
    IdealNotInLattice,
    EmptyPointSet,
    EmptyClosedSet,
    NotACover,
    TooManyPoints,
    SamplingSeedRequired,
    OrderTooLarge,
    InvalidFamilyParams,
};

inline const char* to_string(AnalysisErrorKind k) {
    switch (k) {
        case AnalysisErrorKind::MismatchedUniverse: return "MismatchedUniverse";
        case AnalysisErrorKind::EmptyGeneratorSet: return "EmptyGeneratorSet";
        case AnalysisErrorKind::IdealNotInLattice: return "IdealNotInLattice";
        case AnalysisErrorKind::EmptyPointSet: return "EmptyPointSet";
        case AnalysisErrorKind::EmptyClosedSet: return "EmptyClosedSet";
        case AnalysisErrorKind::NotACover: return "NotACover";
        case AnalysisErrorKind::TooManyPoints: return "TooManyPoints";
        case AnalysisErrorKind::SamplingSeedRequired: return "SamplingSeedRequired";
        case AnalysisErrorKind::OrderTooLarge: return "OrderTooLarge";
        case AnalysisErrorKind::InvalidFamilyParams: return "InvalidFamilyParams";
    }
    return "?";
}

// Misuse of an analysis operation (bad arguments, capacity limits). Theorem
// failures are never reported this way; those become report rows.
class AnalysisError : public std::runtime_error {
  public:
    AnalysisErrorKind kind;
    int witness = -1;

    AnalysisError(AnalysisErrorKind k, const std::string& msg, int w = -1)
        : std::runtime_error(msg), kind(k), witness(w) {}
};

struct FiniteMonoid {
    int order = 0;
    std::vector<std::string> names;
    std::vector<int> table;  // row-major; table[a*order + b] = a . b
    int identity = 0;

    int at(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
};

inline int evaluate(const FiniteMonoid& m, int a, int b) {
    if (a < 0 || a >= m.order || b < 0 || b >= m.order)
        throw std::out_of_range("evaluate: element index out of range");
    return m.at(a, b);
}

// a^k for k >= 1. The power sequence is eventually periodic, so large k
// reduces to a position inside the orbit.
inline int power(const FiniteMonoid& m, int a, long long k) {
    if (a < 0 || a >= m.order) throw std::out_of_range("power: element index out of range");
    if (k < 1) throw std::invalid_argument("power: exponent must be >= 1");
    std::vector<int> orbit;   // orbit[t] = a^(t+1)
    std::vector<int> seen_at(m.order, -1);
    int v = a;
    for (long long t = 0;; ++t) {
        if (t == k - 1 || seen_at[v] >= 0) break;
        seen_at[v] = static_cast<int>(t);
        orbit.push_back(v);
        v = m.at(v, a);
    }
    if (static_cast<long long>(orbit.size()) == k - 1 || seen_at[v] < 0) return v;
    long long tail = seen_at[v];
    long long period = static_cast<long long>(orbit.size()) - tail;
    long long idx = tail + (k - 1 - tail) % period;
    return orbit[static_cast<std::size_t>(idx)];
}

// Validates names, table shape and all monoid axioms exhaustively. Errors
// carry the first witness found in a fixed scan order: name problems, entry
// range, commutativity, associativity, identity law.
inline FiniteMonoid validate_monoid(const std::vector<std::string>& names,
                                    const std::vector<std::vector<int>>& table,
                                    const std::string& identity_name) {
    const int n = static_cast<int>(names.size());
    if (n == 0) throw std::invalid_argument("validate_monoid: empty name list");
    if (n > kMaxOrder)
        throw MonoidError(MonoidErrorKind::OrderTooLarge,
                          "order " + std::to_string(n) + " exceeds the representable maximum " +
                              std::to_string(kMaxOrder));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (names[i] == names[j])
                throw MonoidError(MonoidErrorKind::DuplicateName,
                                  "duplicate element name '" + names[i] + "'", {i, j, -1});
    int identity = -1;
    for (int i = 0; i < n; ++i)
        if (names[i] == identity_name) identity = i;
    if (identity < 0)
        throw MonoidError(MonoidErrorKind::UnknownIdentityName,
                          "identity name '" + identity_name + "' is not an element");

    if (static_cast<int>(table.size()) != n)
        throw std::invalid_argument("validate_monoid: table must have one row per element");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("validate_monoid: table rows must have one entry per element");

    FiniteMonoid m;
    m.order = n;
    m.names = names;
    m.identity = identity;
    m.table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n)
                throw MonoidError(MonoidErrorKind::OutOfRangeEntry,
                                  "table entry at (" + names[a] + "," + names[b] + ") is out of range",
                                  {a, b, v});
            m.table[static_cast<std::size_t>(a) * n + b] = v;
        }

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (m.at(a, b) != m.at(b, a))
                throw MonoidError(MonoidErrorKind::NotCommutative,
                                  names[a] + "." + names[b] + " != " + names[b] + "." + names[a],
                                  {a, b, -1});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m.at(m.at(a, b), c) != m.at(a, m.at(b, c)))
                    throw MonoidError(MonoidErrorKind::NotAssociative,
                                      "(" + names[a] + "." + names[b] + ")." + names[c] + " != " +
                                          names[a] + ".(" + names[b] + "." + names[c] + ")",
                                      {a, b, c});
    for (int a = 0; a < n; ++a)
        if (m.at(identity, a) != a)
            throw MonoidError(MonoidErrorKind::IdentityLawFails,
                              identity_name + "." + names[a] + " != " + names[a], {a, -1, -1});
    return m;
}

// Elements a with a.b = 1 for some b.
inline ElementSet units(const FiniteMonoid& m) {
    ElementSet u = ElementSet::empty(m.order);
    for (int a = 0; a < m.order; ++a)
        for (int b = 0; b < m.order; ++b)
            if (m.at(a, b) == m.identity) {
                u.insert(a);
                break;
            }
    return u;
}

inline ElementSet nonunits(const FiniteMonoid& m) { return units(m).complement(); }

inline ElementSet set_product(const FiniteMonoid& m, const ElementSet& s, const ElementSet& t) {
    if (s.universe != m.order || t.universe != m.order)
        throw AnalysisError(AnalysisErrorKind::MismatchedUniverse,
                            "set_product: operand does not belong to this monoid");
    ElementSet out = ElementSet::empty(m.order);
    for (int a = 0; a < m.order; ++a) {
        if (!s.contains(a)) continue;
        for (int b = 0; b < m.order; ++b)
            if (t.contains(b)) out.insert(m.at(a, b));
    }
    return out;
}

// Isomorphism-invariant fingerprint of one element: shape of its power orbit
// (a^(tail+period) = a^tail with tail, period minimal), the size of the
// principal ideal aM, and unit-ness.
struct ElementProfile {
    int tail = 0;
    int period = 0;
    int principal_size = 0;
    bool unit = false;

    friend auto operator<=>(const ElementProfile&, const ElementProfile&) = default;
};

inline ElementProfile element_profile(const FiniteMonoid& m, int a) {
    ElementProfile p;
    std::vector<int> seen_at(m.order, -1);
    int v = a;
    int t = 1;
    while (seen_at[v] < 0) {
        seen_at[v] = t;
        v = m.at(v, a);
        ++t;
    }
    p.tail = seen_at[v];
    p.period = t - seen_at[v];
    ElementSet principal = ElementSet::empty(m.order);
    for (int b = 0; b < m.order; ++b) principal.insert(m.at(a, b));
    p.principal_size = principal.size();
    p.unit = units(m).contains(a);
    return p;
}

// Renames element indices: entry (p[a], p[b]) of the result is p[a.b].
inline FiniteMonoid apply_permutation(const FiniteMonoid& m, const std::vector<int>& perm) {
    FiniteMonoid out;
    out.order = m.order;
    out.names.resize(m.order);
    out.table.resize(m.table.size());
    out.identity = perm[m.identity];
    for (int a = 0; a < m.order; ++a) out.names[perm[a]] = m.names[a];
    for (int a = 0; a < m.order; ++a)
        for (int b = 0; b < m.order; ++b)
            out.table[static_cast<std::size_t>(perm[a]) * m.order + perm[b]] = perm[m.at(a, b)];
    return out;
}

namespace detail {

inline bool iso_consistent(const FiniteMonoid& a, const FiniteMonoid& b, const std::vector<int>& map) {
    for (int x = 0; x < a.order; ++x) {
        if (map[x] < 0) continue;
        for (int y = 0; y < a.order; ++y) {
            if (map[y] < 0) continue;
            int p = a.at(x, y);
            if (map[p] >= 0 && b.at(map[x], map[y]) != map[p]) return false;
        }
    }
    return true;
}

inline bool iso_search(const FiniteMonoid& a, const FiniteMonoid& b,
                       const std::vector<ElementProfile>& pa, const std::vector<ElementProfile>& pb,
                       std::vector<int>& map, std::vector<bool>& used, int pos) {
    if (pos == a.order) return true;
    if (map[pos] >= 0) return iso_search(a, b, pa, pb, map, used, pos + 1);
    for (int img = 0; img < b.order; ++img) {
        if (used[img] || pa[pos] != pb[img]) continue;
        map[pos] = img;
        used[img] = true;
        if (iso_consistent(a, b, map) && iso_search(a, b, pa, pb, map, used, pos + 1)) return true;
        map[pos] = -1;
        used[img] = false;
    }
    return false;
}

}  // namespace detail

// Searches for a table-preserving bijection with the identity pinned,
// pruning on element profiles. Candidate images are tried in increasing
// order, so a returned witness is the lexicographically least one.
// Intended for corpus dedup at tiny orders; pass allow_large to lift the cap.
inline std::optional<std::vector<int>> is_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b,
                                                     bool allow_large = false) {
    if (!allow_large && (a.order > 6 || b.order > 6))
        throw AnalysisError(AnalysisErrorKind::OrderTooLarge,
                            "is_isomorphic: order above 6 requires the explicit override");
    if (a.order != b.order) return std::nullopt;
    std::vector<ElementProfile> pa, pb;
    for (int e = 0; e < a.order; ++e) pa.push_back(element_profile(a, e));
    for (int e = 0; e < b.order; ++e) pb.push_back(element_profile(b, e));
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    std::vector<int> map(a.order, -1);
    std::vector<bool> used(a.order, false);
    map[a.identity] = b.identity;
    used[b.identity] = true;
    if (!detail::iso_search(a, b, pa, pb, map, used, 0)) return std::nullopt;
    return map;
}

inline std::uint64_t fnv1a64(const std::uint64_t* data, std::size_t count) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < count; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

// Stable fingerprint of (order, identity, table), used in report headers.
inline std::string table_hash(const FiniteMonoid& m) {
    std::vector<std::uint64_t> words;
    words.push_back(static_cast<std::uint64_t>(m.order));
    words.push_back(static_cast<std::uint64_t>(m.identity));
    for (int v : m.table) words.push_back(static_cast<std::uint64_t>(v));
    std::uint64_t h = fnv1a64(words.data(), words.size());
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

// "{a,b}" with member names in index order.
inline std::string format_set(const FiniteMonoid& m, const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (int e : s.members()) {
        if (!first) out += ",";
        out += m.names[e];
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace termspace
