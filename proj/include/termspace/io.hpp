#pragma once

// Boundary formats: the monoid text format (parse/serialize round-trips
// exactly), machine-readable JSON reports with a stable field order, DOT
// exports of the two graphs, and the plain-text rendering.

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "verify.hpp"

namespace termspace {

using json = nlohmann::ordered_json;

enum class ParseErrorKind { Syntax, Arity, UnknownName };

inline const char* to_string(ParseErrorKind k) {
    switch (k) {
        case ParseErrorKind::Syntax: return "SyntaxError";
        case ParseErrorKind::Arity: return "ArityMismatch";
        case ParseErrorKind::UnknownName: return "UnknownName";
    }
    return "?";
}

class ParseError : public std::runtime_error {
  public:
    ParseErrorKind kind;
    int line;  // 1-based position in the input

    ParseError(ParseErrorKind k, int ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), kind(k), line(ln) {}
};

namespace detail {

inline bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '*' || c == '+' || c == '-';
        if (!ok) return false;
    }
    return true;
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

}  // namespace detail

// Format, in order: "monoid <n>", "elements <n names>", "identity <name>",
// then n table rows of n names each (row r lists r.c for every column c).
// Blank lines and lines starting with '#' are skipped anywhere.
inline FiniteMonoid parse_monoid_text(const std::string& text) {
    std::vector<std::pair<int, std::vector<std::string>>> sig;  // (line no, tokens)
    {
        std::istringstream in(text);
        std::string line;
        int ln = 0;
        while (std::getline(in, line)) {
            ++ln;
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            sig.push_back({ln, detail::tokens(line)});
        }
        sig.push_back({ln + 1, {}});  // end-of-file marker
    }
    std::size_t pos = 0;
    auto next = [&](const char* expected) -> const std::pair<int, std::vector<std::string>>& {
        if (sig[pos].second.empty())
            throw ParseError(ParseErrorKind::Syntax, sig[pos].first,
                             std::string("expected ") + expected + ", got end of file");
        return sig[pos++];
    };

    const auto& head = next("'monoid <order>'");
    if (head.second.size() != 2 || head.second[0] != "monoid")
        throw ParseError(ParseErrorKind::Syntax, head.first, "expected 'monoid <order>'");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(head.second[1], &used);
        if (used != head.second[1].size()) n = 0;
    } catch (const std::exception&) {
        n = 0;
    }
    if (n < 1)
        throw ParseError(ParseErrorKind::Syntax, head.first, "order must be a positive integer");

    const auto& elems = next("'elements <names>'");
    if (elems.second.empty() || elems.second[0] != "elements")
        throw ParseError(ParseErrorKind::Syntax, elems.first, "expected 'elements <names>'");
    if (static_cast<int>(elems.second.size()) != n + 1)
        throw ParseError(ParseErrorKind::Arity, elems.first,
                         "expected " + std::to_string(n) + " element names, got " +
                             std::to_string(elems.second.size() - 1));
    std::vector<std::string> names(elems.second.begin() + 1, elems.second.end());
    for (const std::string& nm : names)
        if (!detail::valid_name(nm))
            throw ParseError(ParseErrorKind::Syntax, elems.first,
                             "element name '" + nm + "' has characters outside [A-Za-z0-9_*+-]");
    auto resolve = [&](const std::string& nm, int ln) {
        for (int i = 0; i < n; ++i)
            if (names[i] == nm) return i;
        throw ParseError(ParseErrorKind::UnknownName, ln, "unknown element name '" + nm + "'");
    };

    const auto& ident = next("'identity <name>'");
    if (ident.second.empty() || ident.second[0] != "identity")
        throw ParseError(ParseErrorKind::Syntax, ident.first, "expected 'identity <name>'");
    if (ident.second.size() != 2)
        throw ParseError(ParseErrorKind::Arity, ident.first, "identity line takes exactly one name");

    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r) {
        const auto& rowline = next("a table row");
        if (static_cast<int>(rowline.second.size()) != n)
            throw ParseError(ParseErrorKind::Arity, rowline.first,
                             "table row has " + std::to_string(rowline.second.size()) +
                                 " entries, expected " + std::to_string(n));
        for (int c = 0; c < n; ++c) table[r][c] = resolve(rowline.second[c], rowline.first);
    }
    if (!sig[pos].second.empty())
        throw ParseError(ParseErrorKind::Syntax, sig[pos].first, "unexpected content after the table");

    return validate_monoid(names, table, ident.second[1]);  // may throw MonoidError
}

inline FiniteMonoid parse_monoid_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_monoid_text(buf.str());
}

inline std::string serialize_monoid(const FiniteMonoid& m) {
    std::ostringstream out;
    out << "monoid " << m.order << "\n";
    out << "elements";
    for (const std::string& nm : m.names) out << " " << nm;
    out << "\n";
    out << "identity " << m.names[m.identity] << "\n";
    for (int a = 0; a < m.order; ++a) {
        for (int b = 0; b < m.order; ++b) out << (b ? " " : "") << m.names[m.at(a, b)];
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// JSON documents

namespace detail {

inline json names_of(const FiniteMonoid& m, const ElementSet& s) {
    json arr = json::array();
    for (int e : s.members()) arr.push_back(m.names[e]);
    return arr;
}

// Cover pairs (i, j) of a poset given by its full order matrix.
inline std::vector<std::pair<int, int>> hasse_edges(const std::vector<std::vector<bool>>& leq) {
    const int k = static_cast<int>(leq.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || !leq[i][j]) continue;
            bool cover = true;
            for (int mid = 0; mid < k && cover; ++mid)
                if (mid != i && mid != j && leq[i][mid] && leq[mid][j]) cover = false;
            if (cover) edges.push_back({i, j});
        }
    return edges;
}

}  // namespace detail

inline json monoid_json(const FiniteMonoid& m, const std::string& name) {
    json doc;
    doc["name"] = name;
    doc["order"] = m.order;
    doc["hash"] = table_hash(m);
    doc["identity"] = m.names[m.identity];
    doc["elements"] = m.names;
    json rows = json::array();
    for (int a = 0; a < m.order; ++a) {
        json row = json::array();
        for (int b = 0; b < m.order; ++b) row.push_back(m.names[m.at(a, b)]);
        rows.push_back(row);
    }
    doc["table"] = rows;
    doc["units"] = detail::names_of(m, units(m));
    return doc;
}

inline json ideals_json(const Analysis& a) {
    json arr = json::array();
    for (int i = 0; i < static_cast<int>(a.lattice.ideals.size()); ++i) {
        const auto& c = a.cls[i];
        json e;
        e["index"] = i;
        e["members"] = detail::names_of(a.monoid, a.lattice.ideals[i].members);
        e["proper"] = c.proper;
        e["prime"] = c.prime;
        e["maximal"] = c.maximal;
        e["irreducible"] = c.irreducible;
        e["strongly_irreducible"] = c.strongly_irreducible;
        e["semiprime"] = c.semiprime;
        json w;
        if (c.prime_witness)
            w["prime"] = {a.monoid.names[c.prime_witness->first], a.monoid.names[c.prime_witness->second]};
        if (c.maximal_witness) w["maximal"] = *c.maximal_witness;
        if (c.irreducible_witness)
            w["irreducible"] = {c.irreducible_witness->first, c.irreducible_witness->second};
        if (c.strongly_irreducible_witness)
            w["strongly_irreducible"] = {c.strongly_irreducible_witness->first,
                                         c.strongly_irreducible_witness->second};
        if (c.semiprime_witness) w["semiprime"] = a.monoid.names[*c.semiprime_witness];
        if (!w.empty()) e["witnesses"] = w;
        arr.push_back(e);
    }
    return arr;
}

inline json analysis_json(const Analysis& a) {
    json doc;
    doc["ideals"] = ideals_json(a);
    json lat;
    lat["count"] = a.lattice.ideals.size();
    json edges = json::array();
    for (auto [i, j] : detail::hasse_edges(a.lattice.leq)) edges.push_back({i, j});
    lat["hasse"] = edges;
    lat["distributive"] = a.distributivity.is_distributive;
    doc["lattice"] = lat;
    json arith;
    arith["side_distributive"] = a.arithmetic.side_distributive;
    arith["side_si_intersection"] = a.arithmetic.side_si_intersection;
    arith["agree"] = a.arithmetic.agree;
    doc["arithmetic"] = arith;

    json space;
    space["count"] = a.space.size();
    json pts = json::array();
    for (int i = 0; i < a.space.size(); ++i) {
        json e;
        e["index"] = i;
        e["ideal"] = detail::names_of(a.monoid, a.space.points[i].members);
        e["lattice_index"] = a.space.lattice_index[i];
        e["prime"] = a.cls[a.space.lattice_index[i]].prime;
        e["maximal"] = a.cls[a.space.lattice_index[i]].maximal;
        pts.push_back(e);
    }
    space["points"] = pts;
    json sedges = json::array();
    for (auto [i, j] : detail::hasse_edges(a.space.leq)) sedges.push_back({i, j});
    space["specialization_hasse"] = sedges;
    doc["space"] = space;

    json closed = json::array();
    for (int i = 0; i < static_cast<int>(a.closed_sets.size()); ++i) {
        const ClosedSet& c = a.closed_sets[i];
        json e;
        e["index"] = i;
        e["points"] = c.members.members();
        e["kernel"] = c.kernel_ideal ? detail::names_of(a.monoid, c.kernel_ideal->members)
                                     : json(nullptr);
        if (a.closed_analysis[i]) {
            e["irreducible"] = a.closed_analysis[i]->irreducible;
            e["generic_point"] = a.closed_analysis[i]->generic_point
                                     ? json(*a.closed_analysis[i]->generic_point)
                                     : json(nullptr);
        } else {
            e["irreducible"] = json(nullptr);
            e["generic_point"] = json(nullptr);
        }
        closed.push_back(e);
    }
    doc["closed_sets"] = closed;

    json sep;
    sep["t0"] = a.separation.t0;
    sep["t1"] = a.separation.t1;
    sep["antichain"] = a.separation.antichain;
    doc["separation"] = sep;

    json comp;
    comp["closed_set_indices"] = a.components.components;
    comp["minimal_points"] = a.components.minimal_points;
    json pair = json::array();
    for (auto [pt, cs] : a.components.pairing) pair.push_back({pt, cs});
    comp["pairing"] = pair;
    comp["bijection"] = a.components.bijection_ok;
    doc["components"] = comp;

    json compact;
    compact["cover_size"] = a.canonical_cover_size;
    compact["subcover"] = a.canonical_subcover;
    doc["compactness"] = compact;

    json rad;
    rad["max_radical"] = detail::names_of(a.monoid, a.radical_triple.m_radical.members);
    rad["prime_radical"] = detail::names_of(a.monoid, a.radical_triple.p_radical.members);
    rad["space_radical"] = detail::names_of(a.monoid, a.radical_triple.s_radical.members);
    rad["max_count"] = a.radical_triple.max_count;
    rad["prime_count"] = a.radical_triple.spec_count;
    rad["space_count"] = a.radical_triple.si_count;
    doc["radicals"] = rad;

    json den;
    den["spec_dense"] = a.density.spec_dense;
    den["max_dense"] = a.density.max_dense;
    den["prime_radical_eq_space_radical"] = a.density.p_eq_s;
    den["max_radical_eq_space_radical"] = a.density.m_eq_s;
    den["corrected_pairing"] = a.density.corrected_pairing_holds;
    den["swapped_pairing"] = a.density.swapped_pairing_holds;
    doc["density"] = den;

    json noe;
    noe["dcc"] = a.noetherian.dcc;
    noe["longest_chain"] = a.noetherian.longest_chain;
    doc["noetherian"] = noe;

    json inv = json::array();
    for (int e = 0; e < a.monoid.order; ++e) {
        json row;
        row["element"] = a.monoid.names[e];
        row["hull_of_principal_empty"] = static_cast<bool>(a.invertibility.criterion[e]);
        row["unit"] = static_cast<bool>(a.invertibility.unit[e]);
        inv.push_back(row);
    }
    doc["invertibility"] = inv;
    return doc;
}

// Document kinds map one-to-one onto the CLI verbs that emit them.
enum class DocumentKind { validate, analyze, topology, verify };

inline json report_document(DocumentKind kind, const FiniteMonoid& m, const std::string& name,
                            const Analysis* a, const VerificationReport* rep) {
    json doc;
    doc["format"] = "termspace-report";
    doc["version"] = 1;
    doc["kind"] = kind == DocumentKind::validate ? "validate"
                  : kind == DocumentKind::analyze ? "analyze"
                  : kind == DocumentKind::topology ? "topology"
                                                   : "verify";
    doc["monoid"] = monoid_json(m, name);
    if (kind == DocumentKind::validate) {
        doc["valid"] = true;
        return doc;
    }
    json an = analysis_json(*a);
    if (kind == DocumentKind::analyze) {
        // Ideal-level sections only.
        for (const char* key : {"ideals", "lattice", "arithmetic"}) doc[key] = an[key];
        return doc;
    }
    for (auto& [key, value] : an.items()) doc[key] = value;
    if (kind == DocumentKind::verify && rep) {
        json checks = json::array();
        for (const auto& c : rep->checks) {
            json e;
            e["id"] = c.id;
            e["status"] = to_string(c.status);
            e["witness"] = c.witness;
            checks.push_back(e);
        }
        doc["checks"] = checks;
        json props;
        for (const auto& [key, value] : rep->properties) props[key] = value;
        doc["properties"] = props;
        json sum;
        sum["pass"] = rep->pass_count;
        sum["fail"] = rep->fail_count;
        sum["vacuous"] = rep->vacuous_count;
        sum["degenerate"] = rep->degenerate_count;
        sum["ok"] = rep->ok();
        doc["summary"] = sum;
    }
    return doc;
}

// ---------------------------------------------------------------------------
// DOT export: the ideal lattice and the specialization order, as two
// digraphs with edges pointing up the order. Strongly irreducible ideals get
// a double border, primes a triple one.

inline std::string export_dot(const Analysis& a) {
    std::ostringstream out;
    out << "digraph ideal_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < static_cast<int>(a.lattice.ideals.size()); ++i) {
        out << "  i" << i << " [label=\"" << format_set(a.monoid, a.lattice.ideals[i].members) << "\"";
        if (a.cls[i].prime)
            out << ", peripheries=3";
        else if (a.cls[i].strongly_irreducible)
            out << ", peripheries=2";
        out << "];\n";
    }
    for (auto [i, j] : detail::hasse_edges(a.lattice.leq))
        out << "  i" << i << " -> i" << j << ";\n";
    out << "}\n";
    out << "digraph terminal_space {\n  rankdir=BT;\n  node [shape=ellipse];\n";
    for (int i = 0; i < a.space.size(); ++i)
        out << "  p" << i << " [label=\"" << format_set(a.monoid, a.space.points[i].members) << "\"];\n";
    for (auto [i, j] : detail::hasse_edges(a.space.leq))
        out << "  p" << i << " -> p" << j << ";\n";
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Plain-text rendering

namespace detail {

inline const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline std::string render_text(DocumentKind kind, const FiniteMonoid& m, const std::string& name,
                               const Analysis* a, const VerificationReport* rep) {
    std::ostringstream out;
    out << "monoid " << name << ": order " << m.order << ", identity " << m.names[m.identity]
        << ", hash " << table_hash(m) << "\n";
    if (kind == DocumentKind::validate) {
        out << "valid: yes\n";
        return out.str();
    }
    out << "units: " << format_set(m, units(m)) << "\n";
    out << "ideals (" << a->lattice.ideals.size() << "):\n";
    for (int i = 0; i < static_cast<int>(a->lattice.ideals.size()); ++i) {
        const auto& c = a->cls[i];
        out << "  [" << i << "] " << format_set(m, a->lattice.ideals[i].members)
            << "  proper=" << detail::yn(c.proper) << " prime=" << detail::yn(c.prime)
            << " maximal=" << detail::yn(c.maximal) << " irreducible=" << detail::yn(c.irreducible)
            << " strongly_irreducible=" << detail::yn(c.strongly_irreducible)
            << " semiprime=" << detail::yn(c.semiprime) << "\n";
    }
    out << "lattice: distributive=" << detail::yn(a->distributivity.is_distributive)
        << "; arithmetic agree=" << detail::yn(a->arithmetic.agree) << "\n";
    if (kind == DocumentKind::analyze) return out.str();

    out << "terminal space (" << a->space.size() << " point" << (a->space.size() == 1 ? "" : "s")
        << "):";
    for (int i = 0; i < a->space.size(); ++i) out << " " << format_set(m, a->space.points[i].members);
    out << "\n";
    out << "closed sets (" << a->closed_sets.size() << "):";
    for (const auto& c : a->closed_sets) {
        out << " [";
        bool first = true;
        for (int pt : c.members.members()) {
            if (!first) out << " ";
            out << format_set(m, a->space.points[pt].members);
            first = false;
        }
        out << "]";
    }
    out << "\n";
    out << "separation: t0=" << detail::yn(a->separation.t0) << " t1=" << detail::yn(a->separation.t1)
        << " antichain=" << detail::yn(a->separation.antichain) << "\n";
    out << "components: " << a->components.components.size() << "; minimal points: "
        << a->components.minimal_points.size()
        << "; bijection=" << detail::yn(a->components.bijection_ok) << "\n";
    out << "compactness: subcover " << a->canonical_subcover.size() << " of "
        << a->canonical_cover_size << " opens\n";
    out << "radicals: max=" << format_set(m, a->radical_triple.m_radical.members)
        << " prime=" << format_set(m, a->radical_triple.p_radical.members)
        << " space=" << format_set(m, a->radical_triple.s_radical.members) << "\n";
    out << "density: spec_dense=" << detail::yn(a->density.spec_dense)
        << " max_dense=" << detail::yn(a->density.max_dense)
        << " corrected_pairing=" << detail::yn(a->density.corrected_pairing_holds)
        << " swapped_pairing=" << detail::yn(a->density.swapped_pairing_holds) << "\n";
    out << "noetherian: dcc=" << detail::yn(a->noetherian.dcc)
        << " longest_chain=" << a->noetherian.longest_chain << "\n";
    if (kind == DocumentKind::topology) return out.str();

    out << "checks:\n";
    for (const auto& c : rep->checks) {
        out << "  [" << to_string(c.status) << "] " << c.id;
        if (!c.witness.empty()) out << "  (" << c.witness << ")";
        out << "\n";
    }
    out << "properties:";
    for (const auto& [key, value] : rep->properties) out << " " << key << "=" << detail::yn(value);
    out << "\n";
    out << "summary: pass=" << rep->pass_count << " fail=" << rep->fail_count
        << " vacuous=" << rep->vacuous_count << " degenerate=" << rep->degenerate_count
        << " ok=" << detail::yn(rep->ok()) << "\n";
    return out.str();
}

}  // namespace termspace
