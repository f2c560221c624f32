#pragma once

// Command-line driver. Kept header-only and stream-parameterized so the
// whole surface is exercisable from tests without spawning processes.
//
// Exit codes: 0 success; 1 usage or input parse errors; 2 validation or
// analysis-capacity errors; 3 at least one claim check failed.

#include <CLI11.hpp>

#include "corpus.hpp"
#include "io.hpp"

namespace termspace {

namespace detail {

inline std::string stem_of(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

inline int report_error(std::ostream& err, const std::exception& e) {
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
        err << "error[" << to_string(pe->kind) << "]: " << pe->what() << "\n";
        return 1;
    }
    if (auto* me = dynamic_cast<const MonoidError*>(&e)) {
        err << "error[" << to_string(me->kind) << "]: " << me->what() << "\n";
        return 2;
    }
    if (auto* ae = dynamic_cast<const AnalysisError*>(&e)) {
        err << "error[" << to_string(ae->kind) << "]: " << ae->what() << "\n";
        return 2;
    }
    err << "error: " << e.what() << "\n";
    return 2;
}

// Factor spec "name:p1,p2" for direct products.
inline FamilySpec parse_factor(const std::string& text) {
    std::size_t colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::vector<long long> params;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::istringstream in(rest);
        std::string piece;
        while (std::getline(in, piece, ',')) params.push_back(std::stoll(piece));
    }
    if (name == "z_mult") return FamilySpec::z_mult(params.at(0));
    if (name == "cyclic") return FamilySpec::cyclic(params.at(0), params.at(1));
    if (name == "boolean") return FamilySpec::boolean_monoid();
    if (name == "chain_semilattice") return FamilySpec::chain_semilattice(params.at(0));
    throw AnalysisError(AnalysisErrorKind::InvalidFamilyParams,
                        "unknown factor family '" + name + "'");
}

}  // namespace detail

inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite commutative monoids: ideal structure and the terminal space"};
    app.require_subcommand(1);

    std::string format = "text";
    int max_points = 20;
    std::uint64_t seed_value = 0;
    bool seed_given = false;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    app.add_option("--max-points", max_points, "cap on terminal-space points")->capture_default_str();
    auto* seed_opt = app.add_option("--seed", seed_value, "seed for sampled subset scans");

    std::vector<std::string> files;
    auto* validate_cmd = app.add_subcommand("validate", "check a monoid file against the axioms");
    validate_cmd->add_option("file", files, "monoid file")->required()->expected(1);
    auto* analyze_cmd = app.add_subcommand("analyze", "ideal lattice and classification");
    analyze_cmd->add_option("file", files, "monoid file")->required()->expected(1);
    auto* topology_cmd = app.add_subcommand("topology", "terminal space and its structure");
    topology_cmd->add_option("file", files, "monoid file")->required()->expected(1);
    auto* verify_cmd = app.add_subcommand("verify", "run every claim check");
    verify_cmd->add_option("files", files, "monoid files")->required()->expected(-1);

    std::string family;
    std::vector<long long> params;
    std::vector<std::string> factors;
    auto* generate_cmd = app.add_subcommand("generate", "emit a family instance as a monoid file");
    generate_cmd->add_option("--family", family, "family id")
        ->required()
        ->check(CLI::IsMember({"z_mult", "cyclic", "boolean", "chain_semilattice", "direct_product"}));
    generate_cmd->add_option("--params", params, "integer parameters");
    generate_cmd->add_option("--factors", factors, "factors for direct_product, as name:p1,p2");

    int census_order = 0;
    bool up_to_iso = false, allow_order_6 = false;
    auto* census_cmd = app.add_subcommand("census", "enumerate all commutative monoids of one order");
    census_cmd->add_option("--order", census_order, "order to enumerate")->required();
    census_cmd->add_flag("--up-to-iso", up_to_iso, "deduplicate up to isomorphism");
    census_cmd->add_flag("--allow-order-6", allow_order_6, "raise the order cap to 6 (slow)");

    std::string dot_file;
    auto* export_cmd = app.add_subcommand("export", "emit DOT graphs for a monoid file");
    export_cmd->add_option("--dot", dot_file, "monoid file to draw")->required();

    std::vector<std::string> argv_store = args;
    std::vector<const char*> argv{"termspace"};
    for (const std::string& s : argv_store) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    AnalysisOptions opts;
    opts.max_points = max_points;
    if (seed_opt->count() > 0) seed_given = true;
    if (seed_given) opts.seed = seed_value;
    const bool machine = format == "machine";

    try {
        if (validate_cmd->parsed() || analyze_cmd->parsed() || topology_cmd->parsed() ||
            verify_cmd->parsed()) {
            DocumentKind kind = validate_cmd->parsed()   ? DocumentKind::validate
                                : analyze_cmd->parsed()  ? DocumentKind::analyze
                                : topology_cmd->parsed() ? DocumentKind::topology
                                                         : DocumentKind::verify;
            bool any_claim_failed = false;
            for (const std::string& path : files) {
                FiniteMonoid m = parse_monoid_file(path);
                std::string name = detail::stem_of(path);
                if (kind == DocumentKind::validate) {
                    if (machine)
                        out << report_document(kind, m, name, nullptr, nullptr).dump(2) << "\n";
                    else
                        out << render_text(kind, m, name, nullptr, nullptr);
                    continue;
                }
                Analysis a = analyze(m, opts);
                if (kind == DocumentKind::verify) {
                    VerificationReport rep = run_all(m, name, opts);
                    if (!rep.ok()) any_claim_failed = true;
                    if (machine)
                        out << report_document(kind, m, name, &a, &rep).dump(2) << "\n";
                    else
                        out << render_text(kind, m, name, &a, &rep);
                } else {
                    if (machine)
                        out << report_document(kind, m, name, &a, nullptr).dump(2) << "\n";
                    else
                        out << render_text(kind, m, name, &a, nullptr);
                }
            }
            return any_claim_failed ? 3 : 0;
        }

        if (generate_cmd->parsed()) {
            FamilySpec spec = FamilySpec::boolean_monoid();
            if (family == "z_mult")
                spec = FamilySpec::z_mult(params.at(0));
            else if (family == "cyclic")
                spec = FamilySpec::cyclic(params.at(0), params.at(1));
            else if (family == "chain_semilattice")
                spec = FamilySpec::chain_semilattice(params.at(0));
            else if (family == "direct_product") {
                std::vector<FamilySpec> fs;
                for (const std::string& f : factors) fs.push_back(detail::parse_factor(f));
                spec = FamilySpec::direct_product(std::move(fs));
            }
            out << serialize_monoid(make_family(spec));
            return 0;
        }

        if (census_cmd->parsed()) {
            if (allow_order_6 && census_order == 6)
                err << "warning: order-6 census is exponential and may take a while\n";
            CensusOptions copts;
            copts.up_to_iso = up_to_iso;
            copts.allow_order_6 = allow_order_6;
            std::vector<FiniteMonoid> all = enumerate_commutative_monoids(census_order, copts);
            if (machine) {
                json doc;
                doc["format"] = "termspace-census";
                doc["version"] = 1;
                doc["order"] = census_order;
                doc["up_to_iso"] = up_to_iso;
                doc["count"] = all.size();
                json arr = json::array();
                for (std::size_t i = 0; i < all.size(); ++i)
                    arr.push_back(monoid_json(all[i], "census_" + std::to_string(i)));
                doc["monoids"] = arr;
                out << doc.dump(2) << "\n";
            } else {
                out << "count " << all.size() << "\n";
                for (std::size_t i = 0; i < all.size(); ++i) {
                    out << "\n# census " << census_order << "/" << i << "\n";
                    out << serialize_monoid(all[i]);
                }
            }
            return 0;
        }

        if (export_cmd->parsed()) {
            FiniteMonoid m = parse_monoid_file(dot_file);
            out << export_dot(analyze(m, opts));
            return 0;
        }
    } catch (const std::exception& e) {
        return detail::report_error(err, e);
    }
    err << "usage error: no subcommand\n";
    return 1;
}

}  // namespace termspace
