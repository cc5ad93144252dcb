#include "symhecke/cli.hpp"

#include "symhecke/catalog.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#ifndef SYMHECKE_DEFAULT_CATALOG
#define SYMHECKE_DEFAULT_CATALOG "catalog"
#endif

namespace symhecke {

namespace {

struct Options {
    std::string pair;
    std::string catalog = SYMHECKE_DEFAULT_CATALOG;
    std::string chi;
    std::uint64_t seed = 1;
    int trials = 100;
    std::string out;
    std::string format = "json";
};

void emit(const std::string& text, const Options& o, std::ostream& out)
{
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
}

std::vector<CatalogEntry> entries_for(const Options& o)
{
    if (o.pair == "all") return load_catalog(o.catalog);
    return {resolve_entry(o.catalog, o.pair)};
}

int cmd_describe(const Options& o, std::ostream& out)
{
    std::string text;
    for (const CatalogEntry& e : entries_for(o)) {
        PairData P = build_pair(e);
        text += describe(e, P);
    }
    emit(text, o, out);
    return 0;
}

int cmd_module(const Options& o, std::ostream& out)
{
    CatalogEntry e = resolve_entry(o.catalog, o.pair);
    PairData P = build_pair(e);
    Character chi = o.chi.empty() ? Character::from_mask(0, P.G.rank) : parse_chi(o.chi, P.G.rank);
    emit(module_json(P, chi).dump(2) + "\n", o, out);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.trials < 1) throw InputError("--trials must be positive");
    VerifyOptions vo;
    vo.seed = o.seed;
    vo.trials = o.trials;
    std::vector<CatalogEntry> entries = entries_for(o);
    std::vector<PairReport> reports;
    for (const CatalogEntry& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        reports.push_back(verify_pair(e, vo));
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const PairReport& r = reports.back();
        err << r.pair << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.checks.size() << " checks, " << secs << " s)\n";
        for (const ScopedCheck& c : r.checks)
            if (!c.check.pass) err << "  " << c.scope << " / " << c.check.name << ": " << c.check.detail << "\n";
    }
    auto doc = report_json(reports, vo);
    emit(doc.dump(2) + "\n", o, out);
    return doc["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Monodromy modules of symmetric pairs: describe, emit and verify catalog entries", "symhecke"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool allow_all) {
        sub->add_option("--pair", o.pair, allow_all ? "catalog name, entry file, or \"all\"" : "catalog name or entry file")->required();
        sub->add_option("--catalog", o.catalog, "catalog directory")->capture_default_str();
        sub->add_option("--out", o.out, "write output to this file instead of stdout");
    };
    CLI::App* describe_cmd = app.add_subcommand("describe", "print the structure of a pair");
    common(describe_cmd, true);
    CLI::App* module_cmd = app.add_subcommand("module", "emit the monodromy module of a character as JSON");
    common(module_cmd, false);
    module_cmd->add_option("--chi", o.chi, "character values on the basis of I, e.g. +1,-1 (default trivial)");
    module_cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json"}));
    CLI::App* verify_cmd = app.add_subcommand("verify", "run every check and emit a JSON report");
    common(verify_cmd, true);
    verify_cmd->add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
    verify_cmd->add_option("--trials", o.trials, "random chamber samples per pair")->capture_default_str();
    verify_cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os, es;
        int code = app.exit(e, os, es);
        out << os.str();
        err << es.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (*describe_cmd) return cmd_describe(o, out);
        if (*module_cmd) return cmd_module(o, out);
        return cmd_verify(o, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TheoryViolation& e) {
        err << "theory violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace symhecke
