// patgf: expand generating functions, count permutations, run the
// closed-form verification harness.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "patgf/catalog.hpp"
#include "patgf/closed_forms.hpp"
#include "patgf/enumerate.hpp"
#include "patgf/verify.hpp"

#ifndef PATGF_DEFAULT_LEDGER
#define PATGF_DEFAULT_LEDGER "config/errata.json"
#endif

using namespace patgf;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Family require_family(const std::string& name) {
    auto f = parse_family(name);
    if (!f) throw UsageError("unknown family '" + name + "'");
    return *f;
}

struct SeriesArgs {
    std::string family, pattern, entry, tau, format = "tsv";
    unsigned k = 0, d = 0;
    std::size_t order = 16;
    bool force = false;
};

int cmd_series(const SeriesArgs& a) {
    QSeries s(0);
    std::string family, pattern, source;
    if (!a.entry.empty()) {
        const CatalogEntry* e = find_entry(a.entry);
        if (!e) throw UsageError("unknown entry '" + a.entry + "'");
        const Instance in = e->make_instance({a.k, a.d, a.tau});
        s = e->builder(in, a.order);
        family = to_string(e->family);
        pattern = in.pattern.to_string();
        source = e->id;
    } else {
        if (a.family.empty() || a.pattern.empty()) throw UsageError("series needs --entry or --family with --pattern");
        const Family f = require_family(a.family);
        if (f == Family::MIXED) throw UsageError("series does not take MIXED");
        const GeneralizedPattern pat = parse_pattern(a.pattern);
        const int horizon = a.force ? static_cast<int>(a.order) : default_horizon(f);
        if (f == Family::F) {
            FEngine engine(a.order, horizon);
            const EngineResult& r = engine.evaluate(pat);
            s = r.series;
            source = r.source;
        } else {
            if (static_cast<int>(a.order) > horizon) {
                throw UsageError("order " + std::to_string(a.order) + " exceeds the " + a.family +
                                 " enumeration horizon " + std::to_string(horizon) + " (use --force)");
            }
            s = QSeries::from_integers(count_series(f, pat, static_cast<int>(a.order)).counts);
            source = "enumeration";
        }
        if (s.order() < a.order) {
            throw UsageError("order " + std::to_string(a.order) + " needs enumeration past n = " +
                             std::to_string(s.order()) + " (use --force)");
        }
        family = to_string(f);
        pattern = pat.to_string();
    }

    const auto coeffs = s.to_strings();
    if (a.format == "json") {
        const nlohmann::json doc{{"family", family},
                                 {"pattern", pattern},
                                 {"order", s.order()},
                                 {"coefficients", coeffs},
                                 {"source", source}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "n\tcoeff\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << i << '\t' << coeffs[i] << '\n';
    }
    return kOk;
}

struct CountArgs {
    std::string family, pattern, contain;
    int n = 0;
    bool force = false;
};

int cmd_count(const CountArgs& a) {
    const Family f = require_family(a.family);
    const GeneralizedPattern pat = parse_pattern(a.pattern);
    if (a.n < 0) throw UsageError("--n must be non-negative");
    if (!a.force && a.n > default_horizon(f)) {
        throw UsageError("n = " + std::to_string(a.n) + " exceeds the " + a.family + " horizon " +
                         std::to_string(default_horizon(f)) + " (use --force)");
    }
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t value = 0;
    if (f == Family::MIXED) {
        if (a.contain.empty()) throw UsageError("MIXED needs --contain");
        value = mixed_avoid_contain_series(pat, parse_pattern(a.contain), a.n).counts.back();
    } else {
        value = count_at(f, pat, a.n);
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::cout << value << '\n';
    std::cerr << "elapsed " << dt.count() << " s\n";
    return kOk;
}

struct VerifyArgs {
    bool all = false;
    std::string entry, pattern, report, format = "json", ledger = PATGF_DEFAULT_LEDGER;
    std::size_t order = 16;
    std::optional<int> max_n;
    unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a) {
    if (!a.all && a.entry.empty() && a.pattern.empty()) throw UsageError("verify needs --all, --entry or --pattern");
    if (!a.entry.empty() && !find_entry(a.entry)) throw UsageError("unknown entry '" + a.entry + "'");
    ErrataLedger ledger;
    try {
        ledger = ErrataLedger::load(a.ledger);
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
    VerifyOptions opts;
    if (!a.entry.empty()) opts.entry = a.entry;
    if (!a.pattern.empty()) opts.pattern = parse_pattern(a.pattern).to_string();
    opts.order = a.order;
    opts.max_n = a.max_n;
    opts.threads = a.threads;

    VerifyReport report;
    try {
        report = run_verify(opts, ledger);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    const std::string text = a.format == "tsv" ? report_tsv(report) : report_json(report);
    if (a.report.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(a.report, std::ios::binary);
        if (!out) throw UsageError("cannot write '" + a.report + "'");
        out << text;
    }
    std::size_t errata = 0;
    for (const auto& r : report.entries) errata += r.observed_status == EntryStatus::DocumentedErratum;
    std::cerr << report.entries.size() << " rows, " << errata << " documented errata, " << report.unexpected
              << " unexpected\n";
    return report.unexpected == 0 ? kOk : kMismatch;
}

int cmd_catalog() {
    std::cout << "id\tfamily\tinstances\tformula\n";
    for (const auto& e : catalog())
        std::cout << e.id << '\t' << to_string(e.family) << '\t' << e.instances.size() << '\t' << e.formula << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generating functions for 1-3-2-avoiding permutations under generalized patterns"};
    app.require_subcommand(1);

    SeriesArgs sa;
    auto* series = app.add_subcommand("series", "Expand a generating function");
    series->add_option("--family", sa.family, "F, G, H or PHI");
    series->add_option("--pattern", sa.pattern, "Generalized pattern, e.g. 1-23");
    series->add_option("--entry", sa.entry, "Catalog entry id");
    series->add_option("--k", sa.k);
    series->add_option("--d", sa.d);
    series->add_option("--tau", sa.tau, "Head or full pattern, depending on the entry");
    series->add_option("--order", sa.order)->capture_default_str();
    series->add_option("--format", sa.format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
    series->add_flag("--force", sa.force, "Enumerate past the default horizon");

    CountArgs ca;
    auto* count = app.add_subcommand("count", "Enumerate one size");
    count->add_option("--family", ca.family)->required();
    count->add_option("--pattern", ca.pattern)->required();
    count->add_option("--contain", ca.contain, "MIXED: the pattern contained exactly once");
    count->add_option("--n", ca.n)->required();
    count->add_flag("--force", ca.force);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check catalog entries against enumeration");
    verify->add_flag("--all", va.all);
    verify->add_option("--entry", va.entry);
    verify->add_option("--pattern", va.pattern);
    verify->add_option("--order", va.order)->capture_default_str();
    verify->add_option("--max-n", va.max_n);
    verify->add_option("--report", va.report, "Write the report here instead of stdout");
    verify->add_option("--format", va.format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
    verify->add_option("--ledger", va.ledger)->capture_default_str();
    verify->add_option("--threads", va.threads);

    auto* cat = app.add_subcommand("catalog", "List entry ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*series) return cmd_series(sa);
        if (*count) return cmd_count(ca);
        if (*verify) return cmd_verify(va);
        if (*cat) return cmd_catalog();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PatternError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        // HypothesisError, DecompositionError
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}
