#include "patgf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "json.hpp"

namespace patgf {

using nlohmann::json;

ErrataLedger ErrataLedger::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read errata ledger '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

ErrataLedger ErrataLedger::parse(const std::string& json_text) {
    ErrataLedger ledger;
    try {
        const json doc = json::parse(json_text);
        for (const auto& item : doc.at("errata")) {
            ErratumPin pin{item.at("first_mismatch_n").get<std::size_t>(), item.value("reason", std::string{})};
            ledger.pins_[{item.at("entry").get<std::string>(), item.at("pattern").get<std::string>()}] = std::move(pin);
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed errata ledger: ") + e.what());
    }
    return ledger;
}

const ErratumPin* ErrataLedger::find(const std::string& entry, const std::string& pattern) const {
    auto it = pins_.find({entry, pattern});
    return it == pins_.end() ? nullptr : &it->second;
}

bool ReportRow::as_pinned(const ErrataLedger& ledger) const {
    if (observed_status != expected_status) return false;
    if (expected_status == EntryStatus::ExpectedMatch) return true;
    const ErratumPin* pin = ledger.find(entry_id, pattern);
    return pin && first_mismatch_n && *first_mismatch_n == pin->first_mismatch_n;
}

namespace {

struct Job {
    const CatalogEntry* entry;
    const Instance* instance;
};

std::optional<std::size_t> compare(const QSeries& s, const std::vector<std::uint64_t>& truth, int max_n) {
    const std::size_t top = std::min<std::size_t>(s.order(), static_cast<std::size_t>(max_n));
    for (std::size_t i = 0; i <= top; ++i)
        if (s[i] != Rational(truth[i])) return i;
    return std::nullopt;
}

std::optional<std::size_t> earliest(std::optional<std::size_t> a, std::optional<std::size_t> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

ReportRow run_one(const Job& job, const VerifyOptions& opts, const ErrataLedger& ledger) {
    const CatalogEntry& e = *job.entry;
    ReportRow row;
    row.entry_id = e.id;
    row.pattern = job.instance->pattern.to_string();
    row.family = e.family;
    row.max_n = opts.max_n ? std::min(*opts.max_n, e.bound) : e.bound;
    row.expected_status = ledger.find(row.entry_id, row.pattern) ? EntryStatus::DocumentedErratum
                                                                  : EntryStatus::ExpectedMatch;

    const CountOptions serial{1};
    const auto truth = count_series(e.family, job.instance->pattern, row.max_n, serial).counts;
    for (auto c : truth) row.enumeration_coeffs.push_back(std::to_string(c));

    std::optional<std::size_t> mismatch;
    try {
        const QSeries closed = e.builder(*job.instance, opts.order);
        row.closed_form_coeffs = closed.to_strings();
        mismatch = compare(closed, truth, row.max_n);
    } catch (const std::exception& ex) {
        row.error = ex.what();
        mismatch = 0;
    }
    if (e.engine) {
        if (auto engine = e.engine(*job.instance, opts.order)) {
            row.engine_coeffs = engine->to_strings();
            mismatch = earliest(mismatch, compare(*engine, truth, row.max_n));
        }
    }
    row.first_mismatch_n = mismatch;
    row.match = !mismatch;
    row.observed_status = row.match ? EntryStatus::ExpectedMatch : EntryStatus::DocumentedErratum;
    return row;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts, const ErrataLedger& ledger) {
    std::vector<Job> jobs;
    for (const auto& e : catalog()) {
        if (opts.entry && e.id != *opts.entry) continue;
        for (const auto& in : e.instances) {
            if (opts.pattern && in.pattern.to_string() != *opts.pattern) continue;
            jobs.push_back({&e, &in});
        }
    }
    if (jobs.empty()) throw std::out_of_range("no catalog rows match the filter");

    std::vector<ReportRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) rows[i] = run_one(jobs[i], opts, ledger);
    };
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return std::tie(a.entry_id, a.pattern) < std::tie(b.entry_id, b.pattern);
    });
    VerifyReport report{std::move(rows), 0};
    for (const auto& r : report.entries)
        if (!r.as_pinned(ledger)) ++report.unexpected;
    return report;
}

std::string report_json(const VerifyReport& report) {
    json rows = json::array();
    for (const auto& r : report.entries) {
        json row{{"entry_id", r.entry_id},
                 {"pattern", r.pattern},
                 {"family", to_string(r.family)},
                 {"max_n", r.max_n},
                 {"closed_form_coeffs", r.closed_form_coeffs},
                 {"enumeration_coeffs", r.enumeration_coeffs},
                 {"match", r.match},
                 {"expected_status", to_string(r.expected_status)},
                 {"observed_status", to_string(r.observed_status)}};
        if (r.engine_coeffs) row["engine_coeffs"] = *r.engine_coeffs;
        if (r.first_mismatch_n) row["first_mismatch_n"] = *r.first_mismatch_n;
        if (r.error) row["error"] = *r.error;
        rows.push_back(std::move(row));
    }
    const json doc{{"entries", rows}, {"unexpected", report.unexpected}};
    return doc.dump(2) + "\n";
}

std::string report_tsv(const VerifyReport& report) {
    std::ostringstream out;
    out << "entry_id\tpattern\tfamily\tmax_n\tmatch\tfirst_mismatch_n\texpected_status\tobserved_status\n";
    for (const auto& r : report.entries) {
        out << r.entry_id << '\t' << r.pattern << '\t' << to_string(r.family) << '\t' << r.max_n << '\t'
            << (r.match ? "true" : "false") << '\t' << (r.first_mismatch_n ? std::to_string(*r.first_mismatch_n) : "-")
            << '\t' << to_string(r.expected_status) << '\t' << to_string(r.observed_status) << '\n';
    }
    return out.str();
}

}  // namespace patgf
