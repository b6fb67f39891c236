#pragma once

// Verification harness: closed form, engine and enumeration side by side,
// judged against the checked-in errata ledger.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patgf/catalog.hpp"

namespace patgf {

struct ErratumPin {
    std::size_t first_mismatch_n = 0;
    std::string reason;
};

/// (entry id, pattern text) -> pinned discrepancy. Rows without a pin are
/// expected to match.
class ErrataLedger {
public:
    ErrataLedger() = default;
    /// JSON file: {"errata": [{"entry", "pattern", "first_mismatch_n", "reason"}, ...]}.
    /// Throws std::runtime_error on unreadable or malformed input.
    static ErrataLedger load(const std::string& path);
    static ErrataLedger parse(const std::string& json_text);

    const ErratumPin* find(const std::string& entry, const std::string& pattern) const;
    const std::map<std::pair<std::string, std::string>, ErratumPin>& pins() const noexcept { return pins_; }

private:
    std::map<std::pair<std::string, std::string>, ErratumPin> pins_;
};

struct ReportRow {
    std::string entry_id;
    std::string pattern;
    Family family = Family::F;
    int max_n = 0;
    std::vector<std::string> closed_form_coeffs;
    std::vector<std::string> enumeration_coeffs;
    std::optional<std::vector<std::string>> engine_coeffs;
    bool match = false;
    std::optional<std::size_t> first_mismatch_n;
    EntryStatus expected_status = EntryStatus::ExpectedMatch;
    EntryStatus observed_status = EntryStatus::ExpectedMatch;
    /// Set when the closed form could not be expanded at all.
    std::optional<std::string> error;

    /// Observed status equals the pinned one, and a pinned erratum fails
    /// first at the pinned n.
    bool as_pinned(const ErrataLedger& ledger) const;
};

struct VerifyOptions {
    std::optional<std::string> entry;
    std::optional<std::string> pattern;
    std::size_t order = 16;
    /// Caps every entry's own bound.
    std::optional<int> max_n;
    unsigned threads = 0;
};

struct VerifyReport {
    std::vector<ReportRow> entries;
    std::size_t unexpected = 0;
};

/// Rows sorted by entry id, then pattern text. Throws std::out_of_range when
/// the filters select nothing.
VerifyReport run_verify(const VerifyOptions& opts, const ErrataLedger& ledger);

/// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string report_json(const VerifyReport& report);
std::string report_tsv(const VerifyReport& report);

}  // namespace patgf
