#pragma once

// Named closed forms, each with the pattern instances it is checked on.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patgf/enumerate.hpp"
#include "patgf/pattern.hpp"
#include "patgf/series.hpp"

namespace patgf {

enum class EntryStatus { ExpectedMatch, DocumentedErratum };

std::string to_string(EntryStatus s);
std::optional<EntryStatus> parse_status(std::string_view text);

/// Shape parameters; which ones matter depends on the entry.
struct Params {
    unsigned k = 0;
    unsigned d = 0;
    std::string tau;
};

struct Instance {
    GeneralizedPattern pattern;
    Params params;
};

using Builder = std::function<QSeries(const Instance&, std::size_t order)>;

struct CatalogEntry {
    std::string id;
    Family family = Family::F;
    std::string formula;
    std::vector<Instance> instances;
    Builder builder;
    /// Independent route through a recursion engine, when one applies.
    std::function<std::optional<QSeries>(const Instance&, std::size_t order)> engine;
    /// Largest n compared against enumeration.
    int bound = 12;
    /// Accepts user-supplied parameters (series --entry); throws HypothesisError
    /// when they fall outside the formula's range.
    std::function<Instance(const Params&)> make_instance;
};

/// Entries in id order.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(std::string_view id);

/// Evaluates entry `id` at `params`. Throws std::out_of_range for an unknown
/// id and HypothesisError for parameters outside the entry's range.
QSeries entry_series(std::string_view id, const Params& params, std::size_t order);

QSeries f_series(std::string_view id, const Params& params, std::size_t order);
QSeries g_series(std::string_view id, const Params& params, std::size_t order);
QSeries h_series(std::string_view id, const Params& params, std::size_t order);
QSeries phi_series(std::string_view id, const Params& params, std::size_t order);

/// 1-2-...-(k-2)-(k-1)k with the head 1-2 replaced by head (1-2, 12, 2-1, 21);
/// k = 3 only allows the one-letter head "1".
GeneralizedPattern double_run_pattern(std::string_view head, unsigned k);

}  // namespace patgf
