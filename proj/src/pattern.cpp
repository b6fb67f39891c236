#include "patgf/pattern.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace patgf {

bool is_permutation_of_1n(std::span<const int> values) {
    std::vector<bool> seen(values.size() + 1, false);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<int> reduce_values(std::span<const int> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<int> out(values.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) out[order[rank]] = static_cast<int>(rank + 1);
    return out;
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    if (!is_permutation_of_1n(entries_)) throw std::invalid_argument("not a permutation of 1..n");
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i && size() > 9) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

GeneralizedPattern::GeneralizedPattern(std::vector<int> letters, std::vector<bool> adjacency)
    : letters_(std::move(letters)), adjacency_(std::move(adjacency)) {
    if (!is_permutation_of_1n(letters_)) throw std::invalid_argument("pattern letters must be a permutation of 1..k");
    const std::size_t want = letters_.empty() ? 0 : letters_.size() - 1;
    if (adjacency_.size() != want) throw std::invalid_argument("pattern needs exactly k-1 adjacency flags");
}

GeneralizedPattern GeneralizedPattern::classical(std::vector<int> letters) {
    const std::size_t gaps = letters.empty() ? 0 : letters.size() - 1;
    return GeneralizedPattern(std::move(letters), std::vector<bool>(gaps, false));
}

GeneralizedPattern GeneralizedPattern::consecutive(std::vector<int> letters) {
    const std::size_t gaps = letters.empty() ? 0 : letters.size() - 1;
    return GeneralizedPattern(std::move(letters), std::vector<bool>(gaps, true));
}

bool GeneralizedPattern::fully_adjacent() const noexcept {
    return std::all_of(adjacency_.begin(), adjacency_.end(), [](bool b) { return b; });
}

bool GeneralizedPattern::fully_dashed() const noexcept {
    return std::none_of(adjacency_.begin(), adjacency_.end(), [](bool b) { return b; });
}

GeneralizedPattern GeneralizedPattern::subpattern(std::size_t first, std::size_t last) const {
    if (first > last || last > size()) throw std::out_of_range("subpattern range");
    if (first == last) return {};
    std::vector<int> raw(letters_.begin() + first, letters_.begin() + last);
    std::vector<bool> adj(adjacency_.begin() + first, adjacency_.begin() + (last - 1));
    return GeneralizedPattern(reduce_values(raw), std::move(adj));
}

std::string GeneralizedPattern::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0 && !adjacency_[i - 1]) out += '-';
        out += std::to_string(letters_[i]);
    }
    return out;
}

GeneralizedPattern parse_pattern(std::string_view text) {
    std::vector<int> letters;
    std::vector<bool> adjacency;
    std::array<bool, 10> seen{};
    bool block_open = false;  // at least one digit since the last dash
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c == '-') {
            if (!block_open) throw PatternError("empty block at position " + std::to_string(pos), pos);
            block_open = false;
            continue;
        }
        if (c < '1' || c > '9') {
            throw PatternError("illegal character '" + std::string(1, c) + "' at position " + std::to_string(pos), pos);
        }
        const int d = c - '0';
        if (seen[d]) throw PatternError("duplicate letter " + std::string(1, c) + " at position " + std::to_string(pos), pos);
        seen[d] = true;
        if (!letters.empty()) adjacency.push_back(block_open);
        letters.push_back(d);
        block_open = true;
    }
    if (!block_open) throw PatternError("empty block at position " + std::to_string(text.size()), text.size());
    for (std::size_t d = 1; d <= letters.size(); ++d) {
        if (!seen[d]) throw PatternError("letters do not span 1.." + std::to_string(letters.size()) + " (missing " + std::to_string(d) + ")", 0);
    }
    return GeneralizedPattern(std::move(letters), std::move(adjacency));
}

namespace {

// Depth-first placement of pattern positions. For every pattern position j,
// `lower[j]` / `upper[j]` name the earlier position holding the closest
// smaller / larger letter, so one comparison on each side decides
// order-isomorphism of the extended prefix.
class OccurrenceSearch {
public:
    OccurrenceSearch(std::span<const int> perm, const GeneralizedPattern& pat, std::uint64_t cap)
        : perm_(perm), pat_(pat), k_(pat.size()), cap_(cap) {
        for (std::size_t j = 0; j < k_; ++j) {
            int lo = -1, hi = -1;
            for (std::size_t t = 0; t < j; ++t) {
                const int lt = pat.letter(t);
                if (lt < pat.letter(j) && (lo < 0 || lt > pat.letter(lo))) lo = static_cast<int>(t);
                if (lt > pat.letter(j) && (hi < 0 || lt < pat.letter(hi))) hi = static_cast<int>(t);
            }
            lower_[j] = lo;
            upper_[j] = hi;
        }
    }

    std::uint64_t run() {
        if (k_ > perm_.size()) return 0;
        place(0, 0);
        return count_;
    }

private:
    bool fits(std::size_t j, std::size_t i) const {
        const int v = perm_[i];
        if (lower_[j] >= 0 && perm_[chosen_[lower_[j]]] > v) return false;
        if (upper_[j] >= 0 && perm_[chosen_[upper_[j]]] < v) return false;
        return true;
    }

    // Returns true once the cap is reached.
    bool place(std::size_t j, std::size_t start) {
        if (j == k_) return ++count_ >= cap_;
        const std::size_t last = perm_.size() - (k_ - j);  // leave room for the rest
        if (j > 0 && pat_.adjacent(j - 1)) {
            const std::size_t i = chosen_[j - 1] + 1;
            if (i > last || !fits(j, i)) return false;
            chosen_[j] = i;
            return place(j + 1, i + 1);
        }
        for (std::size_t i = start; i <= last; ++i) {
            if (!fits(j, i)) continue;
            chosen_[j] = i;
            if (place(j + 1, i + 1)) return true;
        }
        return false;
    }

    std::span<const int> perm_;
    const GeneralizedPattern& pat_;
    std::size_t k_;
    std::uint64_t cap_;
    std::uint64_t count_ = 0;
    std::array<int, 16> lower_{};
    std::array<int, 16> upper_{};
    std::array<std::size_t, 16> chosen_{};
};

}  // namespace

std::uint64_t occurrences(std::span<const int> perm, const GeneralizedPattern& pat,
                          std::optional<std::uint64_t> cap) {
    const std::uint64_t limit = cap.value_or(UINT64_MAX);
    if (limit == 0) return 0;
    if (pat.empty()) return 1;
    if (pat.size() > 16) throw std::invalid_argument("pattern too long");
    return OccurrenceSearch(perm, pat, limit).run();
}

const GeneralizedPattern& pattern_132() {
    static const GeneralizedPattern p = GeneralizedPattern::classical({1, 3, 2});
    return p;
}

GeneralizedPattern CanonicalDecomposition::prefix(int i) const {
    const int r_ = static_cast<int>(r());
    if (i < -1 || i > r_) throw std::out_of_range("prefix index");
    if (i == -1) return {};
    if (i == 0) return source_.subpattern(0, max_positions_[0]);
    return source_.subpattern(0, max_positions_[i] + 1);
}

GeneralizedPattern CanonicalDecomposition::suffix(int i) const {
    const int r_ = static_cast<int>(r());
    if (i < 0 || i > r_ + 1) throw std::out_of_range("suffix index");
    if (i == r_ + 1) return {};
    const std::size_t start = i == 0 ? 0 : max_positions_[i - 1] + 1;
    return source_.subpattern(start, source_.size());
}

GeneralizedPattern CanonicalDecomposition::reassemble() const {
    std::vector<int> letters;
    std::vector<bool> adjacency;
    auto push = [&](int letter, bool adjacent_to_previous) {
        if (!letters.empty()) adjacency.push_back(adjacent_to_previous);
        letters.push_back(letter);
    };
    for (std::size_t i = 0; i < maxima_.size(); ++i) {
        const auto& raw = raw_blocks_[i];
        if (reduce_values(raw) != blocks_[i].letters()) throw std::logic_error("block letters out of sync");
        for (std::size_t j = 0; j < raw.size(); ++j) push(raw[j], j > 0 && blocks_[i].adjacent(j - 1));
        push(maxima_[i], false);
    }
    return GeneralizedPattern(std::move(letters), std::move(adjacency));
}

namespace {

std::vector<std::size_t> right_to_left_maxima(const GeneralizedPattern& pat) {
    std::vector<std::size_t> positions;
    int running = 0;
    for (std::size_t i = pat.size(); i-- > 0;) {
        if (pat.letter(i) > running) {
            positions.push_back(i);
            running = pat.letter(i);
        }
    }
    std::reverse(positions.begin(), positions.end());
    return positions;
}

// Empty when the decomposition applies.
std::string inapplicable_reason(const GeneralizedPattern& pat) {
    if (pat.empty()) return "empty pattern";
    if (!avoids(pat.letters(), pattern_132())) return "underlying pattern of " + pat.to_string() + " contains 1-3-2";
    for (std::size_t p : right_to_left_maxima(pat)) {
        if ((p > 0 && pat.adjacent(p - 1)) || (p + 1 < pat.size() && pat.adjacent(p))) {
            return "maximum " + std::to_string(pat.letter(p)) + " of " + pat.to_string() + " is not dash-separated";
        }
    }
    return {};
}

}  // namespace

std::optional<CanonicalDecomposition> try_canonical_decomposition(const GeneralizedPattern& pat) {
    if (!inapplicable_reason(pat).empty()) return std::nullopt;
    return canonical_decomposition(pat);
}

CanonicalDecomposition canonical_decomposition(const GeneralizedPattern& pat) {
    if (auto why = inapplicable_reason(pat); !why.empty()) {
        throw DecompositionError("decomposition inapplicable: " + why);
    }
    CanonicalDecomposition d;
    d.source_ = pat;
    d.max_positions_ = right_to_left_maxima(pat);
    std::size_t start = 0;
    for (std::size_t p : d.max_positions_) {
        d.maxima_.push_back(pat.letter(p));
        d.raw_blocks_.emplace_back(pat.letters().begin() + start, pat.letters().begin() + p);
        d.blocks_.push_back(pat.subpattern(start, p));
        start = p + 1;
    }
    return d;
}

}  // namespace patgf
