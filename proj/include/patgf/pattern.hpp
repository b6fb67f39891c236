#pragma once

// Permutations, generalized (dashed) patterns, occurrence counting and the
// right-to-left-maxima decomposition used by the recursion engines.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace patgf {

class PatternError : public std::invalid_argument {
public:
    PatternError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A permutation of 1..n stored in one-line notation. n = 0 is legal.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    std::span<const int> entries() const noexcept { return entries_; }

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> entries_;
};

/// True iff `values` is a bijection on {1, ..., values.size()}.
bool is_permutation_of_1n(std::span<const int> values);

/// Order-isomorphic renumbering of distinct values onto 1..size.
std::vector<int> reduce_values(std::span<const int> values);

/// Letters of a permutation of 1..k plus k-1 adjacency flags; adjacency[i]
/// is true when no dash separates positions i and i+1.
class GeneralizedPattern {
public:
    GeneralizedPattern() = default;
    GeneralizedPattern(std::vector<int> letters, std::vector<bool> adjacency);

    /// Every pair of neighbouring letters separated by a dash.
    static GeneralizedPattern classical(std::vector<int> letters);
    /// No dashes at all.
    static GeneralizedPattern consecutive(std::vector<int> letters);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int letter(std::size_t i) const { return letters_[i]; }
    bool adjacent(std::size_t i) const { return adjacency_[i]; }
    const std::vector<int>& letters() const noexcept { return letters_; }
    const std::vector<bool>& adjacency() const noexcept { return adjacency_; }

    bool fully_adjacent() const noexcept;
    bool fully_dashed() const noexcept;

    /// Positions [first, last) renumbered order-isomorphically, keeping the
    /// internal adjacency flags.
    GeneralizedPattern subpattern(std::size_t first, std::size_t last) const;

    /// Same letters, every adjacency requirement dropped.
    GeneralizedPattern underlying() const { return classical(letters_); }

    /// Dash grammar; the empty pattern prints as "".
    std::string to_string() const;

    friend bool operator==(const GeneralizedPattern&, const GeneralizedPattern&) = default;
    friend auto operator<=>(const GeneralizedPattern&, const GeneralizedPattern&) = default;

private:
    std::vector<int> letters_;
    std::vector<bool> adjacency_;
};

/// pattern := block ('-' block)* ; block := [1-9]+
/// Throws PatternError carrying the offending character position.
GeneralizedPattern parse_pattern(std::string_view text);

/// Number of occurrences of `pat` in `perm`. With a cap, counting stops as
/// soon as `cap` occurrences are found and the result is min(count, cap).
/// The empty pattern occurs exactly once in every permutation.
std::uint64_t occurrences(std::span<const int> perm, const GeneralizedPattern& pat,
                          std::optional<std::uint64_t> cap = std::nullopt);

inline std::uint64_t occurrences(const Permutation& perm, const GeneralizedPattern& pat,
                                 std::optional<std::uint64_t> cap = std::nullopt) {
    return occurrences(perm.entries(), pat, cap);
}

inline bool avoids(std::span<const int> perm, const GeneralizedPattern& pat) {
    return occurrences(perm, pat, 1) == 0;
}
inline bool avoids(const Permutation& perm, const GeneralizedPattern& pat) {
    return avoids(perm.entries(), pat);
}

/// The classical pattern 1-3-2.
const GeneralizedPattern& pattern_132();

class DecompositionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A pattern split at its right-to-left maxima,
/// tau = phi^0 - m_0 - phi^1 - m_1 - ... - phi^r - m_r.
class CanonicalDecomposition {
public:
    /// r, i.e. number of maxima minus one.
    std::size_t r() const noexcept { return maxima_.size() - 1; }
    const GeneralizedPattern& source() const noexcept { return source_; }

    /// Block phi^i renumbered onto 1..|phi^i|.
    const GeneralizedPattern& block(std::size_t i) const { return blocks_[i]; }
    const std::vector<GeneralizedPattern>& blocks() const noexcept { return blocks_; }
    /// Letters of phi^i with their original values.
    const std::vector<int>& raw_block(std::size_t i) const { return raw_blocks_[i]; }
    const std::vector<int>& maxima() const noexcept { return maxima_; }

    /// pi^i for i = -1..r: pi^{-1} is empty, pi^0 = phi^0, and pi^i for
    /// i >= 1 runs up to and including m_i.
    GeneralizedPattern prefix(int i) const;
    /// sigma^i for i = 0..r+1: from phi^i to the end; sigma^{r+1} is empty.
    GeneralizedPattern suffix(int i) const;

    /// Rebuilds the pattern from blocks, raw letter values and maxima.
    GeneralizedPattern reassemble() const;

private:
    friend CanonicalDecomposition canonical_decomposition(const GeneralizedPattern&);

    GeneralizedPattern source_;
    std::vector<GeneralizedPattern> blocks_;
    std::vector<std::vector<int>> raw_blocks_;
    std::vector<int> maxima_;
    std::vector<std::size_t> max_positions_;
};

/// Throws DecompositionError ("decomposition inapplicable") when the
/// underlying permutation contains 1-3-2 or a maximum touches a neighbour
/// without a dash.
CanonicalDecomposition canonical_decomposition(const GeneralizedPattern& pat);

/// Non-throwing variant.
std::optional<CanonicalDecomposition> try_canonical_decomposition(const GeneralizedPattern& pat);

}  // namespace patgf
