#pragma once

// Brute-force ground truth: generators for the permutation classes and the
// counting tables built on them.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patgf/pattern.hpp"

namespace patgf {

enum class Family { F, G, H, PHI, MIXED };

std::string to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

using PermVisitor = std::function<void(std::span<const int>)>;

/// Visits every 1-3-2-avoiding permutation of size n.
///
/// The permutation is assembled as beta n gamma: n sits at position a,
/// beta is an avoider on the a-1 largest remaining values and gamma an
/// avoider on the smallest ones. `position_of_max` restricts the walk to a
/// single value of a, which is the unit of parallel work.
void for_each_avoider_132(int n, const PermVisitor& visit,
                          std::optional<int> position_of_max = std::nullopt);

/// Visits every permutation of size n containing classical 1-3-2 exactly
/// once, built from its three possible shapes:
///   (i)   alpha' n alpha''  with alpha' the one-occurrence part on the top values,
///   (ii)  alpha' n alpha''  with alpha'' the one-occurrence part,
///   (iii) alpha' (n-t+1) n alpha'' (n-t+2) alpha''' with all three parts avoiders.
/// Restricting `position_of_max` selects the permutations with n at that
/// (1-based) position.
void for_each_exactly_one_132(int n, const PermVisitor& visit,
                              std::optional<int> position_of_max = std::nullopt);

/// Lexicographic walk over all of S_n; the independent oracle for the two
/// structured generators.
void for_each_permutation(int n, const PermVisitor& visit);

std::vector<Permutation> avoiders_132(int n);
std::vector<Permutation> exactly_one_132(int n);

/// Largest sizes enumerated by default: avoiders for F/G/MIXED, the
/// one-occurrence stream for H/PHI.
inline constexpr int kAvoiderHorizon = 12;
inline constexpr int kExactlyOneHorizon = 10;
int default_horizon(Family f);

struct CountTable {
    Family family = Family::F;
    GeneralizedPattern pattern;
    std::optional<GeneralizedPattern> aux_pattern;  // MIXED: the pattern contained once
    std::vector<std::uint64_t> counts;
};

struct CountOptions {
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// counts[n] for n = 0..max_n:
///   F:   avoiders of 1-3-2 that avoid pat
///   G:   avoiders of 1-3-2 that contain pat exactly once
///   H:   one-occurrence permutations that avoid pat
///   PHI: one-occurrence permutations that contain pat exactly once
/// MIXED is rejected here; use mixed_avoid_contain_series.
CountTable count_series(Family family, const GeneralizedPattern& pat, int max_n,
                        const CountOptions& opts = {});

/// counts[n] = #{pi in S_n(1-3-2) : pi avoids `avoid`, pi contains `contain_once` once}.
CountTable mixed_avoid_contain_series(const GeneralizedPattern& avoid,
                                      const GeneralizedPattern& contain_once, int max_n,
                                      const CountOptions& opts = {});

/// Single-size count; same semantics as count_series.
std::uint64_t count_at(Family family, const GeneralizedPattern& pat, int n,
                       const CountOptions& opts = {});

std::uint64_t catalan_number(int n);

}  // namespace patgf
