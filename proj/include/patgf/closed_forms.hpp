#pragma once

// Closed forms and functional equations for F (avoid), G (contain once),
// H (one 1-3-2, avoid) and PHI (one 1-3-2, contain once), plus the two
// decomposition-driven recursion engines.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "patgf/pattern.hpp"
#include "patgf/series.hpp"

namespace patgf {

/// Parameters outside a formula's hypotheses.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------- shapes

/// head followed by -m-(m+1)-...-k where m = |head| + 1, e.g. ("21", 5) -> 21-3-4-5.
GeneralizedPattern chain_pattern(std::string_view head, unsigned k);
/// 12...k, all adjacent.
GeneralizedPattern increasing_run(unsigned k);
/// k...21, all adjacent.
GeneralizedPattern decreasing_run(unsigned k);
/// 12...d-(d+1)-...-k.
GeneralizedPattern run_then_chain(unsigned d, unsigned k);

// ---------------------------------------------------------------- F

/// F_{tau-3-...-k} = R_k for tau in {12, 1-2, 21, 2-1}.
QSeries f_chain(unsigned k, std::size_t order);
/// F = sum_{j=0}^{k-1} (xF)^j; serves both 12...k and k...21.
QSeries f_all_adjacent(unsigned k, std::size_t order);
/// tau = tau'-(d+1)(d+2)...k:
/// F = sum_{j=0}^{k-d-1} (xF)^j + x^{k-d} F^{k-d} F_{tau'}.
QSeries f_tail_adjacent(const QSeries& f_prefix, unsigned d, unsigned k, std::size_t order);
/// (1 - x - sqrt(1 - 2x + x^2 - 4x^2 R_{k-2})) / (2x^2 R_{k-2}), k >= 3.
QSeries f_double_run(unsigned k, std::size_t order);
/// tau = tau'-k-tau''-d: 1 / (1 - x (1 - x F' F'') / (1 - x (F' + F''))).
QSeries f_two_layer(const QSeries& f_left, const QSeries& f_right, std::size_t order);
/// R_k for a wedge pattern on k letters.
QSeries f_wedge(unsigned k, std::size_t order);
/// Fully adjacent patterns of length three.
QSeries f_small(const GeneralizedPattern& pat, std::size_t order);
/// 1 / (1 - x M(x)), the series for 123-4 and 321-4.
QSeries f_directed_animals(std::size_t order);
/// The radical (1/2) sqrt((1 + x)/(1 - 3x)) as printed; its constant term is 1/2.
QSeries f_directed_animals_radical_literal(std::size_t order);

// ---------------------------------------------------------------- G

/// 1 / ((1 - x) U_k^2), pattern 12-3-...-k, k >= 2.
QSeries g_cd2(unsigned k, std::size_t order);
/// G = sum_{j=1}^{k-1} j x^j G F^{j-1} + x^k F^k with F = F_{[k]}, k >= 1.
QSeries g_con11(unsigned k, std::size_t order);
/// (U_d^2 / U_k^2) G_{[d]}, pattern 12...d-(d+1)-...-k, k >= d >= 1.
QSeries g_gdd1(unsigned d, unsigned k, std::size_t order);
/// 1 / U_k^2, pattern 21-3-...-k, k >= 3.
QSeries g_g21(unsigned k, std::size_t order);
/// x^2 / (1 - x)^3 for 12 and 21.
QSeries g_small_12(std::size_t order);
/// x^3 M^3 / (1 - x - 2x^2 M) for 123 and 321.
QSeries g_small_123(std::size_t order);
/// G_{21-3} from H = x^2 F_21 (F_21 - 1) and G = x H F_21 + x F_21 G, exactly as written.
QSeries g_21_3_via_literal_h(std::size_t order);

// ---------------------------------------------------------------- H, PHI

/// (x / U_k^2) sum_{j=1}^{k-2} U_j^2, pattern 12-3-...-k, k >= 2.
QSeries h_h1(unsigned k, std::size_t order);
/// (x / U_k^2) (sum_{j=1}^{k-2} U_j^2 - 1), pattern 21-3-...-k, k >= 3.
QSeries h_h21(unsigned k, std::size_t order);
/// Pattern 12-3-...-k, k >= 2.
QSeries phi_12k(unsigned k, std::size_t order);
/// Pattern 21-3-...-k, k >= 3.
QSeries phi_21k(unsigned k, std::size_t order);
/// x^3 / (1 - x)^2 for the pattern 21.
QSeries phi_21(std::size_t order);

// ---------------------------------------------------------------- engines

struct EngineResult {
    QSeries series;
    /// How the top-level pattern was resolved, e.g. "decomposition", "tail-adjacent".
    std::string source;
    /// Some ingredient came from enumeration; the series order is capped at
    /// the enumeration horizon.
    bool oracle_bounded = false;
};

/// Evaluates F_tau by the right-to-left-maxima recursion
///   F_tau = 1 + x sum_{j=0}^{r} (F_{pi^j} - F_{pi^{j-1}}) F_{sigma^j},
/// with F of the empty pattern equal to 0. Patterns the recursion cannot
/// split fall back to the run, tail-adjacent and length-three closed forms
/// and finally to enumerated counts. Results are memoized per pattern.
class FEngine {
public:
    explicit FEngine(std::size_t order, int horizon = 12) : order_(order), horizon_(horizon) {}

    const EngineResult& evaluate(const GeneralizedPattern& pat);
    std::size_t order() const noexcept { return order_; }

private:
    EngineResult resolve(const GeneralizedPattern& pat);

    std::size_t order_;
    int horizon_;
    std::map<GeneralizedPattern, EngineResult> memo_;
};

/// The recursion applied to a decomposable pattern; throws
/// DecompositionError otherwise.
EngineResult theorem1_f_engine(const GeneralizedPattern& pat, std::size_t order);

/// Containment-once recursion over the same decomposition:
///   r = 0:  G_tau = x F_tau G_{pi^0} / (1 - x F_{pi^0})
///   r >= 1: (1 - x F_{pi^0} - x F_{sigma^r}) G_tau
///              = x sum_{j=1}^{r} G^{pi^j}_{pi^{j-1}} G^{sigma^{j-1}}_{sigma^j}
/// where G^b_a counts avoiders of b containing a once (enumerated). The
/// formula is evaluated as stated; agreement with enumeration is decided by
/// the verification harness, not assumed.
EngineResult contain1_g_engine(const GeneralizedPattern& pat, std::size_t order, int horizon = 12);

/// The two nine-letter wedge examples and every tau'-k-tau''-d with k <= 6
/// whose outer blocks are increasing chains (a-(a+1)-...-b or
/// a(a+1)-(a+2)-...-b).
std::vector<GeneralizedPattern> wedge_catalog();

}  // namespace patgf
