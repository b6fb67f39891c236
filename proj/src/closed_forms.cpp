#include "patgf/closed_forms.hpp"

#include <algorithm>

#include "patgf/chebyshev.hpp"
#include "patgf/enumerate.hpp"

namespace patgf {

namespace {

QSeries one(std::size_t order) { return QSeries::constant(1, order); }
QSeries x_pow(std::size_t m, std::size_t order) { return QSeries::monomial(m, 1, order); }
QSeries poly(std::initializer_list<Rational> c, std::size_t order) { return QSeries::from_poly(Poly(c), order); }

// Orders used inside the Chebyshev formulas, which pass through negative
// powers of x before settling.
std::size_t working_order(std::size_t order, unsigned k) { return order + 2 * k + 6; }

using HP = HalfPowerSeries;

HP hp_x(std::size_t order) { return {2, one(order)}; }

// sum_{j=1}^{upto} U_j^2; zero when upto == 0.
HP sum_u_squared(unsigned upto, std::size_t order) {
    HP acc = HP::constant(0, order);
    for (unsigned j = 1; j <= upto; ++j) acc = acc + square(HP::u(j, order));
    return acc;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw HypothesisError(what);
}

std::string letters_chain(int lo, int hi, bool adjacent_start) {
    std::string s;
    for (int v = lo; v <= hi; ++v) {
        if (v > lo && !(adjacent_start && v == lo + 1)) s += '-';
        s += std::to_string(v);
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------- shapes

GeneralizedPattern chain_pattern(std::string_view head, unsigned k) {
    const GeneralizedPattern h = parse_pattern(head);
    if (k < h.size()) throw HypothesisError("chain shorter than its head");
    std::string text(head);
    for (unsigned v = static_cast<unsigned>(h.size()) + 1; v <= k; ++v) text += "-" + std::to_string(v);
    return parse_pattern(text);
}

GeneralizedPattern increasing_run(unsigned k) {
    std::vector<int> letters(k);
    for (unsigned i = 0; i < k; ++i) letters[i] = static_cast<int>(i + 1);
    return GeneralizedPattern::consecutive(std::move(letters));
}

GeneralizedPattern decreasing_run(unsigned k) {
    std::vector<int> letters(k);
    for (unsigned i = 0; i < k; ++i) letters[i] = static_cast<int>(k - i);
    return GeneralizedPattern::consecutive(std::move(letters));
}

GeneralizedPattern run_then_chain(unsigned d, unsigned k) {
    if (d < 1 || k < d) throw HypothesisError("need k >= d >= 1");
    std::vector<int> letters(k);
    std::vector<bool> adjacency(k - 1, false);
    for (unsigned i = 0; i < k; ++i) letters[i] = static_cast<int>(i + 1);
    for (unsigned i = 0; i + 1 < d; ++i) adjacency[i] = true;
    return GeneralizedPattern(std::move(letters), std::move(adjacency));
}

// ---------------------------------------------------------------- F

QSeries f_chain(unsigned k, std::size_t order) {
    require(k >= 2, "chain patterns need k >= 2");
    return r_series(k, order);
}

QSeries f_all_adjacent(unsigned k, std::size_t order) {
    require(k >= 1, "run length must be positive");
    return solve_fixed_point(
        [&](const QSeries& f) {
            const QSeries xf = f.shift_up(1);
            QSeries term = one(order), acc(order);
            for (unsigned j = 0; j < k; ++j) {
                acc += term;
                term *= xf;
            }
            return acc;
        },
        order);
}

QSeries f_tail_adjacent(const QSeries& f_prefix, unsigned d, unsigned k, std::size_t order) {
    require(k > d && d >= 1, "tail-adjacent form needs k > d >= 1");
    const std::size_t n = std::min(order, f_prefix.order());
    return solve_fixed_point(
        [&](const QSeries& f) {
            const QSeries xf = f.shift_up(1);
            QSeries term = one(n), acc(n);
            for (unsigned j = 0; j < k - d; ++j) {
                acc += term;
                term *= xf;
            }
            return acc + term * f_prefix;
        },
        n);
}

QSeries f_double_run(unsigned k, std::size_t order) {
    require(k >= 3, "double-run form needs k >= 3");
    const std::size_t w = order + 2;
    const QSeries r = r_series(k - 2, w);
    const QSeries radicand = poly({1, -2, 1}, w) - Rational(4) * r.shift_up(2);
    const QSeries numerator = poly({1, -1}, w) - sqrt_series(radicand);
    return (Rational(1, 2) * shift_div(numerator, 2) / r.truncate(order)).truncate(order);
}

QSeries f_two_layer(const QSeries& f_left, const QSeries& f_right, std::size_t order) {
    const std::size_t n = std::min({order, f_left.order(), f_right.order()});
    const QSeries a = f_left.truncate(n), b = f_right.truncate(n);
    const QSeries inner = (one(n) - (a * b).shift_up(1)) / (one(n) - (a + b).shift_up(1));
    return one(n) / (one(n) - inner.shift_up(1));
}

QSeries f_wedge(unsigned k, std::size_t order) { return r_series(k, order); }

QSeries f_small(const GeneralizedPattern& pat, std::size_t order) {
    require(pat.size() == 3 && pat.fully_adjacent(), "small forms cover fully adjacent length-three patterns");
    const std::size_t w = order + 2;
    const std::string s = pat.to_string();
    if (s == "123" || s == "321") {
        const QSeries num = poly({1, -1}, w) - sqrt_series(poly({1, -2, -3}, w));
        return (Rational(1, 2) * shift_div(num, 2)).truncate(order);
    }
    if (s == "132") {
        const QSeries num = one(w) - sqrt_series(poly({1, -4}, w));
        return (Rational(1, 2) * shift_div(num, 1)).truncate(order);
    }
    if (s == "213" || s == "312") {
        // (1 + x^2)^2 - 4x = 1 - 4x + 2x^2 + x^4
        const QSeries num = poly({1, 0, -1}, w) - sqrt_series(poly({1, -4, 2, 0, 1}, w));
        return (shift_div(num, 1) / poly({2, -2}, w)).truncate(order);
    }
    if (s == "231") return poly({1, -1}, order) / poly({1, -2}, order);
    throw HypothesisError("no small form for " + s);
}

QSeries f_directed_animals(std::size_t order) {
    return one(order) / (one(order) - motzkin_series(order).shift_up(1));
}

QSeries f_directed_animals_radical_literal(std::size_t order) {
    return Rational(1, 2) * sqrt_series(poly({1, 1}, order) / poly({1, -3}, order));
}

// ---------------------------------------------------------------- G

QSeries g_cd2(unsigned k, std::size_t order) {
    require(k >= 2, "needs k >= 2");
    const std::size_t w = working_order(order, k);
    const HP one_minus_x{0, poly({1, -1}, w)};
    return (HP::constant(1, w) / (one_minus_x * square(HP::u(k, w)))).to_series().truncate(order);
}

QSeries g_con11(unsigned k, std::size_t order) {
    require(k >= 1, "needs k >= 1");
    const QSeries f = f_all_adjacent(k, order);
    std::vector<QSeries> fpow{one(order)};
    for (unsigned j = 1; j <= k; ++j) fpow.push_back(fpow.back() * f);
    return solve_fixed_point(
        [&](const QSeries& g) {
            QSeries acc = fpow[k].shift_up(k);
            for (unsigned j = 1; j < k; ++j) acc += Rational(j) * (g * fpow[j - 1]).shift_up(j);
            return acc;
        },
        order);
}

QSeries g_gdd1(unsigned d, unsigned k, std::size_t order) {
    require(k >= d && d >= 1, "needs k >= d >= 1");
    const std::size_t w = working_order(order, k);
    const HP ratio = square(HP::u(d, w)) / square(HP::u(k, w));
    return (ratio * HP{0, g_con11(d, w)}).to_series().truncate(order);
}

QSeries g_g21(unsigned k, std::size_t order) {
    require(k >= 3, "needs k >= 3");
    const std::size_t w = working_order(order, k);
    return (HP::constant(1, w) / square(HP::u(k, w))).to_series().truncate(order);
}

QSeries g_small_12(std::size_t order) { return x_pow(2, order) / power(poly({1, -1}, order), 3); }

QSeries g_small_123(std::size_t order) {
    const QSeries m = motzkin_series(order);
    return power(m, 3).shift_up(3) / (poly({1, -1}, order) - Rational(2) * m.shift_up(2));
}

QSeries g_21_3_via_literal_h(std::size_t order) {
    const QSeries f21 = one(order) / poly({1, -1}, order);
    const QSeries h = (f21 * (f21 - one(order))).shift_up(2);
    // G = x H F + x F G  =>  G = x H F / (1 - x F)
    return (h * f21).shift_up(1) / (one(order) - f21.shift_up(1));
}

// ---------------------------------------------------------------- H, PHI

QSeries h_h1(unsigned k, std::size_t order) {
    require(k >= 2, "needs k >= 2");
    const std::size_t w = working_order(order, k);
    const HP value = hp_x(w) / square(HP::u(k, w)) * sum_u_squared(k - 2, w);
    return value.to_series().truncate(order);
}

QSeries h_h21(unsigned k, std::size_t order) {
    require(k >= 3, "needs k >= 3");
    const std::size_t w = working_order(order, k);
    const HP value = hp_x(w) / square(HP::u(k, w)) * (sum_u_squared(k - 2, w) - HP::constant(1, w));
    return value.to_series().truncate(order);
}

QSeries phi_12k(unsigned k, std::size_t order) {
    require(k >= 2, "needs k >= 2");
    const std::size_t w = working_order(order, k);
    HP bracket = HP::constant(1, w);
    for (unsigned i = 2; i + 1 <= k; ++i) {
        const HP weight = Rational(2) * HP::sqrt_x(w) / (HP::u(i, w) * HP::u(i + 1, w));
        bracket = bracket + weight * (sum_u_squared(i, w) - HP::constant(1, w));
    }
    const HP value = bracket / (HP::u(2, w) * square(HP::u(k, w)));
    return value.to_series().truncate(order);
}

QSeries phi_21k(unsigned k, std::size_t order) {
    require(k >= 3, "needs k >= 3");
    const std::size_t w = working_order(order, k);
    const HP t = HP::t(w);
    HP bracket = square(HP::u(2, w)) / HP::u(3, w);
    for (unsigned i = 3; i + 1 <= k; ++i) {
        const HP weight = HP::constant(1, w) / (HP::u(i, w) * HP::u(i + 1, w));
        bracket = bracket + weight * (sum_u_squared(i, w) - HP::constant(2, w));
    }
    const HP prefactor = HP::constant(1, w) / (Rational(4) * t * t * t * square(HP::u(k, w)));
    return (prefactor * bracket).to_series().truncate(order);
}

QSeries phi_21(std::size_t order) { return x_pow(3, order) / power(poly({1, -1}, order), 2); }

// ---------------------------------------------------------------- engines

namespace {

bool is_increasing_consecutive(const GeneralizedPattern& p, std::size_t from, std::size_t to) {
    for (std::size_t i = from + 1; i < to; ++i)
        if (p.letter(i) != p.letter(i - 1) + 1) return false;
    return true;
}

// tau = tau'-(d+1)...k with |tau'| = d >= 1 and a trailing run of length >= 2.
std::optional<unsigned> tail_adjacent_split(const GeneralizedPattern& p) {
    const std::size_t k = p.size();
    if (k < 3) return std::nullopt;
    std::size_t start = k - 1;
    while (start > 0 && p.adjacent(start - 1)) --start;
    if (start == 0 || k - start < 2) return std::nullopt;
    if (p.letter(start) != static_cast<int>(start) + 1 || !is_increasing_consecutive(p, start, k)) return std::nullopt;
    return static_cast<unsigned>(start);
}

QSeries enumerated(Family family, const GeneralizedPattern& pat, std::size_t order, int horizon) {
    const int n = static_cast<int>(std::min<std::size_t>(order, static_cast<std::size_t>(horizon)));
    return QSeries::from_integers(count_series(family, pat, n).counts);
}

}  // namespace

const EngineResult& FEngine::evaluate(const GeneralizedPattern& pat) {
    if (auto it = memo_.find(pat); it != memo_.end()) return it->second;
    EngineResult res = resolve(pat);
    return memo_.emplace(pat, std::move(res)).first->second;
}

EngineResult FEngine::resolve(const GeneralizedPattern& pat) {
    if (pat.empty()) return {QSeries(order_), "empty", false};

    if (auto dec = try_canonical_decomposition(pat)) {
        const int r = static_cast<int>(dec->r());
        bool bounded = false;
        // prefixes[j] = F_{pi^j} for j < r (and j = 0 when r = 0); suffixes[j] = F_{sigma^j} for j >= 1.
        std::vector<QSeries> prefixes, suffixes(static_cast<std::size_t>(r) + 1, QSeries(order_));
        const int known_prefixes = r == 0 ? 1 : r;
        for (int j = 0; j < known_prefixes; ++j) {
            const auto& e = evaluate(dec->prefix(j));
            bounded |= e.oracle_bounded;
            prefixes.push_back(e.series);
        }
        for (int j = 1; j <= r; ++j) {
            const auto& e = evaluate(dec->suffix(j));
            bounded |= e.oracle_bounded;
            suffixes[j] = e.series;
        }
        auto update = [&](const QSeries& f) {
            QSeries sum(order_);
            for (int j = 0; j <= r; ++j) {
                const QSeries& pj = (j == r && r >= 1) ? f : prefixes[j];
                const QSeries pprev = j == 0 ? QSeries(order_) : prefixes[j - 1];
                const QSeries& sj = j == 0 ? f : suffixes[j];
                sum += (pj - pprev) * sj;
            }
            return one(order_) + sum.shift_up(1);
        };
        return {solve_fixed_point(update, order_), "decomposition", bounded};
    }

    const unsigned k = static_cast<unsigned>(pat.size());
    if (pat.fully_adjacent() && (pat == increasing_run(k) || pat == decreasing_run(k))) {
        return {f_all_adjacent(k, order_), "adjacent-run", false};
    }
    if (auto d = tail_adjacent_split(pat)) {
        const auto& prefix = evaluate(pat.subpattern(0, *d));
        return {f_tail_adjacent(prefix.series, *d, k, order_), "tail-adjacent", prefix.oracle_bounded};
    }
    if (k == 3 && pat.fully_adjacent()) return {f_small(pat, order_), "length-three", false};
    return {enumerated(Family::F, pat, order_, horizon_), "enumeration", true};
}

EngineResult theorem1_f_engine(const GeneralizedPattern& pat, std::size_t order) {
    canonical_decomposition(pat);  // throws when inapplicable
    FEngine engine(order);
    return engine.evaluate(pat);
}

namespace {

class GEngine {
public:
    GEngine(std::size_t order, int horizon) : order_(order), horizon_(horizon), f_(order, horizon) {}

    EngineResult contain1(const GeneralizedPattern& pat) {
        const CanonicalDecomposition dec = canonical_decomposition(pat);
        const int r = static_cast<int>(dec.r());
        if (r == 0) {
            const auto& f_tau = f_.evaluate(pat);
            const auto& f_pi0 = f_.evaluate(dec.prefix(0));
            const EngineResult g_pi0 = block(dec.prefix(0));
            QSeries num = (f_tau.series * g_pi0.series).shift_up(1);
            QSeries den = one(order_) - f_pi0.series.shift_up(1);
            return {num / den.truncate(std::min(den.order(), num.order())), "contain-once recursion",
                    f_tau.oracle_bounded || f_pi0.oracle_bounded || g_pi0.oracle_bounded};
        }
        QSeries rhs(order_);
        for (int j = 1; j <= r; ++j) {
            const QSeries left = mixed(dec.prefix(j), dec.prefix(j - 1));
            const QSeries right = mixed(dec.suffix(j - 1), dec.suffix(j));
            rhs += left * right;
        }
        const auto& f_pi0 = f_.evaluate(dec.prefix(0));
        const auto& f_sr = f_.evaluate(dec.suffix(r));
        const QSeries den = one(order_) - f_pi0.series.shift_up(1) - f_sr.series.shift_up(1);
        return {rhs.shift_up(1) / den.truncate(std::min(den.order(), rhs.order())), "contain-once recursion", true};
    }

private:
    // G for the block pi^0.
    EngineResult block(const GeneralizedPattern& p) {
        const unsigned k = static_cast<unsigned>(p.size());
        if (k >= 1 && p == increasing_run(k)) return {g_con11(k, order_), "adjacent-run", false};
        if (k == 2 && p == decreasing_run(2)) return {g_small_12(order_), "adjacent-run", false};
        if (k == 3 && p == decreasing_run(3)) return {g_small_123(order_), "adjacent-run", false};
        if (try_canonical_decomposition(p)) return contain1(p);
        return {enumerated(Family::G, p, order_, horizon_), "enumeration", true};
    }

    QSeries mixed(const GeneralizedPattern& avoid, const GeneralizedPattern& contain_once) {
        const int n = static_cast<int>(std::min<std::size_t>(order_, static_cast<std::size_t>(horizon_)));
        return QSeries::from_integers(mixed_avoid_contain_series(avoid, contain_once, n).counts);
    }

    std::size_t order_;
    int horizon_;
    FEngine f_;
};

}  // namespace

EngineResult contain1_g_engine(const GeneralizedPattern& pat, std::size_t order, int horizon) {
    GEngine engine(order, horizon);
    return engine.contain1(pat);
}

std::vector<GeneralizedPattern> wedge_catalog() {
    std::vector<GeneralizedPattern> out{parse_pattern("6-4-5-7-8-3-9-12"), parse_pattern("45-6-3-7-8-12-9")};
    for (int k = 4; k <= 6; ++k) {
        for (int d = 2; d <= k - 2; ++d) {
            for (bool left_adj : {false, true}) {
                if (left_adj && k - 1 - d < 2) continue;
                for (bool right_adj : {false, true}) {
                    if (right_adj && d - 1 < 2) continue;
                    const std::string text = letters_chain(d + 1, k - 1, left_adj) + "-" + std::to_string(k) + "-" +
                                             letters_chain(1, d - 1, right_adj) + "-" + std::to_string(d);
                    out.push_back(parse_pattern(text));
                }
            }
        }
    }
    return out;
}

}  // namespace patgf
