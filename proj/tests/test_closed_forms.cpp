#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "patgf/catalog.hpp"
#include "patgf/chebyshev.hpp"
#include "patgf/closed_forms.hpp"
#include "patgf/enumerate.hpp"

using namespace patgf;
using oracle::head;
using oracle::strings;

namespace {

QSeries poly(std::initializer_list<Rational> c, std::size_t order) { return QSeries::from_poly(Poly(c), order); }

void check_against_counts(const QSeries& s, Family f, const GeneralizedPattern& pat, int max_n) {
    const auto counts = count_series(f, pat, max_n).counts;
    for (int n = 0; n <= max_n; ++n) {
        CAPTURE(pat.to_string());
        CAPTURE(n);
        CHECK(s[static_cast<std::size_t>(n)] == Rational(counts[static_cast<std::size_t>(n)]));
    }
}

}  // namespace

TEST_CASE("shape builders") {
    CHECK(chain_pattern("21", 5).to_string() == "21-3-4-5");
    CHECK(chain_pattern("1-2", 2).to_string() == "1-2");
    CHECK(increasing_run(4).to_string() == "1234");
    CHECK(decreasing_run(3).to_string() == "321");
    CHECK(run_then_chain(2, 4).to_string() == "12-3-4");
    CHECK(run_then_chain(1, 3).to_string() == "1-2-3");
    CHECK(double_run_pattern("1", 3).to_string() == "1-23");
    CHECK(double_run_pattern("21", 5).to_string() == "21-3-45");
    CHECK_THROWS_AS(chain_pattern("123", 2), HypothesisError);
    CHECK_THROWS_AS(double_run_pattern("12", 3), HypothesisError);
}

TEST_CASE("F: runs") {
    CHECK(head(f_all_adjacent(3, 10), 5) == strings({1, 1, 2, 4, 9, 21}));
    CHECK(f_all_adjacent(3, 16) == motzkin_series(16));
    CHECK(f_all_adjacent(2, 10) == QSeries::constant(1, 10) / poly({1, -1}, 10));
    for (unsigned k = 1; k <= 6; ++k) {
        check_against_counts(f_all_adjacent(k, 10), Family::F, increasing_run(k), 10);
        check_against_counts(f_all_adjacent(k, 10), Family::F, decreasing_run(k), 10);
    }
}

TEST_CASE("F: chains give one series for all four heads") {
    for (unsigned k = 3; k <= 5; ++k) {
        const QSeries r = f_chain(k, 12);
        CHECK(r == r_series(k, 12));
        for (const char* h : {"12", "1-2", "21", "2-1"}) check_against_counts(r, Family::F, chain_pattern(h, k), 10);
    }
    CHECK_THROWS_AS(f_chain(1, 5), HypothesisError);
}

TEST_CASE("F: double run and the k = 4 radical") {
    CHECK(f_double_run(3, 16) == motzkin_series(16));
    const std::size_t w = 12;
    const QSeries printed =
        Rational(1, 2) * shift_div(poly({1, -2, 1}, w) - sqrt_series(poly({1, -4, 2, 0, 1}, w)), 2);
    CHECK(f_double_run(4, 10) == printed.truncate(10));
    CHECK(head(f_double_run(4, 10), 4) == strings({1, 1, 2, 5, 13}));
    check_against_counts(f_double_run(4, 10), Family::F, parse_pattern("12-34"), 10);
    CHECK_THROWS_AS(f_double_run(2, 5), HypothesisError);
}

TEST_CASE("F: 12-34 misses exactly 1234 at n = 4") {
    CHECK(count_at(Family::F, parse_pattern("12-34"), 4) == catalan_number(4) - 1);
    std::vector<Permutation> witnesses;
    for (const auto& p : avoiders_132(4))
        if (!avoids(p, parse_pattern("12-34"))) witnesses.push_back(p);
    REQUIRE(witnesses.size() == 1);
    CHECK(witnesses.front() == Permutation({1, 2, 3, 4}));
}

TEST_CASE("F: two-layer example three ways") {
    const std::size_t n = 16;
    const auto pat = parse_pattern("45-6-12-3");
    const QSeries rational = poly({1, -4, 3}, n) / poly({1, -5, 6, -1}, n);
    const QSeries closed = f_series("F.two_layer", {0, 0, "45-6-12-3"}, n);
    CHECK(closed == rational);
    CHECK(theorem1_f_engine(pat, n).series == rational);
    CHECK(rational == r_series(6, n));
    CHECK(head(rational, 6) == strings({1, 1, 2, 5, 14, 42, 131}));
    check_against_counts(rational, Family::F, pat, 9);
}

TEST_CASE("F: maxima recursion engine") {
    CHECK(head(theorem1_f_engine(parse_pattern("12-3"), 8).series, 4) == strings({1, 1, 2, 4, 8}));
    CHECK(theorem1_f_engine(parse_pattern("12-3"), 8).series == poly({1, -1}, 8) / poly({1, -2}, 8));
    CHECK(theorem1_f_engine(parse_pattern("1-2-3"), 16).series == r_series(3, 16));
    CHECK_THROWS_AS(theorem1_f_engine(parse_pattern("1-3-2"), 8), DecompositionError);
    CHECK_THROWS_AS(theorem1_f_engine(parse_pattern("123"), 8), DecompositionError);

    FEngine engine(10);
    CHECK(engine.evaluate(GeneralizedPattern()).series == QSeries(10));
    CHECK(engine.evaluate(parse_pattern("1")).series == QSeries::constant(1, 10));
    const auto& tail = engine.evaluate(parse_pattern("2-1-345"));
    CHECK(tail.source == "tail-adjacent");
    CHECK_FALSE(tail.oracle_bounded);
    const auto& enumerated = engine.evaluate(parse_pattern("6-4-5-7-8-3-9-12"));
    CHECK(enumerated.oracle_bounded);
    CHECK(&engine.evaluate(parse_pattern("2-1-345")) == &tail);  // memoized
    for (const char* t : {"2-1-345", "132-45", "1-2-34", "213-45", "3-4-1-2", "2-3-1", "21-3-4", "1-23-4"})
        check_against_counts(engine.evaluate(parse_pattern(t)).series, Family::F, parse_pattern(t), 10);
}

TEST_CASE("F: tail-adjacent and two-layer builders agree with enumeration") {
    check_against_counts(f_tail_adjacent(QSeries::constant(1, 10), 1, 3, 10), Family::F, parse_pattern("1-23"), 10);
    CHECK(f_tail_adjacent(QSeries::constant(1, 10), 1, 3, 10) == motzkin_series(10));
    CHECK_THROWS_AS(f_tail_adjacent(QSeries::constant(1, 10), 2, 2, 10), HypothesisError);
    CHECK_THROWS_AS(f_series("F.two_layer", {0, 0, "1-2-3"}, 5), HypothesisError);
}

TEST_CASE("F: small patterns") {
    CHECK(head(f_small(parse_pattern("132"), 10), 5) == strings({1, 1, 2, 5, 14, 42}));
    CHECK(head(f_small(parse_pattern("231"), 10), 4) == strings({1, 1, 2, 4, 8}));
    CHECK(f_small(parse_pattern("213"), 12) == f_small(parse_pattern("312"), 12));
    CHECK(f_small(parse_pattern("123"), 12) == motzkin_series(12));
    for (const char* t : {"123", "132", "213", "231", "312", "321"})
        check_against_counts(f_small(parse_pattern(t), 12), Family::F, parse_pattern(t), 12);
    CHECK_THROWS_AS(f_small(parse_pattern("1-23"), 5), HypothesisError);
}

TEST_CASE("F: directed animals and the printed radical") {
    const QSeries da = f_directed_animals(12);
    CHECK(head(da, 5) == strings({1, 1, 2, 5, 13, 35}));
    check_against_counts(da, Family::F, parse_pattern("123-4"), 12);
    check_against_counts(da, Family::F, parse_pattern("321-4"), 12);
    const QSeries printed = f_directed_animals_radical_literal(12);
    CHECK(printed[0] == Rational(1, 2));
    // The counts are (1/2)(1 + the radical).
    CHECK(Rational(1, 2) * (QSeries::constant(1, 12) + Rational(2) * printed) == da);
}

TEST_CASE("G: closed forms") {
    CHECK(head(g_cd2(2, 8), 5) == strings({0, 0, 1, 3, 6, 10}));
    CHECK(head(g_g21(3, 8), 5) == strings({0, 0, 0, 1, 4, 12}));
    CHECK(g_con11(2, 12) == QSeries::monomial(2, 1, 12) / power(poly({1, -1}, 12), 3));
    CHECK(g_small_12(12) == g_con11(2, 12));
    CHECK(g_gdd1(2, 3, 12) == g_cd2(3, 12));
    CHECK(g_gdd1(2, 3, 12)[4] == 5);
    CHECK(g_cd2(3, 12) == QSeries::monomial(3, 1, 12) / (poly({1, -1}, 12) * power(poly({1, -2}, 12), 2)));
    CHECK(g_small_123(10)[3] == 1);
    CHECK(g_small_123(10)[4] == 4);
    CHECK(g_small_123(12) == g_con11(3, 12));
    for (unsigned k = 2; k <= 5; ++k) check_against_counts(g_cd2(k, 10), Family::G, chain_pattern("12", k), 10);
    for (unsigned k = 3; k <= 4; ++k) check_against_counts(g_g21(k, 10), Family::G, chain_pattern("21", k), 10);
    for (unsigned k = 2; k <= 3; ++k) check_against_counts(g_con11(k, 10), Family::G, increasing_run(k), 10);
    CHECK_THROWS_AS(g_cd2(1, 5), HypothesisError);
    CHECK_THROWS_AS(g_g21(2, 5), HypothesisError);
    CHECK_THROWS_AS(g_gdd1(3, 2, 5), HypothesisError);
}

TEST_CASE("G: the d = 3 case of the U_d^2/U_k^2 form overcounts") {
    const auto counts = count_series(Family::G, parse_pattern("123-4"), 7).counts;
    const QSeries g = g_gdd1(3, 4, 7);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(g[n] == Rational(counts[n]));
    CHECK(g[6] == 28);
    CHECK(counts[6] == 27);
}

TEST_CASE("G: containment-once engine") {
    const auto e = contain1_g_engine(parse_pattern("12-3"), 10);
    CHECK(e.series == g_cd2(3, 10));
    check_against_counts(e.series, Family::G, parse_pattern("12-3"), 10);

    const auto bad = contain1_g_engine(parse_pattern("21-3"), 10);
    CHECK(bad.series[4] == 5);
    CHECK(count_at(Family::G, parse_pattern("21-3"), 4) == 4);
    CHECK(bad.series == QSeries::monomial(3, 1, 10) / (power(poly({1, -2}, 10), 2) * poly({1, -1}, 10)));

    const auto two = contain1_g_engine(parse_pattern("45-6-12-3"), 10);
    CHECK(two.oracle_bounded);
    check_against_counts(two.series, Family::G, parse_pattern("45-6-12-3"), 10);
    CHECK_THROWS_AS(contain1_g_engine(parse_pattern("1-3-2"), 8), DecompositionError);
}

TEST_CASE("G: 21-3 through the printed intermediate H") {
    const QSeries g = g_21_3_via_literal_h(8);
    CHECK(g[3] == 0);
    CHECK(count_at(Family::G, parse_pattern("21-3"), 3) == 1);
    CHECK(g == QSeries::monomial(4, 1, 8) / (power(poly({1, -1}, 8), 2) * poly({1, -2}, 8)));
}

TEST_CASE("H: closed forms") {
    const QSeries h1 = h_h1(3, 10);
    CHECK(h1 == inv_u_squared(3, 10));
    CHECK(head(h1, 4) == strings({0, 0, 0, 1, 4}));
    CHECK(h_h1(2, 10) == QSeries(10));
    const QSeries h21 = h_h21(3, 10);
    CHECK(h21 == poly({1, -1}, 10) * inv_u_squared(3, 10));
    CHECK(head(h21, 4) == strings({0, 0, 0, 1, 3}));
    for (unsigned k = 3; k <= 4; ++k) {
        check_against_counts(h_h1(k, 9), Family::H, chain_pattern("12", k), 9);
        check_against_counts(h_h21(k, 9), Family::H, chain_pattern("21", k), 9);
    }
    CHECK_THROWS_AS(h_h21(2, 5), HypothesisError);
}

TEST_CASE("PHI: closed forms and initial conditions") {
    CHECK(phi_12k(2, 10) == QSeries::monomial(3, 1, 10) / power(poly({1, -1}, 10), 3));
    CHECK(head(phi_12k(2, 10), 5) == strings({0, 0, 0, 1, 3, 6}));
    const QSeries p213 = Rational(2) * QSeries::monomial(4, 1, 10) * power(poly({1, -1}, 10), 2) /
                         power(poly({1, -2}, 10), 3);
    CHECK(phi_21k(3, 10) == p213);
    CHECK(phi_21k(3, 10)[4] == 2);
    CHECK(head(phi_21(10), 5) == strings({0, 0, 0, 1, 2, 3}));
    for (unsigned k = 2; k <= 4; ++k) check_against_counts(phi_12k(k, 9), Family::PHI, chain_pattern("12", k), 9);
    for (unsigned k = 3; k <= 4; ++k) check_against_counts(phi_21k(k, 9), Family::PHI, chain_pattern("21", k), 9);
    check_against_counts(phi_21(9), Family::PHI, parse_pattern("21"), 9);
    CHECK_THROWS_AS(phi_21k(2, 5), HypothesisError);
    CHECK_THROWS_AS(phi_12k(1, 5), HypothesisError);
}

TEST_CASE("wedge catalog") {
    const auto w = wedge_catalog();
    auto has = [&](const char* t) { return std::find(w.begin(), w.end(), parse_pattern(t)) != w.end(); };
    CHECK(has("45-6-3-7-8-12-9"));
    CHECK(has("6-4-5-7-8-3-9-12"));
    CHECK(has("45-6-12-3"));
    CHECK_FALSE(has("1-3-2"));
    std::set<GeneralizedPattern> unique(w.begin(), w.end());
    CHECK(unique.size() == w.size());
    for (const auto& p : w) CHECK(oracle::classical_132(p.letters()) == 0);
}

TEST_CASE("catalog") {
    const auto& cat = catalog();
    CHECK(cat.size() >= 20);
    CHECK(std::is_sorted(cat.begin(), cat.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
    std::set<std::string> ids;
    for (const auto& e : cat) {
        ids.insert(e.id);
        CHECK_FALSE(e.instances.empty());
        CHECK(e.bound > 0);
        CHECK(e.builder);
        CHECK(e.make_instance);
        CHECK_FALSE(e.formula.empty());
    }
    CHECK(ids.size() == cat.size());
    for (const char* id : {"F.chain", "G.cd2", "H.h1", "PHI.21k", "G.contain1", "F.exx1_radical"})
        CHECK(find_entry(id) != nullptr);
    CHECK(find_entry("F.nope") == nullptr);
    CHECK(head(entry_series("G.g21", {3, 0, {}}, 5), 5) == strings({0, 0, 0, 1, 4, 12}));
    CHECK(g_series("G.gdd1", {3, 2, {}}, 8) == g_cd2(3, 8));
    CHECK(h_series("H.h1", {3, 0, {}}, 8) == h_h1(3, 8));
    CHECK(phi_series("PHI.21", {}, 8) == phi_21(8));
    CHECK(f_series("F.chain", {4, 0, "2-1"}, 8) == r_series(4, 8));
    CHECK_THROWS_AS(entry_series("F.nope", {}, 5), std::out_of_range);
    CHECK_THROWS_AS(f_series("G.cd2", {3, 0, {}}, 5), std::out_of_range);
    CHECK_THROWS_AS(entry_series("G.cd2", {1, 0, {}}, 5), HypothesisError);
    CHECK_THROWS_AS(entry_series("F.chain", {4, 0, "123"}, 5), HypothesisError);
    CHECK(parse_status("documented-erratum") == EntryStatus::DocumentedErratum);
    CHECK(to_string(EntryStatus::ExpectedMatch) == "expected-match");
}
