#include "patgf/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "patgf/chebyshev.hpp"
#include "patgf/closed_forms.hpp"

namespace patgf {

std::string to_string(EntryStatus s) {
    return s == EntryStatus::ExpectedMatch ? "expected-match" : "documented-erratum";
}

std::optional<EntryStatus> parse_status(std::string_view text) {
    if (text == "expected-match") return EntryStatus::ExpectedMatch;
    if (text == "documented-erratum") return EntryStatus::DocumentedErratum;
    return std::nullopt;
}

GeneralizedPattern double_run_pattern(std::string_view head, unsigned k) {
    if (k < 3) throw HypothesisError("double-run patterns need k >= 3");
    const GeneralizedPattern h = parse_pattern(head);
    if (h.size() != (k == 3 ? 1u : 2u) || (k == 3 && head != "1"))
        throw HypothesisError("head must be 1 for k = 3 and one of 12, 1-2, 21, 2-1 otherwise");
    std::string text = chain_pattern(head, k - 2).to_string();
    text += "-" + std::to_string(k - 1) + std::to_string(k);
    return parse_pattern(text);
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw HypothesisError(what);
}

Instance inst(std::string_view text, Params p = {}) {
    if (p.tau.empty()) p.tau = std::string(text);
    return {parse_pattern(text), std::move(p)};
}

Instance inst(GeneralizedPattern pat, Params p) {
    if (p.tau.empty()) p.tau = pat.to_string();
    return {std::move(pat), std::move(p)};
}

std::optional<QSeries> f_engine(const Instance& in, std::size_t order) {
    if (!try_canonical_decomposition(in.pattern)) return std::nullopt;
    return theorem1_f_engine(in.pattern, order).series;
}

QSeries f_of(const GeneralizedPattern& pat, std::size_t order) { return FEngine(order).evaluate(pat).series; }

bool is_chain_head(const std::string& t) { return t == "12" || t == "1-2" || t == "21" || t == "2-1"; }

// tau = tau'-k-tau''-d with tau' on d+1..k-1 and tau'' on 1..d-1.
struct TwoLayer {
    GeneralizedPattern left, right;
    unsigned d = 0;
};

TwoLayer split_two_layer(const GeneralizedPattern& p) {
    const std::size_t k = p.size();
    require(k >= 3, "two-layer patterns need at least three letters");
    const int d = p.letter(k - 1);
    const auto top = static_cast<std::size_t>(std::find(p.letters().begin(), p.letters().end(), static_cast<int>(k)) -
                                              p.letters().begin());
    require(top >= 1 && top + 1 < k, "the maximum must sit strictly inside");
    require(!p.adjacent(top - 1) && !p.adjacent(top) && !p.adjacent(k - 2), "k and d must be dash-separated");
    for (std::size_t i = 0; i < top; ++i) require(p.letter(i) > d, "letters before k must exceed d");
    for (std::size_t i = top + 1; i + 1 < k; ++i) require(p.letter(i) < d, "letters between k and d must be below d");
    return {p.subpattern(0, top), p.subpattern(top + 1, k - 1), static_cast<unsigned>(d)};
}

GeneralizedPattern tail_adjacent_pattern(const std::string& prefix_text, unsigned k) {
    const GeneralizedPattern prefix = parse_pattern(prefix_text);
    const unsigned d = static_cast<unsigned>(prefix.size());
    require(d >= 1 && k >= d + 2, "need |tau'| >= 1 and a run of length >= 2");
    std::string text = prefix_text + "-";
    for (unsigned v = d + 1; v <= k; ++v) text += std::to_string(v);
    return parse_pattern(text);
}

using EngineFn = decltype(CatalogEntry::engine);

CatalogEntry make_entry(std::string id, Family family, std::string formula, EngineFn engine = {}) {
    CatalogEntry e;
    e.id = std::move(id);
    e.family = family;
    e.formula = std::move(formula);
    e.engine = std::move(engine);
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;

    // -------------------------------------------------------------- F
    {
        CatalogEntry e = make_entry("F.chain", Family::F, "F = R_k for tau-3-4-...-k, tau in {12, 1-2, 21, 2-1}", f_engine);
        for (const char* head : {"12", "1-2", "21", "2-1"})
            for (unsigned k = 3; k <= 5; ++k) e.instances.push_back(inst(chain_pattern(head, k), {k, 0, head}));
        e.builder = [](const Instance& in, std::size_t n) { return f_chain(in.params.k, n); };
        e.make_instance = [](const Params& p) {
            const std::string head = p.tau.empty() ? "12" : p.tau;
            require(is_chain_head(head), "tau must be one of 12, 1-2, 21, 2-1");
            require(p.k >= 2, "needs k >= 2");
            return inst(chain_pattern(head, p.k), {p.k, 0, head});
        };
        out.push_back(std::move(e));
    }
    for (const bool increasing : {true, false}) {
        CatalogEntry e = make_entry(increasing ? "F.all_adj_inc" : "F.all_adj_dec", Family::F,
                       std::string("F = sum_{j=0}^{k-1} (xF)^j for ") + (increasing ? "12...k" : "k...21"),
                                    f_engine);
        auto make = [increasing](const Params& p) {
            require(p.k >= 1 && p.k <= 9, "needs 1 <= k <= 9");
            return inst(increasing ? increasing_run(p.k) : decreasing_run(p.k), {p.k, 0, {}});
        };
        for (unsigned k = 1; k <= 6; ++k) e.instances.push_back(make({k, 0, {}}));
        e.builder = [](const Instance& in, std::size_t n) { return f_all_adjacent(in.params.k, n); };
        e.make_instance = make;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = make_entry("F.tail_adj", Family::F,
                       "tau = tau'-(d+1)...k: F = sum_{j=0}^{k-d-1} (xF)^j + x^{k-d} F^{k-d} F_{tau'}", f_engine);
        const std::pair<const char*, unsigned> cases[] = {{"1", 3},   {"1", 4},   {"21", 4},   {"12", 5},  {"1-2", 4},
                                                          {"2-1", 5}, {"132", 5}, {"1-2-3", 5}, {"213", 5}};
        auto make = [](const Params& p) {
            require(!p.tau.empty(), "needs --tau for the prefix tau'");
            const GeneralizedPattern pat = tail_adjacent_pattern(p.tau, p.k);
            return Instance{pat, {p.k, static_cast<unsigned>(parse_pattern(p.tau).size()), p.tau}};
        };
        for (auto [prefix, k] : cases) e.instances.push_back(make({k, 0, prefix}));
        e.builder = [](const Instance& in, std::size_t n) {
            return f_tail_adjacent(f_of(parse_pattern(in.params.tau), n), in.params.d, in.params.k, n);
        };
        e.make_instance = make;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = make_entry("F.double_run", Family::F,
                       "(1 - x - sqrt(1 - 2x + x^2 - 4x^2 R_{k-2})) / (2x^2 R_{k-2}) for head-3-...-(k-2)-(k-1)k",
                                    f_engine);
        auto make = [](const Params& p) {
            const std::string head = p.tau.empty() ? (p.k == 3 ? "1" : "1-2") : p.tau;
            return inst(double_run_pattern(head, p.k), {p.k, 0, head});
        };
        e.instances.push_back(make({3, 0, "1"}));
        for (unsigned k = 4; k <= 5; ++k)
            for (const char* head : {"1-2", "12", "2-1", "21"}) e.instances.push_back(make({k, 0, head}));
        e.builder = [](const Instance& in, std::size_t n) { return f_double_run(in.params.k, n); };
        e.make_instance = make;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = make_entry("F.two_layer", Family::F,
                       "tau = tau'-k-tau''-d: 1 / (1 - x (1 - x F' F'') / (1 - x (F' + F'')))", f_engine);
        auto make = [](const Params& p) {
            require(!p.tau.empty(), "needs --tau");
            Instance in = inst(p.tau);
            split_two_layer(in.pattern);
            in.params.k = static_cast<unsigned>(in.pattern.size());
            return in;
        };
        e.instances.push_back(make({0, 0, "45-6-12-3"}));
        for (const auto& w : wedge_catalog())
            if (w.size() <= 6) e.instances.push_back(make({0, 0, w.to_string()}));
        std::sort(e.instances.begin(), e.instances.end(),
                  [](const Instance& a, const Instance& b) { return a.params.tau < b.params.tau; });
        e.instances.erase(std::unique(e.instances.begin(), e.instances.end(),
                                      [](const Instance& a, const Instance& b) { return a.params.tau == b.params.tau; }),
                          e.instances.end());
        e.builder = [](const Instance& in, std::size_t n) {
            const TwoLayer t = split_two_layer(in.pattern);
            return f_two_layer(f_of(t.left, n), f_of(t.right, n), n);
        };
        e.make_instance = make;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = make_entry("F.wedge", Family::F, "F = R_k for the listed k-letter wedge patterns", f_engine);
        for (const auto& w : wedge_catalog()) e.instances.push_back(inst(w, {static_cast<unsigned>(w.size()), 0, {}}));
        e.builder = [](const Instance& in, std::size_t n) { return f_wedge(in.params.k, n); };
        e.make_instance = [](const Params& p) {
            require(!p.tau.empty(), "needs --tau");
            const GeneralizedPattern pat = parse_pattern(p.tau);
            const auto known = wedge_catalog();
            require(std::find(known.begin(), known.end(), pat) != known.end(), "not in the wedge catalog");
            return inst(pat, {static_cast<unsigned>(pat.size()), 0, {}});
        };
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = make_entry("F.small", Family::F,
                       "123, 321: (1 - x - sqrt(1 - 2x - 3x^2)) / (2x^2); 132: (1 - sqrt(1 - 4x)) / (2x); "
                       "213, 312: (1 - x^2 - sqrt((1 + x^2)^2 - 4x)) / (2x(1 - x)); 231: (1 - x) / (1 - 2x)");
        for (const char* p : {"123", "132", "213", "231", "312", "321"}) e.instances.push_back(inst(p));
        e.builder = [](const Instance& in, std::size_t n) { return f_small(in.pattern, n); };
        e.make_instance = [](const Params& p) {
            require(!p.tau.empty(), "needs --tau");
            Instance in = inst(p.tau);
            require(in.pattern.size() == 3 && in.pattern.fully_adjacent(), "needs a fully adjacent length-three pattern");
            return in;
        };
        out.push_back(std::move(e));
    }
    for (const bool literal : {false, true}) {
        CatalogEntry e = make_entry(literal ? "F.exx1_radical" : "F.directed_animals", Family::F,
                       literal ? "(1/2) sqrt((1 + x) / (1 - 3x)) as printed for 123-4 and 321-4"
                               : "1 / (1 - x M(x)) for 123-4 and 321-4",
                       literal ? EngineFn{} : EngineFn(f_engine));
        for (const char* p : {"123-4", "321-4"}) e.instances.push_back(inst(p));
        e.builder = literal ? Builder([](const Instance&, std::size_t n) { return f_directed_animals_radical_literal(n); })
                            : Builder([](const Instance&, std::size_t n) { return f_directed_animals(n); });
        e.make_instance = [](const Params& p) {
            const std::string t = p.tau.empty() ? "123-4" : p.tau;
            require(t == "123-4" || t == "321-4", "tau must be 123-4 or 321-4");
            return inst(t);
        };
        out.push_back(std::move(e));
    }

    // -------------------------------------------------------------- G
    auto add_k_family = [&](std::string id, Family fam, std::string formula, unsigned k_min, unsigned k_lo,
                            unsigned k_hi, std::string_view head, QSeries (*fn)(unsigned, std::size_t), int bound) {
        CatalogEntry e = make_entry(std::move(id), fam, std::move(formula));
        const std::string h(head);
        auto make = [k_min, h](const Params& p) {
            require(p.k >= k_min, "needs k >= " + std::to_string(k_min));
            return inst(chain_pattern(h, p.k), {p.k, 0, {}});
        };
        for (unsigned k = k_lo; k <= k_hi; ++k) e.instances.push_back(make({k, 0, {}}));
        e.builder = [fn](const Instance& in, std::size_t n) { return fn(in.params.k, n); };
        e.make_instance = make;
        e.bound = bound;
        out.push_back(std::move(e));
    };
    // "1" and "12" heads with k = 1, 2 collapse to the head itself.
    add_k_family("G.cd2", Family::G, "1 / ((1 - x) U_k^2) for 12-3-...-k", 2, 2, 5, "12", g_cd2, kAvoiderHorizon);
    add_k_family("G.g21", Family::G, "1 / U_k^2 for 21-3-...-k", 3, 3, 5, "21", g_g21, kAvoiderHorizon);
    {
        CatalogEntry e = make_entry("G.con11", Family::G, "G = sum_{j=1}^{k-1} j x^j G F^{j-1} + x^k F^k, F = F_{12...k}");
        auto make = [](const Params& p) {
            require(p.k >= 1 && p.k <= 9, "needs 1 <= k <= 9");
            return inst(increasing_run(p.k), {p.k, 0, {}});
        };
        for (unsigned k = 1; k <= 4; ++k) e.instances.push_back(make({k, 0, {}}));
        e.builder = [](const Instance& in, std::size_t n) { return g_con11(in.params.k, n); };
        e.make_instance = make;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = make_entry("G.gdd1", Family::G, "(U_d^2 / U_k^2) G_{12...d} for 12...d-(d+1)-...-k");
        auto make = [](const Params& p) {
            require(p.d >= 1 && p.k >= p.d, "needs k >= d >= 1");
            return inst(run_then_chain(p.d, p.k), {p.k, p.d, {}});
        };
        for (auto [d, k] : {std::pair{1u, 3u}, {2u, 3u}, {2u, 4u}, {2u, 5u}, {3u, 4u}, {3u, 5u}})
            e.instances.push_back(make({k, d, {}}));
        e.builder = [](const Instance& in, std::size_t n) { return g_gdd1(in.params.d, in.params.k, n); };
        e.make_instance = make;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = make_entry("G.small", Family::G, "12, 21: x^2 / (1 - x)^3; 123, 321: x^3 M^3 / (1 - x - 2x^2 M)");
        for (const char* p : {"12", "123", "21", "321"}) e.instances.push_back(inst(p));
        e.builder = [](const Instance& in, std::size_t n) {
            return in.pattern.size() == 2 ? g_small_12(n) : g_small_123(n);
        };
        e.make_instance = [](const Params& p) {
            const std::string t = p.tau.empty() ? "12" : p.tau;
            require(t == "12" || t == "21" || t == "123" || t == "321", "tau must be 12, 21, 123 or 321");
            return inst(t);
        };
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = make_entry("G.contain1", Family::G,
                       "r = 0: x F_tau G_{pi^0} / (1 - x F_{pi^0}); r >= 1: mixed-term sum over the decomposition");
        for (const char* p : {"1-2", "12-3", "12-3-4", "123-4", "2-1", "2-3-1", "21-3", "45-6-12-3"})
            e.instances.push_back(inst(p));
        e.builder = [](const Instance& in, std::size_t n) { return contain1_g_engine(in.pattern, n).series; };
        e.make_instance = [](const Params& p) {
            require(!p.tau.empty(), "needs --tau");
            Instance in = inst(p.tau);
            canonical_decomposition(in.pattern);
            return in;
        };
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = make_entry("G.ex21x", Family::G,
                       "21-3 from H = x^2 F_21 (F_21 - 1) and G = x H F_21 + x F_21 G, as printed");
        e.instances.push_back(inst("21-3"));
        e.builder = [](const Instance&, std::size_t n) { return g_21_3_via_literal_h(n); };
        e.make_instance = [](const Params&) { return inst("21-3"); };
        out.push_back(std::move(e));
    }

    // -------------------------------------------------------------- H, PHI
    add_k_family("H.h1", Family::H, "(x / U_k^2) sum_{j=1}^{k-2} U_j^2 for 12-3-...-k", 2, 2, 5, "12", h_h1,
                 kExactlyOneHorizon);
    add_k_family("H.h21", Family::H, "(x / U_k^2) (sum_{j=1}^{k-2} U_j^2 - 1) for 21-3-...-k", 3, 3, 5, "21", h_h21,
                 kExactlyOneHorizon);
    add_k_family("PHI.12k", Family::PHI,
                 "1 / (U_2 U_k^2) [1 + sum_{i=2}^{k-1} 2 sqrt(x) / (U_i U_{i+1}) (sum_{j=1}^i U_j^2 - 1)] for 12-3-...-k",
                 2, 2, 5, "12", phi_12k, kExactlyOneHorizon);
    add_k_family("PHI.21k", Family::PHI,
                 "1 / (4 t^3 U_k^2) [U_2^2 / U_3 + sum_{i=3}^{k-1} 1 / (U_i U_{i+1}) (sum_{j=1}^i U_j^2 - 2)] "
                 "for 21-3-...-k",
                 3, 3, 5, "21", phi_21k, kExactlyOneHorizon);
    {
        CatalogEntry e = make_entry("PHI.21", Family::PHI, "x^3 / (1 - x)^2 for 21");
        e.instances.push_back(inst("21"));
        e.builder = [](const Instance&, std::size_t n) { return phi_21(n); };
        e.make_instance = [](const Params&) { return inst("21"); };
        e.bound = kExactlyOneHorizon;
        out.push_back(std::move(e));
    }

    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
    return out;
}

Family family_prefix(std::string_view id) {
    const auto dot = id.find('.');
    const auto fam = parse_family(id.substr(0, dot));
    if (dot == std::string_view::npos || !fam) throw std::out_of_range("unknown entry '" + std::string(id) + "'");
    return *fam;
}

QSeries family_series(Family want, std::string_view id, const Params& params, std::size_t order) {
    if (family_prefix(id) != want) throw std::out_of_range("entry '" + std::string(id) + "' is not a " + to_string(want) + " entry");
    return entry_series(id, params, order);
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* find_entry(std::string_view id) {
    for (const auto& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

QSeries entry_series(std::string_view id, const Params& params, std::size_t order) {
    const CatalogEntry* e = find_entry(id);
    if (!e) throw std::out_of_range("unknown entry '" + std::string(id) + "'");
    return e->builder(e->make_instance(params), order);
}

QSeries f_series(std::string_view id, const Params& params, std::size_t order) {
    return family_series(Family::F, id, params, order);
}
QSeries g_series(std::string_view id, const Params& params, std::size_t order) {
    return family_series(Family::G, id, params, order);
}
QSeries h_series(std::string_view id, const Params& params, std::size_t order) {
    return family_series(Family::H, id, params, order);
}
QSeries phi_series(std::string_view id, const Params& params, std::size_t order) {
    return family_series(Family::PHI, id, params, order);
}

}  // namespace patgf
