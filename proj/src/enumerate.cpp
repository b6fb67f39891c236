#include "patgf/enumerate.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace patgf {

std::string to_string(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::G: return "G";
        case Family::H: return "H";
        case Family::PHI: return "PHI";
        case Family::MIXED: return "MIXED";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "F") return Family::F;
    if (name == "G") return Family::G;
    if (name == "H") return Family::H;
    if (name == "PHI") return Family::PHI;
    if (name == "MIXED") return Family::MIXED;
    return std::nullopt;
}

int default_horizon(Family f) {
    return (f == Family::H || f == Family::PHI) ? kExactlyOneHorizon : kAvoiderHorizon;
}

namespace {

// Non-owning callable reference; the generators nest continuations and a
// template parameter would recurse without bound.
class Continuation {
public:
    template <class F>
    Continuation(F& f) : obj_(&f), call_([](void* o) { (*static_cast<F*>(o))(); }) {}
    void operator()() const { call_(obj_); }

private:
    void* obj_;
    void (*call_)(void*);
};

// Writes an avoider on values base+1..base+len into buf[0..len) and calls
// `done` once per completion.
void fill_avoider(int* buf, int len, int base, Continuation done) {
    if (len == 0) {
        done();
        return;
    }
    for (int a = 1; a <= len; ++a) {
        const int right = len - a;
        auto after_left = [&] {
            buf[a - 1] = base + len;
            fill_avoider(buf + a, right, base, done);
        };
        fill_avoider(buf, a - 1, base + right, after_left);
    }
}

void fill_one_132(int* buf, int len, int base, Continuation done, std::optional<int> max_at) {
    if (len < 3) return;
    const int top = base + len;
    for (int t = 1; t <= len; ++t) {
        if (max_at && *max_at != t) continue;
        const int left = t - 1;
        const int right = len - t;
        // (i) one-occurrence part on the left
        auto i_after = [&] {
            buf[t - 1] = top;
            fill_avoider(buf + t, right, base, done);
        };
        fill_one_132(buf, left, base + right, i_after, std::nullopt);
        // (ii) one-occurrence part on the right
        auto ii_after = [&] {
            buf[t - 1] = top;
            fill_one_132(buf + t, right, base, done, std::nullopt);
        };
        fill_avoider(buf, left, base + right, ii_after);
    }
    // (iii) the occurrence uses n: (n-t+1) n ... (n-t+2)
    for (int t = 3; t <= len; ++t) {
        if (max_at && *max_at != t - 1) continue;
        for (int u = t; u <= len; ++u) {
            auto third = [&] { fill_avoider(buf + u, len - u, base, done); };
            auto second = [&] {
                buf[t - 3] = base + len - t + 1;
                buf[t - 2] = top;
                buf[u - 1] = base + len - t + 2;
                fill_avoider(buf + t - 1, u - t, base + len - u, third);
            };
            fill_avoider(buf, t - 3, base + len - t + 2, second);
        }
    }
}

}  // namespace

void for_each_avoider_132(int n, const PermVisitor& visit, std::optional<int> position_of_max) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<int> buf(n);
    auto emit = [&] { visit(std::span<const int>(buf)); };
    if (n == 0) {
        if (!position_of_max) emit();
        return;
    }
    for (int a = 1; a <= n; ++a) {
        if (position_of_max && *position_of_max != a) continue;
        const int right = n - a;
        auto after_left = [&] {
            buf[a - 1] = n;
            fill_avoider(buf.data() + a, right, 0, Continuation(emit));
        };
        fill_avoider(buf.data(), a - 1, right, after_left);
    }
}

void for_each_exactly_one_132(int n, const PermVisitor& visit, std::optional<int> position_of_max) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<int> buf(n);
    auto emit = [&] { visit(std::span<const int>(buf)); };
    fill_one_132(buf.data(), n, 0, emit, position_of_max);
}

void for_each_permutation(int n, const PermVisitor& visit) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<int> buf(n);
    std::iota(buf.begin(), buf.end(), 1);
    do {
        visit(std::span<const int>(buf));
    } while (std::next_permutation(buf.begin(), buf.end()));
}

std::vector<Permutation> avoiders_132(int n) {
    std::vector<Permutation> out;
    for_each_avoider_132(n, [&](std::span<const int> p) { out.emplace_back(std::vector<int>(p.begin(), p.end())); });
    return out;
}

std::vector<Permutation> exactly_one_132(int n) {
    std::vector<Permutation> out;
    for_each_exactly_one_132(n, [&](std::span<const int> p) { out.emplace_back(std::vector<int>(p.begin(), p.end())); });
    return out;
}

std::uint64_t catalan_number(int n) {
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

namespace {

using Predicate = std::function<bool(std::span<const int>)>;

// Splits the stream by the position of n, counts each part on its own
// worker and sums. Totals do not depend on the split.
std::uint64_t count_partitioned(Family base_class, int n, const Predicate& keep, unsigned threads) {
    const bool one_occurrence = base_class == Family::H || base_class == Family::PHI;
    auto count_part = [&](std::optional<int> part) {
        std::uint64_t c = 0;
        auto visit = [&](std::span<const int> p) {
            if (keep(p)) ++c;
        };
        if (one_occurrence)
            for_each_exactly_one_132(n, visit, part);
        else
            for_each_avoider_132(n, visit, part);
        return c;
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads == 1 || n < 8) return count_part(std::nullopt);

    std::vector<std::future<std::uint64_t>> parts;
    std::uint64_t total = 0;
    for (int a = 1; a <= n; ++a) {
        parts.push_back(std::async(std::launch::async, count_part, a));
        if (parts.size() >= threads) {
            for (auto& f : parts) total += f.get();
            parts.clear();
        }
    }
    for (auto& f : parts) total += f.get();
    return total;
}

Predicate predicate_for(Family family, const GeneralizedPattern& pat) {
    switch (family) {
        case Family::F:
        case Family::H:
            return [&pat](std::span<const int> p) { return avoids(p, pat); };
        case Family::G:
        case Family::PHI:
            return [&pat](std::span<const int> p) { return occurrences(p, pat, 2) == 1; };
        case Family::MIXED:
            break;
    }
    throw std::invalid_argument("MIXED counts need two patterns");
}

}  // namespace

CountTable count_series(Family family, const GeneralizedPattern& pat, int max_n, const CountOptions& opts) {
    if (max_n < 0) throw std::invalid_argument("negative order");
    auto keep = predicate_for(family, pat);
    CountTable table{family, pat, std::nullopt, {}};
    for (int n = 0; n <= max_n; ++n) table.counts.push_back(count_partitioned(family, n, keep, opts.threads));
    return table;
}

std::uint64_t count_at(Family family, const GeneralizedPattern& pat, int n, const CountOptions& opts) {
    if (n < 0) throw std::invalid_argument("negative size");
    return count_partitioned(family, n, predicate_for(family, pat), opts.threads);
}

CountTable mixed_avoid_contain_series(const GeneralizedPattern& avoid, const GeneralizedPattern& contain_once,
                                      int max_n, const CountOptions& opts) {
    if (max_n < 0) throw std::invalid_argument("negative order");
    Predicate keep = [&](std::span<const int> p) {
        return avoids(p, avoid) && occurrences(p, contain_once, 2) == 1;
    };
    CountTable table{Family::MIXED, avoid, contain_once, {}};
    for (int n = 0; n <= max_n; ++n) table.counts.push_back(count_partitioned(Family::F, n, keep, opts.threads));
    return table;
}

}  // namespace patgf
