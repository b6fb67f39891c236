#include "patgf/chebyshev.hpp"

#include <deque>
#include <mutex>
#include <vector>

namespace patgf {

namespace {

// Write-once table, grown on demand.
const Poly& v_table(unsigned k) {
    static std::mutex mu;
    static std::deque<Poly> table{Poly{1}, Poly{1}};
    std::lock_guard lock(mu);
    while (table.size() <= k) {
        const std::size_t j = table.size();
        table.push_back(table[j - 1] - Poly::monomial(1) * table[j - 2]);
    }
    return table[k];
}

}  // namespace

VPoly v_poly(unsigned k) { return {k, v_table(k)}; }

QSeries r_series(unsigned k, std::size_t order) {
    if (k == 0) throw SeriesError("R_k needs k >= 1");
    return QSeries::from_poly(v_table(k - 1), order) / QSeries::from_poly(v_table(k), order);
}

QSeries r_series_continued_fraction(unsigned k, std::size_t order) {
    if (k == 0) throw SeriesError("R_k needs k >= 1");
    const QSeries one = QSeries::constant(1, order);
    QSeries r = one;
    for (unsigned j = 2; j <= k; ++j) r = one / (one - r.shift_up(1));
    return r;
}

QSeries inv_u_squared(unsigned k, std::size_t order) {
    const QSeries v = QSeries::from_poly(v_table(k), order);
    return QSeries::monomial(k, 1, order) / (v * v);
}

HalfPowerSeries HalfPowerSeries::u(unsigned k, std::size_t order) {
    return {-static_cast<int>(k), QSeries::from_poly(v_table(k), order)};
}

HalfPowerSeries HalfPowerSeries::t(std::size_t order) { return {-1, QSeries::constant(Rational(1, 2), order)}; }

HalfPowerSeries HalfPowerSeries::sqrt_x(std::size_t order) { return {1, QSeries::constant(1, order)}; }

HalfPowerSeries HalfPowerSeries::constant(const Rational& c, std::size_t order) {
    return {0, QSeries::constant(c, order)};
}

QSeries HalfPowerSeries::to_series() const {
    if (half_exponent_ % 2 != 0) throw SeriesError("half-power residue x^(" + std::to_string(half_exponent_) + "/2)");
    const int e = half_exponent_ / 2;
    if (e >= 0) return body_.shift_up(static_cast<std::size_t>(e));
    return shift_div(body_, static_cast<std::size_t>(-e));
}

HalfPowerSeries operator*(const HalfPowerSeries& a, const HalfPowerSeries& b) {
    return {a.half_exponent_ + b.half_exponent_, a.body_ * b.body_};
}

HalfPowerSeries operator/(const HalfPowerSeries& a, const HalfPowerSeries& b) {
    return {a.half_exponent_ - b.half_exponent_, a.body_ / b.body_};
}

HalfPowerSeries operator*(const Rational& s, HalfPowerSeries a) {
    a.body_ *= s;
    return a;
}

namespace {

HalfPowerSeries combine(const HalfPowerSeries& a, const HalfPowerSeries& b, bool subtract) {
    const int gap = a.half_exponent() - b.half_exponent();
    if (gap % 2 != 0) throw SeriesError("adding terms whose exponents differ by a half-power");
    const int low = std::min(a.half_exponent(), b.half_exponent());
    QSeries lhs = gap > 0 ? a.body().shift_up(static_cast<std::size_t>(gap / 2)) : a.body();
    QSeries rhs = gap < 0 ? b.body().shift_up(static_cast<std::size_t>(-gap / 2)) : b.body();
    return {low, subtract ? lhs - rhs : lhs + rhs};
}

}  // namespace

HalfPowerSeries operator+(const HalfPowerSeries& a, const HalfPowerSeries& b) { return combine(a, b, false); }
HalfPowerSeries operator-(const HalfPowerSeries& a, const HalfPowerSeries& b) { return combine(a, b, true); }

HalfPowerSeries square(const HalfPowerSeries& a) { return a * a; }

}  // namespace patgf
