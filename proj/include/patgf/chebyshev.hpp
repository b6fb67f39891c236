#pragma once

// Chebyshev polynomials of the second kind at t = 1/(2 sqrt x), carried as
// rational series through the rescaling V_k(x) = x^{k/2} U_k(t).

#include <cstddef>

#include "patgf/series.hpp"

namespace patgf {

struct VPoly {
    unsigned k = 0;
    Poly poly;
};

/// V_0 = V_1 = 1, V_k = V_{k-1} - x V_{k-2}.
VPoly v_poly(unsigned k);

/// R_k = V_{k-1} / V_k, expanded from the polynomial ratio.
QSeries r_series(unsigned k, std::size_t order);
/// R_1 = 1, R_k = 1 / (1 - x R_{k-1}).
QSeries r_series_continued_fraction(unsigned k, std::size_t order);

/// 1 / U_k(t)^2 = x^k / V_k^2.
QSeries inv_u_squared(unsigned k, std::size_t order);

/// x^{half_exponent / 2} * body, the carrier for expressions in U_k(t),
/// t and sqrt(x). Sums align exponents by multiplying the body with the
/// higher exponent by a whole power of x; an odd gap means a half-power
/// residue and throws.
class HalfPowerSeries {
public:
    HalfPowerSeries(int half_exponent, QSeries body)
        : half_exponent_(half_exponent), body_(std::move(body)) {}

    /// U_k(t) = x^{-k/2} V_k.
    static HalfPowerSeries u(unsigned k, std::size_t order);
    /// t = 1/(2 sqrt x).
    static HalfPowerSeries t(std::size_t order);
    static HalfPowerSeries sqrt_x(std::size_t order);
    static HalfPowerSeries constant(const Rational& c, std::size_t order);

    int half_exponent() const noexcept { return half_exponent_; }
    const QSeries& body() const noexcept { return body_; }

    /// Plain power series; throws SeriesError on an odd exponent or when a
    /// negative power would leave a pole.
    QSeries to_series() const;

    friend HalfPowerSeries operator*(const HalfPowerSeries& a, const HalfPowerSeries& b);
    friend HalfPowerSeries operator/(const HalfPowerSeries& a, const HalfPowerSeries& b);
    friend HalfPowerSeries operator+(const HalfPowerSeries& a, const HalfPowerSeries& b);
    friend HalfPowerSeries operator-(const HalfPowerSeries& a, const HalfPowerSeries& b);
    friend HalfPowerSeries operator*(const Rational& s, HalfPowerSeries a);

private:
    int half_exponent_;
    QSeries body_;
};

HalfPowerSeries square(const HalfPowerSeries& a);

}  // namespace patgf
