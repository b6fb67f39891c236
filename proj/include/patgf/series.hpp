#pragma once

// Truncated formal power series with exact rational coefficients.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace patgf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p" for integers, "p/q" otherwise; q > 0, lowest terms.
std::string to_string(const Rational& q);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Polynomial in x with rational coefficients; index = power. The zero
/// polynomial has no coefficients, otherwise the last one is non-zero.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs);
    explicit Poly(std::vector<Rational> coeffs);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    double evaluate(double x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    static Poly monomial(std::size_t power, Rational c = 1);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}). Binary operations truncate to
/// the smaller of the two orders.
class QSeries {
public:
    /// Zero series of the given order.
    explicit QSeries(std::size_t order = 0);
    QSeries(std::size_t order, std::vector<Rational> coeffs);  // pads or truncates to order+1 entries

    static QSeries constant(const Rational& c, std::size_t order);
    static QSeries monomial(std::size_t power, const Rational& c, std::size_t order);
    static QSeries from_poly(const Poly& p, std::size_t order);
    template <class Int>
    static QSeries from_integers(const std::vector<Int>& values) {
        if (values.empty()) throw SeriesError("need at least one coefficient");
        std::vector<Rational> c;
        c.reserve(values.size());
        for (const auto& v : values) c.emplace_back(v);
        return QSeries(values.size() - 1, std::move(c));
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    QSeries truncate(std::size_t order) const;
    /// x^m * this, same order (the top m coefficients fall off).
    QSeries shift_up(std::size_t m) const;

    QSeries& operator+=(const QSeries& b);
    QSeries& operator-=(const QSeries& b);
    QSeries& operator*=(const QSeries& b);
    QSeries& operator*=(const Rational& s);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
    friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }
    friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }
    friend QSeries operator-(QSeries a);
    /// Throws SeriesError when b has zero constant term.
    friend QSeries operator/(const QSeries& a, const QSeries& b);

    friend bool operator==(const QSeries&, const QSeries&) = default;

    bool is_integral() const;
    std::vector<std::string> to_strings() const;

private:
    std::vector<Rational> coeffs_;
};

QSeries inverse(const QSeries& b);
QSeries power(const QSeries& a, unsigned e);

/// Divides by x^m; the first m coefficients must vanish. Result order N-m.
QSeries shift_div(const QSeries& a, std::size_t m);

/// The unique square root with constant term 1; requires a[0] == 1.
QSeries sqrt_series(const QSeries& a);

using SeriesMap = std::function<QSeries(const QSeries&)>;

/// Fixed point of an x-adic contraction, iterating from zero. Iteration i
/// fixes coefficient i - 1; a later change to a settled coefficient is
/// reported as a non-contraction. The result satisfies update(s) == s.
QSeries solve_fixed_point(const SeriesMap& update, std::size_t order);

/// Motzkin numbers via M = 1 + xM + x^2 M^2.
QSeries motzkin_series(std::size_t order);

/// First index where a and b differ within 0..min(order); nullopt if none.
std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b);

}  // namespace patgf
