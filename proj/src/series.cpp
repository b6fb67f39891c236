#include "patgf/series.hpp"

#include <algorithm>
#include <optional>

namespace patgf {

std::string to_string(const Rational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("malformed rational '" + text + "'"); };
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && s[0] == '-') i = 1;
        if (i == s.size()) throw bad();
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') throw bad();
        return BigInt(s);
    };
    if (slash == std::string::npos) return Rational(parse_int(text, true));
    BigInt den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw bad();
    return Rational(parse_int(text.substr(0, slash), true), den);
}

// ---------------------------------------------------------------- Poly

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(std::size_t power, Rational c) {
    std::vector<Rational> v(power + 1);
    v[power] = std::move(c);
    return Poly(std::move(v));
}

double Poly::evaluate(double x) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

// ---------------------------------------------------------------- QSeries

QSeries::QSeries(std::size_t order) : coeffs_(order + 1) {}

QSeries::QSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

QSeries QSeries::constant(const Rational& c, std::size_t order) {
    QSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::monomial(std::size_t power, const Rational& c, std::size_t order) {
    QSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
}

QSeries QSeries::from_poly(const Poly& p, std::size_t order) {
    QSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) s.coeffs_[i] = p[i];
    return s;
}

QSeries QSeries::truncate(std::size_t order) const {
    if (order > this->order()) throw SeriesError("cannot extend a truncated series");
    return QSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

QSeries QSeries::shift_up(std::size_t m) const {
    QSeries s(order());
    for (std::size_t i = m; i <= order(); ++i) s.coeffs_[i] = coeffs_[i - m];
    return s;
}

QSeries& QSeries::operator+=(const QSeries& b) {
    coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& b) {
    coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator*=(const QSeries& b) {
    const std::size_t len = std::min(coeffs_.size(), b.coeffs_.size());
    std::vector<Rational> c(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < len; ++j) c[i + j] += coeffs_[i] * b.coeffs_[j];
    }
    coeffs_ = std::move(c);
    return *this;
}

QSeries& QSeries::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

QSeries operator-(QSeries a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

QSeries inverse(const QSeries& b) {
    if (b[0] == 0) throw SeriesError("division by a series with zero constant term");
    const std::size_t n = b.order();
    std::vector<Rational> r(n + 1);
    const Rational inv0 = 1 / b[0];
    r[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += b[i] * r[k - i];
        r[k] = -acc * inv0;
    }
    return QSeries(n, std::move(r));
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * inverse(b); }

QSeries power(const QSeries& a, unsigned e) {
    QSeries acc = QSeries::constant(1, a.order());
    for (unsigned i = 0; i < e; ++i) acc *= a;
    return acc;
}

bool QSeries::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return boost::multiprecision::denominator(c) == 1; });
}

std::vector<std::string> QSeries::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(to_string(c));
    return out;
}

QSeries shift_div(const QSeries& a, std::size_t m) {
    if (m > a.order()) throw SeriesError("shift exceeds series order");
    for (std::size_t i = 0; i < m; ++i)
        if (a[i] != 0) throw SeriesError("coefficient " + std::to_string(i) + " is non-zero; cannot divide by x^" + std::to_string(m));
    return QSeries(a.order() - m, std::vector<Rational>(a.coefficients().begin() + m, a.coefficients().end()));
}

QSeries sqrt_series(const QSeries& a) {
    if (a[0] != 1) throw SeriesError("square root needs constant term 1");
    const std::size_t n = a.order();
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = a[k];
        for (std::size_t i = 1; i < k; ++i) acc -= b[i] * b[k - i];
        b[k] = acc / 2;
    }
    return QSeries(n, std::move(b));
}

QSeries solve_fixed_point(const SeriesMap& update, std::size_t order) {
    QSeries s(order);
    for (std::size_t step = 1; step <= order + 1; ++step) {
        QSeries next = update(s);
        if (next.order() < s.order()) s = s.truncate(next.order());
        if (next.order() > s.order()) next = next.truncate(s.order());
        // After `step - 1` rounds coefficients below step - 1 are settled.
        for (std::size_t i = 0; i + 1 < step && i <= s.order(); ++i) {
            if (next[i] != s[i]) throw SeriesError("update is not an x-adic contraction (coefficient " + std::to_string(i) + " moved)");
        }
        const bool stable = next == s;
        s = std::move(next);
        if (stable) break;
    }
    QSeries check = update(s);
    const std::size_t n = std::min(check.order(), s.order());
    if (check.truncate(n) != s.truncate(n)) throw SeriesError("fixed point residual is non-zero");
    return s.truncate(n);
}

QSeries motzkin_series(std::size_t order) {
    const QSeries one = QSeries::constant(1, order);
    return solve_fixed_point([&](const QSeries& m) { return one + m.shift_up(1) + (m * m).shift_up(2); }, order);
}

std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i)
        if (a[i] != b[i]) return i;
    return std::nullopt;
}

}  // namespace patgf
