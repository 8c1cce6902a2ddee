#include "sw/series.hpp"

#include <sstream>

namespace sw {

BiPoly::BiPoly(const Rational& constant) {
    if (constant != 0) terms_[{0, 0}] = constant;
}

BiPoly BiPoly::monomial(int x_exp, int theta_exp, const Rational& coeff) {
    BiPoly p;
    p.set(x_exp, theta_exp, coeff);
    return p;
}

void BiPoly::set(int x_exp, int theta_exp, const Rational& coeff) {
    if (x_exp < 0 || theta_exp < 0)
        throw domain_error("BiPoly: exponents must be non-negative");
    if (coeff == 0)
        terms_.erase({x_exp, theta_exp});
    else
        terms_[{x_exp, theta_exp}] = coeff;
}

Rational BiPoly::coeff(int x_exp, int theta_exp) const {
    auto it = terms_.find({x_exp, theta_exp});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool BiPoly::is_homogeneous(int d) const {
    for (const auto& [key, _] : terms_)
        if (key.first + key.second != d) return false;
    return true;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
    for (const auto& [key, c] : other.terms_) {
        Rational sum = coeff(key.first, key.second) + c;
        set(key.first, key.second, sum);
    }
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
    for (const auto& [key, c] : other.terms_) {
        Rational diff = coeff(key.first, key.second) - c;
        set(key.first, key.second, diff);
    }
    return *this;
}

BiPoly BiPoly::operator+(const BiPoly& other) const {
    BiPoly r = *this;
    r += other;
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& other) const {
    BiPoly r = *this;
    r -= other;
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [key, c] : terms_) r.terms_[key] = -c;
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& other) const {
    BiPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : other.terms_) {
            Key key{ka.first + kb.first, ka.second + kb.second};
            Rational sum = r.coeff(key.first, key.second) + ca * cb;
            r.set(key.first, key.second, sum);
        }
    return r;
}

BiPoly BiPoly::operator*(const Rational& c) const {
    BiPoly r;
    if (c == 0) return r;
    for (const auto& [key, v] : terms_) r.terms_[key] = v * c;
    return r;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = key.first > 0 || key.second > 0;
        if (mag != 1 || !has_vars) out << rational_str(mag);
        if (mag != 1 && has_vars) out << "*";
        if (key.first > 0) {
            out << "x";
            if (key.first > 1) out << "^" << key.first;
            if (key.second > 0) out << "*";
        }
        if (key.second > 0) {
            out << "th";
            if (key.second > 1) out << "^" << key.second;
        }
    }
    return out.str();
}

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw domain_error("series order must be non-negative");
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = BiPoly(1);
    return s;
}

TruncatedSeries TruncatedSeries::term(const BiPoly& p, int power, int order) {
    TruncatedSeries s(order);
    if (power < 0) throw domain_error("series term: negative t power");
    if (power <= order) s.coeffs_[power] = p;
    return s;
}

const BiPoly& TruncatedSeries::coeff(int m) const {
    if (m < 0 || m > order_)
        throw domain_error("coeff_t: index " + std::to_string(m) +
                           " exceeds truncation order " + std::to_string(order_));
    return coeffs_[m];
}

void TruncatedSeries::set_coeff(int m, BiPoly p) {
    if (m < 0 || m > order_)
        throw domain_error("set_coeff: index exceeds truncation order");
    coeffs_[m] = std::move(p);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    *this = *this + other;
    return *this;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    int T = std::min(order_, other.order_);
    TruncatedSeries r(T);
    for (int m = 0; m <= T; ++m) r.coeffs_[m] = coeffs_[m] + other.coeffs_[m];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    int T = std::min(order_, other.order_);
    TruncatedSeries r(T);
    for (int m = 0; m <= T; ++m) r.coeffs_[m] = coeffs_[m] - other.coeffs_[m];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    int T = std::min(order_, other.order_);
    TruncatedSeries r(T);
    for (int m = 0; m <= T; ++m)
        for (int k = 0; k <= m; ++k) {
            if (coeffs_[k].is_zero() || other.coeffs_[m - k].is_zero()) continue;
            r.coeffs_[m] += coeffs_[k] * other.coeffs_[m - k];
        }
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries r(order_);
    for (int m = 0; m <= order_; ++m) r.coeffs_[m] = coeffs_[m] * c;
    return r;
}

bool TruncatedSeries::is_graded() const {
    for (int m = 0; m <= order_; ++m)
        if (!coeffs_[m].is_homogeneous(m)) return false;
    return true;
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int m = 0; m <= order_; ++m) {
        if (coeffs_[m].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        if (m == 0)
            out << coeffs_[m].str();
        else
            out << "(" << coeffs_[m].str() << ")*t^" << m;
    }
    if (first) out << "0";
    out << " + O(t^" << order_ + 1 << ")";
    return out.str();
}

const BiPoly& coeff_t(const TruncatedSeries& s, int m) { return s.coeff(m); }

TruncatedSeries binom_pow(const BiPoly& c, const Int& a, int T) {
    TruncatedSeries r(T);
    BiPoly c_power(1);
    for (int k = 0; k <= T; ++k) {
        if (k > 0) c_power = c_power * c;
        if (c_power.is_zero()) break;
        Rational coeff(binomial(a, k));
        if (coeff != 0) r.set_coeff(k, c_power * coeff);
    }
    return r;
}

TruncatedSeries exp_series(const TruncatedSeries& arg) {
    if (arg.coeff(0) != BiPoly())
        throw domain_error("exp_series: argument has a nonzero constant term");
    int T = arg.order();
    TruncatedSeries acc = TruncatedSeries::one(T);
    TruncatedSeries power = TruncatedSeries::one(T);
    // arg^k has t-valuation >= k, so the sum is finite at truncation T.
    for (int k = 1; k <= T; ++k) {
        power = power * arg;
        acc += power * Rational(1, factorial(k));
    }
    return acc;
}

TruncatedSeries exp_series(const BiPoly& c, int T) {
    return exp_series(TruncatedSeries::term(c, 1, T));
}

std::pair<BiPoly, BiPoly> substitute_acgh(const TruncatedSeries& f,
                                          const Int& a, int b) {
    if (b < 0) throw domain_error("substitute_acgh: b must be non-negative");
    if (f.order() < b)
        throw domain_error("substitute_acgh: truncation order of f is below b");
    for (int k = 0; k <= f.order(); ++k)
        for (const auto& [key, _] : f.coeff(k).terms())
            if (key.first != 0)
                throw domain_error(
                    "substitute_acgh: coefficients of f must not involve x");

    // Left side: f(-t/(1+xt)) = sum_k f_k (-1)^k t^k (1+xt)^{-k}, then the
    // whole sum times (1+xt)^a.
    TruncatedSeries lhs_sum(b);
    for (int k = 0; k <= b; ++k) {
        const BiPoly& fk = f.coeff(k);
        if (fk.is_zero()) continue;
        Rational sign(k % 2 == 0 ? 1 : -1);
        TruncatedSeries piece =
            TruncatedSeries::term(fk * sign, k, b) * binom_pow(x_sym(), a - k, b);
        lhs_sum += piece;
    }
    BiPoly lhs = coeff_t(lhs_sum, b);

    // Right side: (1-xt)^{b-a-1} f(-t).
    TruncatedSeries f_neg(b);
    for (int k = 0; k <= b; ++k)
        f_neg.set_coeff(k, f.coeff(k) * Rational(k % 2 == 0 ? 1 : -1));
    TruncatedSeries rhs_series =
        binom_pow(-x_sym(), Int(b) - a - 1, b) * f_neg;
    BiPoly rhs = coeff_t(rhs_series, b);

    return {lhs, rhs};
}

Rational eval_symmetric_product(const BiPoly& p, int d, int g) {
    if (d < 0 || g < 0)
        throw domain_error("eval_symmetric_product: d and g must be non-negative");
    Rational acc = 0;
    for (const auto& [key, c] : p.terms()) {
        int i = key.first, j = key.second;
        if (i + j != d) continue;
        acc += c * Rational(factorial(j) * binomial(g, j));
    }
    return acc;
}

}  // namespace sw
