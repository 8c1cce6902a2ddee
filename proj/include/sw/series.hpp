#pragma once

#include "sw/numeric.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sw {

/// Polynomial in the two cohomology symbols x and theta with rational
/// coefficients. Keys are (x exponent, theta exponent); zero coefficients are
/// never stored.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    explicit BiPoly(const Rational& constant);
    static BiPoly monomial(int x_exp, int theta_exp, const Rational& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int x_exp, int theta_exp) const;
    Rational constant_term() const { return coeff(0, 0); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    /// True if every monomial has total degree i+j equal to d.
    bool is_homogeneous(int d) const;

    BiPoly& operator+=(const BiPoly& other);
    BiPoly& operator-=(const BiPoly& other);
    BiPoly operator+(const BiPoly& other) const;
    BiPoly operator-(const BiPoly& other) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& other) const;
    BiPoly operator*(const Rational& c) const;
    bool operator==(const BiPoly&) const = default;

    /// Monomials in sorted order, e.g. "1 - 2*x*th + 1/2*th^2".
    std::string str() const;

    void set(int x_exp, int theta_exp, const Rational& coeff);

private:
    std::map<Key, Rational> terms_;
};

inline BiPoly x_sym() { return BiPoly::monomial(1, 0); }
inline BiPoly theta_sym() { return BiPoly::monomial(0, 1); }

/// Element of Q[x,theta][[t]] truncated at a fixed t-order. coeff(m) is the
/// t^m coefficient for 0 <= m <= order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);

    static TruncatedSeries one(int order);
    /// p * t^power as a series of the given order.
    static TruncatedSeries term(const BiPoly& p, int power, int order);

    int order() const { return order_; }
    const BiPoly& coeff(int m) const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    /// Cauchy product truncated at min(order(), other.order()).
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const Rational& c) const;
    bool operator==(const TruncatedSeries&) const = default;

    /// True if the t^m coefficient is homogeneous of total degree m for all m.
    bool is_graded() const;

    std::string str() const;

    void set_coeff(int m, BiPoly p);

private:
    int order_;
    std::vector<BiPoly> coeffs_;
};

/// t^m coefficient; m must not exceed the truncation order.
const BiPoly& coeff_t(const TruncatedSeries& s, int m);

/// (1 + t*c)^a via the generalized binomial theorem, truncated at T.
TruncatedSeries binom_pow(const BiPoly& c, const Int& a, int T);

/// exp of a series with no t^0 term.
TruncatedSeries exp_series(const TruncatedSeries& arg);

/// exp(t*c) truncated at T.
TruncatedSeries exp_series(const BiPoly& c, int T);

/// Both sides of the power-series substitution identity
///   [(1+xt)^a f(-t/(1+xt))]_{t^b} = [(1-xt)^{b-a-1} f(-t)]_{t^b}
/// for a series f(t) whose coefficients are free of x. Returned as a pair so
/// callers can check equality.
std::pair<BiPoly, BiPoly> substitute_acgh(const TruncatedSeries& f,
                                          const Int& a, int b);

/// Evaluation against the fundamental class of the d-th symmetric product of
/// a genus-g curve: x^i th^j contributes coeff * j! * C(g,j) when i+j = d and
/// nothing otherwise.
Rational eval_symmetric_product(const BiPoly& p, int d, int g);

}  // namespace sw
