#include "sw/series.hpp"

#include <doctest.h>

#include <random>

using namespace sw;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

BiPoly random_bipoly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    BiPoly p;
    for (int k = 0; k < 4; ++k)
        p.set(deg(rng), deg(rng), random_rational(rng));
    return p;
}

TruncatedSeries random_series(std::mt19937& rng, int order) {
    TruncatedSeries s(order);
    for (int m = 0; m <= order; ++m) s.set_coeff(m, random_bipoly(rng, 2));
    return s;
}

}  // namespace

TEST_CASE("generalized binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-3, 2) == 6);
    CHECK(binomial(-1, 5) == -1);
    CHECK(binomial(3, 7) == 0);
    CHECK_THROWS_AS(binomial(4, -1), domain_error);
}

TEST_CASE("series multiplication") {
    int T = 2;
    auto one = TruncatedSeries::one(T);
    auto plus = binom_pow(x_sym(), 1, T);   // 1 + tx
    auto minus = binom_pow(-x_sym(), 1, T); // 1 - tx

    CHECK(plus * one == plus);

    auto prod = plus * minus;  // 1 - t^2 x^2
    CHECK(coeff_t(prod, 0) == BiPoly(1));
    CHECK(coeff_t(prod, 1).is_zero());
    CHECK(coeff_t(prod, 2) == BiPoly::monomial(2, 0, -1));

    // (1 - tx)(1 + tx + t^2 x^2) = 1 at order 2.
    TruncatedSeries geo(T);
    geo.set_coeff(0, BiPoly(1));
    geo.set_coeff(1, BiPoly::monomial(1, 0));
    geo.set_coeff(2, BiPoly::monomial(2, 0));
    CHECK(minus * geo == TruncatedSeries::one(T));
}

TEST_CASE("binom_pow expands (1 + t c)^a") {
    CHECK(binom_pow(x_sym(), 0, 3) == TruncatedSeries::one(3));

    auto inv = binom_pow(x_sym(), -1, 2);  // geometric series
    CHECK(coeff_t(inv, 0) == BiPoly(1));
    CHECK(coeff_t(inv, 1) == BiPoly::monomial(1, 0, -1));
    CHECK(coeff_t(inv, 2) == BiPoly::monomial(2, 0, 1));

    auto cube = binom_pow(x_sym(), 3, 2);
    CHECK(coeff_t(cube, 1) == BiPoly::monomial(1, 0, 3));
    CHECK(coeff_t(cube, 2) == BiPoly::monomial(2, 0, 3));
}

TEST_CASE("exp_series") {
    CHECK(exp_series(TruncatedSeries(3)) == TruncatedSeries::one(3));

    auto e = exp_series(-theta_sym(), 2);  // 1 - t th + t^2 th^2/2
    CHECK(coeff_t(e, 1) == BiPoly::monomial(0, 1, -1));
    CHECK(coeff_t(e, 2) == BiPoly::monomial(0, 2, Rational(1, 2)));

    for (int T = 0; T <= 5; ++T) {
        auto prod = exp_series(theta_sym(), T) * exp_series(-theta_sym(), T);
        CHECK(prod == TruncatedSeries::one(T));
    }

    CHECK_THROWS_AS(exp_series(TruncatedSeries::one(2)), domain_error);
}

TEST_CASE("coeff_t extraction") {
    auto plus = binom_pow(x_sym(), 1, 2);
    CHECK(coeff_t(plus, 1) == BiPoly::monomial(1, 0));
    CHECK(coeff_t(exp_series(-theta_sym(), 2), 2) ==
          BiPoly::monomial(0, 2, Rational(1, 2)));

    auto prod = binom_pow(-x_sym(), 1, 2) * exp_series(-theta_sym(), 2);
    BiPoly expected = BiPoly::monomial(0, 2, Rational(1, 2)) +
                      BiPoly::monomial(1, 1, 1);
    CHECK(coeff_t(prod, 2) == expected);

    CHECK_THROWS_AS(coeff_t(plus, 3), domain_error);
}

TEST_CASE("symmetric-product evaluation") {
    for (int d = 0; d <= 4; ++d)
        for (int g : {0, 1, 3})
            CHECK(eval_symmetric_product(BiPoly::monomial(d, 0), d, g) == 1);

    CHECK(eval_symmetric_product(BiPoly::monomial(0, 2), 2, 3) == 6);
    CHECK(eval_symmetric_product(BiPoly::monomial(1, 1), 2, 1) == 1);

    // Off-degree monomials evaluate to zero.
    CHECK(eval_symmetric_product(BiPoly::monomial(3, 0), 2, 1) == 0);
    CHECK(eval_symmetric_product(BiPoly::monomial(1, 0), 2, 1) == 0);
}

TEST_CASE("substitution identity: fixed instances") {
    // f = 1, a = 0, b = 0.
    auto [l0, r0] = substitute_acgh(TruncatedSeries::one(0), 0, 0);
    CHECK(l0 == BiPoly(1));
    CHECK(r0 == BiPoly(1));

    // f = 1, a = 2, b = 1: both sides 2x.
    auto [l1, r1] = substitute_acgh(TruncatedSeries::one(1), 2, 1);
    CHECK(l1 == BiPoly::monomial(1, 0, 2));
    CHECK(r1 == l1);

    // f = e^{-t th}, matching the multiplicity pipeline for (d,g,chi)=(2,1,1).
    int d = 2, g = 1, chi = 1;
    auto f = exp_series(-theta_sym(), d);
    auto [lhs, rhs] = substitute_acgh(f, Int(d) + 1 - g - chi, d);
    CHECK(lhs == rhs);

    CHECK_THROWS_AS(substitute_acgh(TruncatedSeries::one(1), 0, 2),
                    domain_error);
    CHECK_THROWS_AS(
        substitute_acgh(TruncatedSeries::term(x_sym(), 1, 2), 0, 2),
        domain_error);
}

TEST_CASE("substitution identity over random polynomials") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int b = std::uniform_int_distribution<int>(0, 8)(rng);
        int a = std::uniform_int_distribution<int>(-5, 5)(rng);
        TruncatedSeries f(8);
        for (int k = 0; k <= 8; ++k)
            f.set_coeff(k, BiPoly(random_rational(rng)));
        auto [lhs, rhs] = substitute_acgh(f, a, b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("ring axioms under randomized inputs") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int T = 3;
        auto a = random_series(rng, T);
        auto b = random_series(rng, T);
        auto c = random_series(rng, T);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("exp turns sums into products") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        int T = 4;
        TruncatedSeries a(T), b(T);
        for (int m = 1; m <= T; ++m) {
            a.set_coeff(m, random_bipoly(rng, 2));
            b.set_coeff(m, random_bipoly(rng, 2));
        }
        CHECK(exp_series(a + b) == exp_series(a) * exp_series(b));
    }
}

TEST_CASE("binom_pow inverses multiply to one") {
    for (int a = -6; a <= 6; ++a) {
        auto p = binom_pow(x_sym(), a, 4);
        auto q = binom_pow(x_sym(), -a, 4);
        CHECK(p * q == TruncatedSeries::one(4));
    }
    // Also with a two-term base.
    BiPoly base = x_sym() + theta_sym();
    CHECK(binom_pow(base, 3, 3) * binom_pow(base, -3, 3) ==
          TruncatedSeries::one(3));
}

TEST_CASE("Vandermonde convolution") {
    for (long a = 0; a <= 10; ++a)
        for (long b = 0; b <= 10; ++b)
            for (long c = 0; c <= a + b; ++c) {
                Int sum = 0;
                for (long j = 0; j <= c; ++j)
                    sum += binomial(a, j) * binomial(b, c - j);
                CHECK(sum == binomial(a + b, c));
            }
}

TEST_CASE("pipeline series stay graded") {
    // The t^m coefficient of everything built from tx and t*theta/(1+tx) is
    // homogeneous of total degree m.
    for (int a = -4; a <= 4; ++a) CHECK(binom_pow(x_sym(), a, 6).is_graded());
    for (int T = 0; T <= 6; ++T) {
        auto arg = TruncatedSeries::term(-theta_sym(), 1, T) *
                   binom_pow(x_sym(), -1, T);
        auto total = binom_pow(x_sym(), T - 3, T) * exp_series(arg);
        CHECK(total.is_graded());
    }
    // A deliberately off-grade series is detected.
    TruncatedSeries skew(2);
    skew.set_coeff(1, BiPoly::monomial(2, 0));
    CHECK_FALSE(skew.is_graded());
}

TEST_CASE("canonical printing") {
    BiPoly p = BiPoly(1) - BiPoly::monomial(1, 1, 2) +
               BiPoly::monomial(0, 2, Rational(1, 2));
    CHECK(p.str() == "1 + 1/2*th^2 - 2*x*th");
    CHECK(BiPoly().str() == "0");
    auto s = binom_pow(x_sym(), 2, 2);
    CHECK(s.str() == "1 + (2*x)*t^1 + (x^2)*t^2 + O(t^3)");
}
