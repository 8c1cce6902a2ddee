#include "sw/elliptic.hpp"

#include <algorithm>
#include <array>

namespace sw {

void validate(const EllipticSurface& surf) {
    if (surf.base_genus < 0)
        throw domain_error("elliptic surface: base genus must be non-negative");
    if (surf.chi < 0)
        throw domain_error("elliptic surface: chi must be non-negative");
    for (long p : surf.fibers)
        if (p < 2)
            throw domain_error(
                "elliptic surface: fiber multiplicities must be >= 2");
}

void validate(const VerticalBundle& bundle, const EllipticSurface& surf) {
    validate(surf);
    if (bundle.fiber_coeffs.size() != surf.fibers.size())
        throw domain_error("vertical bundle: one coefficient per multiple "
                           "fiber required");
    for (size_t i = 0; i < surf.fibers.size(); ++i)
        if (bundle.fiber_coeffs[i] < 0 || bundle.fiber_coeffs[i] >= surf.fibers[i])
            throw domain_error(
                "vertical bundle: coefficients must satisfy 0 <= a_i < p_i");
}

Int divisibility(long p, long q, long p_g) {
    if (p < 1 || q < 1)
        throw domain_error("divisibility: multiplicities must be >= 1");
    Int num = (Int(p_g) + 1) * p * q - p - q;
    Int g = gcd_int(p, q);
    if (num % g != 0)
        throw domain_error("divisibility: numerator not divisible by gcd(p,q)");
    return num / g;
}

Int general_divisibility(const EllipticSurface& surf) {
    validate(surf);
    Int l = 1;
    for (long p : surf.fibers) l = lcm_int(l, p);
    Int val = (2 * Int(surf.base_genus) - 2 + surf.chi) * l;
    for (long p : surf.fibers) val += (p - 1) * (l / p);
    return val;
}

Int sw_mult_closed(long chi, long g, long d) {
    if (chi < 0 || g < 0)
        throw domain_error("sw_mult_closed: chi and g must be non-negative");
    if (d < 0) return 0;
    if (chi + g - 2 >= 0) {
        Int n = binomial(Int(chi) + 2 * g - 2, d);
        return d % 2 == 0 ? n : -n;
    }
    Int acc = 0;
    for (long j = 0; j <= std::min(d, g); ++j) {
        Int term = binomial(Int(1) - g - chi + d - j, d - j) * binomial(g, j);
        acc += j % 2 == 0 ? term : -term;
    }
    return acc;
}

/// Total class (1+tx)^{d+1-g-chi} exp(-t*theta/(1+tx)) truncated at order d.
static TruncatedSeries vertical_total_class(long chi, long g, long d) {
    int T = static_cast<int>(d);
    TruncatedSeries inv_base = binom_pow(x_sym(), -1, T);
    TruncatedSeries exponent =
        TruncatedSeries::term(-theta_sym(), 1, T) * inv_base;
    TruncatedSeries total =
        binom_pow(x_sym(), Int(d) + 1 - g - chi, T) * exp_series(exponent);
    if (!total.is_graded())
        throw domain_error("sw_mult_series: total class lost its grading");
    return total;
}

Int sw_mult_series(long chi, long g, long d) {
    if (d < 0) throw domain_error("sw_mult_series: d must be non-negative");
    if (chi < 0 || g < 0)
        throw domain_error("sw_mult_series: chi and g must be non-negative");
    TruncatedSeries total = vertical_total_class(chi, g, d);
    Rational value = eval_symmetric_product(coeff_t(total, static_cast<int>(d)),
                                            static_cast<int>(d),
                                            static_cast<int>(g));
    return to_integer(value, "sw_mult_series");
}

Int sw_mult_blowup(long chi, long g, long d, long a) {
    if (a < 0) throw domain_error("sw_mult_blowup: a must be non-negative");
    if (d < 0) return 0;
    // Twisting by aE shifts the virtual dimension by -a(a-1); for a vertical
    // bundle the target degree is negative once a >= 2 and the class dies.
    long dim_shift = a * (a - 1);
    if (dim_shift > 0) return 0;
    TruncatedSeries total = vertical_total_class(chi, g, d);
    TruncatedSeries corrected =
        binom_pow(x_sym(), Int(a) * (a - 1) / 2, static_cast<int>(d)) * total;
    Rational value = eval_symmetric_product(
        coeff_t(corrected, static_cast<int>(d)), static_cast<int>(d),
        static_cast<int>(g));
    return to_integer(value, "sw_mult_blowup");
}

Int sw_mult_closed(const EllipticSurface& surf, const VerticalBundle& bundle) {
    validate(bundle, surf);
    return sw_mult_closed(surf.chi, surf.base_genus, bundle.base_degree);
}

Int sw_mult_series(const EllipticSurface& surf, const VerticalBundle& bundle) {
    validate(bundle, surf);
    if (bundle.base_degree < 0) return 0;
    return sw_mult_series(surf.chi, surf.base_genus, bundle.base_degree);
}

DivisibilityPair expected_divisibilities(long p, long q, long p_g) {
    if (p < 1 || q < p)
        throw domain_error("expected_divisibilities: need 1 <= p <= q");
    DivisibilityPair out;
    out.d = divisibility(p, q, p_g);
    if (p == 1) return out;  // not a multiple fiber; no second class
    Int g = gcd_int(p, q);
    // The next class on the canonical ray differs by twice the smallest
    // effective vertical divisor F_q, i.e. by 2p/gcd primitive units.
    Int step = 2 * Int(p) / g;
    if (out.d * g >= 2 * Int(p)) out.d2 = out.d - step;
    return out;
}

namespace {

struct TableRow {
    long p_g;
    long gcd;
    long d;
    MultiplePair pq;
};

// Families whose second basic class falls off the canonical ray; keyed by
// (p_g, gcd, d), which is collision-free.
constexpr std::array<TableRow, 8> kExceptionalRows{{
    {0, 2, 0, {2, 2}},
    {0, 1, 1, {2, 3}},
    {0, 2, 1, {2, 4}},
    {0, 1, 3, {2, 5}},
    {0, 3, 1, {3, 3}},
    {0, 1, 5, {3, 4}},
    {1, 1, 0, {1, 1}},
    {1, 1, 1, {1, 2}},
}};

}  // namespace

MultiplePair recover_multiplicities(const RecoveryInput& in) {
    if (in.p_g < 0)
        throw domain_error("recover_multiplicities: p_g must be non-negative");
    if (in.gcd_pq < 1)
        throw domain_error("recover_multiplicities: fundamental-group order "
                           "must be positive");
    if (in.d < 0)
        throw domain_error("recover_multiplicities: negative divisibility "
                           "means a rational surface (p_g = 0, p = 1); "
                           "multiplicities are not determined there");
    if (in.d2) {
        if (*in.d2 < 0 || *in.d2 >= in.d)
            throw domain_error(
                "recover_multiplicities: d2 must satisfy 0 <= d2 < d");
        Int p_twice = in.gcd_pq * (in.d - *in.d2);
        if (p_twice % 2 != 0)
            throw domain_error("recover_multiplicities: gcd*(d - d2) is odd; "
                               "input is not consistent");
        Int p = p_twice / 2;
        Int denom = (Int(in.p_g) + 1) * p - 1;
        if (denom <= 0)
            throw domain_error("recover_multiplicities: inconsistent input, "
                               "(p_g+1)p - 1 <= 0");
        Int q_num = in.d * in.gcd_pq + p;
        if (q_num % denom != 0)
            throw domain_error("recover_multiplicities: q is not integral; "
                               "input is not consistent");
        Int q = q_num / denom;
        if (p < 2 || q < p)
            throw domain_error("recover_multiplicities: recovered pair "
                               "violates 2 <= p <= q");
        if (gcd_int(p, q) != in.gcd_pq)
            throw domain_error("recover_multiplicities: gcd of recovered pair "
                               "disagrees with the fundamental-group order");
        return {p.convert_to<long>(), q.convert_to<long>()};
    }
    for (const TableRow& row : kExceptionalRows)
        if (row.p_g == in.p_g && row.gcd == in.gcd_pq && row.d == in.d)
            return row.pq;
    throw domain_error("recover_multiplicities: no exceptional family matches "
                       "(p_g, gcd, d) and no second divisibility was given");
}

}  // namespace sw
