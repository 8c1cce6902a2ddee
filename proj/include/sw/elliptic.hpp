#pragma once

#include "sw/numeric.hpp"
#include "sw/series.hpp"

#include <optional>
#include <vector>

namespace sw {

/// Minimal elliptic fibration over a curve of genus g: holomorphic Euler
/// characteristic chi and the list of fiber multiplicities (each >= 2).
struct EllipticSurface {
    long base_genus = 0;
    long chi = 0;
    std::vector<long> fibers;

    bool operator==(const EllipticSurface&) const = default;
};

/// Vertical twisting bundle pi^*D + sum a_i F_i with deg D = d and
/// 0 <= a_i < p_i. The fiber coefficients identify the bundle but do not
/// change the multiplicity, which depends on (chi, g, d) only.
struct VerticalBundle {
    long base_degree = 0;
    std::vector<long> fiber_coeffs;
};

void validate(const EllipticSurface& surf);
void validate(const VerticalBundle& bundle, const EllipticSurface& surf);

/// Oriented divisibility of the canonical class of a P^1-base elliptic
/// surface with two multiple fibers: ((p_g+1)pq - p - q)/gcd(p,q).
/// Zero exactly when the canonical class is torsion; negative only in the
/// rational family p_g = 0, p = 1.
Int divisibility(long p, long q, long p_g);

/// Divisibility of the minimal canonical class in units of the primitive
/// fiber fraction F/lcm(p_i):
///   (2g - 2 + chi) * lcm + sum (p_i - 1) * lcm/p_i.
Int general_divisibility(const EllipticSurface& surf);

/// Multiplicity of the vertical twisting bundle with base degree d, in
/// closed form: zero for d < 0; (-1)^d C(chi+2g-2, d) when chi+g-2 >= 0;
/// otherwise sum_j (-1)^j C(1-g-chi+d-j, d-j) C(g, j).
Int sw_mult_closed(long chi, long g, long d);

/// The same multiplicity through the characteristic-class pipeline:
/// extract the t^d coefficient of (1+tx)^{d+1-g-chi} exp(-t*theta/(1+tx))
/// and evaluate it on the d-th symmetric product of a genus-g curve.
Int sw_mult_series(long chi, long g, long d);

/// Multiplicity after twisting by a times the exceptional class of a blow-up.
/// The correction factor is (1+tx)^{a(a-1)/2} and the target dimension drops
/// by a(a-1), so the result agrees with sw_mult_closed for a in {0,1} and
/// vanishes for a >= 2.
Int sw_mult_blowup(long chi, long g, long d, long a);

/// Multiplicities of a concrete vertical bundle. The fiber coefficients are
/// validated but do not enter the value.
Int sw_mult_closed(const EllipticSurface& surf, const VerticalBundle& bundle);
Int sw_mult_series(const EllipticSurface& surf, const VerticalBundle& bundle);

struct DivisibilityPair {
    Int d;
    std::optional<Int> d2;

    bool operator==(const DivisibilityPair&) const = default;
};

/// Divisibilities of the canonical class and of the next basic class on the
/// same ray. d2 is present when d * gcd(p,q) >= 2p and absent otherwise (the
/// exceptional low-multiplicity families).
DivisibilityPair expected_divisibilities(long p, long q, long p_g);

/// Diffeomorphism-invariant data from which the fiber multiplicities are
/// reconstructed: p_g, the order of the fundamental group, the largest
/// canonical-ray divisibility d, and the second-largest one if observed.
struct RecoveryInput {
    long p_g = 0;
    Int gcd_pq = 1;
    Int d = 0;
    std::optional<Int> d2;
};

struct MultiplePair {
    long p = 0;
    long q = 0;

    bool operator==(const MultiplePair&) const = default;
};

/// Inverts expected_divisibilities: by formula when d2 is present, through
/// the exceptional table otherwise. Rejects d < 0 (the rational family).
MultiplePair recover_multiplicities(const RecoveryInput& in);

}  // namespace sw
