#pragma once

#include "sw/lattice.hpp"
#include "sw/surface.hpp"

#include <utility>
#include <vector>

namespace sw {

/// Characteristic class of the shape lambda*K_min + sum sign_i E_i with
/// square equal to the canonical square; the candidates among which the
/// basic classes live.
struct BasicClassCandidate {
    Rational lambda;
    std::vector<int> signs;  // one of +1/-1 per exceptional curve
    LatticeVector vector;
    Int square;
};

/// All shape candidates for the given surface: lambda = +-1 for general
/// type, lambda = 0 for Kodaira dimension 0, and the finitely many rational
/// lambda = k/div giving integral characteristic classes for Kodaira
/// dimension 1. Sorted lexicographically by coordinates.
std::vector<BasicClassCandidate> enumerate_candidates(
    const SurfaceInvariants& inv, const IntersectionLattice& lat,
    const LatticeVector& kmin, const std::vector<LatticeVector>& exceptionals);

/// D_+- = (K +- L)/2, so that D_+ + D_- = K and D_+ - D_- = L. Halves may be
/// rational.
std::pair<LatticeVector, LatticeVector> decompose_canonical(
    const LatticeVector& K, const LatticeVector& L);

/// D_+ . D_- = (K^2 - L^2)/4 for the decomposition above, checked against
/// the direct pairing. Non-negative whenever L comes from a basic class on a
/// minimal surface.
Rational connectedness_defect(const IntersectionLattice& lat,
                              const LatticeVector& K, const LatticeVector& L,
                              const LatticeVector& phi);

struct SphereSolution {
    Rational lambda;
    long n_curves;

    bool operator==(const SphereSolution&) const = default;
};

/// Solves e = (1-lambda)/2 K_min + E_1 + ... + E_N with e^2 = -1 over
/// rational lambda with |lambda| <= 1 and bounded denominator, keeping only
/// solutions that stay of the same shape after reflecting in E_1. For
/// kmin_sq > 0 only (lambda, N) = (1, 1) survives; for kmin_sq = 0 the
/// lambda term drops out and every lambda is listed with N = 1.
std::vector<SphereSolution> solve_minus_one_sphere(long kmin_sq, long n_max);

}  // namespace sw
