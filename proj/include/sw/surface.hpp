#pragma once

#include "sw/lattice.hpp"
#include "sw/numeric.hpp"

namespace sw {

/// Input invariants of a Kähler surface of non-negative Kodaira dimension:
/// geometric genus, irregularity, self-intersection of the minimal-model
/// canonical class, its torsion order (0 = not torsion), and the number of
/// (-1)-curves in the chosen basis.
struct SurfaceInvariants {
    long p_g = 0;
    long q = 0;
    long kmin_sq = 0;
    long kmin_torsion_order = 0;
    long n_exceptional = 0;

    bool operator==(const SurfaceInvariants&) const = default;
};

/// Everything the topology determines from SurfaceInvariants.
struct DerivedInvariants {
    Int chi;       // holomorphic Euler characteristic 1 - q + p_g
    Int kx_sq;     // canonical square kmin_sq - n_exceptional
    Int e;         // topological Euler characteristic, 12*chi - kx_sq
    Int sigma;     // signature (kx_sq - 2e)/3
    Int b1;
    Int b2;
    Int b_plus;
    Int b_minus;

    bool operator==(const DerivedInvariants&) const = default;
};

/// Computes all derived quantities, rejecting inconsistent input with the
/// violated identity named.
DerivedInvariants derive(const SurfaceInvariants& inv);

/// 2 if kmin_sq > 0, 1 if kmin_sq = 0 and not torsion, 0 if torsion.
/// Only surfaces of non-negative Kodaira dimension are classified.
int kodaira_dimension(const SurfaceInvariants& inv);

/// n-th plurigenus for general type, n >= 2: n(n-1)/2 * kmin_sq + chi.
Int plurigenus(const SurfaceInvariants& inv, long n);

/// Virtual real dimension (L^2 - (2e + 3 sigma))/4 of the monopole moduli
/// space for a structure with determinant square L_sq. Exact rational;
/// integral whenever L is characteristic.
Rational vdim_real(const SurfaceInvariants& inv, const Int& L_sq);

/// Virtual dimension in terms of the twisting bundle: L.(L - K).
Int vdim_twisting(const IntersectionLattice& lat, const LatticeVector& L,
                  const LatticeVector& K);

}  // namespace sw
