#include "sw/surface.hpp"

namespace sw {

DerivedInvariants derive(const SurfaceInvariants& inv) {
    if (inv.p_g < 0 || inv.q < 0 || inv.kmin_torsion_order < 0 ||
        inv.n_exceptional < 0)
        throw domain_error("derive: p_g, q, torsion order and exceptional count "
                           "must be non-negative");
    if (inv.kmin_torsion_order > 0 && inv.kmin_sq != 0)
        throw domain_error(
            "derive: a torsion canonical class forces kmin_sq = 0");

    DerivedInvariants d;
    d.chi = Int(1) - inv.q + inv.p_g;
    if (d.chi < 0)
        throw domain_error("derive: chi = 1 - q + p_g is negative; not a "
                           "surface of non-negative Kodaira dimension");
    d.kx_sq = Int(inv.kmin_sq) - inv.n_exceptional;
    d.e = 12 * d.chi - d.kx_sq;  // Noether
    Int sigma_times_3 = d.kx_sq - 2 * d.e;
    if (sigma_times_3 % 3 != 0)
        throw domain_error("derive: K^2 - 2e not divisible by 3");
    d.sigma = sigma_times_3 / 3;
    d.b1 = 2 * Int(inv.q);
    d.b2 = d.e - 2 + 2 * d.b1;
    d.b_plus = 2 * Int(inv.p_g) + 1;
    d.b_minus = d.b2 - d.b_plus;
    if (d.b_minus < 0)
        throw domain_error("derive: b2 = e - 2 + 2 b1 is below b_plus = "
                           "2 p_g + 1; invariants are not realizable");
    if (d.sigma != d.b_plus - d.b_minus)
        throw domain_error("derive: signature identity sigma = b+ - b- failed");
    return d;
}

int kodaira_dimension(const SurfaceInvariants& inv) {
    derive(inv);  // validates consistency
    if (inv.kmin_sq < 0)
        throw domain_error("kodaira_dimension: kmin_sq < 0 is not the square "
                           "of a minimal model of non-negative Kodaira "
                           "dimension");
    if (inv.kmin_sq > 0) return 2;
    return inv.kmin_torsion_order > 0 ? 0 : 1;
}

Int plurigenus(const SurfaceInvariants& inv, long n) {
    if (n < 2)
        throw domain_error("plurigenus: only n >= 2 is supported");
    if (kodaira_dimension(inv) != 2)
        throw domain_error("plurigenus: formula n(n-1)/2 K_min^2 + chi "
                           "requires a surface of general type");
    DerivedInvariants d = derive(inv);
    return Int(n) * (n - 1) / 2 * inv.kmin_sq + d.chi;
}

Rational vdim_real(const SurfaceInvariants& inv, const Int& L_sq) {
    DerivedInvariants d = derive(inv);
    Int index_term = 2 * d.e + 3 * d.sigma;
    // For a complex surface 2e + 3 sigma is the canonical square.
    if (index_term != d.kx_sq)
        throw domain_error("vdim_real: 2e + 3 sigma != K^2");
    return Rational(L_sq - index_term, 4);
}

Int vdim_twisting(const IntersectionLattice& lat, const LatticeVector& L,
                  const LatticeVector& K) {
    Rational d = lat.pair(L, L) - lat.pair(L, K);
    return to_integer(d, "vdim_twisting");
}

}  // namespace sw
