#pragma once

#include "sw/numeric.hpp"

#include <string>
#include <vector>

namespace sw {

/// Vector in a fixed-rank lattice. Coordinates are exact rationals; the
/// operations that need integral classes check for it.
using LatticeVector = std::vector<Rational>;

LatticeVector lattice_vector(std::initializer_list<long> coords);
bool is_integral(const LatticeVector& v);

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);
LatticeVector operator*(const Rational& c, const LatticeVector& v);

struct Signature {
    int b_plus = 0;
    int b_minus = 0;
    int null = 0;
    bool operator==(const Signature&) const = default;
};

/// Metric/perturbation period point: a timelike class omega together with a
/// perturbation class epsilon. Both may be rational.
struct ChamberPoint {
    LatticeVector omega;
    LatticeVector epsilon;
};

/// Finite-rank integral lattice given by a symmetric Gram matrix, modeling
/// the torsion-free second cohomology of a 4-manifold with its cup form.
class IntersectionLattice {
public:
    IntersectionLattice(std::vector<std::vector<Int>> gram,
                        std::vector<std::string> labels = {},
                        bool surface_lattice = false);

    int rank() const { return rank_; }
    const std::vector<std::vector<Int>>& gram() const { return gram_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Cup product u.v = u^T G v, exact.
    Rational pair(const LatticeVector& u, const LatticeVector& v) const;

    /// Reflection in a sphere class s with s.s in {-1,-2}:
    /// v - 2 (v.s)/(s.s) s. Integral input gives integral output.
    LatticeVector reflect_sphere(const LatticeVector& v,
                                 const LatticeVector& s) const;

    /// Whether v.x == x.x (mod 2) for every basis vector x. Requires v
    /// integral.
    bool is_characteristic(const LatticeVector& v) const;

    /// Exact Sylvester signature over Q, computed by rational congruence
    /// diagonalization (no floating point).
    Signature signature() const;

    /// (L - epsilon).omega; nonzero means the period point is admissible and
    /// the sign labels the chamber.
    Rational discriminant(const LatticeVector& L, const ChamberPoint& p) const;

    /// For a signature-(1,n) lattice and timelike u, v, phi: whether u and v
    /// lie in the forward cone singled out by phi. A true result guarantees
    /// u.v > 0 (checked).
    bool same_forward_cone(const LatticeVector& u, const LatticeVector& v,
                           const LatticeVector& phi) const;

    /// Content of an integral vector: gcd of its coordinates (0 for the zero
    /// vector).
    Int divisibility(const LatticeVector& v) const;

    bool operator==(const IntersectionLattice& other) const {
        return gram_ == other.gram_ && labels_ == other.labels_;
    }

private:
    void check_dim(const LatticeVector& v, const char* op) const;

    int rank_;
    std::vector<std::vector<Int>> gram_;
    std::vector<std::string> labels_;
};

/// diag(d1,...,dn) with labels e1..en.
IntersectionLattice diagonal_lattice(const std::vector<Int>& diag);

/// Rank-2 even unimodular lattice [[0,1],[1,0]].
IntersectionLattice hyperbolic_lattice();

}  // namespace sw
