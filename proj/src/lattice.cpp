#include "sw/lattice.hpp"

#include <algorithm>
#include <utility>

namespace sw {

LatticeVector lattice_vector(std::initializer_list<long> coords) {
    LatticeVector v;
    v.reserve(coords.size());
    for (long c : coords) v.emplace_back(c);
    return v;
}

bool is_integral(const LatticeVector& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Rational& c) { return is_integer(c); });
}

static void check_same_size(const LatticeVector& a, const LatticeVector& b,
                            const char* op) {
    if (a.size() != b.size())
        throw domain_error(std::string(op) + ": vector lengths differ");
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    check_same_size(a, b, "vector sum");
    LatticeVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    check_same_size(a, b, "vector difference");
    LatticeVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

LatticeVector operator-(const LatticeVector& a) {
    LatticeVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

LatticeVector operator*(const Rational& c, const LatticeVector& v) {
    LatticeVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

IntersectionLattice::IntersectionLattice(std::vector<std::vector<Int>> gram,
                                         std::vector<std::string> labels,
                                         bool surface_lattice)
    : rank_(static_cast<int>(gram.size())),
      gram_(std::move(gram)),
      labels_(std::move(labels)) {
    if (rank_ == 0) throw domain_error("lattice rank must be positive");
    for (const auto& row : gram_)
        if (static_cast<int>(row.size()) != rank_)
            throw domain_error("Gram matrix must be square");
    for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw domain_error("Gram matrix must be symmetric");
    if (labels_.empty()) {
        labels_.reserve(rank_);
        for (int i = 0; i < rank_; ++i)
            labels_.push_back("e" + std::to_string(i + 1));
    }
    if (static_cast<int>(labels_.size()) != rank_)
        throw domain_error("label count must equal rank");
    if (surface_lattice && signature().b_plus < 1)
        throw domain_error("surface lattice requires b_plus >= 1");
}

void IntersectionLattice::check_dim(const LatticeVector& v,
                                    const char* op) const {
    if (static_cast<int>(v.size()) != rank_)
        throw domain_error(std::string(op) + ": vector length " +
                           std::to_string(v.size()) + " does not match rank " +
                           std::to_string(rank_));
}

Rational IntersectionLattice::pair(const LatticeVector& u,
                                   const LatticeVector& v) const {
    check_dim(u, "pair");
    check_dim(v, "pair");
    Rational acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (u[i] == 0) continue;
        Rational row = 0;
        for (int j = 0; j < rank_; ++j)
            if (v[j] != 0) row += Rational(gram_[i][j]) * v[j];
        acc += u[i] * row;
    }
    return acc;
}

LatticeVector IntersectionLattice::reflect_sphere(const LatticeVector& v,
                                                  const LatticeVector& s) const {
    check_dim(v, "reflect_sphere");
    check_dim(s, "reflect_sphere");
    Rational ss = pair(s, s);
    if (ss != -1 && ss != -2)
        throw domain_error("reflect_sphere: s.s must be -1 or -2, got " +
                           rational_str(ss));
    Rational factor = Rational(-2) * pair(v, s) / ss;
    return v + factor * s;
}

bool IntersectionLattice::is_characteristic(const LatticeVector& v) const {
    check_dim(v, "is_characteristic");
    if (!is_integral(v))
        throw domain_error("is_characteristic: v must be integral");
    for (int i = 0; i < rank_; ++i) {
        Int pairing = 0;
        for (int j = 0; j < rank_; ++j)
            pairing += gram_[i][j] * numerator(v[j]);
        if ((pairing - gram_[i][i]) % 2 != 0) return false;
    }
    return true;
}

Signature IntersectionLattice::signature() const {
    // Symmetric Gaussian elimination with congruence transformations; the
    // diagonal signs are basis-independent by Sylvester's law.
    std::vector<std::vector<Rational>> a(rank_,
                                         std::vector<Rational>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) a[i][j] = Rational(gram_[i][j]);

    auto add_row_col = [&](int dst, int src, const Rational& f) {
        for (int j = 0; j < rank_; ++j) a[dst][j] += f * a[src][j];
        for (int j = 0; j < rank_; ++j) a[j][dst] += f * a[j][src];
    };
    auto swap_row_col = [&](int i, int j) {
        std::swap(a[i], a[j]);
        for (int k = 0; k < rank_; ++k) std::swap(a[k][i], a[k][j]);
    };

    for (int i = 0; i < rank_; ++i) {
        if (a[i][i] == 0) {
            int diag = -1, off = -1;
            for (int j = i + 1; j < rank_ && diag < 0; ++j)
                if (a[j][j] != 0) diag = j;
            for (int j = i + 1; j < rank_ && off < 0; ++j)
                if (a[i][j] != 0) off = j;
            if (diag >= 0)
                swap_row_col(i, diag);
            else if (off >= 0)
                add_row_col(i, off, 1);  // makes a[i][i] = 2 a[i][off] != 0
            else
                continue;  // row is identically zero: null direction
        }
        Rational pivot = a[i][i];
        for (int j = i + 1; j < rank_; ++j) {
            if (a[j][i] == 0) continue;
            add_row_col(j, i, -a[j][i] / pivot);
        }
    }

    Signature sig;
    for (int i = 0; i < rank_; ++i) {
        if (a[i][i] > 0)
            ++sig.b_plus;
        else if (a[i][i] < 0)
            ++sig.b_minus;
        else
            ++sig.null;
    }
    return sig;
}

Rational IntersectionLattice::discriminant(const LatticeVector& L,
                                           const ChamberPoint& p) const {
    check_dim(L, "discriminant");
    check_dim(p.omega, "discriminant");
    check_dim(p.epsilon, "discriminant");
    if (pair(p.omega, p.omega) <= 0)
        throw domain_error("discriminant: omega must be timelike (omega^2 > 0)");
    return pair(L - p.epsilon, p.omega);
}

bool IntersectionLattice::same_forward_cone(const LatticeVector& u,
                                            const LatticeVector& v,
                                            const LatticeVector& phi) const {
    Signature sig = signature();
    if (sig.b_plus != 1 || sig.null != 0)
        throw domain_error("same_forward_cone: lattice signature must be (1,n)");
    for (const auto* w : {&u, &v, &phi})
        if (pair(*w, *w) <= 0)
            throw domain_error(
                "same_forward_cone: all arguments must be timelike (w^2 > 0)");
    Rational up = pair(u, phi);
    Rational vp = pair(v, phi);
    // In signature (1,n) a timelike pairing with a timelike class is nonzero.
    bool same = (up > 0) == (vp > 0);
    if (same && pair(u, v) <= 0)
        throw domain_error(
            "same_forward_cone: Hodge index property u.v > 0 violated");
    return same;
}

Int IntersectionLattice::divisibility(const LatticeVector& v) const {
    check_dim(v, "divisibility");
    if (!is_integral(v))
        throw domain_error("divisibility: v must be integral");
    Int g = 0;
    for (const Rational& c : v) g = gcd_int(g, numerator(c));
    return g;
}

IntersectionLattice diagonal_lattice(const std::vector<Int>& diag) {
    int n = static_cast<int>(diag.size());
    std::vector<std::vector<Int>> gram(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) gram[i][i] = diag[i];
    return IntersectionLattice(std::move(gram));
}

IntersectionLattice hyperbolic_lattice() {
    return IntersectionLattice({{0, 1}, {1, 0}}, {"u1", "u2"});
}

}  // namespace sw
