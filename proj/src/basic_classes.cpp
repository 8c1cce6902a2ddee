#include "sw/basic_classes.hpp"

#include <algorithm>

namespace sw {

std::vector<BasicClassCandidate> enumerate_candidates(
    const SurfaceInvariants& inv, const IntersectionLattice& lat,
    const LatticeVector& kmin, const std::vector<LatticeVector>& exceptionals) {
    int kappa = kodaira_dimension(inv);
    size_t n = exceptionals.size();
    if (static_cast<long>(n) != inv.n_exceptional)
        throw domain_error("enumerate_candidates: exceptional set size does "
                           "not match n_exceptional");
    if (!is_integral(kmin))
        throw domain_error("enumerate_candidates: K_min class must be integral");
    for (size_t i = 0; i < n; ++i) {
        if (!is_integral(exceptionals[i]))
            throw domain_error("enumerate_candidates: exceptional classes "
                               "must be integral");
        if (lat.pair(exceptionals[i], exceptionals[i]) != -1)
            throw domain_error(
                "enumerate_candidates: exceptional classes must have square -1");
        if (lat.pair(kmin, exceptionals[i]) != 0)
            throw domain_error("enumerate_candidates: exceptional classes "
                               "must be orthogonal to K_min");
        for (size_t j = i + 1; j < n; ++j)
            if (lat.pair(exceptionals[i], exceptionals[j]) != 0)
                throw domain_error("enumerate_candidates: exceptional classes "
                                   "must be pairwise orthogonal");
    }
    if (kappa == 0) {
        if (lat.pair(kmin, kmin) != 0 || lat.divisibility(kmin) != 0)
            throw domain_error("enumerate_candidates: a torsion K_min has "
                               "zero image in the torsion-free lattice");
    } else if (lat.pair(kmin, kmin) != inv.kmin_sq) {
        throw domain_error(
            "enumerate_candidates: K_min^2 disagrees with kmin_sq");
    }

    LatticeVector canonical = kmin;
    for (const auto& e : exceptionals) canonical = canonical + e;
    if (!lat.is_characteristic(canonical))
        throw domain_error("enumerate_candidates: K_min + sum E_i is not "
                           "characteristic in the given lattice");
    Int kx_sq = Int(inv.kmin_sq) - inv.n_exceptional;

    std::vector<Rational> lambdas;
    if (kappa == 2) {
        lambdas = {Rational(1), Rational(-1)};
    } else if (kappa == 0) {
        lambdas = {Rational(0)};
    } else {
        Int div = lat.divisibility(kmin);
        if (div == 0)
            throw domain_error("enumerate_candidates: Kodaira dimension 1 "
                               "needs a nonzero K_min class");
        LatticeVector primitive = Rational(1, div) * kmin;
        // Sign flips on the E_i change the class by twice a lattice vector,
        // so characteristicness depends on lambda only.
        for (Int k = -div; k <= div; ++k) {
            LatticeVector probe = Rational(k) * primitive;
            for (const auto& e : exceptionals) probe = probe + e;
            if (lat.is_characteristic(probe)) lambdas.push_back(Rational(k, div));
        }
    }

    std::vector<BasicClassCandidate> out;
    std::vector<int> signs(n, 1);
    for (const Rational& lambda : lambdas) {
        for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
            BasicClassCandidate cand;
            cand.lambda = lambda;
            cand.vector = lambda * kmin;
            cand.signs.resize(n);
            for (size_t i = 0; i < n; ++i) {
                cand.signs[i] = (mask >> i) & 1 ? -1 : 1;
                cand.vector = cand.vector + Rational(cand.signs[i]) * exceptionals[i];
            }
            cand.square = to_integer(lat.pair(cand.vector, cand.vector),
                                     "enumerate_candidates: candidate square");
            if (cand.square != kx_sq)
                throw domain_error("enumerate_candidates: candidate square "
                                   "differs from K_X^2");
            if (!lat.is_characteristic(cand.vector))
                throw domain_error(
                    "enumerate_candidates: candidate is not characteristic");
            out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const BasicClassCandidate& a, const BasicClassCandidate& b) {
                  return a.vector < b.vector;
              });
    return out;
}

std::pair<LatticeVector, LatticeVector> decompose_canonical(
    const LatticeVector& K, const LatticeVector& L) {
    Rational half(1, 2);
    return {half * (K + L), half * (K - L)};
}

Rational connectedness_defect(const IntersectionLattice& lat,
                              const LatticeVector& K, const LatticeVector& L,
                              const LatticeVector& phi) {
    Signature sig = lat.signature();
    if (sig.b_plus != 1 || sig.null != 0)
        throw domain_error(
            "connectedness_defect: lattice signature must be (1,n)");
    if (lat.pair(phi, phi) <= 0)
        throw domain_error("connectedness_defect: phi must be timelike");
    if (lat.pair(K, K) < 0 || lat.pair(K, phi) < 0)
        throw domain_error("connectedness_defect: K must satisfy the nef "
                           "proxies K^2 >= 0 and K.phi >= 0");
    auto [d_plus, d_minus] = decompose_canonical(K, L);
    Rational direct = lat.pair(d_plus, d_minus);
    Rational by_squares = (lat.pair(K, K) - lat.pair(L, L)) / 4;
    if (direct != by_squares)
        throw domain_error(
            "connectedness_defect: identity K^2 - L^2 = 4 D+.D- failed");
    return direct;
}

namespace {

/// Whether +-v equals c'*k0 + a sum of distinct E_i with 0 <= c' <= d_bound
/// and exactly c'^2 k0^2 + 1 curves. v lives in <k0> + <E_1..E_N>.
bool canonical_sphere_shape(const LatticeVector& v, const Int& d_bound,
                            const Int& k0_sq) {
    for (int s : {1, -1}) {
        Rational head = Rational(s) * v[0];
        if (!is_integer(head)) continue;
        Int c = numerator(head);
        if (c < 0 || c > d_bound) continue;
        bool coords_ok = true;
        Int ones = 0;
        for (size_t i = 1; i < v.size(); ++i) {
            Rational e = Rational(s) * v[i];
            if (e == 1)
                ++ones;
            else if (e != 0)
                coords_ok = false;
        }
        if (coords_ok && ones == c * c * k0_sq + 1) return true;
    }
    return false;
}

}  // namespace

std::vector<SphereSolution> solve_minus_one_sphere(long kmin_sq, long n_max) {
    if (kmin_sq < 0)
        throw domain_error("solve_minus_one_sphere: kmin_sq must be >= 0");
    if (n_max < 1)
        throw domain_error("solve_minus_one_sphere: n_max must be >= 1");

    std::vector<SphereSolution> out;
    if (kmin_sq == 0) {
        // K_min numerically trivial: the lambda term drops out, every sphere
        // is E_1 and N = 1 for all lambda.
        for (long k = -2; k <= 2; ++k) out.push_back({Rational(k, 2), 1});
        return out;
    }

    Int div = 1;
    for (Int m = 1; m * m <= kmin_sq; ++m)
        if (Int(kmin_sq) % (m * m) == 0) div = m;
    Int k0_sq = Int(kmin_sq) / (div * div);

    for (Int k = -2 * div; k <= 2 * div; ++k) {
        Rational lambda(k, 2 * div);
        Rational head_coeff = (1 - lambda) / 2 * div;  // coefficient of k0
        if (!is_integer(head_coeff)) continue;
        Rational n_rat = (1 - lambda) * (1 - lambda) / 4 * kmin_sq + 1;
        if (!is_integer(n_rat)) continue;
        Int n_curves = numerator(n_rat);
        if (n_curves > n_max) continue;

        long n = n_curves.convert_to<long>();
        std::vector<Int> diag(1 + n, -1);
        diag[0] = k0_sq;
        IntersectionLattice model = diagonal_lattice(diag);
        LatticeVector e(1 + n, Rational(0));
        e[0] = head_coeff;
        for (long i = 1; i <= n; ++i) e[i] = 1;
        if (model.pair(e, e) != -1)
            throw domain_error("solve_minus_one_sphere: candidate square is "
                               "not -1");
        LatticeVector e1(1 + n, Rational(0));
        e1[1] = 1;
        LatticeVector reflected = model.reflect_sphere(e, e1);
        if (canonical_sphere_shape(reflected, div, k0_sq))
            out.push_back({lambda, n});
    }
    std::sort(out.begin(), out.end(),
              [](const SphereSolution& a, const SphereSolution& b) {
                  return a.lambda < b.lambda;
              });
    return out;
}

}  // namespace sw
