#include "sw/surface.hpp"

#include <doctest.h>

#include <random>

using namespace sw;

namespace {

const SurfaceInvariants kK3{1, 0, 0, 1, 0};
const SurfaceInvariants kRationalElliptic{0, 0, 0, 0, 0};
const SurfaceInvariants kGeneralType{2, 0, 1, 0, 0};

}  // namespace

TEST_CASE("derive computes the standard invariant package") {
    DerivedInvariants k3 = derive(kK3);
    CHECK(k3.chi == 2);
    CHECK(k3.e == 24);
    CHECK(k3.sigma == -16);
    CHECK(k3.b_plus == 3);
    CHECK(k3.b_minus == 19);
    CHECK(k3.b2 == 22);

    DerivedInvariants re = derive(kRationalElliptic);
    CHECK(re.chi == 1);
    CHECK(re.e == 12);
    CHECK(re.sigma == -8);
    CHECK(re.b_plus == 1);

    DerivedInvariants gt = derive(kGeneralType);
    CHECK(gt.chi == 3);
    CHECK(gt.e == 35);
    CHECK(gt.sigma == -23);
}

TEST_CASE("derive rejects inconsistent input") {
    // torsion order forces kmin_sq = 0
    CHECK_THROWS_AS(derive({1, 0, 4, 2, 0}), domain_error);
    // chi < 0
    CHECK_THROWS_AS(derive({0, 5, 0, 0, 0}), domain_error);
    // b2 smaller than b_plus: K^2 too large for the Euler number
    CHECK_THROWS_AS(derive({0, 0, 100, 0, 0}), domain_error);
    CHECK_THROWS_AS(derive({-1, 0, 0, 0, 0}), domain_error);
}

TEST_CASE("derive is idempotent on its input") {
    for (const auto& inv : {kK3, kRationalElliptic, kGeneralType}) {
        CHECK(derive(inv) == derive(inv));
    }
}

TEST_CASE("Kodaira dimension from K_min^2 and torsion") {
    CHECK(kodaira_dimension(kGeneralType) == 2);
    CHECK(kodaira_dimension({1, 0, 0, 0, 0}) == 1);
    CHECK(kodaira_dimension(kK3) == 0);
    CHECK_THROWS_AS(kodaira_dimension({1, 0, -1, 0, 0}), domain_error);
}

TEST_CASE("plurigenus of general type") {
    CHECK(plurigenus(kGeneralType, 2) == 4);  // 1*1 + 3
    CHECK(plurigenus({0, 0, 2, 0, 0}, 2) == 3);  // 2 + 1
    CHECK_THROWS_AS(plurigenus({1, 0, 0, 0, 0}, 2), domain_error);
    CHECK_THROWS_AS(plurigenus(kGeneralType, 1), domain_error);
}

TEST_CASE("plurigenus grows strictly with n when K_min^2 > 0") {
    for (long kmin_sq : {1, 2, 5}) {
        SurfaceInvariants inv{1, 0, kmin_sq, 0, 0};
        for (long n = 2; n < 8; ++n)
            CHECK(plurigenus(inv, n + 1) > plurigenus(inv, n));
    }
}

TEST_CASE("virtual dimension, topological form") {
    // L^2 = K^2 gives dimension zero.
    for (const auto& inv : {kK3, kRationalElliptic, kGeneralType}) {
        DerivedInvariants d = derive(inv);
        CHECK(vdim_real(inv, d.kx_sq) == 0);
    }
    CHECK(vdim_real(kK3, -4) == -1);
    CHECK(vdim_real(kRationalElliptic, 0) == 0);
}

TEST_CASE("virtual dimension, twisting form") {
    auto hyp = hyperbolic_lattice();
    LatticeVector zero = lattice_vector({0, 0});
    LatticeVector K = lattice_vector({2, 0});
    CHECK(vdim_twisting(hyp, zero, K) == 0);
    CHECK(vdim_twisting(hyp, K, K) == 0);
    CHECK(vdim_twisting(hyp, lattice_vector({1, 1}), K) == 0);
    CHECK(vdim_twisting(hyp, lattice_vector({1, 2}), K) == 0);  // L^2=4, L.K=4
}

TEST_CASE("blowing up shifts the dimension by -k(k+1)") {
    // On the blow-up the determinant picks up (2k+1)E, so its square drops by
    // (2k+1)^2 while 2e + 3 sigma drops by 1.
    SurfaceInvariants base{2, 0, 1, 0, 0};
    SurfaceInvariants blown{2, 0, 1, 0, 1};
    for (long l_sq = -6; l_sq <= 6; ++l_sq)
        for (long k = 0; k <= 3; ++k) {
            Rational before = vdim_real(base, l_sq);
            Rational after =
                vdim_real(blown, Int(l_sq) - (2 * k + 1) * (2 * k + 1));
            CHECK(after == before - k * (k + 1));
        }
}

TEST_CASE("the two dimension formulas agree on characteristic classes") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coord(-5, 5);
    for (int rank = 2; rank <= 6; ++rank) {
        std::vector<Int> diag(rank, -1);
        diag[0] = 1;
        auto lat = diagonal_lattice(diag);
        LatticeVector K(rank, Rational(1));  // odd coordinates: characteristic
        REQUIRE(lat.is_characteristic(K));
        for (int trial = 0; trial < 300; ++trial) {
            LatticeVector L(rank);
            for (auto& c : L) c = coord(rng);
            Rational lhs = (lat.pair(Rational(2) * L - K, Rational(2) * L - K) -
                            lat.pair(K, K)) /
                           4;
            CHECK(lhs == Rational(vdim_twisting(lat, L, K)));
        }
    }
}
