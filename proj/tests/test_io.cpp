#include "sw/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace sw;
using nlohmann::json;

TEST_CASE("lattice records round-trip exactly") {
    IntersectionLattice lat({{2, 1}, {1, -2}}, {"a", "b"});
    json j = to_json(lat);
    CHECK(j["rank"] == 2);
    CHECK(j["gram"] == json::array({2, 1, 1, -2}));
    IntersectionLattice back = lattice_from_json(j);
    CHECK(back == lat);

    auto hyp = hyperbolic_lattice();
    CHECK(lattice_from_json(to_json(hyp)) == hyp);
}

TEST_CASE("lattice parsing rejects malformed records") {
    CHECK_THROWS_AS(lattice_from_json(json{{"rank", 2}, {"gram", {1, 0, 0}}}),
                    parse_error);
    CHECK_THROWS_AS(lattice_from_json(json{{"gram", {1}}}), parse_error);
    CHECK_THROWS_AS(
        lattice_from_json(json{{"rank", 1}, {"gram", {1.5}}}), parse_error);
    // Symmetry is a lattice invariant, not a parse issue.
    CHECK_THROWS_AS(
        lattice_from_json(json{{"rank", 2}, {"gram", {0, 1, 2, 0}}}),
        domain_error);
}

TEST_CASE("surface and elliptic records round-trip") {
    SurfaceInvariants inv{1, 0, 0, 1, 3};
    CHECK(surface_from_json(to_json(inv)) == inv);

    EllipticSurface surf{1, 0, {2, 3, 7}};
    CHECK(elliptic_from_json(to_json(surf)) == surf);

    CHECK_THROWS_AS(surface_from_json(json{{"p_g", 1}}), parse_error);
    CHECK_THROWS_AS(elliptic_from_json(json{{"g", 0}, {"chi", 1}}),
                    parse_error);
}

TEST_CASE("vectors accept integers and rational strings") {
    LatticeVector v{Rational(1), Rational(-3, 2)};
    json j = to_json(v);
    CHECK(j[0] == 1);
    CHECK(j[1] == "-3/2");
    CHECK(vector_from_json(j) == v);

    CHECK_THROWS_AS(vector_from_json(json::array({1.25})), parse_error);
    CHECK_THROWS_AS(vector_from_json(json::array({"x"})), parse_error);
}

TEST_CASE("documents are parsed with named origin") {
    std::istringstream good(R"({"rank": 1, "gram": [1]})");
    CHECK(parse_document(good, "test")["rank"] == 1);
    std::istringstream bad("{rank:");
    CHECK_THROWS_AS(parse_document(bad, "test"), parse_error);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("a/b"), parse_error);
}
