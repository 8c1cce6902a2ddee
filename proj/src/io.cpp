#include "sw/io.hpp"

#include <istream>
#include <limits>

namespace sw {

using nlohmann::json;

namespace {

long get_long(const json& j, const char* key) {
    if (!j.contains(key))
        throw parse_error(std::string("missing field '") + key + "'");
    const json& v = j.at(key);
    if (!v.is_number_integer())
        throw parse_error(std::string("field '") + key +
                          "' must be an exact integer");
    return v.get<long>();
}

Int get_big(const json& v, const char* context) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) return Int(v.get<std::string>());
    throw parse_error(std::string(context) +
                      ": expected an integer or integer string");
}

}  // namespace

json to_json(const IntersectionLattice& lat) {
    json gram = json::array();
    for (const auto& row : lat.gram())
        for (const Int& entry : row) gram.push_back(entry.convert_to<long long>());
    return json{{"rank", lat.rank()}, {"gram", gram}, {"labels", lat.labels()}};
}

IntersectionLattice lattice_from_json(const json& j) {
    long rank = get_long(j, "rank");
    if (rank <= 0) throw parse_error("lattice rank must be positive");
    if (!j.contains("gram") || !j.at("gram").is_array())
        throw parse_error("missing 'gram' array");
    const json& flat = j.at("gram");
    if (static_cast<long>(flat.size()) != rank * rank)
        throw parse_error("'gram' must hold rank*rank row-major entries");
    std::vector<std::vector<Int>> gram(rank, std::vector<Int>(rank));
    for (long i = 0; i < rank; ++i)
        for (long k = 0; k < rank; ++k)
            gram[i][k] = get_big(flat[i * rank + k], "gram entry");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j.at("labels").is_array())
            throw parse_error("'labels' must be an array of strings");
        for (const json& l : j.at("labels")) {
            if (!l.is_string()) throw parse_error("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return IntersectionLattice(std::move(gram), std::move(labels));
}

json to_json(const SurfaceInvariants& inv) {
    return json{{"p_g", inv.p_g},
                {"q", inv.q},
                {"kmin_sq", inv.kmin_sq},
                {"kmin_torsion_order", inv.kmin_torsion_order},
                {"n_exceptional", inv.n_exceptional}};
}

SurfaceInvariants surface_from_json(const json& j) {
    SurfaceInvariants inv;
    inv.p_g = get_long(j, "p_g");
    inv.q = get_long(j, "q");
    inv.kmin_sq = get_long(j, "kmin_sq");
    inv.kmin_torsion_order = get_long(j, "kmin_torsion_order");
    inv.n_exceptional = get_long(j, "n_exceptional");
    return inv;
}

json to_json(const EllipticSurface& surf) {
    return json{{"g", surf.base_genus}, {"chi", surf.chi},
                {"fibers", surf.fibers}};
}

EllipticSurface elliptic_from_json(const json& j) {
    EllipticSurface surf;
    surf.base_genus = get_long(j, "g");
    surf.chi = get_long(j, "chi");
    if (!j.contains("fibers") || !j.at("fibers").is_array())
        throw parse_error("missing 'fibers' array");
    for (const json& p : j.at("fibers")) {
        if (!p.is_number_integer())
            throw parse_error("fiber multiplicities must be exact integers");
        surf.fibers.push_back(p.get<long>());
    }
    return surf;
}

json to_json(const LatticeVector& v) {
    json out = json::array();
    for (const Rational& c : v) {
        if (is_integer(c) && numerator(c) >= std::numeric_limits<long long>::min() &&
            numerator(c) <= std::numeric_limits<long long>::max())
            out.push_back(numerator(c).convert_to<long long>());
        else
            out.push_back(rational_str(c));
    }
    return out;
}

LatticeVector vector_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("vector must be an array");
    LatticeVector v;
    for (const json& c : j) {
        if (c.is_number_integer())
            v.emplace_back(c.get<long long>());
        else if (c.is_string())
            v.push_back(parse_rational(c.get<std::string>()));
        else
            throw parse_error(
                "vector entries must be integers or rational strings");
    }
    return v;
}

json parse_document(std::istream& in, const std::string& origin) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(origin + ": " + e.what());
    }
}

}  // namespace sw
