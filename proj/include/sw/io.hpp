#pragma once

#include "sw/elliptic.hpp"
#include "sw/lattice.hpp"
#include "sw/surface.hpp"

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace sw {

/// Structured-text records. Integers must be JSON integers; rational vector
/// entries may also be strings of the form "p/q". Round trips are exact.

nlohmann::json to_json(const IntersectionLattice& lat);
IntersectionLattice lattice_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SurfaceInvariants& inv);
SurfaceInvariants surface_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EllipticSurface& surf);
EllipticSurface elliptic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LatticeVector& v);
LatticeVector vector_from_json(const nlohmann::json& j);

/// Parses a whole document, mapping JSON errors to parse_error.
nlohmann::json parse_document(std::istream& in, const std::string& origin);

}  // namespace sw
