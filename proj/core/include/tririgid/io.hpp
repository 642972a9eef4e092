#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "tririgid/braced.hpp"
#include "tririgid/triangulation.hpp"

namespace tririgid {

/// {"n": int, "rotation": [[...], ...], "outer_face": [a,b,c]} with the outer
/// face optional. Schema problems throw ParseError; the embedding is then
/// validated as usual.
PlaneTriangulation triangulation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PlaneTriangulation& t);

/// Triangulation format plus an optional "braces": [[u,v], ...].
BracedTriangulation braced_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BracedTriangulation& g);

/// Parses text; syntax errors become ParseError.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace tririgid
