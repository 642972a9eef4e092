#include "tririgid/io.hpp"

#include "tririgid/error.hpp"

namespace tririgid {

using nlohmann::json;

namespace {

Vertex vertex_from(const json& j, int n, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::ParseError, std::string(what) + " must hold integers");
  const auto v = j.get<long long>();
  if (v < 0 || v >= n) throw Error(ErrorKind::ParseError, std::string(what) + " refers to a vertex outside 0..n-1");
  return static_cast<Vertex>(v);
}

}  // namespace

PlaneTriangulation triangulation_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "triangulation must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw Error(ErrorKind::ParseError, "missing integer field \"n\"");
  const long long nn = j["n"].get<long long>();
  if (nn < 0 || nn > 1'000'000) throw Error(ErrorKind::ParseError, "\"n\" out of range");
  const int n = static_cast<int>(nn);
  if (!j.contains("rotation") || !j["rotation"].is_array()) throw Error(ErrorKind::ParseError, "missing array field \"rotation\"");
  const json& rot = j["rotation"];
  if (static_cast<long long>(rot.size()) != nn) throw Error(ErrorKind::ParseError, "\"rotation\" must have n entries");
  RotationSystem rs;
  rs.rotation.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const json& row = rot[static_cast<std::size_t>(v)];
    if (!row.is_array()) throw Error(ErrorKind::ParseError, "rotation entries must be arrays");
    for (const json& x : row) rs.rotation[static_cast<std::size_t>(v)].push_back(vertex_from(x, n, "rotation"));
  }
  if (j.contains("outer_face") && !j["outer_face"].is_null()) {
    const json& f = j["outer_face"];
    if (!f.is_array() || f.size() != 3) throw Error(ErrorKind::ParseError, "\"outer_face\" must list three vertices");
    rs.outer_face = Face{vertex_from(f[0], n, "outer_face"), vertex_from(f[1], n, "outer_face"), vertex_from(f[2], n, "outer_face")};
  }
  return validate(rs);
}

json to_json(const PlaneTriangulation& t) {
  const Face& f = t.outer_face();
  return {{"n", t.num_vertices()}, {"rotation", t.rotation()}, {"outer_face", {f[0], f[1], f[2]}}};
}

BracedTriangulation braced_from_json(const json& j) {
  PlaneTriangulation t = triangulation_from_json(j);
  std::vector<Edge> braces;
  if (j.contains("braces") && !j["braces"].is_null()) {
    const json& b = j["braces"];
    if (!b.is_array()) throw Error(ErrorKind::ParseError, "\"braces\" must be an array of pairs");
    for (const json& e : b) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "each brace must be a pair [u,v]");
      const Vertex u = vertex_from(e[0], t.num_vertices(), "braces");
      const Vertex v = vertex_from(e[1], t.num_vertices(), "braces");
      if (u == v) throw Error(ErrorKind::NotSimple, "brace is a loop");
      braces.emplace_back(u, v);
    }
  }
  return BracedTriangulation(std::move(t), std::move(braces));
}

json to_json(const BracedTriangulation& g) {
  json j = to_json(g.triangulation());
  json b = json::array();
  for (const Edge& e : g.braces()) b.push_back({e.u, e.v});
  j["braces"] = std::move(b);
  return j;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace tririgid
