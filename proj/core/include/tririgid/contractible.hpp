#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tririgid/triangulation.hpp"

namespace tririgid {

/// Objects an edge search must stay away from.
struct AvoidanceSpec {
  std::vector<Face> forbidden_faces;  // at most two
  std::set<Edge> forbidden_edges;
  std::set<Vertex> forbidden_vertices;

  bool allows(const PlaneTriangulation& t, const Edge& e) const;
};

/// Outcome of a constructive search. `path` names the branch of the case
/// analysis that produced the edge; `notes` collects anything unexpected seen
/// on the way (e.g. a claim of the case analysis failing at runtime).
struct SearchResult {
  Edge edge;
  std::string path;
  std::vector<std::string> notes;
  bool used_fallback = false;
};

/// Edges xw, wy over all common neighbours w. Throws AdjacentPair when x = y
/// or xy is an edge.
std::set<Edge> path2_edges(const PlaneTriangulation& t, Vertex x, Vertex y);

/// T/e is 4-connected. Requires t 4-connected.
bool is_contractible(const PlaneTriangulation& t, const Edge& e);

/// Edges lying on no separating 4-cycle, sorted. Requires t 4-connected.
std::vector<Edge> brute_force_contractible(const PlaneTriangulation& t);

/// u of degree 4 with cofacial edges uv1, uv2 in a 4-connected triangulation on
/// at least 7 vertices: one of the two contracts to a 4-connected
/// triangulation; uv1 wins ties.
Edge degree4_cofacial_choice(const PlaneTriangulation& t, Vertex u, Vertex v1, Vertex v2);

/// A contractible edge with neither endpoint on `face`.
SearchResult find_contractible_avoiding_face(const PlaneTriangulation& t, const Face& face);

/// A contractible edge off both faces at uv and off every length-two xy-path.
SearchResult find_contractible_lemma33(const PlaneTriangulation& t, const Edge& uv, Vertex x, Vertex y);

}  // namespace tririgid
