#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "tririgid/graph.hpp"

namespace tririgid {

using Face = std::array<Vertex, 3>;

/// Per-vertex counterclockwise neighbour order. Face walks follow the rule
/// "arrive at v from u, leave towards the predecessor of u in v's rotation".
struct RotationSystem {
  std::vector<std::vector<Vertex>> rotation;
  std::optional<Face> outer_face;
};

/// Builds a rotation system from consistently oriented triangles: a face
/// (a,b,c) means c follows b in a's rotation.
RotationSystem rotation_from_faces(int n, std::span<const Face> faces);

SimpleGraph graph_of(const RotationSystem& rotation);

/// Walks every face of an arbitrary rotation system (no validation).
std::vector<std::vector<Vertex>> trace_faces(const std::vector<std::vector<Vertex>>& rotation);

class PlaneTriangulation {
 public:
  const SimpleGraph& graph() const noexcept { return graph_; }
  const std::vector<std::vector<Vertex>>& rotation() const noexcept { return rotation_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_.at(static_cast<std::size_t>(v)); }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& outer_face() const noexcept { return faces_[static_cast<std::size_t>(outer_)]; }

  int num_vertices() const noexcept { return graph_.num_vertices(); }
  int num_edges() const noexcept { return graph_.num_edges(); }

  /// Face lying to the left of the dart u->v (the face the walk u->v belongs to).
  const Face& face_left_of(Vertex u, Vertex v) const;
  /// The two faces containing edge e: left of u->v, then left of v->u.
  std::array<Face, 2> faces_at(const Edge& e) const;
  /// Face index whose vertex set equals {a,b,c}; throws UnknownFace.
  int find_face(const Face& f) const;

  /// Same triangulation with a different outer face.
  PlaneTriangulation with_outer_face(const Face& f) const;

  RotationSystem rotation_system() const;

 private:
  friend PlaneTriangulation validate(const SimpleGraph&, const RotationSystem&);

  int position(Vertex v, Vertex u) const;

  SimpleGraph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> dart_face_;  // dart_face_[v][i]: face left of v->rotation_[v][i]
  int outer_ = 0;
};

/// Throws NotSimple, InvalidRotation, NonTriangularFace, EulerViolation,
/// Not3Connected or UnknownFace naming the first violated invariant.
PlaneTriangulation validate(const SimpleGraph& graph, const RotationSystem& rotation);
PlaneTriangulation validate(const RotationSystem& rotation);

const std::vector<Face>& faces(const PlaneTriangulation& t);

struct CycleInfo {
  std::vector<Vertex> vertices;  // canonical cyclic order
  std::vector<Vertex> inside;    // sorted
  std::vector<Vertex> outside;   // sorted

  bool separating() const noexcept { return !inside.empty() && !outside.empty(); }
  std::vector<Edge> edges() const;

  friend bool operator==(const CycleInfo&, const CycleInfo&) = default;
};

/// Rotates a cycle to start at its minimum vertex, walking towards the
/// smaller of its two neighbours.
std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle);

/// Inside/outside split of a cycle relative to the given outer face (the
/// triangulation's own outer face when omitted).
CycleInfo classify_cycle(const PlaneTriangulation& t, std::span<const Vertex> cycle,
                         const std::optional<Face>& outer = std::nullopt);

std::vector<CycleInfo> separating_triangles(const PlaneTriangulation& t,
                                            const std::optional<Face>& outer = std::nullopt);

/// Requires t 4-connected (throws NotFourConnected). Every returned cycle is
/// chordless; a chord would be an internal error.
std::vector<CycleInfo> separating_quads(const PlaneTriangulation& t,
                                        const std::optional<Face>& outer = std::nullopt);

bool is_four_connected(const PlaneTriangulation& t);

/// True iff some separating 4-cycle of t passes through e.
bool edge_on_separating_quad(const PlaneTriangulation& t, const Edge& e);

struct TriangulationContraction {
  PlaneTriangulation result;
  Relabel relabel;
};

/// T/e. Merged vertex keeps id min(u,v). Throws NotAnEdge or
/// EdgeOnSeparatingTriangle; the result is revalidated.
TriangulationContraction contract(const PlaneTriangulation& t, const Edge& e);

/// T - x for a vertex of degree 3; the three neighbours become a face.
TriangulationContraction remove_degree3_vertex(const PlaneTriangulation& t, Vertex x);

struct NearTriangulation {
  SimpleGraph graph;
  std::vector<std::vector<Vertex>> rotation;
  std::vector<Vertex> boundary;  // local ids, cyclic
  std::vector<Vertex> to_host;   // local id -> host id, ascending

  /// Only valid when the boundary is a triangle.
  PlaneTriangulation as_triangulation() const;
};

/// Subgraph induced by V(C) and the vertices inside C.
NearTriangulation induced_near_triangulation(const PlaneTriangulation& t, const CycleInfo& c);

}  // namespace tririgid
