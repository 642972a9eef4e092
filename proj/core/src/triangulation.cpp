#include "tririgid/triangulation.hpp"

#include <algorithm>
#include <map>

#include "tririgid/error.hpp"

namespace tririgid {
namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

Face sorted_face(Face f) {
  std::sort(f.begin(), f.end());
  return f;
}

int position_in(const std::vector<Vertex>& rot, Vertex u) {
  const auto it = std::find(rot.begin(), rot.end(), u);
  return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

// Rotation of v's list so that `first` is at the front.
std::vector<Vertex> rotated_to(const std::vector<Vertex>& rot, Vertex first) {
  std::vector<Vertex> out(rot);
  const auto it = std::find(out.begin(), out.end(), first);
  std::rotate(out.begin(), it, out.end());
  return out;
}

}  // namespace

RotationSystem rotation_from_faces(int n, std::span<const Face> faces) {
  // successor[v][a] = b for every face (v,a,b) read cyclically.
  std::vector<std::map<Vertex, Vertex>> successor(idx(n));
  for (const Face& f : faces) {
    for (int i = 0; i < 3; ++i) {
      const Vertex v = f[idx(i)];
      const Vertex a = f[idx((i + 1) % 3)];
      const Vertex b = f[idx((i + 2) % 3)];
      if (v < 0 || v >= n || a < 0 || a >= n || b < 0 || b >= n) {
        throw Error(ErrorKind::NotSimple, "face vertex out of range");
      }
      if (!successor[idx(v)].emplace(a, b).second) {
        throw Error(ErrorKind::InvalidRotation, "faces are not consistently oriented at vertex " + std::to_string(v));
      }
    }
  }
  RotationSystem out;
  out.rotation.resize(idx(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto& succ = successor[idx(v)];
    if (succ.empty()) continue;
    std::vector<Vertex>& rot = out.rotation[idx(v)];
    Vertex cur = succ.begin()->first;
    for (std::size_t step = 0; step < succ.size(); ++step) {
      rot.push_back(cur);
      const auto it = succ.find(cur);
      if (it == succ.end()) throw Error(ErrorKind::InvalidRotation, "open fan at vertex " + std::to_string(v));
      cur = it->second;
    }
    if (cur != rot.front()) throw Error(ErrorKind::InvalidRotation, "vertex " + std::to_string(v) + " is not a single disc");
  }
  return out;
}

SimpleGraph graph_of(const RotationSystem& rotation) {
  const int n = static_cast<int>(rotation.rotation.size());
  SimpleGraph g(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto& rot = rotation.rotation[idx(v)];
    std::vector<Vertex> sorted(rot);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::NotSimple, "repeated neighbour in rotation of " + std::to_string(v));
    }
    for (Vertex u : rot) {
      if (u < 0 || u >= n) throw Error(ErrorKind::NotSimple, "neighbour out of range at vertex " + std::to_string(v));
      if (u == v) throw Error(ErrorKind::NotSimple, "loop at vertex " + std::to_string(v));
      const auto& back = rotation.rotation[idx(u)];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw Error(ErrorKind::InvalidRotation,
                    "asymmetric adjacency " + std::to_string(v) + "->" + std::to_string(u));
      }
      if (v < u) g.add_edge(v, u);
    }
  }
  return g;
}

std::vector<std::vector<Vertex>> trace_faces(const std::vector<std::vector<Vertex>>& rotation) {
  std::vector<std::vector<char>> used(rotation.size());
  for (std::size_t v = 0; v < rotation.size(); ++v) used[v].assign(rotation[v].size(), 0);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    for (std::size_t i = 0; i < rotation[v].size(); ++i) {
      if (used[v][i]) continue;
      std::vector<Vertex> walk;
      Vertex a = static_cast<Vertex>(v);
      int ai = static_cast<int>(i);
      while (!used[idx(a)][idx(ai)]) {
        used[idx(a)][idx(ai)] = 1;
        walk.push_back(a);
        const Vertex b = rotation[idx(a)][idx(ai)];
        const auto& rb = rotation[idx(b)];
        const int j = position_in(rb, a);
        if (j < 0) throw Error(ErrorKind::InvalidRotation, "asymmetric rotation");
        const int deg = static_cast<int>(rb.size());
        ai = (j - 1 + deg) % deg;
        a = b;
      }
      out.push_back(std::move(walk));
    }
  }
  return out;
}

PlaneTriangulation validate(const RotationSystem& rotation) { return validate(graph_of(rotation), rotation); }

PlaneTriangulation validate(const SimpleGraph& graph, const RotationSystem& rotation) {
  const int n = graph.num_vertices();
  if (static_cast<int>(rotation.rotation.size()) != n) {
    throw Error(ErrorKind::InvalidRotation, "rotation system has wrong vertex count");
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted(rotation.rotation[idx(v)]);
    std::sort(sorted.begin(), sorted.end());
    if (sorted != graph.neighbors(v)) {
      throw Error(ErrorKind::InvalidRotation,
                  "rotation of " + std::to_string(v) + " is not a permutation of its neighbours");
    }
  }

  PlaneTriangulation t;
  t.graph_ = graph;
  t.rotation_ = rotation.rotation;
  t.dart_face_.resize(idx(n));
  for (Vertex v = 0; v < n; ++v) t.dart_face_[idx(v)].assign(t.rotation_[idx(v)].size(), -1);

  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < t.rotation_[idx(v)].size(); ++i) {
      if (t.dart_face_[idx(v)][i] >= 0) continue;
      const int id = static_cast<int>(t.faces_.size());
      std::vector<Vertex> walk;
      Vertex a = v;
      int ai = static_cast<int>(i);
      while (t.dart_face_[idx(a)][idx(ai)] < 0) {
        t.dart_face_[idx(a)][idx(ai)] = id;
        walk.push_back(a);
        const Vertex b = t.rotation_[idx(a)][idx(ai)];
        const auto& rb = t.rotation_[idx(b)];
        const int deg = static_cast<int>(rb.size());
        ai = (position_in(rb, a) - 1 + deg) % deg;
        a = b;
      }
      if (walk.size() != 3) {
        throw Error(ErrorKind::NonTriangularFace, "face through dart " + std::to_string(v) + "->" +
                                                      std::to_string(t.rotation_[idx(v)][i]) + " has length " +
                                                      std::to_string(walk.size()));
      }
      t.faces_.push_back({walk[0], walk[1], walk[2]});
    }
  }

  const long f = static_cast<long>(t.faces_.size());
  if (n - graph.num_edges() + f != 2) {
    throw Error(ErrorKind::EulerViolation, "n - m + f = " + std::to_string(n - graph.num_edges() + f));
  }
  if (!is_k_connected(graph, 3)) throw Error(ErrorKind::Not3Connected, "graph is not 3-connected");

  if (rotation.outer_face) {
    t.outer_ = t.find_face(*rotation.outer_face);
  } else {
    t.outer_ = t.dart_face_[0][0];
  }
  return t;
}

int PlaneTriangulation::position(Vertex v, Vertex u) const {
  const int p = position_in(rotation(v), u);
  if (p < 0) throw Error(ErrorKind::NotAnEdge, to_string(Edge(u, v)));
  return p;
}

const Face& PlaneTriangulation::face_left_of(Vertex u, Vertex v) const {
  return faces_[idx(dart_face_.at(idx(u))[idx(position(u, v))])];
}

std::array<Face, 2> PlaneTriangulation::faces_at(const Edge& e) const {
  return {face_left_of(e.u, e.v), face_left_of(e.v, e.u)};
}

int PlaneTriangulation::find_face(const Face& f) const {
  const Face key = sorted_face(f);
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (sorted_face(faces_[i]) == key) return static_cast<int>(i);
  }
  throw Error(ErrorKind::UnknownFace, "{" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
                                          std::to_string(f[2]) + "} is not a face");
}

PlaneTriangulation PlaneTriangulation::with_outer_face(const Face& f) const {
  PlaneTriangulation out(*this);
  out.outer_ = find_face(f);
  return out;
}

RotationSystem PlaneTriangulation::rotation_system() const { return {rotation_, outer_face()}; }

const std::vector<Face>& faces(const PlaneTriangulation& t) { return t.faces(); }

std::vector<Edge> CycleInfo::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k == 0) return {};
  const std::size_t start = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  const Vertex next = cycle[(start + 1) % k];
  const Vertex prev = cycle[(start + k - 1) % k];
  std::vector<Vertex> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(next < prev ? cycle[(start + i) % k] : cycle[(start + k - i) % k]);
  }
  return out;
}

CycleInfo classify_cycle(const PlaneTriangulation& t, std::span<const Vertex> cycle, const std::optional<Face>& outer) {
  const SimpleGraph& g = t.graph();
  const int n = g.num_vertices();
  const std::size_t k = cycle.size();
  if (k < 3) throw Error(ErrorKind::PreconditionViolated, "a cycle needs at least three vertices");
  std::vector<char> on_cycle(idx(n), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % k];
    if (!g.has_edge(a, b)) throw Error(ErrorKind::PreconditionViolated, "consecutive cycle vertices not adjacent");
    if (on_cycle[idx(a)]) throw Error(ErrorKind::PreconditionViolated, "cycle repeats a vertex");
    on_cycle[idx(a)] = 1;
  }
  auto on_cycle_edge = [&](Vertex a, Vertex b) {
    for (std::size_t i = 0; i < k; ++i) {
      if (Edge(cycle[i], cycle[(i + 1) % k]) == Edge(a, b)) return true;
    }
    return false;
  };

  const int start = t.find_face(outer ? *outer : t.outer_face());
  const auto& fs = t.faces();
  std::vector<char> reached(fs.size(), 0);
  std::vector<int> stack{start};
  reached[idx(start)] = 1;
  while (!stack.empty()) {
    const Face& f = fs[idx(stack.back())];
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      const Vertex a = f[idx(i)];
      const Vertex b = f[idx((i + 1) % 3)];
      if (on_cycle_edge(a, b)) continue;
      const int across = t.find_face(t.face_left_of(b, a));
      if (!reached[idx(across)]) {
        reached[idx(across)] = 1;
        stack.push_back(across);
      }
    }
  }

  CycleInfo info;
  info.vertices = canonical_cycle(cycle);
  for (Vertex v = 0; v < n; ++v) {
    if (on_cycle[idx(v)]) continue;
    const int f = t.find_face(t.face_left_of(v, t.rotation(v).front()));
    (reached[idx(f)] ? info.outside : info.inside).push_back(v);
  }
  return info;
}

std::vector<CycleInfo> separating_triangles(const PlaneTriangulation& t, const std::optional<Face>& outer) {
  const SimpleGraph& g = t.graph();
  std::vector<CycleInfo> out;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.common_neighbors(u, v)) {
        if (w <= v) continue;
        const std::array<Vertex, 3> c{u, v, w};
        CycleInfo info = classify_cycle(t, c, outer);
        if (info.separating()) out.push_back(std::move(info));
      }
    }
  }
  return out;
}

bool is_four_connected(const PlaneTriangulation& t) {
  return t.num_vertices() > 4 && separating_triangles(t).empty();
}

std::vector<CycleInfo> separating_quads(const PlaneTriangulation& t, const std::optional<Face>& outer) {
  if (!is_four_connected(t)) throw Error(ErrorKind::NotFourConnected, "separating 4-cycles need a 4-connected triangulation");
  const SimpleGraph& g = t.graph();
  std::vector<CycleInfo> out;
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex d : g.neighbors(a)) {
        if (d <= b) continue;
        for (Vertex c : g.common_neighbors(b, d)) {
          if (c <= a) continue;
          const std::array<Vertex, 4> cyc{a, b, c, d};
          CycleInfo info = classify_cycle(t, cyc, outer);
          if (!info.separating()) continue;
          if (g.has_edge(a, c) || g.has_edge(b, d)) {
            throw Error(ErrorKind::CertificationFailed, "separating 4-cycle with a chord in a 4-connected triangulation");
          }
          out.push_back(std::move(info));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CycleInfo& x, const CycleInfo& y) { return x.vertices < y.vertices; });
  return out;
}

bool edge_on_separating_quad(const PlaneTriangulation& t, const Edge& e) {
  const SimpleGraph& g = t.graph();
  if (!g.has_edge(e.u, e.v)) throw Error(ErrorKind::NotAnEdge, to_string(e));
  for (Vertex c : g.neighbors(e.v)) {
    if (c == e.u) continue;
    for (Vertex d : g.common_neighbors(e.u, c)) {
      if (d == e.v) continue;
      const std::array<Vertex, 4> cyc{e.u, e.v, c, d};
      if (classify_cycle(t, cyc).separating()) return true;
    }
  }
  return false;
}

TriangulationContraction contract(const PlaneTriangulation& t, const Edge& e) {
  const SimpleGraph& g = t.graph();
  if (!g.has_edge(e.u, e.v)) throw Error(ErrorKind::NotAnEdge, to_string(e));
  if (g.common_neighbors(e.u, e.v).size() != 2) {
    throw Error(ErrorKind::EdgeOnSeparatingTriangle, to_string(e) + " lies on a separating triangle");
  }
  if (t.num_vertices() < 5) throw Error(ErrorKind::PreconditionViolated, "contraction would leave fewer than 4 vertices");

  const Vertex a = e.u;  // keeps its id (the smaller endpoint)
  const Vertex b = e.v;
  const int n = t.num_vertices();
  std::vector<std::vector<Vertex>> rot = t.rotation();

  const std::vector<Vertex> ra = rotated_to(rot[idx(a)], b);
  const std::vector<Vertex> rb = rotated_to(rot[idx(b)], a);
  const Vertex c1 = ra[1];
  const Vertex c2 = ra.back();
  std::vector<Vertex> merged(ra.begin() + 1, ra.end());
  merged.insert(merged.end(), rb.begin() + 2, rb.end() - 1);
  rot[idx(a)] = std::move(merged);
  rot[idx(b)].clear();

  for (Vertex x = 0; x < n; ++x) {
    if (x == a || x == b) continue;
    auto& rx = rot[idx(x)];
    if (x == c1 || x == c2) {
      rx.erase(std::find(rx.begin(), rx.end(), b));
    } else {
      std::replace(rx.begin(), rx.end(), b, a);
    }
  }

  Relabel relabel(idx(n));
  for (Vertex x = 0; x < n; ++x) relabel[idx(x)] = x == b ? a : (x > b ? x - 1 : x);

  RotationSystem out;
  out.rotation.resize(idx(n - 1));
  for (Vertex x = 0; x < n; ++x) {
    if (x == b) continue;
    auto& dst = out.rotation[idx(relabel[idx(x)])];
    for (Vertex y : rot[idx(x)]) dst.push_back(relabel[idx(y)]);
  }
  const Face& old_outer = t.outer_face();
  const bool outer_collapses = std::count(old_outer.begin(), old_outer.end(), a) + std::count(old_outer.begin(), old_outer.end(), b) == 2;
  if (!outer_collapses) {
    out.outer_face = Face{relabel[idx(old_outer[0])], relabel[idx(old_outer[1])], relabel[idx(old_outer[2])]};
  }
  return {validate(out), std::move(relabel)};
}

TriangulationContraction remove_degree3_vertex(const PlaneTriangulation& t, Vertex x) {
  const int n = t.num_vertices();
  if (x < 0 || x >= n || t.graph().degree(x) != 3) {
    throw Error(ErrorKind::PreconditionViolated, "vertex removal needs a degree-3 vertex");
  }
  if (n < 5) throw Error(ErrorKind::PreconditionViolated, "removal would leave fewer than 4 vertices");
  Relabel relabel(idx(n));
  for (Vertex y = 0; y < n; ++y) relabel[idx(y)] = y == x ? -1 : (y > x ? y - 1 : y);
  RotationSystem out;
  out.rotation.resize(idx(n - 1));
  for (Vertex y = 0; y < n; ++y) {
    if (y == x) continue;
    auto& dst = out.rotation[idx(relabel[idx(y)])];
    for (Vertex z : t.rotation(y)) {
      if (z != x) dst.push_back(relabel[idx(z)]);
    }
  }
  const Face& old_outer = t.outer_face();
  if (std::find(old_outer.begin(), old_outer.end(), x) == old_outer.end()) {
    out.outer_face = Face{relabel[idx(old_outer[0])], relabel[idx(old_outer[1])], relabel[idx(old_outer[2])]};
  } else {
    const auto& nb = t.graph().neighbors(x);
    out.outer_face = Face{relabel[idx(nb[0])], relabel[idx(nb[1])], relabel[idx(nb[2])]};
  }
  return {validate(out), std::move(relabel)};
}

NearTriangulation induced_near_triangulation(const PlaneTriangulation& t, const CycleInfo& c) {
  std::vector<Vertex> keep(c.vertices);
  keep.insert(keep.end(), c.inside.begin(), c.inside.end());
  InducedSubgraph sub = induced_subgraph(t.graph(), keep);
  std::vector<Vertex> local(idx(t.num_vertices()), -1);
  for (std::size_t i = 0; i < sub.to_host.size(); ++i) local[idx(sub.to_host[i])] = static_cast<Vertex>(i);

  NearTriangulation nt;
  nt.graph = std::move(sub.graph);
  nt.to_host = std::move(sub.to_host);
  nt.rotation.resize(nt.to_host.size());
  for (std::size_t i = 0; i < nt.to_host.size(); ++i) {
    for (Vertex y : t.rotation(nt.to_host[i])) {
      if (local[idx(y)] >= 0) nt.rotation[i].push_back(local[idx(y)]);
    }
  }
  for (Vertex v : c.vertices) nt.boundary.push_back(local[idx(v)]);

  std::vector<Vertex> boundary_sorted(nt.boundary);
  std::sort(boundary_sorted.begin(), boundary_sorted.end());
  bool boundary_seen = false;
  for (auto walk : trace_faces(nt.rotation)) {
    std::sort(walk.begin(), walk.end());
    if (walk == boundary_sorted) {
      boundary_seen = true;
    } else if (walk.size() != 3) {
      throw Error(ErrorKind::NonTriangularFace, "bounded face of the induced near triangulation is not a triangle");
    }
  }
  if (!boundary_seen) throw Error(ErrorKind::PreconditionViolated, "cycle does not bound a face of the induced subgraph");
  return nt;
}

PlaneTriangulation NearTriangulation::as_triangulation() const {
  if (boundary.size() != 3) throw Error(ErrorKind::PreconditionViolated, "near triangulation has a non-triangular boundary");
  RotationSystem rs{rotation, Face{boundary[0], boundary[1], boundary[2]}};
  return validate(graph, rs);
}

}  // namespace tririgid
