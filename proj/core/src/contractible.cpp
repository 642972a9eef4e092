#include "tririgid/contractible.hpp"

#include <algorithm>
#include <array>

#include "tririgid/error.hpp"

namespace tririgid {

namespace {

bool on_face(const Face& f, Vertex v) { return std::find(f.begin(), f.end(), v) != f.end(); }

std::array<Edge, 3> face_edges(const Face& f) { return {Edge(f[0], f[1]), Edge(f[1], f[2]), Edge(f[2], f[0])}; }

void require_search_input(const PlaneTriangulation& t) {
  if (!is_four_connected(t)) throw Error(ErrorKind::PreconditionViolated, "triangulation is not 4-connected");
  if (t.num_vertices() < 7) throw Error(ErrorKind::PreconditionViolated, "need at least 7 vertices");
}

/// Cardinality-minimal inside set, ties broken by the canonical vertex list.
const CycleInfo* minimal_cycle(const std::vector<CycleInfo>& quads, const std::vector<char>* region) {
  const CycleInfo* best = nullptr;
  for (const CycleInfo& c : quads) {
    if (region) {
      bool ok = true;
      for (Vertex v : c.vertices) ok = ok && (*region)[static_cast<std::size_t>(v)];
      if (!ok) continue;
    }
    if (!best || c.inside.size() < best->inside.size() ||
        (c.inside.size() == best->inside.size() && c.vertices < best->vertices)) {
      best = &c;
    }
  }
  return best;
}

std::optional<Edge> first_allowed(const PlaneTriangulation& t, const AvoidanceSpec& avoid,
                                  const std::vector<Edge>& candidates) {
  for (const Edge& e : candidates)
    if (avoid.allows(t, e)) return e;
  return std::nullopt;
}

SearchResult fallback(const PlaneTriangulation& t, const AvoidanceSpec& avoid, std::vector<std::string> notes) {
  const auto edge = first_allowed(t, avoid, brute_force_contractible(t));
  if (!edge) throw Error(ErrorKind::NotFound, "no contractible edge satisfies the avoidance constraints");
  return {*edge, "oracle-fallback", std::move(notes), true};
}

}  // namespace

bool AvoidanceSpec::allows(const PlaneTriangulation&, const Edge& e) const {
  if (forbidden_edges.count(e)) return false;
  if (forbidden_vertices.count(e.u) || forbidden_vertices.count(e.v)) return false;
  for (const Face& f : forbidden_faces)
    for (const Edge& fe : face_edges(f))
      if (fe == e) return false;
  return true;
}

std::set<Edge> path2_edges(const PlaneTriangulation& t, Vertex x, Vertex y) {
  const SimpleGraph& g = t.graph();
  if (x < 0 || y < 0 || x >= g.num_vertices() || y >= g.num_vertices()) {
    throw Error(ErrorKind::PreconditionViolated, "vertex out of range");
  }
  if (x == y || g.has_edge(x, y)) throw Error(ErrorKind::AdjacentPair, "x and y must be distinct and non-adjacent");
  std::set<Edge> out;
  for (Vertex w : g.common_neighbors(x, y)) {
    out.insert(Edge(x, w));
    out.insert(Edge(w, y));
  }
  return out;
}

bool is_contractible(const PlaneTriangulation& t, const Edge& e) {
  if (!is_four_connected(t)) throw Error(ErrorKind::NotFourConnected, "contractibility is defined for 4-connected input");
  return !edge_on_separating_quad(t, e);
}

std::vector<Edge> brute_force_contractible(const PlaneTriangulation& t) {
  std::set<Edge> blocked;
  for (const CycleInfo& c : separating_quads(t))
    for (const Edge& e : c.edges()) blocked.insert(e);
  std::vector<Edge> out;
  for (const Edge& e : t.graph().edges())
    if (!blocked.count(e)) out.push_back(e);
  return out;
}

Edge degree4_cofacial_choice(const PlaneTriangulation& t, Vertex u, Vertex v1, Vertex v2) {
  require_search_input(t);
  const SimpleGraph& g = t.graph();
  if (u < 0 || u >= g.num_vertices() || g.degree(u) != 4) {
    throw Error(ErrorKind::PreconditionViolated, "u must have degree 4");
  }
  if (!g.has_edge(u, v1) || !g.has_edge(u, v2) || !g.has_edge(v1, v2)) {
    throw Error(ErrorKind::PreconditionViolated, "uv1 and uv2 must be cofacial edges");
  }
  try {
    (void)t.find_face({u, v1, v2});
  } catch (const Error&) {
    throw Error(ErrorKind::PreconditionViolated, "uv1 and uv2 must be cofacial edges");
  }
  if (is_contractible(t, Edge(u, v1))) return Edge(u, v1);
  if (is_contractible(t, Edge(u, v2))) return Edge(u, v2);
  throw Error(ErrorKind::NoneContractible, "neither cofacial edge at the degree-4 vertex is contractible");
}

SearchResult find_contractible_avoiding_face(const PlaneTriangulation& t, const Face& face) {
  require_search_input(t);
  const Face f = t.faces()[static_cast<std::size_t>(t.find_face(face))];
  AvoidanceSpec avoid;
  avoid.forbidden_vertices = {f[0], f[1], f[2]};

  const auto quads = separating_quads(t, f);
  if (quads.empty()) {
    const auto edge = first_allowed(t, avoid, t.graph().edges());
    if (!edge) throw Error(ErrorKind::NotFound, "no edge avoids the face");
    return {*edge, "no-separating-4-cycle", {}, false};
  }
  const CycleInfo& c = *minimal_cycle(quads, nullptr);
  const auto& cv = c.vertices;
  std::vector<std::string> notes;
  for (std::size_t i = 0; i < 4; ++i) {
    const Vertex v1 = cv[i];
    const Vertex v2 = cv[(i + 1) % 4];
    if (on_face(f, v1) || on_face(f, v2)) continue;
    Vertex u = -1;
    for (Vertex w : c.inside)
      if (t.graph().has_edge(w, v1)) {
        u = w;
        break;
      }
    if (u < 0) continue;
    if (is_contractible(t, Edge(u, v1))) return {Edge(u, v1), "minimal-cycle-spoke", notes, false};
    if (t.graph().degree(u) != 4 || !t.graph().has_edge(u, v2)) {
      notes.push_back("spoke " + to_string(Edge(u, v1)) + " blocked but its inner end is not a degree-4 hub");
      break;
    }
    try {
      return {degree4_cofacial_choice(t, u, v1, v2), "degree4-hub", notes, false};
    } catch (const Error& err) {
      notes.push_back(std::string("degree-4 hub search failed: ") + err.what());
      break;
    }
  }
  return fallback(t, avoid, std::move(notes));
}

SearchResult find_contractible_lemma33(const PlaneTriangulation& t, const Edge& uv, Vertex x, Vertex y) {
  require_search_input(t);
  const SimpleGraph& g = t.graph();
  if (!g.has_edge(uv.u, uv.v)) throw Error(ErrorKind::NotAnEdge, to_string(uv));
  const Face f = t.face_left_of(uv.u, uv.v);
  const Face f2 = t.face_left_of(uv.v, uv.u);
  AvoidanceSpec avoid;
  avoid.forbidden_faces = {f, f2};
  avoid.forbidden_edges = path2_edges(t, x, y);
  auto usable = [&](const Edge& e) { return avoid.allows(t, e) && is_contractible(t, e); };

  const auto quads = separating_quads(t, f);
  if (quads.empty()) {
    const auto edge = first_allowed(t, avoid, g.edges());
    if (!edge) return fallback(t, avoid, {});
    return {*edge, "no-separating-4-cycle", {}, false};
  }

  std::vector<std::string> notes;
  const auto n = static_cast<std::size_t>(t.num_vertices());
  std::vector<char> region(n, 1);
  std::size_t region_size = n;
  for (int round = 0; round < t.num_vertices(); ++round) {
    const CycleInfo* cp = minimal_cycle(quads, &region);
    if (!cp) {
      notes.push_back("no separating 4-cycle inside the current region");
      break;
    }
    const CycleInfo& c = *cp;
    const std::string tag = round == 0 ? "" : "nested-";

    if (c.inside.size() >= 2) {
      std::vector<Edge> interior;
      for (Vertex w : c.inside)
        for (Vertex z : g.neighbors(w)) interior.push_back(Edge(w, z));
      std::sort(interior.begin(), interior.end());
      interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
      for (const Edge& e : interior) {
        if (!is_contractible(t, e)) {
          notes.push_back("inner-block edge " + to_string(e) + " lies on a separating 4-cycle");
        }
      }
      for (const Edge& e : interior)
        if (usable(e)) return {e, tag + "inner-block", notes, false};
      notes.push_back("inner block has no admissible contractible edge");
      break;
    }

    // Five-wheel: hub p inside c.
    const Vertex p = c.inside.front();
    const auto& cv = c.vertices;
    for (Vertex s : cv)
      if (usable(Edge(p, s))) return {Edge(p, s), tag + "wheel-spoke", notes, false};

    std::optional<std::size_t> xi;
    for (std::size_t i = 0; i < 4; ++i)
      if ((cv[i] == x && cv[(i + 2) % 4] == y) || (cv[i] == y && cv[(i + 2) % 4] == x)) xi = i;
    if (!xi) {
      notes.push_back("wheel spokes blocked but x,y are not opposite on the cycle");
      break;
    }
    const Vertex a = cv[(*xi + 1) % 4];
    const Vertex b = cv[(*xi + 3) % 4];
    Vertex w = -1;
    for (Vertex cand : g.common_neighbors(a, b)) {
      if (cand == p || std::find(cv.begin(), cv.end(), cand) != cv.end()) continue;
      w = cand;
      break;
    }
    if (w < 0) {
      notes.push_back("no vertex outside the wheel sees both of the other pair");
      break;
    }
    const std::array<Vertex, 4> c2v{a, p, b, w};
    const CycleInfo c2 = classify_cycle(t, c2v, f);
    Vertex q = -1;
    for (Vertex cand : {x, y})
      if (std::binary_search(c2.inside.begin(), c2.inside.end(), cand)) q = cand;
    if (q < 0) {
      notes.push_back("neither x nor y lies inside the escalation cycle");
      break;
    }
    if (c2.inside.size() == 1) {
      std::vector<Edge> at_q{Edge(w, q)};
      for (Vertex z : g.neighbors(q))
        if (z != w) at_q.push_back(Edge(q, z));
      for (const Edge& e : at_q)
        if (usable(e)) return {e, tag + "escalation-degree4", notes, false};
      notes.push_back("no admissible contractible edge at the degree-4 vertex inside the escalation cycle");
      break;
    }
    const std::array<Vertex, 4> c3v{a, q, b, w};
    const CycleInfo c3 = classify_cycle(t, c3v, f);
    std::vector<char> next(n, 0);
    for (Vertex v : c3.vertices) next[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : c3.inside) next[static_cast<std::size_t>(v)] = 1;
    const std::size_t next_size = c3.vertices.size() + c3.inside.size();
    if (!c3.separating() || next_size >= region_size) {
      notes.push_back("escalation region did not shrink");
      break;
    }
    region = std::move(next);
    region_size = next_size;
  }
  return fallback(t, avoid, std::move(notes));
}

}  // namespace tririgid
