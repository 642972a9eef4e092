#include "tririgid/generators.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "tririgid/error.hpp"
#include "tririgid/field.hpp"

namespace tririgid {
namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::vector<Face> oriented_faces(const PlaneTriangulation& t) {
  // Stored face walks a->b->c satisfy "c follows b in a's rotation".
  return t.faces();
}

}  // namespace

PlaneTriangulation tetrahedron() {
  const std::vector<Face> f{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  return validate(rotation_from_faces(4, f));
}

PlaneTriangulation octahedron() {
  std::vector<Face> f;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) {
        const Vertex x = sx > 0 ? 0 : 1;
        const Vertex y = sy > 0 ? 2 : 3;
        const Vertex z = sz > 0 ? 4 : 5;
        f.push_back(sx * sy * sz > 0 ? Face{x, y, z} : Face{x, z, y});
      }
  return validate(rotation_from_faces(6, f));
}

PlaneTriangulation icosahedron() {
  const std::vector<Face> f{{0, 1, 2},   {6, 2, 4},  {6, 5, 0},  {6, 0, 2},  {7, 3, 1},  {7, 0, 5},  {7, 1, 0},
                            {8, 4, 2},   {8, 2, 1},  {8, 1, 3},  {8, 3, 9},  {8, 9, 4},  {10, 4, 9}, {10, 6, 4},
                            {10, 5, 6},  {11, 7, 5}, {11, 9, 3}, {11, 3, 7}, {11, 10, 9}, {11, 5, 10}};
  return validate(rotation_from_faces(12, f));
}

PlaneTriangulation bipyramid(int ring) {
  if (ring < 3) throw Error(ErrorKind::PreconditionViolated, "bipyramid ring needs at least 3 vertices");
  std::vector<Face> f;
  const Vertex top = ring;
  const Vertex bottom = ring + 1;
  for (Vertex i = 0; i < ring; ++i) {
    const Vertex j = (i + 1) % ring;
    f.push_back({i, j, top});
    f.push_back({j, i, bottom});
  }
  return validate(rotation_from_faces(ring + 2, f));
}

PlaneTriangulation stacked(int n) {
  if (n < 4) throw Error(ErrorKind::PreconditionViolated, "stacked triangulations start at 4 vertices");
  std::vector<Face> f{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  for (Vertex w = 4; w < n; ++w) {
    const Face host = f.back();
    f.pop_back();
    f.push_back({host[0], host[1], w});
    f.push_back({host[1], host[2], w});
    f.push_back({host[2], host[0], w});
  }
  return validate(rotation_from_faces(n, f));
}

std::optional<PlaneTriangulation> flip(const PlaneTriangulation& t, const Edge& ab) {
  const Vertex a = ab.u;
  const Vertex b = ab.v;
  const SimpleGraph& g = t.graph();
  if (!g.has_edge(a, b)) throw Error(ErrorKind::NotAnEdge, to_string(ab));
  const auto& ra = t.rotation(a);
  const auto pos = static_cast<std::size_t>(std::find(ra.begin(), ra.end(), b) - ra.begin());
  const Vertex c = ra[(pos + 1) % ra.size()];
  const Vertex d = ra[(pos + ra.size() - 1) % ra.size()];
  if (c == d || g.has_edge(c, d)) return std::nullopt;

  RotationSystem rs = t.rotation_system();
  auto erase = [&](Vertex x, Vertex y) {
    auto& r = rs.rotation[idx(x)];
    r.erase(std::find(r.begin(), r.end(), y));
  };
  auto insert_after = [&](Vertex x, Vertex after, Vertex y) {
    auto& r = rs.rotation[idx(x)];
    r.insert(std::find(r.begin(), r.end(), after) + 1, y);
  };
  erase(a, b);
  erase(b, a);
  insert_after(c, a, d);
  insert_after(d, b, c);
  const Face& outer = t.outer_face();
  const bool outer_lost = std::count(outer.begin(), outer.end(), a) + std::count(outer.begin(), outer.end(), b) == 2;
  if (outer_lost) rs.outer_face.reset();
  return validate(rs);
}

namespace {

/// The two apexes c, d opposite edge e; the flip would insert cd.
std::pair<Vertex, Vertex> opposite_pair(const PlaneTriangulation& t, const Edge& e) {
  const auto [left, right] = t.faces_at(e);
  Vertex c = -1;
  Vertex d = -1;
  for (Vertex x : left)
    if (!e.contains(x)) c = x;
  for (Vertex x : right)
    if (!e.contains(x)) d = x;
  return {c, d};
}

/// Random flips; with keep_four_connected only flips whose new edge cd lies on
/// no separating triangle, i.e. c and d share no neighbour besides a and b.
void random_flips(PlaneTriangulation& t, int steps, bool keep_four_connected, RandomSource& rng) {
  for (int step = 0; step < steps; ++step) {
    std::vector<Edge> flippable;
    for (const Edge& e : t.graph().edges()) {
      const auto [c, d] = opposite_pair(t, e);
      if (t.graph().has_edge(c, d)) continue;
      if (keep_four_connected && t.graph().common_neighbors(c, d).size() != 2) continue;
      flippable.push_back(e);
    }
    if (flippable.empty()) return;
    t = *flip(t, flippable[static_cast<std::size_t>(rng.below(flippable.size()))]);
  }
}

/// Flips edges of separating triangles, never increasing their number, until
/// none is left. Returns false if it gets stuck.
bool repair_four_connected(PlaneTriangulation& t, RandomSource& rng) {
  for (int round = 0; round < 64 * t.num_vertices(); ++round) {
    const auto tris = separating_triangles(t);
    if (tris.empty()) return true;
    std::vector<PlaneTriangulation> better;
    std::vector<PlaneTriangulation> equal;
    for (const CycleInfo& c : tris) {
      for (const Edge& e : c.edges()) {
        auto flipped = flip(t, e);
        if (!flipped) continue;
        const std::size_t k = separating_triangles(*flipped).size();
        if (k < tris.size()) better.push_back(std::move(*flipped));
        else if (k == tris.size()) equal.push_back(std::move(*flipped));
      }
    }
    auto& pool = better.empty() ? equal : better;
    if (pool.empty()) return false;
    t = std::move(pool[static_cast<std::size_t>(rng.below(pool.size()))]);
  }
  return false;
}

}  // namespace

PlaneTriangulation flip_walk(int n, int steps, std::uint64_t seed, bool require_four_connected) {
  if (n < 5) throw Error(ErrorKind::PreconditionViolated, "flip walks start from a bipyramid on at least 5 vertices");
  if (require_four_connected && n < 6) {
    throw Error(ErrorKind::PreconditionViolated, "4-connected triangulations need at least 6 vertices");
  }
  RandomSource rng(seed);
  if (!require_four_connected) {
    PlaneTriangulation t = bipyramid(n - 2);
    random_flips(t, steps, false, rng);
    return t;
  }
  // A bipyramid admits no 4-connectivity preserving flip, so mix freely
  // first, flip separating triangles away, then walk inside the 4-connected class.
  for (int attempt = 0; attempt < 16; ++attempt) {
    PlaneTriangulation t = bipyramid(n - 2);
    random_flips(t, steps, false, rng);
    if (!repair_four_connected(t, rng)) continue;
    random_flips(t, steps, true, rng);
    return t;
  }
  throw Error(ErrorKind::MaxAttemptsExceeded, "flip walk did not reach a 4-connected triangulation");
}

PlaneTriangulation glue_on_face(const PlaneTriangulation& host, const Face& host_face, const PlaneTriangulation& inner,
                                const Face& inner_face) {
  const Face hf = host.faces()[idx(host.find_face(host_face))];
  const Face inf = inner.faces()[idx(inner.find_face(inner_face))];
  if (std::is_permutation(hf.begin(), hf.end(), host.outer_face().begin())) {
    throw Error(ErrorKind::PreconditionViolated, "cannot glue into the host's outer face");
  }
  const int nh = host.num_vertices();
  std::vector<Vertex> map(idx(inner.num_vertices()), -1);
  // Reverse orientation so the two copies of the triangle cancel.
  map[idx(inf[0])] = hf[0];
  map[idx(inf[1])] = hf[2];
  map[idx(inf[2])] = hf[1];
  Vertex next = nh;
  for (Vertex v = 0; v < inner.num_vertices(); ++v) {
    if (map[idx(v)] < 0) map[idx(v)] = next++;
  }
  std::vector<Face> all;
  for (const Face& f : oriented_faces(host)) {
    if (f != hf) all.push_back(f);
  }
  for (const Face& f : oriented_faces(inner)) {
    if (f != inf) all.push_back({map[idx(f[0])], map[idx(f[1])], map[idx(f[2])]});
  }
  RotationSystem rs = rotation_from_faces(next, all);
  rs.outer_face = host.outer_face();
  return validate(rs);
}

}  // namespace tririgid
