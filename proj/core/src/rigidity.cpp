#include "tririgid/rigidity.hpp"

#include <algorithm>
#include <cstring>
#include <iterator>

namespace tririgid {

std::size_t max_rigidity_rank(int n, int d) {
  if (n <= 0) return 0;
  const long nn = n;
  const long dd = d;
  if (nn <= dd + 1) return static_cast<std::size_t>(nn * (nn - 1) / 2);
  return static_cast<std::size_t>(dd * nn - dd * (dd + 1) / 2);
}

std::uint64_t config_digest(const PrimeField&, std::span<const PrimeField::Element> coords) {
  std::uint64_t h = 14695981039346656037ULL;
  for (std::uint64_t x : coords) {
    unsigned char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(x >> (8 * i));
    h = fnv1a64(bytes, h);
  }
  return h;
}

std::uint64_t config_digest(const RationalField&, std::span<const RationalField::Element> coords) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const auto& x : coords) {
    const std::string s = x.get_str() + ";";
    h = fnv1a64({reinterpret_cast<const unsigned char*>(s.data()), s.size()}, h);
  }
  return h;
}

std::vector<Vertex> VertexSplit::shared() const {
  std::vector<Vertex> a(neighbors_v1);
  std::vector<Vertex> b(neighbors_v2);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_split(const SimpleGraph& g, const VertexSplit& split, int d) {
  if (split.v < 0 || split.v >= g.num_vertices()) throw Error(ErrorKind::InvalidSplit, "split vertex out of range");
  std::vector<Vertex> a(split.neighbors_v1);
  std::vector<Vertex> b(split.neighbors_v2);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end() || std::adjacent_find(b.begin(), b.end()) != b.end()) {
    throw Error(ErrorKind::InvalidSplit, "repeated neighbour in split");
  }
  std::vector<Vertex> all;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all));
  if (all != g.neighbors(split.v)) throw Error(ErrorKind::InvalidSplit, "split neighbourhoods do not cover N(v) exactly");
  if (static_cast<int>(split.shared().size()) != d - 1) {
    throw Error(ErrorKind::InvalidSplit, "split must share exactly d-1 neighbours");
  }
}

SimpleGraph apply_vertex_split(const SimpleGraph& g, const VertexSplit& split, int d) {
  check_split(g, split, d);
  const int n = g.num_vertices();
  SimpleGraph out(n + 1);
  for (const Edge& e : g.edges())
    if (!e.contains(split.v)) out.add_edge(e.u, e.v);
  for (Vertex w : split.neighbors_v1) out.add_edge(split.v, w);
  for (Vertex w : split.neighbors_v2) out.add_edge(n, w);
  out.add_edge(split.v, n);
  return out;
}

}  // namespace tririgid
