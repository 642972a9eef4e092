#include "tririgid/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>

#include "tririgid/error.hpp"

namespace tririgid {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::InvalidRotation: return "InvalidRotation";
    case ErrorKind::NonTriangularFace: return "NonTriangularFace";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::Not3Connected: return "Not3Connected";
    case ErrorKind::UnknownFace: return "UnknownFace";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::EdgeOnSeparatingTriangle: return "EdgeOnSeparatingTriangle";
    case ErrorKind::NotFourConnected: return "NotFourConnected";
    case ErrorKind::AdjacentPair: return "AdjacentPair";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidSplit: return "InvalidSplit";
    case ErrorKind::GeneralPositionViolated: return "GeneralPositionViolated";
    case ErrorKind::NotEquilibrium: return "NotEquilibrium";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NoneContractible: return "NoneContractible";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::MaxAttemptsExceeded: return "MaxAttemptsExceeded";
    case ErrorKind::WitnessFailed: return "WitnessFailed";
    case ErrorKind::CoincidentRankDeficient: return "CoincidentRankDeficient";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
  }
  return "Unknown";
}

bool is_invariant_breach(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NoneContractible:
    case ErrorKind::NotFound:
    case ErrorKind::MaxAttemptsExceeded:
    case ErrorKind::WitnessFailed:
    case ErrorKind::CertificationFailed:
      return true;
    default:
      return false;
  }
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

SimpleGraph::SimpleGraph(int n) {
  if (n < 0) throw Error(ErrorKind::NotSimple, "negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void SimpleGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= num_vertices()) {
    throw Error(ErrorKind::NotSimple, "vertex " + std::to_string(v) + " out of range");
  }
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices()) return false;
  const auto& na = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(na.begin(), na.end(), b);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Vertex> SimpleGraph::common_neighbors(Vertex a, Vertex b) const {
  std::vector<Vertex> out;
  const auto& na = neighbors(a);
  const auto& nb = neighbors(b);
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

void SimpleGraph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw Error(ErrorKind::NotSimple, "loop at vertex " + std::to_string(a));
  if (has_edge(a, b)) throw Error(ErrorKind::NotSimple, "parallel edge " + to_string(Edge(a, b)));
  auto& na = adj_[static_cast<std::size_t>(a)];
  auto& nb = adj_[static_cast<std::size_t>(b)];
  na.insert(std::lower_bound(na.begin(), na.end(), b), b);
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++num_edges_;
}

void SimpleGraph::remove_edge(Vertex a, Vertex b) {
  if (!has_edge(a, b)) throw Error(ErrorKind::NotAnEdge, to_string(Edge(a, b)));
  auto& na = adj_[static_cast<std::size_t>(a)];
  auto& nb = adj_[static_cast<std::size_t>(b)];
  na.erase(std::lower_bound(na.begin(), na.end(), b));
  nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
  --num_edges_;
}

bool SimpleGraph::is_complete() const noexcept {
  const long n = num_vertices();
  return num_edges_ == n * (n - 1) / 2;
}

GraphContraction contract_edge(const SimpleGraph& g, Vertex a, Vertex b) {
  if (!g.has_edge(a, b)) throw Error(ErrorKind::NotAnEdge, to_string(Edge(a, b)));
  const Vertex keep = std::min(a, b);
  const Vertex gone = std::max(a, b);
  const int n = g.num_vertices();
  Relabel relabel(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x) {
    relabel[static_cast<std::size_t>(x)] = x == gone ? keep : (x > gone ? x - 1 : x);
  }
  SimpleGraph out(n - 1);
  for (const Edge& e : g.edges()) {
    const Vertex p = relabel[static_cast<std::size_t>(e.u)];
    const Vertex q = relabel[static_cast<std::size_t>(e.v)];
    if (p != q && !out.has_edge(p, q)) out.add_edge(p, q);
  }
  return {std::move(out), std::move(relabel)};
}

GraphContraction remove_vertex(const SimpleGraph& g, Vertex x) {
  const int n = g.num_vertices();
  if (x < 0 || x >= n) throw Error(ErrorKind::PreconditionViolated, "no vertex " + std::to_string(x));
  Relabel relabel(static_cast<std::size_t>(n));
  for (Vertex y = 0; y < n; ++y) relabel[static_cast<std::size_t>(y)] = y == x ? -1 : (y > x ? y - 1 : y);
  SimpleGraph out(n - 1);
  for (const Edge& e : g.edges()) {
    if (e.contains(x)) continue;
    out.add_edge(relabel[static_cast<std::size_t>(e.u)], relabel[static_cast<std::size_t>(e.v)]);
  }
  return {std::move(out), std::move(relabel)};
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> to_host(vertices.begin(), vertices.end());
  std::sort(to_host.begin(), to_host.end());
  to_host.erase(std::unique(to_host.begin(), to_host.end()), to_host.end());
  std::vector<Vertex> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < to_host.size(); ++i) local[static_cast<std::size_t>(to_host[i])] = static_cast<Vertex>(i);
  SimpleGraph out(static_cast<int>(to_host.size()));
  for (const Edge& e : g.edges()) {
    const Vertex p = local[static_cast<std::size_t>(e.u)];
    const Vertex q = local[static_cast<std::size_t>(e.v)];
    if (p >= 0 && q >= 0) out.add_edge(p, q);
  }
  return {std::move(out), std::move(to_host)};
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

bool is_connected_avoiding(const SimpleGraph& g, std::span<const char> removed) {
  const int n = g.num_vertices();
  Vertex start = -1;
  int alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[static_cast<std::size_t>(v)]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (removed[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == alive;
}

bool is_k_connected(const SimpleGraph& g, int k) {
  const int n = g.num_vertices();
  if (k <= 0) return n > k;
  if (n <= k) return false;
  // With n > k every separating set of size < k extends to one of size exactly
  // k-1 that still leaves two components, so checking (k-1)-subsets suffices.
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::function<bool(Vertex, int)> all_connected = [&](Vertex from, int left) -> bool {
    if (left == 0) return is_connected_avoiding(g, removed);
    for (Vertex v = from; v <= n - left; ++v) {
      removed[static_cast<std::size_t>(v)] = 1;
      const bool ok = all_connected(v + 1, left - 1);
      removed[static_cast<std::size_t>(v)] = 0;
      if (!ok) return false;
    }
    return true;
  };
  return all_connected(0, k - 1);
}

std::uint64_t fnv1a64(std::span<const unsigned char> bytes, std::uint64_t state) noexcept {
  for (unsigned char b : bytes) {
    state ^= b;
    state *= 1099511628211ULL;
  }
  return state;
}

std::string to_hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::uint64_t canonical_hash(const SimpleGraph& g) {
  std::string bytes = "n:" + std::to_string(g.num_vertices()) + ";";
  for (const Edge& e : g.edges()) {
    bytes += std::to_string(e.u);
    bytes += ',';
    bytes += std::to_string(e.v);
    bytes += ';';
  }
  return fnv1a64({reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size()});
}

std::string canonical_hash_hex(const SimpleGraph& g) { return to_hex64(canonical_hash(g)); }

}  // namespace tririgid
