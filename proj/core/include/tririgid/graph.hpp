#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tririgid {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex x) const noexcept { return u == x || v == x; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  /// Throws Error(NotSimple) on loops, parallel edges or out-of-range endpoints.
  SimpleGraph(int n, std::span<const Edge> edges);

  int num_vertices() const noexcept { return static_cast<int>(adj_.size()); }
  int num_edges() const noexcept { return num_edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  /// Sorted edge list.
  std::vector<Edge> edges() const;
  std::vector<Vertex> common_neighbors(Vertex a, Vertex b) const;

  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);

  bool is_complete() const noexcept;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  int num_edges_ = 0;
};

/// Maps every old vertex id to its new id; removed vertices map to -1.
using Relabel = std::vector<Vertex>;

struct GraphContraction {
  SimpleGraph graph;
  Relabel relabel;
};

/// Contracts edge ab. The merged vertex takes id min(a,b); the larger id is
/// removed and every id above it shifts down by one. Parallel edges collapse.
GraphContraction contract_edge(const SimpleGraph& g, Vertex a, Vertex b);

/// Deletes a vertex; ids above it shift down by one.
GraphContraction remove_vertex(const SimpleGraph& g, Vertex x);

struct InducedSubgraph {
  SimpleGraph graph;
  std::vector<Vertex> to_host;  // local id -> host id, ascending
};

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> vertices);

SimpleGraph complete_graph(int n);

/// True iff n > k and no set of fewer than k vertices disconnects g.
bool is_k_connected(const SimpleGraph& g, int k);

bool is_connected_avoiding(const SimpleGraph& g, std::span<const char> removed);

/// 64-bit FNV-1a over the canonical byte string "n:<n>;" followed by "<u>,<v>;"
/// for every edge in ascending (u,v) order with u < v, decimal ASCII.
std::uint64_t canonical_hash(const SimpleGraph& g);
std::string canonical_hash_hex(const SimpleGraph& g);

std::uint64_t fnv1a64(std::span<const unsigned char> bytes,
                      std::uint64_t state = 14695981039346656037ULL) noexcept;
std::string to_hex64(std::uint64_t value);

}  // namespace tririgid
