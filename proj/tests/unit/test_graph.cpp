#include <gtest/gtest.h>

#include "corpus.hpp"
#include "tririgid/error.hpp"
#include "tririgid/graph.hpp"

using namespace tririgid;

TEST(Edge, StoresEndpointsSorted) {
  const Edge e(5, 2);
  EXPECT_EQ(e.u, 2);
  EXPECT_EQ(e.v, 5);
  EXPECT_EQ(e.other(2), 5);
  EXPECT_TRUE(e.contains(5));
  EXPECT_EQ(to_string(e), "2-5");
}

TEST(SimpleGraph, RejectsLoopsParallelsAndRange) {
  const std::vector<Edge> loop{Edge(1, 1)};
  EXPECT_THROW(SimpleGraph(3, loop), Error);
  const std::vector<Edge> twice{Edge(0, 1), Edge(1, 0)};
  EXPECT_THROW(SimpleGraph(3, twice), Error);
  const std::vector<Edge> range{Edge(0, 3)};
  EXPECT_THROW(SimpleGraph(3, range), Error);
  try {
    SimpleGraph(3, loop);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSimple);
  }
}

TEST(SimpleGraph, BasicQueries) {
  const SimpleGraph k4 = complete_graph(4);
  EXPECT_EQ(k4.num_edges(), 6);
  EXPECT_TRUE(k4.is_complete());
  EXPECT_EQ(k4.common_neighbors(0, 1), (std::vector<Vertex>{2, 3}));
  SimpleGraph g = k4;
  g.remove_edge(2, 3);
  EXPECT_FALSE(g.is_complete());
  EXPECT_EQ(g.degree(2), 2);
}

TEST(SimpleGraph, ContractionKeepsMinIdAndShifts) {
  // Path 0-1-2-3 plus chord 0-2.
  const std::vector<Edge> es{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 2)};
  const SimpleGraph g(4, es);
  const GraphContraction c = contract_edge(g, 2, 1);
  EXPECT_EQ(c.relabel, (std::vector<Vertex>{0, 1, 1, 2}));
  EXPECT_EQ(c.graph.num_vertices(), 3);
  // 0-1 and 0-2 collapse to one edge.
  EXPECT_EQ(c.graph.edges(), (std::vector<Edge>{Edge(0, 1), Edge(1, 2)}));
}

TEST(SimpleGraph, RemoveVertex) {
  const GraphContraction r = remove_vertex(complete_graph(5), 2);
  EXPECT_EQ(r.relabel, (std::vector<Vertex>{0, 1, -1, 2, 3}));
  EXPECT_TRUE(r.graph.is_complete());
  EXPECT_EQ(r.graph.num_vertices(), 4);
}

TEST(Connectivity, MatchesBruteForceOnCorpus) {
  for (const auto& [name, g] : corpus::three_cut_instances()) {
    EXPECT_EQ(is_k_connected(g.graph(), 4), corpus::oracle_four_connected(g.graph())) << name;
  }
  for (const auto& [name, g] : corpus::positives_with_separating_triangles()) {
    EXPECT_EQ(is_k_connected(g.graph(), 4), corpus::oracle_four_connected(g.graph())) << name;
  }
  for (const auto& [name, t] : corpus::four_connected(10)) {
    EXPECT_TRUE(is_k_connected(t.graph(), 4)) << name;
    // The smallest 5-connected plane triangulation has 12 vertices.
    EXPECT_FALSE(is_k_connected(t.graph(), 5)) << name;
  }
}

TEST(Connectivity, SmallCases) {
  EXPECT_TRUE(is_k_connected(complete_graph(5), 4));
  EXPECT_FALSE(is_k_connected(complete_graph(4), 4));
  const std::vector<Edge> path{Edge(0, 1), Edge(1, 2)};
  EXPECT_TRUE(is_k_connected(SimpleGraph(3, path), 1));
  EXPECT_FALSE(is_k_connected(SimpleGraph(3, path), 2));
}

TEST(CanonicalHash, Fnv1aOverSortedEdgeList) {
  // FNV-1a of "n:2;0,1;" computed independently.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : std::string("n:2;0,1;")) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  const std::vector<Edge> es{Edge(1, 0)};
  EXPECT_EQ(canonical_hash(SimpleGraph(2, es)), h);
  EXPECT_EQ(canonical_hash_hex(SimpleGraph(2, es)), to_hex64(h));
  EXPECT_EQ(to_hex64(h).size(), 16u);
}

TEST(CanonicalHash, IndependentOfInsertionOrder) {
  const std::vector<Edge> a{Edge(0, 1), Edge(2, 3), Edge(1, 2)};
  const std::vector<Edge> b{Edge(2, 1), Edge(3, 2), Edge(1, 0)};
  EXPECT_EQ(canonical_hash(SimpleGraph(4, a)), canonical_hash(SimpleGraph(4, b)));
  const std::vector<Edge> c{Edge(0, 1), Edge(2, 3), Edge(0, 2)};
  EXPECT_NE(canonical_hash(SimpleGraph(4, a)), canonical_hash(SimpleGraph(4, c)));
}
