#include <gtest/gtest.h>

#include "corpus.hpp"
#include "tririgid/error.hpp"
#include "tririgid/rigidity.hpp"

using namespace tririgid;

TEST(MaxRigidityRank, SimplexRegimeAndGenericRegime) {
  // C(n,2) up to n = d+1, then dn - C(d+1,2).
  EXPECT_EQ(max_rigidity_rank(1, 3), 0u);
  EXPECT_EQ(max_rigidity_rank(2, 3), 1u);
  EXPECT_EQ(max_rigidity_rank(3, 3), 3u);
  EXPECT_EQ(max_rigidity_rank(4, 3), 6u);
  EXPECT_EQ(max_rigidity_rank(5, 3), 9u);
  EXPECT_EQ(max_rigidity_rank(12, 3), 30u);
  EXPECT_EQ(max_rigidity_rank(4, 2), 5u);
  EXPECT_EQ(max_rigidity_rank(7, 1), 6u);
}

TEST(RigidityMatrix, RowsCarryCoordinateDifferences) {
  const PrimeField f;
  const std::vector<Edge> es{Edge(0, 1)};
  const auto fw = make_framework(SimpleGraph(2, es), 2, f, {f.from_int(1), f.from_int(2), f.from_int(5), f.from_int(-3)});
  const auto m = rigidity_matrix(fw);
  ASSERT_EQ(m.rows(), 1u);
  ASSERT_EQ(m.cols(), 4u);
  EXPECT_EQ(m(0, 0), f.from_int(-4));
  EXPECT_EQ(m(0, 1), f.from_int(5));
  EXPECT_EQ(m(0, 2), f.from_int(4));
  EXPECT_EQ(m(0, 3), f.from_int(-5));
}

TEST(MakeFramework, ChecksShape) {
  const PrimeField f;
  EXPECT_THROW(make_framework(complete_graph(3), 3, f, std::vector<std::uint64_t>(8)), Error);
  EXPECT_THROW(make_framework(complete_graph(3), 0, f, std::vector<std::uint64_t>{}), Error);
}

TEST(GenericRank, K5IsSeedIndependent) {
  RandomSource a(1), b(2);
  EXPECT_EQ(generic_rank(complete_graph(5), 3, a, 1), 9u);
  EXPECT_EQ(generic_rank(complete_graph(5), 3, b, 1), 9u);
}

TEST(GenericRank, TriangulationsAreRigidAndMatchOracle) {
  std::uint64_t seed = 100;
  for (const auto& [name, t] : corpus::four_connected(12)) {
    RandomSource rng(seed++);
    const std::size_t r = generic_rank(t.graph(), 3, rng, 3);
    EXPECT_EQ(r, static_cast<std::size_t>(3 * t.num_vertices() - 6)) << name;
    EXPECT_EQ(corpus::oracle_generic_rank(t.graph(), 3, seed, PrimeField::kDefaultPrime), r) << name;
  }
}

TEST(GenericRank, RationalModeAgrees) {
  RandomSource a(4), b(4);
  const SimpleGraph g = octahedron().graph();
  EXPECT_EQ(generic_rank(g, 3, a, 1, RationalField()), 12u);
  EXPECT_EQ(generic_rank(g, 3, b, 1), 12u);
  RandomSource c(4);
  EXPECT_EQ(generic_rank_witness(g, 3, c, 1, RationalField()).prime, 0u);
}

TEST(GenericRank, WitnessReplays) {
  RandomSource rng(17);
  const SimpleGraph g = icosahedron().graph();
  const RankWitness w = generic_rank_witness(g, 3, rng, 3);
  EXPECT_EQ(generic_witness_at(g, 3, w.seed, PrimeField(w.prime)), w);
}

TEST(Coincident, ConfigPutsVOnU) {
  const PrimeField f;
  RandomSource rng(2);
  const auto c = coincident_config(6, 3, {1, 4}, f, rng);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(c[static_cast<std::size_t>(3 + k)], c[static_cast<std::size_t>(12 + k)]);
}

TEST(Coincident, OctahedronPlusBraceIsFullRankOnEveryEdge) {
  const PlaneTriangulation o = octahedron();
  SimpleGraph g = o.graph();
  const Edge b = corpus::non_edges(o).front();
  g.add_edge(b.u, b.v);
  RandomSource rng(6);
  for (const Edge& e : o.graph().edges()) EXPECT_EQ(coincident_rank(g, {e.u, e.v}, 3, rng, 3), 12u) << to_string(e);
  // Without the brace the coincident framework loses a degree of freedom.
  EXPECT_LT(coincident_rank(o.graph(), {0, 2}, 3, rng, 3), 12u);
}

TEST(GeneralPosition, DetectsCollinearPoints) {
  const PrimeField f;
  auto pts = [&](std::vector<std::int64_t> v) {
    std::vector<std::uint64_t> out;
    for (auto x : v) out.push_back(f.from_int(x));
    return out;
  };
  const auto line = make_framework(SimpleGraph(3), 3, f, pts({0, 0, 0, 1, 1, 1, 2, 2, 2}));
  const std::vector<Vertex> all{0, 1, 2};
  EXPECT_FALSE(in_general_position(line, all));
  const auto tri = make_framework(SimpleGraph(3), 3, f, pts({0, 0, 0, 1, 0, 0, 0, 1, 0}));
  EXPECT_TRUE(in_general_position(tri, all));
}

TEST(VertexSplit, CheckSplitValidatesNeighbourhoods) {
  const SimpleGraph g = octahedron().graph();  // N(0) = {2,3,4,5}
  EXPECT_NO_THROW(check_split(g, {0, {2, 3, 4}, {3, 4, 5}}, 3));
  EXPECT_THROW(check_split(g, {0, {2, 3}, {4, 5}}, 3), Error);        // shares none
  EXPECT_THROW(check_split(g, {0, {2, 3, 4}, {3, 4}}, 3), Error);     // misses 5
  EXPECT_THROW(check_split(g, {0, {1, 2, 3}, {2, 3, 4, 5}}, 3), Error);  // 1 is not a neighbour
}

TEST(VertexSplit, ApplyAddsVertexNAndTheSplitEdge) {
  const SimpleGraph g = octahedron().graph();
  const SimpleGraph s = apply_vertex_split(g, {0, {2, 3, 4}, {3, 4, 5}}, 3);
  EXPECT_EQ(s.num_vertices(), 7);
  EXPECT_EQ(s.num_edges(), 12 + 3);
  EXPECT_TRUE(s.has_edge(0, 6));
  EXPECT_TRUE(s.has_edge(6, 5));
  EXPECT_FALSE(s.has_edge(0, 5));
}

TEST(VertexSplit, RealizationGainsRankThree) {
  RandomSource rng(12);
  const SimpleGraph g = icosahedron().graph();
  const PrimeField f;
  const auto fw = make_framework(g, 3, f, random_config(12, 3, f, rng));
  ASSERT_TRUE(is_inf_rigid(fw));
  const auto nb = g.neighbors(0);
  const VertexSplit split{0, {nb[0], nb[1], nb[2]}, {nb[1], nb[2], nb[3], nb[4]}};
  const auto out = realize_vertex_split(fw, split, rng);
  EXPECT_EQ(framework_rank(out), framework_rank(fw) + 3);
  EXPECT_EQ(out.point(0)[0], fw.point(0)[0]);
}

TEST(OneExtension, GainsRankThree) {
  RandomSource rng(13);
  const PrimeField f;
  const SimpleGraph g = octahedron().graph();
  const auto fw = make_framework(g, 3, f, random_config(6, 3, f, rng));
  const std::vector<Vertex> attach{1, 4};
  const auto out = one_extension(fw, Edge(0, 2), attach, rng);
  EXPECT_EQ(out.num_vertices(), 7);
  EXPECT_FALSE(out.graph.has_edge(0, 2));
  EXPECT_EQ(framework_rank(out), 15u);
  const std::vector<Vertex> too_few{1};
  EXPECT_THROW(one_extension(fw, Edge(0, 2), too_few, rng), Error);
}
