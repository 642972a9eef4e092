#include <gtest/gtest.h>

#include "corpus.hpp"
#include "tririgid/error.hpp"
#include "tririgid/global_rigidity.hpp"

using namespace tririgid;

namespace {

SimpleGraph octahedron_plus_brace() {
  const PlaneTriangulation o = octahedron();
  SimpleGraph g = o.graph();
  const Edge b = corpus::non_edges(o).front();
  g.add_edge(b.u, b.v);
  return g;
}

}  // namespace

TEST(Ght, CompleteGraphsOnDPlusTwoVertices) {
  for (int d = 1; d <= 3; ++d) {
    RandomSource rng(static_cast<std::uint64_t>(d));
    const GhtResult r = ght_check(complete_graph(d + 2), d, rng);
    EXPECT_EQ(r.verdict, GhtVerdict::GloballyRigid) << d;
    EXPECT_EQ(r.stress_rank, 1u) << d;
  }
}

TEST(Ght, StressRanks) {
  RandomSource rng(21);
  const GhtResult k5 = ght_check(complete_graph(5), 3, rng);
  EXPECT_EQ(k5.stress_dim, 1u);
  EXPECT_EQ(k5.stress_rank, 1u);
  const GhtResult ob = ght_check(octahedron_plus_brace(), 3, rng);
  EXPECT_EQ(ob.verdict, GhtVerdict::GloballyRigid);
  EXPECT_EQ(ob.stress_rank, 2u);
  EXPECT_EQ(ob.rigidity_rank, 12u);
}

TEST(Ght, IsostaticTriangulationsHaveNoStress) {
  RandomSource rng(22);
  for (const auto& [name, t] : corpus::four_connected(10)) {
    const GhtResult r = ght_check(t.graph(), 3, rng);
    EXPECT_EQ(r.verdict, GhtVerdict::NotGloballyRigid) << name;
    EXPECT_EQ(r.stress_dim, 0u) << name;
  }
}

TEST(Ght, SmallGraphsDecidedByCompleteness) {
  RandomSource rng(23);
  EXPECT_EQ(ght_check(complete_graph(4), 3, rng).verdict, GhtVerdict::GloballyRigid);
  SimpleGraph k4 = complete_graph(4);
  k4.remove_edge(0, 1);
  EXPECT_EQ(ght_check(k4, 3, rng).verdict, GhtVerdict::NotGloballyRigid);
  EXPECT_EQ(ght_check(complete_graph(2), 3, rng).verdict, GhtVerdict::GloballyRigid);
}

TEST(Ght, NonRigidGraph) {
  RandomSource rng(24);
  SimpleGraph g = complete_graph(6);
  for (Vertex v = 1; v < 6; ++v) g.remove_edge(0, v);
  g.add_edge(0, 1);
  const GhtResult r = ght_check(g, 3, rng);
  EXPECT_EQ(r.verdict, GhtVerdict::NotGloballyRigid);
  EXPECT_LT(r.rigidity_rank, 12u);
}

TEST(Ght, ZeroTrialsIsInconclusive) {
  RandomSource rng(25);
  EXPECT_EQ(ght_check(complete_graph(5), 3, rng, 0).verdict, GhtVerdict::Inconclusive);
}

TEST(Ght, WitnessReproducible) {
  RandomSource a(26), b(26);
  const GhtResult x = ght_check(octahedron_plus_brace(), 3, a);
  const GhtResult y = ght_check(octahedron_plus_brace(), 3, b);
  EXPECT_EQ(x.seed, y.seed);
  EXPECT_EQ(x.prime, PrimeField::kDefaultPrime);
}

TEST(Stress, BasisVectorsAreEquilibria) {
  RandomSource rng(27);
  const PrimeField f;
  const SimpleGraph g = octahedron_plus_brace();
  const auto fw = make_framework(g, 3, f, random_config(6, 3, f, rng));
  const auto basis = stress_basis(fw);
  ASSERT_EQ(basis.size(), 1u);  // 13 edges, rank 12
  const auto rt = rigidity_matrix(fw).transpose();
  for (const auto x : rt.multiply(basis[0])) EXPECT_EQ(x, 0u);
  const auto omega = stress_matrix_of(fw, std::span<const std::uint64_t>(basis[0]));
  EXPECT_EQ(rank(omega), 2u);
  std::vector<std::uint64_t> bogus(basis[0].size(), 1);
  EXPECT_THROW(stress_matrix_of(fw, std::span<const std::uint64_t>(bogus)), Error);
}

TEST(Hendrickson, NecessaryConditions) {
  RandomSource rng(28);
  EXPECT_TRUE(hendrickson_necessary(complete_graph(5), 3, rng).holds);
  EXPECT_TRUE(hendrickson_necessary(octahedron_plus_brace(), 3, rng).holds);
  const NecessaryConditions o = hendrickson_necessary(octahedron().graph(), 3, rng);
  EXPECT_FALSE(o.holds);
  ASSERT_EQ(o.reasons.size(), 1u);
  EXPECT_NE(o.reasons[0].find("redundantly"), std::string::npos);
  EXPECT_FALSE(hendrickson_necessary(stacked(7).graph(), 3, rng).holds);
}

TEST(Certificates, BaseAndSplit) {
  RandomSource rng(29);
  const Certificate base = base_certificate(complete_graph(5), 3);
  ASSERT_EQ(base.steps.size(), 1u);
  EXPECT_EQ(base.steps[0].kind, StepKind::BaseComplete);
  EXPECT_EQ(base.steps[0].iso, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(verify_graph_certificate(base, complete_graph(5), rng).ok);
  EXPECT_THROW(base_certificate(complete_graph(6), 3), Error);

  const VertexSplit split{0, {1, 2, 3}, {2, 3, 4}};
  const Certificate c = certify_split_global(base, complete_graph(5), split, 3, rng, 3);
  const SimpleGraph g = apply_vertex_split(complete_graph(5), split, 3);
  EXPECT_EQ(c.steps.size(), 2u);
  EXPECT_EQ(c.target_hash, canonical_hash(g));
  EXPECT_TRUE(verify_graph_certificate(c, g, rng).ok);
  RandomSource other(30);
  EXPECT_EQ(ght_check(g, 3, other).verdict, GhtVerdict::GloballyRigid);
}

TEST(Certificates, ContractStepWitnessReplays) {
  RandomSource rng(31);
  const SimpleGraph g = octahedron_plus_brace();
  const Edge e = octahedron().graph().edges().front();
  const CertificateStep s = make_contract_step(g, e, 3, rng, 3);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_EQ(s.witness->rank, 12u);
  EXPECT_TRUE(check_coincident_witness(g, e, *s.witness, 3, rng, 3).ok);
  RankWitness bad = *s.witness;
  bad.digest ^= 1;
  EXPECT_FALSE(check_coincident_witness(g, e, bad, 3, rng, 3).ok);
  bad = *s.witness;
  bad.seed += 1;
  EXPECT_FALSE(check_coincident_witness(g, e, bad, 3, rng, 3).ok);
  // The bare octahedron is never coincident-rigid.
  EXPECT_THROW(make_contract_step(octahedron().graph(), octahedron().graph().edges().front(), 3, rng, 3), Error);
}
