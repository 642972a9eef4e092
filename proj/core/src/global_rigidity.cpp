#include "tririgid/global_rigidity.hpp"

#include <algorithm>

#include "tririgid/error.hpp"

namespace tririgid {

std::string to_string(GhtVerdict v) {
  switch (v) {
    case GhtVerdict::GloballyRigid: return "GloballyRigid";
    case GhtVerdict::NotGloballyRigid: return "NotGloballyRigid";
    case GhtVerdict::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

GhtResult ght_check(const SimpleGraph& g, int d, RandomSource& rng, int trials, const PrimeField& field) {
  GhtResult out;
  out.prime = field.modulus();
  if (trials <= 0) {
    out.reason = "no trials requested";
    return out;
  }
  const int n = g.num_vertices();
  const std::size_t full = max_rigidity_rank(n, d);
  const std::size_t target = n >= d + 2 ? static_cast<std::size_t>(n - d - 1) : 0;

  bool any_rigid = false;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = rng.next();
    RandomSource sub(seed);
    auto fw = make_framework(g, d, field, random_config(n, d, field, sub));
    const auto r = rigidity_matrix(fw);
    const std::size_t rk = rank(r);
    // Keep the most informative trial: rigid beats non-rigid, then stress rank.
    auto record = [&](std::size_t sdim, std::size_t srank) {
      const bool better = t == 0 || rk > out.rigidity_rank || (rk == out.rigidity_rank && srank > out.stress_rank);
      if (better) {
        out.seed = seed;
        out.rigidity_rank = rk;
        out.stress_dim = sdim;
        out.stress_rank = srank;
      }
    };
    if (rk != full) {
      record(g.num_edges() - rk, 0);
      continue;
    }
    any_rigid = true;
    if (n <= d + 1) {
      record(g.num_edges() - rk, 0);
      break;
    }
    const auto basis = kernel_basis(r.transpose());
    if (basis.empty()) {
      record(0, 0);
      break;  // the stress space is generically zero: no trial can do better
    }
    std::vector<PrimeField::Element> omega(basis.front().size(), field.zero());
    for (const auto& b : basis) {
      const auto c = field.random(sub);
      for (std::size_t i = 0; i < omega.size(); ++i) omega[i] = field.add(omega[i], field.mul(c, b[i]));
    }
    const std::size_t srank = rank(stress_matrix_of(fw, std::span<const PrimeField::Element>(omega)));
    record(basis.size(), srank);
    if (srank == target) break;
  }

  if (n <= d + 1) {
    out.verdict = g.is_complete() ? GhtVerdict::GloballyRigid : GhtVerdict::NotGloballyRigid;
    out.reason = g.is_complete() ? "complete graph on at most d+1 vertices" : "incomplete graph on at most d+1 vertices";
  } else if (!any_rigid) {
    out.verdict = GhtVerdict::NotGloballyRigid;
    out.reason = "not rigid: rank " + std::to_string(out.rigidity_rank) + " < " + std::to_string(full);
  } else if (out.stress_dim == 0) {
    out.verdict = GhtVerdict::NotGloballyRigid;
    out.reason = "no equilibrium stress (isostatic)";
  } else if (out.stress_rank == target) {
    out.verdict = GhtVerdict::GloballyRigid;
    out.reason = "stress matrix rank " + std::to_string(target) + " = n-d-1";
  } else {
    out.verdict = GhtVerdict::NotGloballyRigid;
    out.reason = "stress matrix rank " + std::to_string(out.stress_rank) + " < n-d-1 = " + std::to_string(target);
  }
  return out;
}

NecessaryConditions hendrickson_necessary(const SimpleGraph& g, int d, RandomSource& rng, int trials) {
  NecessaryConditions out;
  const int n = g.num_vertices();
  if (!is_k_connected(g, d + 1)) out.reasons.push_back("not " + std::to_string(d + 1) + "-connected");
  const std::size_t full = max_rigidity_rank(n, d);
  if (generic_rank(g, d, rng, trials) != full) {
    out.reasons.push_back("not rigid");
  } else {
    for (const Edge& e : g.edges()) {
      SimpleGraph h = g;
      h.remove_edge(e.u, e.v);
      if (generic_rank(h, d, rng, trials) != full) {
        out.reasons.push_back("not redundantly rigid: removing " + to_string(e) + " loses rigidity");
        break;
      }
    }
  }
  out.holds = out.reasons.empty();
  return out;
}

Certificate base_certificate(const SimpleGraph& g, int d) {
  const int n = g.num_vertices();
  if (n != d + 2 || !g.is_complete()) {
    throw Error(ErrorKind::PreconditionViolated, "base certificate needs the complete graph on d+2 vertices");
  }
  CertificateStep s;
  s.kind = StepKind::BaseComplete;
  s.graph_hash = canonical_hash(g);
  for (Vertex v = 0; v < n; ++v) s.iso.push_back(v);
  return {d, s.graph_hash, {s}};
}

CertificateStep make_contract_step(const SimpleGraph& g, const Edge& e, int d, RandomSource& rng, int trials) {
  if (!g.has_edge(e.u, e.v)) throw Error(ErrorKind::NotAnEdge, to_string(e));
  const CoincidentSpec spec{e.u, e.v};
  const RankWitness w = coincident_rank_witness(g, spec, d, rng, std::max(trials, 1));
  if (w.rank != max_rigidity_rank(g.num_vertices(), d)) {
    throw Error(ErrorKind::CoincidentRankDeficient,
                "coincident rank " + std::to_string(w.rank) + " at " + to_string(e) + " is below full rank");
  }
  CertificateStep s;
  s.kind = StepKind::Contract;
  s.graph_hash = canonical_hash(g);
  s.edge = e;
  s.child_hash = canonical_hash(contract_edge(g, e.u, e.v).graph);
  s.witness = w;
  return s;
}

Certificate certify_split_global(const Certificate& parent, const SimpleGraph& g, const VertexSplit& split, int d,
                                 RandomSource& rng, int trials) {
  if (parent.target_hash != canonical_hash(g)) {
    throw Error(ErrorKind::PreconditionViolated, "certificate does not belong to the graph being split");
  }
  if (parent.dim != d) throw Error(ErrorKind::PreconditionViolated, "certificate dimension differs");
  const SimpleGraph split_graph = apply_vertex_split(g, split, d);
  const Edge e(split.v, g.num_vertices());
  Certificate out;
  out.dim = d;
  out.target_hash = canonical_hash(split_graph);
  out.steps.push_back(make_contract_step(split_graph, e, d, rng, trials));
  out.steps.insert(out.steps.end(), parent.steps.begin(), parent.steps.end());
  return out;
}

}  // namespace tririgid
