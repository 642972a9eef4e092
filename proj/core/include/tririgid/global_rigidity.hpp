#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tririgid/certificate.hpp"
#include "tririgid/rigidity.hpp"

namespace tririgid {

/// Basis of the equilibrium stresses: the kernel of the transposed rigidity
/// matrix, indexed like graph.edges().
template <class Field>
std::vector<std::vector<typename Field::Element>> stress_basis(const Framework<Field>& fw) {
  return kernel_basis(rigidity_matrix(fw).transpose());
}

/// Omega[u][v] = -w_uv on edges, row sums zero. Throws NotEquilibrium unless
/// the stress balances at every vertex.
template <class Field>
Matrix<Field> stress_matrix_of(const Framework<Field>& fw, std::span<const typename Field::Element> stress) {
  const auto edges = fw.graph.edges();
  const Field& f = fw.field;
  if (stress.size() != edges.size()) throw Error(ErrorKind::NotEquilibrium, "stress length differs from edge count");
  const auto residual = rigidity_matrix(fw).transpose().multiply(stress);
  for (const auto& r : residual)
    if (!f.is_zero(r)) throw Error(ErrorKind::NotEquilibrium, "stress is not in equilibrium");
  const auto n = static_cast<std::size_t>(fw.num_vertices());
  Matrix<Field> omega(f, n, n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto u = static_cast<std::size_t>(edges[i].u);
    const auto v = static_cast<std::size_t>(edges[i].v);
    omega(u, v) = f.neg(stress[i]);
    omega(v, u) = f.neg(stress[i]);
    omega(u, u) = f.add(omega(u, u), stress[i]);
    omega(v, v) = f.add(omega(v, v), stress[i]);
  }
  return omega;
}

enum class GhtVerdict { GloballyRigid, NotGloballyRigid, Inconclusive };

std::string to_string(GhtVerdict v);

struct GhtResult {
  GhtVerdict verdict = GhtVerdict::Inconclusive;
  std::string reason;
  std::uint64_t seed = 0;  // trial that produced the reported ranks
  std::uint64_t prime = 0;
  std::size_t rigidity_rank = 0;
  std::size_t stress_dim = 0;
  std::size_t stress_rank = 0;
};

/// Randomised stress-matrix test: rigid with a stress of rank n-d-1 means
/// globally rigid; n <= d+1 is decided by completeness.
GhtResult ght_check(const SimpleGraph& g, int d, RandomSource& rng, int trials = 3,
                    const PrimeField& field = PrimeField());

struct NecessaryConditions {
  bool holds = false;
  std::vector<std::string> reasons;  // one line per failed condition
};

/// (d+1)-connectivity and redundant rigidity.
NecessaryConditions hendrickson_necessary(const SimpleGraph& g, int d, RandomSource& rng, int trials = 3);

/// Certificate for K_{d+2} (or any complete graph on d+2 vertices).
Certificate base_certificate(const SimpleGraph& g, int d);

/// Contract step from g down to g/e, carrying a coincident witness at e's
/// endpoints. Throws CoincidentRankDeficient if no trial reaches full rank.
CertificateStep make_contract_step(const SimpleGraph& g, const Edge& e, int d, RandomSource& rng, int trials);

/// Extends a certificate for g to one for the split graph. Throws InvalidSplit,
/// PreconditionViolated (certificate is for another graph) or
/// CoincidentRankDeficient.
Certificate certify_split_global(const Certificate& parent, const SimpleGraph& g, const VertexSplit& split, int d,
                                 RandomSource& rng, int trials = 3);

}  // namespace tririgid
