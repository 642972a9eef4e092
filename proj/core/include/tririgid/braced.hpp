#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tririgid/certificate.hpp"
#include "tririgid/field.hpp"
#include "tririgid/rigidity.hpp"
#include "tririgid/triangulation.hpp"

namespace tririgid {

/// A plane triangulation plus extra edges (braces) outside E(T).
class BracedTriangulation {
 public:
  /// Throws NotSimple for loops, out-of-range endpoints, repeated braces or
  /// braces parallel to triangulation edges.
  BracedTriangulation(PlaneTriangulation t, std::vector<Edge> braces);

  const PlaneTriangulation& triangulation() const noexcept { return t_; }
  const std::vector<Edge>& braces() const noexcept { return braces_; }  // sorted
  /// The union graph T + B.
  const SimpleGraph& graph() const noexcept { return graph_; }
  int num_vertices() const noexcept { return t_.num_vertices(); }

 private:
  PlaneTriangulation t_;
  std::vector<Edge> braces_;
  SimpleGraph graph_;
};

struct BracedContraction {
  BracedTriangulation result;
  Relabel relabel;
};

/// G/e: contracts a triangulation edge and maps the braces along, dropping
/// loops, duplicates and braces that became parallel to triangulation edges.
BracedContraction contract_braced(const BracedTriangulation& g, const Edge& e);

/// G - x for a vertex of degree 3 in T; braces at x disappear.
BracedContraction remove_braced_vertex(const BracedTriangulation& g, Vertex x);

/// A framework of the braced graph in which the endpoints of some edge share a
/// point, reproducible from `witness.seed`. `chain` narrates the construction.
struct CoincidentRealization {
  Framework<PrimeField> framework;
  RankWitness witness;
  std::vector<std::string> chain;
};

/// Inductive construction for a 4-connected T with exactly one brace: contract
/// a contractible edge away from uv and the brace's 2-paths, realise the
/// smaller graph, then split the vertex back. Throws PreconditionViolated on
/// bad input and WitnessFailed if a full-rank realisation does not come out.
CoincidentRealization coincident_witness_one_brace(const BracedTriangulation& g, const Edge& uv, RandomSource& rng);
CoincidentRealization coincident_witness_one_brace_at(const BracedTriangulation& g, const Edge& uv,
                                                      std::uint64_t seed);

/// Canonical data for the separating-triangle case with a 4-connected inner
/// block; nullopt when the case does not apply.
std::optional<GlueData> glue_data(const BracedTriangulation& g);

/// Glues a coincident realisation of T1 + xz to the rest of T along the
/// triangle, then adds the other braces. Full rank certifies that G has a
/// realisation coincident at data.edge.
CoincidentRealization glue_realization_at(const BracedTriangulation& g, const GlueData& data, std::uint64_t seed);

enum class VerdictReason { NotFourConnected, NoBraces, Certified };

std::string to_string(VerdictReason r);

struct Verdict {
  bool globally_rigid = false;
  VerdictReason reason = VerdictReason::NotFourConnected;
  std::optional<Certificate> certificate;
  std::vector<std::string> trace;  // one line per reduction, naming the branch taken
};

/// Decides global rigidity in 3-space of a braced triangulation on at least
/// five vertices. A positive verdict carries a certificate that has already
/// been replayed. Throws CertificationFailed if a step that must succeed
/// does not.
Verdict decide_braced(const BracedTriangulation& g, RandomSource& rng, int trials = 3);

/// Replays every step against the braced structure; never throws on bad
/// certificates.
VerifyResult verify_certificate(const Certificate& c, const BracedTriangulation& target, RandomSource& rng,
                                int trials = 3);

}  // namespace tririgid
