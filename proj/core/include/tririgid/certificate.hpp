#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tririgid/graph.hpp"
#include "tririgid/rigidity.hpp"

namespace tririgid {

enum class StepKind { BaseComplete, Contract, Glue, VertexAddition };

/// JSON names: "base_k5", "contract", "glue", "vertex_addition".
std::string to_string(StepKind k);

/// Data of a gluing step: the minimal separating triangle, the vertices inside
/// it, the brace xy leaving it, the triangle vertex z not adjacent to x, and
/// the interior edge whose coincident realisation the gluing produces.
struct GlueData {
  std::array<Vertex, 3> triangle{};
  std::vector<Vertex> inside;
  Vertex x = -1;
  Vertex y = -1;
  Vertex z = -1;
  Edge edge;

  friend bool operator==(const GlueData&, const GlueData&) = default;
};

/// One reduction from the graph hashed by graph_hash to a smaller one. Steps
/// run from the target down to the complete base graph.
struct CertificateStep {
  StepKind kind = StepKind::BaseComplete;
  std::uint64_t graph_hash = 0;
  std::optional<Edge> edge;              // Contract
  std::uint64_t child_hash = 0;          // Contract, VertexAddition
  std::optional<RankWitness> witness;    // Contract, Glue
  std::vector<Vertex> iso;               // BaseComplete: vertex -> base label
  Vertex vertex = -1;                    // VertexAddition
  std::vector<Vertex> neighbors;         // VertexAddition
  std::optional<GlueData> glue;          // Glue

  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

struct Certificate {
  int dim = 3;
  std::uint64_t target_hash = 0;
  std::vector<CertificateStep> steps;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

nlohmann::json to_json(const Certificate& c);
/// Throws ParseError on malformed input.
Certificate certificate_from_json(const nlohmann::json& j);

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

/// Replays the coincident witness of a contract step on g: the recorded seed
/// must reproduce rank and digest, the rank must be full, and a fresh seed
/// (over a fresh prime) must reach full rank within `trials` draws.
VerifyResult check_coincident_witness(const SimpleGraph& g, const Edge& e, const RankWitness& w, int d,
                                      RandomSource& rng, int trials);

/// Replays a certificate over plain graphs (contract and vertex-addition
/// steps); glue steps need the braced verifier.
VerifyResult verify_graph_certificate(const Certificate& c, const SimpleGraph& target, RandomSource& rng,
                                      int trials = 3);

}  // namespace tririgid
