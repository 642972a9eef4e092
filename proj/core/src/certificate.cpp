#include "tririgid/certificate.hpp"

#include <algorithm>

#include "tririgid/error.hpp"

namespace tririgid {

using nlohmann::json;

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::BaseComplete: return "base_k5";
    case StepKind::Contract: return "contract";
    case StepKind::Glue: return "glue";
    case StepKind::VertexAddition: return "vertex_addition";
  }
  return "unknown";
}

namespace {

StepKind step_kind_from(const std::string& s) {
  for (StepKind k : {StepKind::BaseComplete, StepKind::Contract, StepKind::Glue, StepKind::VertexAddition})
    if (to_string(k) == s) return k;
  throw Error(ErrorKind::ParseError, "unknown certificate step kind '" + s + "'");
}

std::uint64_t parse_hex(const json& j, const char* what) {
  if (!j.is_string()) throw Error(ErrorKind::ParseError, std::string(what) + " must be a hex string");
  const auto s = j.get<std::string>();
  if (s.size() != 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos) {
    throw Error(ErrorKind::ParseError, std::string(what) + " must be 16 lowercase hex digits");
  }
  return std::stoull(s, nullptr, 16);
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

Edge edge_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw Error(ErrorKind::ParseError, "edge must be [u,v]");
  }
  return Edge(j[0].get<Vertex>(), j[1].get<Vertex>());
}

json witness_json(const RankWitness& w) {
  return {{"seed", w.seed}, {"prime", w.prime}, {"rank", w.rank}, {"digest", to_hex64(w.digest)}};
}

RankWitness witness_from(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "witness must be an object");
  RankWitness w;
  w.seed = j.at("seed").get<std::uint64_t>();
  w.prime = j.at("prime").get<std::uint64_t>();
  w.rank = j.at("rank").get<std::size_t>();
  w.digest = parse_hex(j.at("digest"), "witness digest");
  return w;
}

/// Field the witness was computed over; nullopt if the prime is not admissible.
std::optional<PrimeField> field_of(const RankWitness& w) {
  try {
    return PrimeField(w.prime);
  } catch (const Error&) {
    return std::nullopt;
  }
}

VerifyResult fail(std::size_t index, const std::string& why) {
  return {false, "step " + std::to_string(index) + ": " + why};
}

}  // namespace

json to_json(const Certificate& c) {
  json steps = json::array();
  for (const CertificateStep& s : c.steps) {
    json j{{"kind", to_string(s.kind)}, {"graph_hash", to_hex64(s.graph_hash)}};
    switch (s.kind) {
      case StepKind::BaseComplete: j["iso"] = s.iso; break;
      case StepKind::Contract:
        j["edge"] = edge_json(*s.edge);
        j["child_hash"] = to_hex64(s.child_hash);
        j["witness"] = witness_json(*s.witness);
        break;
      case StepKind::Glue: {
        const GlueData& g = *s.glue;
        j["triangle"] = g.triangle;
        j["inside"] = g.inside;
        j["x"] = g.x;
        j["y"] = g.y;
        j["z"] = g.z;
        j["edge"] = edge_json(g.edge);
        j["witness"] = witness_json(*s.witness);
        break;
      }
      case StepKind::VertexAddition:
        j["vertex"] = s.vertex;
        j["neighbors"] = s.neighbors;
        j["child_hash"] = to_hex64(s.child_hash);
        break;
    }
    steps.push_back(std::move(j));
  }
  return {{"dim", c.dim}, {"target_hash", to_hex64(c.target_hash)}, {"steps", std::move(steps)}};
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate c;
    c.dim = j.at("dim").get<int>();
    c.target_hash = parse_hex(j.at("target_hash"), "target_hash");
    for (const json& js : j.at("steps")) {
      CertificateStep s;
      s.kind = step_kind_from(js.at("kind").get<std::string>());
      s.graph_hash = parse_hex(js.at("graph_hash"), "graph_hash");
      switch (s.kind) {
        case StepKind::BaseComplete: s.iso = js.at("iso").get<std::vector<Vertex>>(); break;
        case StepKind::Contract:
          s.edge = edge_from(js.at("edge"));
          s.child_hash = parse_hex(js.at("child_hash"), "child_hash");
          s.witness = witness_from(js.at("witness"));
          break;
        case StepKind::Glue: {
          GlueData g;
          g.triangle = js.at("triangle").get<std::array<Vertex, 3>>();
          g.inside = js.at("inside").get<std::vector<Vertex>>();
          g.x = js.at("x").get<Vertex>();
          g.y = js.at("y").get<Vertex>();
          g.z = js.at("z").get<Vertex>();
          g.edge = edge_from(js.at("edge"));
          s.glue = std::move(g);
          s.witness = witness_from(js.at("witness"));
          break;
        }
        case StepKind::VertexAddition:
          s.vertex = js.at("vertex").get<Vertex>();
          s.neighbors = js.at("neighbors").get<std::vector<Vertex>>();
          s.child_hash = parse_hex(js.at("child_hash"), "child_hash");
          break;
      }
      c.steps.push_back(std::move(s));
    }
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed certificate: ") + e.what());
  }
}

VerifyResult check_coincident_witness(const SimpleGraph& g, const Edge& e, const RankWitness& w, int d,
                                      RandomSource& rng, int trials) {
  const auto field = field_of(w);
  if (!field) return {false, "witness prime is not an admissible prime"};
  const CoincidentSpec spec{e.u, e.v};
  const RankWitness replay = coincident_witness_at(g, spec, d, w.seed, *field);
  if (replay.rank != w.rank) {
    return {false, "witness rank " + std::to_string(w.rank) + " does not replay (got " + std::to_string(replay.rank) + ")"};
  }
  if (replay.digest != w.digest) return {false, "witness digest does not match the configuration drawn from its seed"};
  const std::size_t full = max_rigidity_rank(g.num_vertices(), d);
  if (w.rank != full) return {false, "witness rank is below " + std::to_string(full)};
  const PrimeField fresh(random_prime(rng));
  if (coincident_rank(g, spec, d, rng, trials, fresh) != full) {
    return {false, "fresh coincident configurations stay rank deficient"};
  }
  return {true, {}};
}

VerifyResult verify_graph_certificate(const Certificate& c, const SimpleGraph& target, RandomSource& rng, int trials) {
  if (c.target_hash != canonical_hash(target)) return {false, "target hash does not match the graph"};
  if (c.steps.empty()) return {false, "certificate has no steps"};
  SimpleGraph cur = target;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const CertificateStep& s = c.steps[i];
    if (s.graph_hash != canonical_hash(cur)) return fail(i, "graph hash does not match the replayed graph");
    const bool last = i + 1 == c.steps.size();
    switch (s.kind) {
      case StepKind::BaseComplete: {
        if (!last) return fail(i, "base step before the end of the chain");
        const int n = cur.num_vertices();
        if (n != c.dim + 2 || !cur.is_complete()) return fail(i, "base graph is not complete on d+2 vertices");
        std::vector<Vertex> identity(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) identity[static_cast<std::size_t>(v)] = v;
        if (s.iso != identity) return fail(i, "base isomorphism is not the canonical labelling");
        return {true, {}};
      }
      case StepKind::Contract: {
        if (!s.edge || !s.witness) return fail(i, "contract step is missing its edge or witness");
        const Edge e = *s.edge;
        if (e.u < 0 || e.v >= cur.num_vertices() || !cur.has_edge(e.u, e.v)) return fail(i, "contracted pair is not an edge");
        const auto r = check_coincident_witness(cur, e, *s.witness, c.dim, rng, trials);
        if (!r) return fail(i, r.diagnostic);
        SimpleGraph child = contract_edge(cur, e.u, e.v).graph;
        if (canonical_hash(child) != s.child_hash) return fail(i, "child hash does not match the contraction");
        cur = std::move(child);
        break;
      }
      case StepKind::VertexAddition: {
        const Vertex x = s.vertex;
        if (x < 0 || x >= cur.num_vertices()) return fail(i, "added vertex out of range");
        if (s.neighbors != cur.neighbors(x)) return fail(i, "neighbour list does not match the graph");
        if (static_cast<int>(s.neighbors.size()) < c.dim + 1) return fail(i, "added vertex has fewer than d+1 neighbours");
        SimpleGraph child = remove_vertex(cur, x).graph;
        if (canonical_hash(child) != s.child_hash) return fail(i, "child hash does not match the vertex deletion");
        cur = std::move(child);
        break;
      }
      case StepKind::Glue:
        return fail(i, "glue steps need the braced triangulation to replay");
    }
  }
  return {false, "chain does not end in a base step"};
}

}  // namespace tririgid
