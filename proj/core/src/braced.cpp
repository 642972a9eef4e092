#include "tririgid/braced.hpp"

#include <algorithm>

#include "tririgid/contractible.hpp"
#include "tririgid/error.hpp"
#include "tririgid/global_rigidity.hpp"

namespace tririgid {

namespace {

constexpr int kDim = 3;

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

SimpleGraph union_graph(const PlaneTriangulation& t, const std::vector<Edge>& braces) {
  SimpleGraph g = t.graph();
  for (const Edge& b : braces) {
    if (b.u == b.v || b.u < 0 || b.v >= t.num_vertices()) throw Error(ErrorKind::NotSimple, "brace " + to_string(b) + " is invalid");
    if (g.has_edge(b.u, b.v)) throw Error(ErrorKind::NotSimple, "brace " + to_string(b) + " duplicates an edge");
    g.add_edge(b.u, b.v);
  }
  return g;
}

std::vector<Edge> map_braces(const std::vector<Edge>& braces, const Relabel& relabel, const SimpleGraph& tri) {
  std::vector<Edge> out;
  for (const Edge& b : braces) {
    const Vertex a = relabel[idx(b.u)];
    const Vertex c = relabel[idx(b.v)];
    if (a < 0 || c < 0 || a == c || tri.has_edge(a, c)) continue;
    out.emplace_back(a, c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const PrimeField& default_field() {
  static const PrimeField f;
  return f;
}

RankWitness witness_of(const Framework<PrimeField>& fw, std::uint64_t seed) {
  return {seed, fw.field.modulus(), framework_rank(fw), config_digest(fw.field, fw.coords)};
}

/// Coincident configurations of g at spec, resampled until full rank.
Framework<PrimeField> sample_coincident(const SimpleGraph& g, const CoincidentSpec& spec, RandomSource& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto fw = make_framework(g, kDim, default_field(), coincident_config(g.num_vertices(), kDim, spec, default_field(), rng));
    if (is_inf_rigid(fw)) return fw;
  }
  throw Error(ErrorKind::WitnessFailed, "no full-rank coincident configuration found by sampling");
}

/// Undoes the contraction of e: the merged vertex splits into `keep`, which
/// stays on the merged vertex's point, and the other endpoint of e.
Framework<PrimeField> lift_split(const Framework<PrimeField>& child, const SimpleGraph& parent, const Edge& e,
                                 const Relabel& relabel, Vertex keep, RandomSource& rng) {
  const Vertex other = e.other(keep);
  const Vertex m = relabel[idx(keep)];
  VertexSplit split;
  split.v = m;
  for (Vertex w : parent.neighbors(keep))
    if (w != other) split.neighbors_v1.push_back(relabel[idx(w)]);
  for (Vertex w : parent.neighbors(other))
    if (w != keep) split.neighbors_v2.push_back(relabel[idx(w)]);
  Framework<PrimeField> grown = realize_vertex_split(child, split, rng);
  std::vector<Vertex> perm(idx(parent.num_vertices()), -1);
  for (Vertex p = 0; p < parent.num_vertices(); ++p)
    if (p != other) perm[idx(relabel[idx(p)])] = p;
  perm[idx(parent.num_vertices() - 1)] = other;
  Framework<PrimeField> out = permute_framework(grown, perm);
  if (!(out.graph == parent)) throw Error(ErrorKind::WitnessFailed, "lifted split does not reproduce the parent graph");
  return out;
}

Framework<PrimeField> realize_one_brace(const BracedTriangulation& g, const Edge& uv, RandomSource& rng,
                                        std::vector<std::string>& chain) {
  const PlaneTriangulation& t = g.triangulation();
  const Edge b = g.braces().front();
  const auto s = path2_edges(t, b.u, b.v);
  const CoincidentSpec spec{uv.u, uv.v};
  Edge e;
  if (t.num_vertices() == 6) {
    const auto faces = t.faces_at(uv);
    std::vector<Vertex> off;
    for (Vertex v = 0; v < 6; ++v) {
      bool hit = false;
      for (const Face& f : faces) hit = hit || std::find(f.begin(), f.end(), v) != f.end();
      if (!hit) off.push_back(v);
    }
    if (off.size() != 2 || !t.graph().has_edge(off[0], off[1])) {
      throw Error(ErrorKind::WitnessFailed, "octahedron faces at uv do not leave a single opposite edge");
    }
    e = Edge(off[0], off[1]);
    if (s.count(e)) {
      chain.push_back("octahedron, opposite edge " + to_string(e) + " on a brace 2-path: direct sampling");
      return sample_coincident(g.graph(), spec, rng);
    }
    chain.push_back("octahedron: contract opposite edge " + to_string(e) + " to K5");
  } else {
    const SearchResult r = find_contractible_lemma33(t, uv, b.u, b.v);
    e = r.edge;
    chain.push_back("contract " + to_string(e) + " (" + r.path + ")");
  }
  const BracedContraction c = contract_braced(g, e);
  if (c.result.braces().size() != 1) throw Error(ErrorKind::WitnessFailed, "brace did not survive the contraction");
  const Edge child_uv(c.relabel[idx(uv.u)], c.relabel[idx(uv.v)]);
  Framework<PrimeField> child_fw = [&] {
    if (c.result.num_vertices() == 5) {
      if (!c.result.graph().is_complete()) throw Error(ErrorKind::WitnessFailed, "octahedron contraction is not K5");
      return sample_coincident(c.result.graph(), {child_uv.u, child_uv.v}, rng);
    }
    return realize_one_brace(c.result, child_uv, rng, chain);
  }();
  const Vertex keep = e.contains(uv.u) ? uv.u : (e.contains(uv.v) ? uv.v : e.u);
  return lift_split(child_fw, g.graph(), e, c.relabel, keep, rng);
}

struct Reduction {
  std::vector<CertificateStep> steps;
  std::vector<std::string> trace;
};

void fail_cert(const std::string& what) { throw Error(ErrorKind::CertificationFailed, what); }

/// Minimal separating triangle (by inside size, then vertices) and the brace
/// leaving it, oriented x inside.
struct TriangleCase {
  CycleInfo c1;
  Vertex x = -1;
  Vertex y = -1;
};

std::optional<TriangleCase> triangle_case(const BracedTriangulation& g) {
  const auto tris = separating_triangles(g.triangulation());
  if (tris.empty()) return std::nullopt;
  const CycleInfo* best = &tris.front();
  for (const CycleInfo& c : tris)
    if (c.inside.size() < best->inside.size() || (c.inside.size() == best->inside.size() && c.vertices < best->vertices)) best = &c;
  TriangleCase out{*best, -1, -1};
  const auto& w = best->inside;
  auto in_w = [&](Vertex v) { return std::binary_search(w.begin(), w.end(), v); };
  auto in_t1 = [&](Vertex v) {
    return in_w(v) || std::find(best->vertices.begin(), best->vertices.end(), v) != best->vertices.end();
  };
  for (const Edge& b : g.braces()) {
    for (const auto& [x, y] : {std::pair{b.u, b.v}, std::pair{b.v, b.u}}) {
      if (!in_w(x) || in_t1(y)) continue;
      if (out.x < 0 || std::pair{x, y} < std::pair{out.x, out.y}) {
        out.x = x;
        out.y = y;
      }
    }
  }
  return out;
}

Reduction reduce(const BracedTriangulation& g, RandomSource& rng, int trials);

void append(Reduction& into, Reduction&& from) {
  into.steps.insert(into.steps.end(), from.steps.begin(), from.steps.end());
  into.trace.insert(into.trace.end(), from.trace.begin(), from.trace.end());
}

/// Contract step plus recursion on the child.
Reduction contract_and_recurse(const BracedTriangulation& g, const Edge& e, RandomSource& rng, int trials,
                               std::string note) {
  Reduction out;
  try {
    out.steps.push_back(make_contract_step(g.graph(), e, kDim, rng, trials));
  } catch (const Error& err) {
    fail_cert("contract " + to_string(e) + ": " + err.what());
  }
  out.trace.push_back("n=" + std::to_string(g.num_vertices()) + ": contract " + to_string(e) + " [" + note + "]");
  append(out, reduce(contract_braced(g, e).result, rng, trials));
  return out;
}

/// Cross-check that the constructive route of the inductive theorem reaches
/// full coincident rank for T plus the chosen brace.
void check_one_brace_route(const BracedTriangulation& g, const Edge& b, const Edge& e, RandomSource& rng) {
  const BracedTriangulation single(g.triangulation(), {b});
  try {
    const CoincidentRealization r = coincident_witness_one_brace(single, e, rng);
    if (r.witness.rank != max_rigidity_rank(g.num_vertices(), kDim)) fail_cert("one-brace construction rank deficient");
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::CertificationFailed) throw;
    fail_cert("one-brace construction at " + to_string(e) + " failed: " + err.what());
  }
}

/// A degree-3 vertex x of T sits inside the triangle of its neighbours for a
/// suitable choice of outer face, so every such x is a candidate. Contracting x
/// onto a triangle vertex z can still create a new 3-cut when another brace at
/// x turns into a triangulation edge, so each (x, z) is kept only if G/xz stays
/// 4-connected.
std::optional<Reduction> reduce_degree3(const BracedTriangulation& g, RandomSource& rng, int trials) {
  const int n = g.num_vertices();
  const SimpleGraph& G = g.graph();
  const PlaneTriangulation& t = g.triangulation();
  std::vector<Vertex> xs;
  for (Vertex v = 0; v < n; ++v)
    if (t.graph().degree(v) == 3) xs.push_back(v);

  for (const Vertex x : xs) {
    const auto& c1 = t.graph().neighbors(x);
    for (const Vertex y : G.neighbors(x)) {
      if (t.graph().has_edge(x, y)) continue;
      for (const Vertex z : c1) {
        if (t.graph().has_edge(z, y)) continue;
        const BracedContraction child = contract_braced(g, Edge(x, z));
        if (child.result.braces().empty() || !is_k_connected(child.result.graph(), 4)) continue;
        // Generic realisation of G - x with x dropped onto z.
        const GraphContraction minus = remove_vertex(G, x);
        bool ok = false;
        for (int attempt = 0; attempt < kMaxAttempts && !ok; ++attempt) {
          const auto base = random_config(n - 1, kDim, default_field(), rng);
          std::vector<PrimeField::Element> coords;
          for (Vertex v = 0; v < n; ++v) {
            const Vertex src = minus.relabel[idx(v == x ? z : v)];
            for (int k = 0; k < kDim; ++k) coords.push_back(base[idx(src) * kDim + static_cast<std::size_t>(k)]);
          }
          ok = is_inf_rigid(make_framework(G, kDim, default_field(), std::move(coords)));
        }
        if (!ok) fail_cert("x placed on z over a generic G-x is not infinitesimally rigid");
        return contract_and_recurse(g, Edge(x, z), rng, trials,
                                    "separating triangle, degree-3 vertex " + std::to_string(x) + " onto " + std::to_string(z));
      }
    }
  }

  for (const Vertex x : xs) {
    if (G.degree(x) < kDim + 1) continue;
    const BracedContraction child = remove_braced_vertex(g, x);
    if (child.result.braces().empty() || !is_k_connected(child.result.graph(), 4)) continue;
    Reduction out;
    CertificateStep s;
    s.kind = StepKind::VertexAddition;
    s.graph_hash = canonical_hash(G);
    s.vertex = x;
    s.neighbors = G.neighbors(x);
    s.child_hash = canonical_hash(child.result.graph());
    out.steps.push_back(std::move(s));
    out.trace.push_back("n=" + std::to_string(n) + ": delete degree-" + std::to_string(G.degree(x)) + " vertex " + std::to_string(x));
    append(out, reduce(child.result, rng, trials));
    return out;
  }
  return std::nullopt;
}

/// Minimal separating triangle with at least two inner vertices: glue a
/// coincident realisation of the inner block onto the rest, then contract the
/// block edge chosen by glue_data.
std::optional<Reduction> reduce_glue(const BracedTriangulation& g, RandomSource& rng, int trials) {
  const int n = g.num_vertices();
  const auto data = glue_data(g);
  if (!data || !is_k_connected(contract_braced(g, data->edge).result.graph(), 4)) return std::nullopt;
  CertificateStep s;
  s.kind = StepKind::Glue;
  s.graph_hash = canonical_hash(g.graph());
  s.glue = *data;
  const std::size_t full = max_rigidity_rank(n, kDim);
  for (int attempt = 0; attempt < std::max(trials, 1) && !s.witness; ++attempt) {
    try {
      const CoincidentRealization r = glue_realization_at(g, *data, rng.next());
      if (r.witness.rank == full) s.witness = r.witness;
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::PreconditionViolated) fail_cert(std::string("glue: ") + err.what());
    }
  }
  if (!s.witness) return std::nullopt;
  Reduction out;
  out.steps.push_back(std::move(s));
  append(out, contract_and_recurse(g, data->edge, rng, trials,
                                   "separating triangle, glued block of " + std::to_string(data->inside.size()) + " inner vertices"));
  return out;
}

/// Last resort: any triangulation edge on no separating triangle whose
/// contraction keeps G 4-connected and braced, provided the coincident
/// realisation at that edge has full rank.
std::optional<Reduction> reduce_any_edge(const BracedTriangulation& g, RandomSource& rng, int trials) {
  const PlaneTriangulation& t = g.triangulation();
  for (const Edge& e : t.graph().edges()) {
    if (t.graph().common_neighbors(e.u, e.v).size() != 2) continue;
    const BracedContraction child = contract_braced(g, e);
    if (child.result.braces().empty() || !is_k_connected(child.result.graph(), 4)) continue;
    CertificateStep s;
    try {
      s = make_contract_step(g.graph(), e, kDim, rng, trials);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::CoincidentRankDeficient) throw;
      continue;
    }
    Reduction out;
    out.steps.push_back(std::move(s));
    out.trace.push_back("n=" + std::to_string(g.num_vertices()) + ": contract " + to_string(e) +
                        " [fallback: first edge keeping G 4-connected]");
    append(out, reduce(child.result, rng, trials));
    return out;
  }
  return std::nullopt;
}

Reduction reduce(const BracedTriangulation& g, RandomSource& rng, int trials) {
  const int n = g.num_vertices();
  const SimpleGraph& G = g.graph();
  if (g.braces().empty()) fail_cert("reduction reached a graph without braces");
  if (n == 5) {
    if (!G.is_complete()) fail_cert("5-vertex braced triangulation is not K5");
    return {base_certificate(G, kDim).steps, {"n=5: base K5"}};
  }
  const PlaneTriangulation& t = g.triangulation();
  if (is_four_connected(t)) {
    const Edge b = g.braces().front();
    const auto s = path2_edges(t, b.u, b.v);
    if (n == 6) {
      std::optional<Edge> e;
      for (const Edge& c : t.graph().edges())
        if (!s.count(c)) {
          e = c;
          break;
        }
      if (!e) fail_cert("octahedron has no edge off the brace 2-paths");
      check_one_brace_route(g, b, *e, rng);
      return contract_and_recurse(g, *e, rng, trials, "octahedron, brace " + to_string(b));
    }
    const SearchResult r = find_contractible_lemma33(t, t.graph().edges().front(), b.u, b.v);
    check_one_brace_route(g, b, r.edge, rng);
    std::string note = "4-connected, brace " + to_string(b) + ", search " + r.path;
    for (const std::string& extra : r.notes) note += "; " + extra;
    return contract_and_recurse(g, r.edge, rng, trials, note);
  }

  if (auto r = reduce_degree3(g, rng, trials)) return std::move(*r);
  if (auto r = reduce_glue(g, rng, trials)) return std::move(*r);
  if (auto r = reduce_any_edge(g, rng, trials)) return std::move(*r);
  fail_cert("no reduction keeps the braced triangulation 4-connected");
  return {};
}

}  // namespace

BracedTriangulation::BracedTriangulation(PlaneTriangulation t, std::vector<Edge> braces)
    : t_(std::move(t)), braces_(std::move(braces)) {
  std::sort(braces_.begin(), braces_.end());
  graph_ = union_graph(t_, braces_);
}

BracedContraction contract_braced(const BracedTriangulation& g, const Edge& e) {
  TriangulationContraction c = contract(g.triangulation(), e);
  std::vector<Edge> braces = map_braces(g.braces(), c.relabel, c.result.graph());
  return {BracedTriangulation(std::move(c.result), std::move(braces)), std::move(c.relabel)};
}

BracedContraction remove_braced_vertex(const BracedTriangulation& g, Vertex x) {
  TriangulationContraction c = remove_degree3_vertex(g.triangulation(), x);
  std::vector<Edge> braces = map_braces(g.braces(), c.relabel, c.result.graph());
  return {BracedTriangulation(std::move(c.result), std::move(braces)), std::move(c.relabel)};
}

CoincidentRealization coincident_witness_one_brace_at(const BracedTriangulation& g, const Edge& uv, std::uint64_t seed) {
  const PlaneTriangulation& t = g.triangulation();
  if (g.braces().size() != 1) throw Error(ErrorKind::PreconditionViolated, "exactly one brace required");
  if (!is_four_connected(t)) throw Error(ErrorKind::PreconditionViolated, "triangulation must be 4-connected");
  if (!t.graph().has_edge(uv.u, uv.v)) throw Error(ErrorKind::NotAnEdge, to_string(uv));
  RandomSource rng(seed);
  CoincidentRealization out{Framework<PrimeField>{}, {}, {}};
  try {
    out.framework = realize_one_brace(g, uv, rng, out.chain);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::WitnessFailed) throw;
    throw Error(ErrorKind::WitnessFailed, std::string("coincident construction failed: ") + err.what());
  }
  out.witness = witness_of(out.framework, seed);
  if (out.witness.rank != max_rigidity_rank(t.num_vertices(), kDim)) {
    throw Error(ErrorKind::WitnessFailed, "coincident construction is rank deficient");
  }
  return out;
}

CoincidentRealization coincident_witness_one_brace(const BracedTriangulation& g, const Edge& uv, RandomSource& rng) {
  return coincident_witness_one_brace_at(g, uv, rng.next());
}

std::optional<GlueData> glue_data(const BracedTriangulation& g) {
  const PlaneTriangulation& t = g.triangulation();
  const auto tc = triangle_case(g);
  if (!tc || tc->x < 0 || tc->c1.inside.size() < 2) return std::nullopt;
  GlueData d;
  std::copy(tc->c1.vertices.begin(), tc->c1.vertices.end(), d.triangle.begin());
  d.inside = tc->c1.inside;
  d.x = tc->x;
  d.y = tc->y;
  for (Vertex c : d.triangle)
    if (!t.graph().has_edge(c, d.x) && (d.z < 0 || c < d.z)) d.z = c;
  if (d.z < 0) return std::nullopt;

  const NearTriangulation nt = induced_near_triangulation(t, tc->c1);
  const PlaneTriangulation t1 = nt.as_triangulation();
  if (!is_four_connected(t1)) return std::nullopt;
  auto on_rim = [&](Vertex v) { return std::find(d.triangle.begin(), d.triangle.end(), v) != d.triangle.end(); };
  if (t1.num_vertices() == 6) {
    std::optional<Edge> e;
    for (const Edge& le : t1.graph().edges()) {
      const Edge he(nt.to_host[idx(le.u)], nt.to_host[idx(le.v)]);
      if (on_rim(he.u) || on_rim(he.v) || he.contains(d.x)) continue;
      e = he;
      break;
    }
    if (!e) return std::nullopt;
    d.edge = *e;
  } else {
    Face rim{};
    for (std::size_t i = 0; i < 3; ++i) rim[i] = nt.boundary[i];
    const Edge le = find_contractible_avoiding_face(t1, rim).edge;
    d.edge = Edge(nt.to_host[idx(le.u)], nt.to_host[idx(le.v)]);
  }
  return d;
}

CoincidentRealization glue_realization_at(const BracedTriangulation& g, const GlueData& data, std::uint64_t seed) {
  const PlaneTriangulation& t = g.triangulation();
  const int n = t.num_vertices();
  const CycleInfo c1 = classify_cycle(t, data.triangle);
  if (c1.inside != data.inside) throw Error(ErrorKind::PreconditionViolated, "glue triangle does not enclose the recorded vertices");
  const NearTriangulation nt = induced_near_triangulation(t, c1);
  const PlaneTriangulation t1 = nt.as_triangulation();
  std::vector<Vertex> local(idx(n), -1);
  for (std::size_t i = 0; i < nt.to_host.size(); ++i) local[idx(nt.to_host[i])] = static_cast<Vertex>(i);
  auto loc = [&](Vertex v) {
    if (v < 0 || v >= n || local[idx(v)] < 0) throw Error(ErrorKind::PreconditionViolated, "glue vertex outside the inner block");
    return local[idx(v)];
  };
  const BracedTriangulation g1(t1, {Edge(loc(data.x), loc(data.z))});

  RandomSource rng(seed);
  CoincidentRealization out{Framework<PrimeField>{}, {}, {}};
  const Edge luv(loc(data.edge.u), loc(data.edge.v));
  const Framework<PrimeField> fw1 = realize_one_brace(g1, luv, rng, out.chain);

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (!std::binary_search(data.inside.begin(), data.inside.end(), v)) rest.push_back(v);
  InducedSubgraph g2 = induced_subgraph(t.graph(), rest);
  GlueInput in{nt.to_host, std::move(g2.graph), std::move(g2.to_host), data.x, data.y, data.z};
  Framework<PrimeField> glued = glue(fw1, in, rng);
  out.chain.push_back("glue along " + std::to_string(data.triangle[0]) + "," + std::to_string(data.triangle[1]) + "," +
                      std::to_string(data.triangle[2]));
  for (const Edge& b : g.braces())
    if (!glued.graph.has_edge(b.u, b.v)) glued.graph.add_edge(b.u, b.v);
  if (!(glued.graph == g.graph())) throw Error(ErrorKind::WitnessFailed, "glued graph differs from G");
  out.framework = std::move(glued);
  out.witness = witness_of(out.framework, seed);
  return out;
}

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::NotFourConnected: return "NotFourConnected";
    case VerdictReason::NoBraces: return "NoBraces";
    case VerdictReason::Certified: return "Certified";
  }
  return "unknown";
}

Verdict decide_braced(const BracedTriangulation& g, RandomSource& rng, int trials) {
  if (g.num_vertices() < 5) throw Error(ErrorKind::PreconditionViolated, "need at least five vertices");
  Verdict v;
  if (!is_k_connected(g.graph(), 4)) {
    v.reason = VerdictReason::NotFourConnected;
    return v;
  }
  if (g.braces().empty()) {
    v.reason = VerdictReason::NoBraces;
    return v;
  }
  Reduction r = reduce(g, rng, trials);
  Certificate cert{kDim, canonical_hash(g.graph()), std::move(r.steps)};
  RandomSource check_rng(mix_seed(rng.next(), 0x5eed));
  const VerifyResult ok = verify_certificate(cert, g, check_rng, trials);
  if (!ok) fail_cert("emitted certificate does not verify: " + ok.diagnostic);
  v.globally_rigid = true;
  v.reason = VerdictReason::Certified;
  v.certificate = std::move(cert);
  v.trace = std::move(r.trace);
  return v;
}

VerifyResult verify_certificate(const Certificate& c, const BracedTriangulation& target, RandomSource& rng, int trials) {
  auto fail = [](std::size_t i, const std::string& why) {
    return VerifyResult{false, "step " + std::to_string(i) + ": " + why};
  };
  try {
    if (c.dim != kDim) return {false, "braced certificates are three-dimensional"};
    if (c.target_hash != canonical_hash(target.graph())) return {false, "target hash does not match the graph"};
    if (c.steps.empty()) return {false, "certificate has no steps"};
    BracedTriangulation cur = target;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      const CertificateStep& s = c.steps[i];
      const SimpleGraph& G = cur.graph();
      if (s.graph_hash != canonical_hash(G)) return fail(i, "graph hash does not match the replayed graph");
      switch (s.kind) {
        case StepKind::BaseComplete: {
          if (i + 1 != c.steps.size()) return fail(i, "base step before the end of the chain");
          if (G.num_vertices() != kDim + 2 || !G.is_complete()) return fail(i, "base graph is not K5");
          std::vector<Vertex> identity{0, 1, 2, 3, 4};
          if (s.iso != identity) return fail(i, "base isomorphism is not the canonical labelling");
          return {true, {}};
        }
        case StepKind::Contract: {
          if (!s.edge || !s.witness) return fail(i, "contract step is missing its edge or witness");
          const Edge e = *s.edge;
          const SimpleGraph& tg = cur.triangulation().graph();
          if (e.u < 0 || e.v >= tg.num_vertices() || !tg.has_edge(e.u, e.v)) return fail(i, "contracted pair is not a triangulation edge");
          if (i > 0 && c.steps[i - 1].kind == StepKind::Glue && c.steps[i - 1].glue->edge != e) {
            return fail(i, "contraction does not use the glued edge");
          }
          const auto r = check_coincident_witness(G, e, *s.witness, kDim, rng, trials);
          if (!r) return fail(i, r.diagnostic);
          BracedContraction child = contract_braced(cur, e);
          if (canonical_hash(child.result.graph()) != s.child_hash) return fail(i, "child hash does not match the contraction");
          cur = std::move(child.result);
          break;
        }
        case StepKind::VertexAddition: {
          const Vertex x = s.vertex;
          if (x < 0 || x >= G.num_vertices()) return fail(i, "added vertex out of range");
          if (cur.triangulation().graph().degree(x) != 3) return fail(i, "added vertex does not have degree 3 in T");
          if (s.neighbors != G.neighbors(x)) return fail(i, "neighbour list does not match the graph");
          if (static_cast<int>(s.neighbors.size()) < kDim + 1) return fail(i, "added vertex has fewer than 4 neighbours");
          BracedContraction child = remove_braced_vertex(cur, x);
          if (canonical_hash(child.result.graph()) != s.child_hash) return fail(i, "child hash does not match the deletion");
          cur = std::move(child.result);
          break;
        }
        case StepKind::Glue: {
          if (!s.glue || !s.witness) return fail(i, "glue step is missing its data or witness");
          if (i + 1 >= c.steps.size() || c.steps[i + 1].kind != StepKind::Contract) {
            return fail(i, "glue step must be followed by a contraction");
          }
          const auto expect = glue_data(cur);
          if (!expect || !(*expect == *s.glue)) return fail(i, "glue data differs from the canonical choice");
          const RankWitness& w = *s.witness;
          if (w.prime != PrimeField::kDefaultPrime) return fail(i, "glue witness uses an unexpected prime");
          const RankWitness replay = glue_realization_at(cur, *s.glue, w.seed).witness;
          if (replay != w) return fail(i, "glue witness does not replay");
          const std::size_t full = max_rigidity_rank(G.num_vertices(), kDim);
          if (w.rank != full) return fail(i, "glue witness is rank deficient");
          bool fresh = false;
          for (int k = 0; k < std::max(trials, 1) && !fresh; ++k) {
            try {
              fresh = glue_realization_at(cur, *s.glue, rng.next()).witness.rank == full;
            } catch (const Error&) {
            }
          }
          if (!fresh) return fail(i, "fresh glued realisations stay rank deficient");
          break;
        }
      }
    }
    return {false, "chain does not end in a base step"};
  } catch (const Error& err) {
    return {false, std::string("replay failed: ") + err.what()};
  }
}

}  // namespace tririgid
