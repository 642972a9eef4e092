#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tririgid/error.hpp"
#include "tririgid/field.hpp"
#include "tririgid/graph.hpp"
#include "tririgid/matrix.hpp"

namespace tririgid {

/// Randomized constructions give up after this many fresh samples.
inline constexpr int kMaxAttempts = 16;

/// A graph with a configuration p: V -> F^d, stored vertex-major.
template <class Field>
struct Framework {
  using Element = typename Field::Element;

  SimpleGraph graph;
  int dim = 3;
  Field field{};
  std::vector<Element> coords;

  int num_vertices() const noexcept { return graph.num_vertices(); }
  std::span<const Element> point(Vertex v) const {
    return {coords.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

template <class Field>
Framework<Field> make_framework(SimpleGraph g, int d, Field field, std::vector<typename Field::Element> coords) {
  if (d < 1) throw Error(ErrorKind::PreconditionViolated, "dimension must be positive");
  if (coords.size() != static_cast<std::size_t>(g.num_vertices()) * static_cast<std::size_t>(d)) {
    throw Error(ErrorKind::PreconditionViolated, "configuration length must be n*d");
  }
  return Framework<Field>{std::move(g), d, std::move(field), std::move(coords)};
}

/// Rank of an infinitesimally rigid framework on n vertices in dimension d:
/// C(n,2) while n <= d+1, otherwise d*n - C(d+1,2).
std::size_t max_rigidity_rank(int n, int d);

/// The pair of vertices forced onto one point.
struct CoincidentSpec {
  Vertex u = 0;
  Vertex v = 0;
};

/// Row for edge uv carries p(u)-p(v) in u's columns and p(v)-p(u) in v's: the
/// Jacobian of the squared-length map divided by 2.
template <class Field>
Matrix<Field> rigidity_matrix(const Framework<Field>& fw) {
  const auto edges = fw.graph.edges();
  const auto d = static_cast<std::size_t>(fw.dim);
  Matrix<Field> m(fw.field, edges.size(), d * static_cast<std::size_t>(fw.num_vertices()));
  for (std::size_t r = 0; r < edges.size(); ++r) {
    const auto pu = fw.point(edges[r].u);
    const auto pv = fw.point(edges[r].v);
    for (std::size_t k = 0; k < d; ++k) {
      const auto diff = fw.field.sub(pu[k], pv[k]);
      m(r, static_cast<std::size_t>(edges[r].u) * d + k) = diff;
      m(r, static_cast<std::size_t>(edges[r].v) * d + k) = fw.field.neg(diff);
    }
  }
  return m;
}

template <class Field>
std::size_t framework_rank(const Framework<Field>& fw) {
  return rank(rigidity_matrix(fw));
}

template <class Field>
bool is_inf_rigid(const Framework<Field>& fw) {
  return framework_rank(fw) == max_rigidity_rank(fw.num_vertices(), fw.dim);
}

template <class Field>
std::vector<typename Field::Element> random_config(int n, int d, const Field& field, RandomSource& rng) {
  if (d < 1) throw Error(ErrorKind::PreconditionViolated, "dimension must be positive");
  std::vector<typename Field::Element> out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  for (long i = 0; i < static_cast<long>(n) * d; ++i) out.push_back(field.random(rng));
  return out;
}

/// Draws points for every vertex except spec.v (in vertex order), then puts
/// spec.v on top of spec.u.
template <class Field>
std::vector<typename Field::Element> coincident_config(int n, int d, const CoincidentSpec& spec, const Field& field,
                                                       RandomSource& rng) {
  if (spec.u == spec.v) throw Error(ErrorKind::PreconditionViolated, "coincident pair must be two distinct vertices");
  if (spec.u < 0 || spec.v < 0 || spec.u >= n || spec.v >= n) {
    throw Error(ErrorKind::PreconditionViolated, "coincident pair out of range");
  }
  const auto dd = static_cast<std::size_t>(d);
  std::vector<typename Field::Element> out(static_cast<std::size_t>(n) * dd, field.zero());
  for (Vertex x = 0; x < n; ++x) {
    if (x == spec.v) continue;
    for (std::size_t k = 0; k < dd; ++k) out[static_cast<std::size_t>(x) * dd + k] = field.random(rng);
  }
  for (std::size_t k = 0; k < dd; ++k) {
    out[static_cast<std::size_t>(spec.v) * dd + k] = out[static_cast<std::size_t>(spec.u) * dd + k];
  }
  return out;
}

std::uint64_t config_digest(const PrimeField& field, std::span<const PrimeField::Element> coords);
std::uint64_t config_digest(const RationalField& field, std::span<const RationalField::Element> coords);

/// Reproducible rank evidence: the configuration drawn from RandomSource(seed)
/// over the field identified by `prime` (0 = rationals) has this rank, and its
/// coordinates hash to `digest`.
struct RankWitness {
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  std::size_t rank = 0;
  std::uint64_t digest = 0;

  friend bool operator==(const RankWitness&, const RankWitness&) = default;
};

template <class Field>
RankWitness generic_witness_at(const SimpleGraph& g, int d, std::uint64_t seed, const Field& field) {
  RandomSource sub(seed);
  auto coords = random_config(g.num_vertices(), d, field, sub);
  const std::uint64_t digest = config_digest(field, coords);
  const auto fw = make_framework(g, d, field, std::move(coords));
  return {seed, field.witness_id(), framework_rank(fw), digest};
}

template <class Field>
RankWitness coincident_witness_at(const SimpleGraph& g, const CoincidentSpec& spec, int d, std::uint64_t seed,
                                  const Field& field) {
  RandomSource sub(seed);
  auto coords = coincident_config(g.num_vertices(), d, spec, field, sub);
  const std::uint64_t digest = config_digest(field, coords);
  const auto fw = make_framework(g, d, field, std::move(coords));
  return {seed, field.witness_id(), framework_rank(fw), digest};
}

/// Best of `trials` random configurations; stops early at the rank ceiling.
/// Random evaluation can only undershoot the generic rank.
template <class Field = PrimeField>
RankWitness generic_rank_witness(const SimpleGraph& g, int d, RandomSource& rng, int trials, const Field& field = Field()) {
  RankWitness best;
  const std::size_t ceiling = max_rigidity_rank(g.num_vertices(), d);
  for (int t = 0; t < std::max(trials, 1); ++t) {
    const RankWitness w = generic_witness_at(g, d, rng.next(), field);
    if (t == 0 || w.rank > best.rank) best = w;
    if (best.rank == ceiling) break;
  }
  return best;
}

template <class Field = PrimeField>
std::size_t generic_rank(const SimpleGraph& g, int d, RandomSource& rng, int trials, const Field& field = Field()) {
  return generic_rank_witness(g, d, rng, trials, field).rank;
}

template <class Field = PrimeField>
RankWitness coincident_rank_witness(const SimpleGraph& g, const CoincidentSpec& spec, int d, RandomSource& rng,
                                    int trials, const Field& field = Field()) {
  RankWitness best;
  const std::size_t ceiling = max_rigidity_rank(g.num_vertices(), d);
  for (int t = 0; t < std::max(trials, 1); ++t) {
    const RankWitness w = coincident_witness_at(g, spec, d, rng.next(), field);
    if (t == 0 || w.rank > best.rank) best = w;
    if (best.rank == ceiling) break;
  }
  return best;
}

template <class Field = PrimeField>
std::size_t coincident_rank(const SimpleGraph& g, const CoincidentSpec& spec, int d, RandomSource& rng, int trials,
                            const Field& field = Field()) {
  return coincident_rank_witness(g, spec, d, rng, trials, field).rank;
}

template <class Field = PrimeField>
bool is_coincident_inf_rigid(const SimpleGraph& g, const CoincidentSpec& spec, int d, RandomSource& rng, int trials,
                             const Field& field = Field()) {
  return coincident_rank(g, spec, d, rng, trials, field) == max_rigidity_rank(g.num_vertices(), d);
}

/// Split of v into v' (keeps id v) and v'' (new id n). Neighbour lists exclude
/// the v'v'' edge, which the split always adds.
struct VertexSplit {
  Vertex v = 0;
  std::vector<Vertex> neighbors_v1;
  std::vector<Vertex> neighbors_v2;

  std::vector<Vertex> shared() const;
};

/// Throws InvalidSplit unless the neighbour lists cover N(v) exactly and share
/// exactly d-1 vertices.
void check_split(const SimpleGraph& g, const VertexSplit& split, int d);

SimpleGraph apply_vertex_split(const SimpleGraph& g, const VertexSplit& split, int d);

/// Affine independence of the listed points (at most d+1 of them); larger sets
/// need every (d+1)-subset independent.
template <class Field>
bool in_general_position(const Framework<Field>& fw, std::span<const Vertex> vertices) {
  const std::size_t k = vertices.size();
  const auto d = static_cast<std::size_t>(fw.dim);
  if (k <= 1) return true;
  if (k > d + 1) {
    std::vector<Vertex> subset;
    std::vector<char> pick(k, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(d + 1), 1);
    do {
      subset.clear();
      for (std::size_t i = 0; i < k; ++i)
        if (pick[i]) subset.push_back(vertices[i]);
      if (!in_general_position(fw, subset)) return false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return true;
  }
  Matrix<Field> m(fw.field, k - 1, d);
  const auto base = fw.point(vertices[0]);
  for (std::size_t i = 1; i < k; ++i) {
    const auto pi = fw.point(vertices[i]);
    for (std::size_t c = 0; c < d; ++c) m(i - 1, c) = fw.field.sub(pi[c], base[c]);
  }
  return rank(std::move(m)) == k - 1;
}

/// Whiteley's vertex-split realisation: v' stays at p(v), v'' is resampled
/// until the split framework is infinitesimally rigid.
template <class Field>
Framework<Field> realize_vertex_split(const Framework<Field>& fw, const VertexSplit& split, RandomSource& rng) {
  check_split(fw.graph, split, fw.dim);
  if (!is_inf_rigid(fw)) throw Error(ErrorKind::PreconditionViolated, "split source framework is not infinitesimally rigid");
  std::vector<Vertex> anchor{split.v};
  for (Vertex s : split.shared()) anchor.push_back(s);
  if (!in_general_position(fw, anchor)) {
    throw Error(ErrorKind::GeneralPositionViolated, "split vertex and shared neighbours are not in general position");
  }
  SimpleGraph split_graph = apply_vertex_split(fw.graph, split, fw.dim);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto coords = fw.coords;
    for (int k = 0; k < fw.dim; ++k) coords.push_back(fw.field.random(rng));
    auto out = make_framework(split_graph, fw.dim, fw.field, std::move(coords));
    if (is_inf_rigid(out)) return out;
  }
  throw Error(ErrorKind::MaxAttemptsExceeded, "no infinitesimally rigid placement of the split vertex");
}

/// Deletes v1v2, adds vertex n joined to v1, v2 and the d-1 attach vertices.
template <class Field>
Framework<Field> one_extension(const Framework<Field>& fw, const Edge& remove, std::span<const Vertex> attach,
                               RandomSource& rng) {
  const int n = fw.num_vertices();
  if (static_cast<int>(attach.size()) != fw.dim - 1) {
    throw Error(ErrorKind::PreconditionViolated, "a 1-extension attaches to exactly d-1 further vertices");
  }
  std::vector<Vertex> ends{remove.u, remove.v};
  ends.insert(ends.end(), attach.begin(), attach.end());
  std::vector<Vertex> sorted(ends);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 || sorted.back() >= n) {
    throw Error(ErrorKind::PreconditionViolated, "1-extension vertices must be distinct existing vertices");
  }
  if (!fw.graph.has_edge(remove.u, remove.v)) throw Error(ErrorKind::NotAnEdge, to_string(remove));
  if (!is_inf_rigid(fw)) throw Error(ErrorKind::PreconditionViolated, "1-extension source is not infinitesimally rigid");
  if (!in_general_position(fw, ends)) {
    throw Error(ErrorKind::GeneralPositionViolated, "1-extension anchor points are not in general position");
  }
  SimpleGraph g(n + 1);
  for (const Edge& e : fw.graph.edges())
    if (e != remove) g.add_edge(e.u, e.v);
  for (Vertex w : ends) g.add_edge(n, w);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto coords = fw.coords;
    for (int k = 0; k < fw.dim; ++k) coords.push_back(fw.field.random(rng));
    auto out = make_framework(g, fw.dim, fw.field, std::move(coords));
    if (is_inf_rigid(out)) return out;
  }
  throw Error(ErrorKind::MaxAttemptsExceeded, "no infinitesimally rigid placement of the 1-extension vertex");
}

/// Two rigid graphs meeting in at least d vertices. Ids x, y, z are global:
/// x in V1 \ V2, y in V2 \ V1, z shared with xz an edge of G1.
struct GlueInput {
  std::vector<Vertex> g1_to_global;  // local id of fw1's graph -> global id
  SimpleGraph g2;
  std::vector<Vertex> g2_to_global;
  Vertex x = -1;
  Vertex y = -1;
  Vertex z = -1;
};

/// Framework on (G1 u G2) - xz + xy that agrees with fw1 on V(G1): a
/// 1-extension of fw1 puts y on the edge xz and joins it to the shared set, and
/// G2's remaining vertices then go to random points.
template <class Field>
Framework<Field> glue(const Framework<Field>& fw1, const GlueInput& in, RandomSource& rng) {
  const int d = fw1.dim;
  const auto& m1 = in.g1_to_global;
  const auto& m2 = in.g2_to_global;
  if (static_cast<int>(m1.size()) != fw1.num_vertices() || static_cast<int>(m2.size()) != in.g2.num_vertices()) {
    throw Error(ErrorKind::PreconditionViolated, "glue vertex maps do not match the graphs");
  }
  const int total = 1 + std::max(m1.empty() ? -1 : *std::max_element(m1.begin(), m1.end()),
                                  m2.empty() ? -1 : *std::max_element(m2.begin(), m2.end()));
  std::vector<int> local1(static_cast<std::size_t>(total), -1);
  std::vector<int> local2(static_cast<std::size_t>(total), -1);
  for (std::size_t i = 0; i < m1.size(); ++i) local1[static_cast<std::size_t>(m1[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < m2.size(); ++i) local2[static_cast<std::size_t>(m2[i])] = static_cast<int>(i);
  std::vector<Vertex> shared;
  for (Vertex g = 0; g < total; ++g) {
    const bool a = local1[static_cast<std::size_t>(g)] >= 0;
    const bool b = local2[static_cast<std::size_t>(g)] >= 0;
    if (!a && !b) throw Error(ErrorKind::PreconditionViolated, "glued vertex ids must be contiguous");
    if (a && b) shared.push_back(g);
  }
  auto in_range = [&](Vertex g) { return g >= 0 && g < total; };
  if (static_cast<int>(shared.size()) < d) {
    throw Error(ErrorKind::PreconditionViolated, "glued graphs share fewer than d vertices");
  }
  if (!in_range(in.x) || !in_range(in.y) || !in_range(in.z) || local1[static_cast<std::size_t>(in.x)] < 0 ||
      local2[static_cast<std::size_t>(in.x)] >= 0 || local2[static_cast<std::size_t>(in.y)] < 0 ||
      local1[static_cast<std::size_t>(in.y)] >= 0 || !std::binary_search(shared.begin(), shared.end(), in.z)) {
    throw Error(ErrorKind::PreconditionViolated, "glue needs x in V1\\V2, y in V2\\V1 and z shared");
  }
  const Vertex xl = local1[static_cast<std::size_t>(in.x)];
  const Vertex zl = local1[static_cast<std::size_t>(in.z)];
  if (!fw1.graph.has_edge(xl, zl)) throw Error(ErrorKind::PreconditionViolated, "xz is not an edge of G1");
  if (!is_inf_rigid(fw1)) throw Error(ErrorKind::PreconditionViolated, "G1 framework is not infinitesimally rigid");

  // Stage 1: 1-extension on xz towards d-1 further shared vertices.
  std::vector<Vertex> others;
  for (Vertex s : shared)
    if (s != in.z) others.push_back(local1[static_cast<std::size_t>(s)]);
  std::vector<Vertex> attach;
  {
    std::vector<char> pick(others.size(), 0);
    std::fill(pick.begin(), pick.begin() + d - 1, 1);
    do {
      attach.clear();
      for (std::size_t i = 0; i < others.size(); ++i)
        if (pick[i]) attach.push_back(others[i]);
      std::vector<Vertex> anchor{xl, zl};
      anchor.insert(anchor.end(), attach.begin(), attach.end());
      if (in_general_position(fw1, anchor)) break;
      attach.clear();
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  if (static_cast<int>(attach.size()) != d - 1) {
    throw Error(ErrorKind::GeneralPositionViolated, "no shared vertices in general position with x and z");
  }
  Framework<Field> stage = one_extension(fw1, Edge(xl, zl), attach, rng);
  const Vertex yl = fw1.num_vertices();
  for (Vertex s : shared) {
    const Vertex sl = local1[static_cast<std::size_t>(s)];
    if (!stage.graph.has_edge(yl, sl)) stage.graph.add_edge(yl, sl);
  }

  // Stage 2: swap the star at y for G2, placing its other vertices generically.
  SimpleGraph g(total);
  for (const Edge& e : fw1.graph.edges()) {
    if (e == Edge(xl, zl)) continue;
    g.add_edge(m1[static_cast<std::size_t>(e.u)], m1[static_cast<std::size_t>(e.v)]);
  }
  for (const Edge& e : in.g2.edges()) {
    const Vertex a = m2[static_cast<std::size_t>(e.u)];
    const Vertex b = m2[static_cast<std::size_t>(e.v)];
    if (!g.has_edge(a, b)) g.add_edge(a, b);
  }
  if (!g.has_edge(in.x, in.y)) g.add_edge(in.x, in.y);
  const auto dd = static_cast<std::size_t>(d);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<typename Field::Element> coords(static_cast<std::size_t>(total) * dd, fw1.field.zero());
    for (Vertex v = 0; v < total; ++v) {
      const int a = local1[static_cast<std::size_t>(v)];
      const Vertex src = a >= 0 ? a : (v == in.y ? yl : -1);
      for (std::size_t k = 0; k < dd; ++k) {
        coords[static_cast<std::size_t>(v) * dd + k] =
            src >= 0 ? stage.coords[static_cast<std::size_t>(src) * dd + k] : fw1.field.random(rng);
      }
    }
    auto out = make_framework(g, d, fw1.field, std::move(coords));
    if (is_inf_rigid(out)) return out;
  }
  throw Error(ErrorKind::MaxAttemptsExceeded, "glued framework never became infinitesimally rigid");
}

/// Relabels a framework: vertex v of fw becomes perm[v].
template <class Field>
Framework<Field> permute_framework(const Framework<Field>& fw, std::span<const Vertex> perm) {
  const int n = fw.num_vertices();
  SimpleGraph g(n);
  for (const Edge& e : fw.graph.edges()) g.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  const auto dd = static_cast<std::size_t>(fw.dim);
  std::vector<typename Field::Element> coords(fw.coords.size(), fw.field.zero());
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < dd; ++k) {
      coords[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)]) * dd + k] = fw.coords[static_cast<std::size_t>(v) * dd + k];
    }
  }
  return make_framework(std::move(g), fw.dim, fw.field, std::move(coords));
}

}  // namespace tririgid
