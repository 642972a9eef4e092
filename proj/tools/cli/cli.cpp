#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "tririgid/braced.hpp"
#include "tririgid/contractible.hpp"
#include "tririgid/error.hpp"
#include "tririgid/generators.hpp"
#include "tririgid/global_rigidity.hpp"
#include "tririgid/io.hpp"

namespace tririgid::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
  std::string file = "-";
  std::string cert_in;
  std::string cert_out;
  std::string edge;
  std::string pair;
  std::string gen_spec;
  std::vector<std::string> gen_braces;
  bool all = false;
  bool json_out = false;
  bool exact = false;
  bool require_4c = false;
  int dim = 3;
  int trials = 3;
  std::uint64_t seed = kDefaultSeed;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::ParseError, "cannot read " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

BracedTriangulation read_braced(const Options& o, std::istream& in) {
  return braced_from_json(parse_json_text(read_text(o.file, in)));
}

Edge parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const int a = std::stoi(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    const std::string rest = s.substr(comma + 1);
    const int b = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return Edge(a, b);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "expected a vertex pair u,v but got '" + s + "'");
  }
}

std::vector<int> parse_ints(const std::string& s, std::size_t count) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size() || v < 0 || v > 1'000'000) throw std::invalid_argument(tok);
      out.push_back(static_cast<int>(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad number '" + tok + "' in generator spec");
    }
  }
  if (out.size() != count) throw Error(ErrorKind::ParseError, "generator spec has the wrong number of fields");
  return out;
}

PlaneTriangulation generate(const std::string& spec, bool require_4c) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (colon == std::string::npos) {
    if (name == "tetrahedron") return tetrahedron();
    if (name == "octahedron") return octahedron();
    if (name == "icosahedron") return icosahedron();
  } else if (name == "stacked") {
    const int n = parse_ints(args, 1)[0];
    if (n < 4) throw Error(ErrorKind::PreconditionViolated, "stacked triangulations need n >= 4");
    return stacked(n);
  } else if (name == "bipyramid") {
    const int k = parse_ints(args, 1)[0];
    if (k < 3) throw Error(ErrorKind::PreconditionViolated, "bipyramids need a ring of at least 3");
    return bipyramid(k);
  } else if (name == "flipwalk") {
    const auto v = parse_ints(args, 3);
    if (v[0] < 5) throw Error(ErrorKind::PreconditionViolated, "flip walks need n >= 5");
    if (require_4c && v[0] < 6) throw Error(ErrorKind::PreconditionViolated, "4-connected triangulations need n >= 6");
    return flip_walk(v[0], v[1], static_cast<std::uint64_t>(v[2]), require_4c);
  }
  throw Error(ErrorKind::ParseError, "unknown generator '" + spec + "'");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json envelope(const std::string& command, bool ok) { return {{"command", command}, {"ok", ok}}; }

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  const BracedTriangulation g = read_braced(o, in);
  const PlaneTriangulation& t = g.triangulation();
  const std::size_t seps = separating_triangles(t).size();
  const bool g4 = is_k_connected(g.graph(), 4);
  const Face& f = t.outer_face();
  if (o.json_out) {
    json j = envelope("validate", true);
    j["n"] = t.num_vertices();
    j["edges"] = t.num_edges();
    j["faces"] = t.faces().size();
    j["outer_face"] = {f[0], f[1], f[2]};
    j["braces"] = g.braces().size();
    j["separating_triangles"] = seps;
    j["t_four_connected"] = seps == 0 && t.num_vertices() > 4;
    j["g_four_connected"] = g4;
    out << j.dump() << '\n';
  } else {
    out << "VALID plane triangulation n=" << t.num_vertices() << " m=" << t.num_edges() << " faces=" << t.faces().size()
        << " outer_face=" << f[0] << ',' << f[1] << ',' << f[2] << '\n';
    out << "braces: " << g.braces().size() << '\n';
    out << "separating triangles: " << seps << '\n';
    out << "T 4-connected: " << yes_no(seps == 0 && t.num_vertices() > 4) << '\n';
    out << "G 4-connected: " << yes_no(g4) << '\n';
  }
  return kOk;
}

void require_dim3(const Options& o) {
  if (o.dim != 3) throw Error(ErrorKind::PreconditionViolated, "the braced decision procedure is for --dim 3");
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  require_dim3(o);
  const BracedTriangulation g = read_braced(o, in);
  RandomSource rng(o.seed);
  const Verdict v = decide_braced(g, rng, o.trials);
  std::string negative;
  if (v.reason == VerdictReason::NoBraces) negative = "no braces (G = T)";
  if (v.reason == VerdictReason::NotFourConnected) negative = "G is not 4-connected";
  if (!o.cert_out.empty()) {
    if (v.certificate) {
      std::ofstream f(o.cert_out);
      if (!f) throw Error(ErrorKind::ParseError, "cannot write " + o.cert_out);
      f << to_json(*v.certificate).dump(2) << '\n';
    } else {
      err << "no certificate written: the verdict is negative\n";
    }
  }
  if (o.json_out) {
    json j = envelope("check", true);
    j["globally_rigid"] = v.globally_rigid;
    j["reason"] = to_string(v.reason);
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    j["trace"] = v.trace;
    out << j.dump() << '\n';
  } else if (v.globally_rigid) {
    out << "GLOBALLY RIGID\n";
    out << "certificate: " << v.certificate->steps.size() << " steps, target " << to_hex64(v.certificate->target_hash)
        << '\n';
    for (const std::string& line : v.trace) out << "  " << line << '\n';
  } else {
    out << "NOT GLOBALLY RIGID: " << negative << '\n';
  }
  return v.globally_rigid ? kOk : kNegative;
}

int cmd_ght(const Options& o, std::istream& in, std::ostream& out) {
  if (o.dim < 1) throw Error(ErrorKind::PreconditionViolated, "--dim must be positive");
  const BracedTriangulation g = read_braced(o, in);
  RandomSource rng(o.seed);
  const GhtResult r = ght_check(g.graph(), o.dim, rng, o.trials);
  if (o.json_out) {
    json j = envelope("ght", true);
    j["verdict"] = to_string(r.verdict);
    j["reason"] = r.reason;
    j["witness"] = {{"seed", r.seed},
                    {"prime", r.prime},
                    {"rigidity_rank", r.rigidity_rank},
                    {"stress_dim", r.stress_dim},
                    {"stress_rank", r.stress_rank}};
    out << j.dump() << '\n';
  } else {
    switch (r.verdict) {
      case GhtVerdict::GloballyRigid: out << "GLOBALLY RIGID: "; break;
      case GhtVerdict::NotGloballyRigid: out << "NOT GLOBALLY RIGID: "; break;
      case GhtVerdict::Inconclusive: out << "INCONCLUSIVE: "; break;
    }
    out << r.reason << '\n';
    out << "witness: seed=" << r.seed << " prime=" << r.prime << " rigidity_rank=" << r.rigidity_rank
        << " stress_dim=" << r.stress_dim << " stress_rank=" << r.stress_rank << '\n';
  }
  return r.verdict == GhtVerdict::GloballyRigid ? kOk : kNegative;
}

int cmd_contract(const Options& o, std::istream& in, std::ostream& out) {
  if (o.all == !o.edge.empty()) throw Error(ErrorKind::ParseError, "contract needs exactly one of --edge u,v or --all");
  const BracedTriangulation g = read_braced(o, in);
  const PlaneTriangulation& t = g.triangulation();
  if (!o.edge.empty()) {
    const Edge e = parse_pair(o.edge);
    const BracedContraction c = contract_braced(g, e);
    const json body = c.result.braces().empty() ? to_json(c.result.triangulation()) : to_json(c.result);
    if (o.json_out) {
      json j = envelope("contract", true);
      j["result"] = body;
      j["relabel"] = c.relabel;
      j["four_connected"] = is_four_connected(c.result.triangulation());
      out << j.dump() << '\n';
    } else {
      out << body.dump() << '\n';
    }
    return kOk;
  }

  const bool four = is_four_connected(t);
  std::set<Edge> brute;
  std::set<Edge> lemma;
  if (four) {
    for (const Edge& e : brute_force_contractible(t)) brute.insert(e);
    if (t.num_vertices() >= 7) {
      for (const Face& f : t.faces()) {
        const Edge e = find_contractible_avoiding_face(t, f).edge;
        if (!brute.count(e)) throw Error(ErrorKind::CertificationFailed, "constructive search returned a non-contractible edge");
        lemma.insert(e);
      }
    }
  } else {
    for (const Edge& e : t.graph().edges()) {
      try {
        if (is_four_connected(contract(t, e).result)) brute.insert(e);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::EdgeOnSeparatingTriangle && err.kind() != ErrorKind::PreconditionViolated) throw;
      }
    }
  }
  const bool lemma_ran = four && t.num_vertices() >= 7;
  json rows = json::array();
  std::ostringstream text;
  for (const Edge& e : t.graph().edges()) {
    const bool b = brute.count(e) > 0;
    const std::string l = lemma_ran ? yes_no(lemma.count(e) > 0) : "n/a";
    text << to_string(e) << (b ? " contractible" : " not-contractible") << " brute-force:" << yes_no(b)
         << " lemma:" << l << '\n';
    rows.push_back({{"edge", {e.u, e.v}}, {"contractible", b}, {"lemma", lemma_ran ? json(lemma.count(e) > 0) : json(nullptr)}});
  }
  if (o.json_out) {
    json j = envelope("contract", true);
    j["four_connected"] = four;
    j["edges"] = std::move(rows);
    j["contractible"] = brute.size();
    out << j.dump() << '\n';
  } else {
    out << text.str() << "contractible: " << brute.size() << " of " << t.num_edges() << '\n';
  }
  return kOk;
}

constexpr int kMaxExactVertices = 12;

int cmd_realize(const Options& o, std::istream& in, std::ostream& out) {
  if (o.dim < 1) throw Error(ErrorKind::PreconditionViolated, "--dim must be positive");
  const BracedTriangulation g = read_braced(o, in);
  const Edge p = parse_pair(o.pair);
  if (p.u == p.v || p.u < 0 || p.v >= g.num_vertices()) throw Error(ErrorKind::PreconditionViolated, "--pair needs two distinct vertices");
  RandomSource rng(o.seed);
  if (o.exact && g.num_vertices() > kMaxExactVertices) {
    throw Error(ErrorKind::PreconditionViolated, "--exact is limited to " + std::to_string(kMaxExactVertices) + " vertices");
  }
  const RankWitness w = o.exact ? coincident_rank_witness(g.graph(), {p.u, p.v}, o.dim, rng, o.trials, RationalField())
                                : coincident_rank_witness(g.graph(), {p.u, p.v}, o.dim, rng, o.trials);
  const std::size_t full = max_rigidity_rank(g.num_vertices(), o.dim);
  const bool rigid = w.rank == full;
  if (o.json_out) {
    json j = envelope("realize-coincident", true);
    j["pair"] = {p.u, p.v};
    j["rank"] = w.rank;
    j["full_rank"] = full;
    j["inf_rigid"] = rigid;
    j["witness"] = {{"seed", w.seed}, {"prime", w.prime}, {"rank", w.rank}, {"digest", to_hex64(w.digest)}};
    out << j.dump() << '\n';
  } else {
    out << (rigid ? "INFINITESIMALLY RIGID" : "NOT INFINITESIMALLY RIGID") << ": coincident rank " << w.rank << " of "
        << full << " at " << p.u << ',' << p.v << '\n';
    out << "witness: seed=" << w.seed << " prime=" << w.prime << " digest=" << to_hex64(w.digest) << '\n';
  }
  return rigid ? kOk : kNegative;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  if (o.cert_in == "-" && (o.file.empty() || o.file == "-")) {
    throw Error(ErrorKind::ParseError, "certificate and triangulation cannot both come from stdin");
  }
  const Certificate c = certificate_from_json(parse_json_text(read_text(o.cert_in, in)));
  const BracedTriangulation g = read_braced(o, in);
  RandomSource rng(o.seed);
  const VerifyResult r = verify_certificate(c, g, rng, o.trials);
  if (o.json_out) {
    json j = envelope("verify", true);
    j["verified"] = r.ok;
    if (!r.ok) j["diagnostic"] = r.diagnostic;
    out << j.dump() << '\n';
  } else {
    out << (r.ok ? "VERIFIED" : "REJECTED: " + r.diagnostic) << '\n';
  }
  return r.ok ? kOk : kNegative;
}

int cmd_gen(const Options& o, std::ostream& out) {
  PlaneTriangulation t = generate(o.gen_spec, o.require_4c);
  std::vector<Edge> braces;
  for (const std::string& b : o.gen_braces) braces.push_back(parse_pair(b));
  if (braces.empty()) {
    out << to_json(t).dump() << '\n';
  } else {
    out << to_json(BracedTriangulation(std::move(t), std::move(braces))).dump() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Global rigidity of braced plane triangulations"};
  app.name("tririgid");
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json_out, "Machine-readable output"); };
  auto add_random = [&](CLI::App* s) {
    s->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    s->add_option("--trials", o.trials, "Independent random trials")->capture_default_str()->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Validate a (braced) triangulation file");
  validate->add_option("file", o.file, "Input JSON ('-' for stdin)");
  add_json(validate);

  auto* check = app.add_subcommand("check", "Decide global rigidity and optionally write a certificate");
  check->add_option("file", o.file, "Input JSON ('-' for stdin)");
  check->add_option("--dim", o.dim, "Dimension")->capture_default_str();
  check->add_option("--cert", o.cert_out, "Write the certificate here");
  add_random(check);
  add_json(check);

  auto* ght = app.add_subcommand("ght", "Randomised stress-matrix global rigidity test");
  ght->add_option("file", o.file, "Input JSON ('-' for stdin)");
  ght->add_option("--dim", o.dim, "Dimension")->capture_default_str();
  add_random(ght);
  add_json(ght);

  auto* contract_cmd = app.add_subcommand("contract", "Contract an edge or list contractible edges");
  contract_cmd->add_option("file", o.file, "Input JSON ('-' for stdin)");
  contract_cmd->add_option("--edge", o.edge, "Edge u,v to contract");
  contract_cmd->add_flag("--all", o.all, "List every edge with its contractibility");
  add_json(contract_cmd);

  auto* realize = app.add_subcommand("realize-coincident", "Coincident rank at a vertex pair");
  realize->add_option("file", o.file, "Input JSON ('-' for stdin)");
  realize->add_option("--pair", o.pair, "Vertex pair u,v")->required();
  realize->add_option("--dim", o.dim, "Dimension")->capture_default_str();
  realize->add_flag("--exact", o.exact, "Rank over the rationals (slow, n <= 12)");
  add_random(realize);
  add_json(realize);

  auto* verify = app.add_subcommand("verify", "Replay a certificate against a braced triangulation");
  verify->add_option("certificate", o.cert_in, "Certificate JSON")->required();
  verify->add_option("file", o.file, "Input JSON ('-' for stdin)");
  add_random(verify);
  add_json(verify);

  auto* gen = app.add_subcommand("gen", "Generate a triangulation");
  gen->add_option("spec", o.gen_spec,
                  "tetrahedron | octahedron | icosahedron | stacked:n | bipyramid:k | flipwalk:n:steps:seed")
      ->required();
  gen->add_flag("--require-4c", o.require_4c, "Flip walk keeps the triangulation 4-connected");
  gen->add_option("--brace", o.gen_braces, "Add a brace u,v (repeatable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "validate") return cmd_validate(o, in, out);
    if (name == "check") return cmd_check(o, in, out, err);
    if (name == "ght") return cmd_ght(o, in, out);
    if (name == "contract") return cmd_contract(o, in, out);
    if (name == "realize-coincident") return cmd_realize(o, in, out);
    if (name == "verify") return cmd_verify(o, in, out);
    return cmd_gen(o, out);
  } catch (const Error& e) {
    const bool breach = is_invariant_breach(e.kind());
    if (o.json_out) {
      json j = envelope(name, false);
      j["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"internal", breach}};
      out << j.dump() << '\n';
    } else if (name == "validate" && !breach) {
      out << "INVALID " << e.what() << '\n';
    }
    err << (breach ? "internal error: " : "error: ") << e.what() << '\n';
    return breach ? kInternalError : kInputError;
  }
}

}  // namespace tririgid::cli
