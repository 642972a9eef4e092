#include <gtest/gtest.h>

#include "corpus.hpp"
#include "tririgid/error.hpp"
#include "tririgid/io.hpp"

using namespace tririgid;
using nlohmann::json;

namespace {

ErrorKind parse_error_kind(const std::string& text) {
  try {
    braced_from_json(parse_json_text(text));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::NotFound;
}

}  // namespace

TEST(Json, TriangulationRoundTrip) {
  for (const auto& [name, t] : corpus::four_connected(9)) {
    const PlaneTriangulation back = triangulation_from_json(to_json(t));
    EXPECT_EQ(back.rotation(), t.rotation()) << name;
    EXPECT_EQ(back.outer_face(), t.outer_face()) << name;
  }
}

TEST(Json, BracedRoundTrip) {
  const BracedTriangulation g(icosahedron(), {Edge(0, 11), Edge(1, 10)});
  const json j = to_json(g);
  EXPECT_EQ(j["braces"].size(), 2u);
  const BracedTriangulation back = braced_from_json(parse_json_text(j.dump()));
  EXPECT_EQ(back.braces(), g.braces());
  EXPECT_EQ(canonical_hash(back.graph()), canonical_hash(g.graph()));
}

TEST(Json, BracesAreOptional) {
  const json j = to_json(octahedron());
  EXPECT_TRUE(braced_from_json(j).braces().empty());
}

TEST(Json, Errors) {
  EXPECT_EQ(parse_error_kind("{"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("[]"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"rotation": []})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"n": 2, "rotation": [[1]]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"n": 1, "rotation": [[3]]})"), ErrorKind::ParseError);
  json j = to_json(octahedron());
  j["braces"] = {{0, 1, 2}};
  EXPECT_EQ(parse_error_kind(j.dump()), ErrorKind::ParseError);
  j["braces"] = {{0, 0}};
  EXPECT_EQ(parse_error_kind(j.dump()), ErrorKind::NotSimple);
  j["braces"] = {{0, 2}};
  EXPECT_EQ(parse_error_kind(j.dump()), ErrorKind::NotSimple);
  j = to_json(octahedron());
  j["outer_face"] = {0, 1, 2};
  EXPECT_EQ(parse_error_kind(j.dump()), ErrorKind::UnknownFace);
}

TEST(Json, CertificateRoundTrip) {
  RandomSource rng(3);
  const BracedTriangulation g = corpus::positives_with_separating_triangles()[1].g;
  const Certificate c = *decide_braced(g, rng).certificate;
  const json j = to_json(c);
  EXPECT_EQ(j["target_hash"].get<std::string>().size(), 16u);
  EXPECT_EQ(certificate_from_json(parse_json_text(j.dump())), c);
  json bad = j;
  bad["steps"][0]["kind"] = "teleport";
  EXPECT_THROW(certificate_from_json(bad), Error);
  bad = j;
  bad["target_hash"] = "xyz";
  EXPECT_THROW(certificate_from_json(bad), Error);
}
