#pragma once

#include <cstdint>
#include <optional>

#include "tririgid/triangulation.hpp"

namespace tririgid {

PlaneTriangulation tetrahedron();
/// Vertices 0..5 are +X, -X, +Y, -Y, +Z, -Z.
PlaneTriangulation octahedron();
PlaneTriangulation icosahedron();
/// Ring 0..k-1 plus apexes k and k+1; 4-connected for k >= 4.
PlaneTriangulation bipyramid(int ring);
/// K4 followed by n-4 face insertions, each into the newest face.
PlaneTriangulation stacked(int n);

/// Replaces edge ab by the other diagonal of its two faces. Returns nullopt
/// when the diagonal already exists (the flip would create a parallel edge).
std::optional<PlaneTriangulation> flip(const PlaneTriangulation& t, const Edge& ab);

/// Random diagonal flips starting from a bipyramid on n vertices. Each step
/// flips a uniformly chosen flippable edge; with require_four_connected, flips
/// that would create a separating triangle are not considered flippable.
/// A test-corpus utility, not a uniform sampler.
PlaneTriangulation flip_walk(int n, int steps, std::uint64_t seed, bool require_four_connected);

/// Identifies face `inner_face` of `inner` with face `host_face` of `host`.
/// Host vertices keep their ids; the rest of `inner` follows in id order.
/// The host's outer face is kept, so the glued triangle separates `inner`.
PlaneTriangulation glue_on_face(const PlaneTriangulation& host, const Face& host_face,
                                const PlaneTriangulation& inner, const Face& inner_face);

}  // namespace tririgid
