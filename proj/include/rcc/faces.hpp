#pragma once

// Regions of a diagram's complement, found by tracing faces of the
// orientation double cover.
//
// The cover has crossings (v,+) = v and (v,-) = v + c. Dart d lifts to
// d (sheet +) and d + 4c (sheet -); the (v,-) rotation is the (v,+) rotation
// reversed. A +1 edge lifts within each sheet, a -1 edge swaps sheets. All
// cover edges have sign +1, so ordinary face tracing applies: the face after
// x is rotate(opposite(x)).
//
// A region R of the base lifts to two cover faces f and g(f), where g(f) is
// the face containing opposite(deck(x)) for any x in f.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcc/gf2.hpp"
#include "rcc/scheme.hpp"

namespace rcc {

struct CoverScheme {
  EmbeddingScheme cover;
  std::size_t base_crossings = 0;

  Dart lift(Dart d, int sheet) const noexcept { return sheet == 0 ? d : d + static_cast<Dart>(4 * base_crossings); }
  Dart base(Dart x) const noexcept { return x % static_cast<Dart>(4 * base_crossings); }
  int sheet(Dart x) const noexcept { return x < 4 * base_crossings ? 0 : 1; }
  /// Deck transformation: swaps the two lifts of a base dart.
  Dart deck(Dart x) const noexcept { return lift(base(x), 1 - sheet(x)); }
};

inline CoverScheme orientation_double_cover(const EmbeddingScheme& d) {
  const std::size_t c = d.num_crossings();
  const auto shift = static_cast<Dart>(4 * c);
  DiagramData data;
  data.crossings.resize(2 * c);
  for (std::size_t v = 0; v < c; ++v) {
    const Crossing& x = d.crossing(v);
    data.crossings[v] = x;
    Crossing& mirror = data.crossings[v + c];
    // reversal moves positions {0,2} to {3,1}
    mirror.over_pair = 1 - x.over_pair;
    for (int k = 0; k < 4; ++k) mirror.rotation[static_cast<std::size_t>(k)] = x.rotation[static_cast<std::size_t>(3 - k)] + shift;
  }
  for (std::size_t e = 0; e < d.num_edges(); ++e) {
    const Edge& edge = d.edge(e);
    const Dart a = edge.darts[0];
    const Dart b = edge.darts[1];
    if (edge.sign > 0) {
      data.edges.push_back({{a, b}, 1});
      data.edges.push_back({{a + shift, b + shift}, 1});
    } else {
      data.edges.push_back({{a, b + shift}, 1});
      data.edges.push_back({{a + shift, b}, 1});
    }
  }
  return {make_unchecked(std::move(data)), c};
}

inline bool is_connected(const EmbeddingScheme& s) {
  return detail::count_graph_components(s.num_crossings(), s.data().edges) == 1;
}

struct Region {
  /// Smallest value of 2*base + sheet over the darts of both lifts.
  std::size_t key = 0;
  /// Cover darts of the lift containing the key dart, in traversal order.
  std::vector<Dart> face;
  std::vector<Dart> mirror_face;
  /// Corners of the region at each crossing.
  std::vector<int> corner_counts;
  /// Parity of the number of times the boundary runs along each edge.
  gf2::BitVector edge_parity;

  std::size_t degree() const noexcept { return face.size(); }
};

struct FaceStructure {
  std::vector<Region> regions;
  std::size_t cover_face_count = 0;
  /// Region index of each cover dart.
  std::vector<std::size_t> region_of_cover_dart;
  /// Cover face index of each cover dart, and g() on cover faces.
  std::vector<std::size_t> cover_face_of;
  std::vector<std::size_t> cover_face_pair;

  std::size_t num_regions() const noexcept { return regions.size(); }
};

/// Orbits of x -> rotate(opposite(x)) on an all-positive scheme. Returns the
/// face index of every dart and the faces themselves.
inline std::vector<std::vector<Dart>> trace_oriented_faces(const EmbeddingScheme& s,
                                                           std::vector<std::size_t>& face_of) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  face_of.assign(s.num_darts(), unset);
  std::vector<std::vector<Dart>> faces;
  for (Dart start = 0; start < s.num_darts(); ++start) {
    if (face_of[start] != unset) continue;
    std::vector<Dart> face;
    Dart x = start;
    do {
      face_of[x] = faces.size();
      face.push_back(x);
      x = s.rotate(s.opposite(x));
    } while (x != start);
    faces.push_back(std::move(face));
  }
  return faces;
}

/// Internal consistency failure of the face tracer: a bug, not bad input.
class FaceTracingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline FaceStructure faces(const EmbeddingScheme& d, const CoverScheme& cov) {
  const EmbeddingScheme& s = cov.cover;
  const std::size_t c = d.num_crossings();
  FaceStructure fs;
  const auto cover_faces = trace_oriented_faces(s, fs.cover_face_of);
  fs.cover_face_count = cover_faces.size();

  // g(f) must not depend on the representative.
  fs.cover_face_pair.assign(cover_faces.size(), 0);
  for (std::size_t f = 0; f < cover_faces.size(); ++f) {
    const std::size_t g = fs.cover_face_of[s.opposite(cov.deck(cover_faces[f].front()))];
    for (Dart x : cover_faces[f]) {
      if (fs.cover_face_of[s.opposite(cov.deck(x))] != g) {
        throw FaceTracingError("face pairing is not well defined at cover face " + std::to_string(f));
      }
    }
    if (g == f) throw FaceTracingError("cover face " + std::to_string(f) + " is paired with itself");
    fs.cover_face_pair[f] = g;
  }
  for (std::size_t f = 0; f < cover_faces.size(); ++f) {
    if (fs.cover_face_pair[fs.cover_face_pair[f]] != f) {
      throw FaceTracingError("face pairing is not an involution at cover face " + std::to_string(f));
    }
  }

  auto dart_key = [&](Dart x) { return 2 * static_cast<std::size_t>(cov.base(x)) + static_cast<std::size_t>(cov.sheet(x)); };

  for (std::size_t f = 0; f < cover_faces.size(); ++f) {
    const std::size_t g = fs.cover_face_pair[f];
    if (g < f) continue;
    std::size_t key_f = std::numeric_limits<std::size_t>::max();
    std::size_t key_g = key_f;
    for (Dart x : cover_faces[f]) key_f = std::min(key_f, dart_key(x));
    for (Dart x : cover_faces[g]) key_g = std::min(key_g, dart_key(x));
    Region r;
    r.key = std::min(key_f, key_g);
    r.face = key_f < key_g ? cover_faces[f] : cover_faces[g];
    r.mirror_face = key_f < key_g ? cover_faces[g] : cover_faces[f];
    if (r.face.size() != r.mirror_face.size()) {
      throw FaceTracingError("paired cover faces have different lengths");
    }
    r.corner_counts.assign(c, 0);
    r.edge_parity = gf2::BitVector(d.num_edges());
    for (Dart x : r.face) {
      const Dart b = cov.base(x);
      ++r.corner_counts[crossing_of(b)];
      r.edge_parity.flip(d.edge_of(b));
    }
    std::vector<int> mirror_corners(c, 0);
    gf2::BitVector mirror_parity(d.num_edges());
    for (Dart x : r.mirror_face) {
      ++mirror_corners[crossing_of(cov.base(x))];
      mirror_parity.flip(d.edge_of(cov.base(x)));
    }
    if (mirror_corners != r.corner_counts || mirror_parity != r.edge_parity) {
      throw FaceTracingError("the two lifts of a region disagree on its boundary");
    }
    fs.regions.push_back(std::move(r));
  }
  std::sort(fs.regions.begin(), fs.regions.end(), [](const Region& a, const Region& b) { return a.key < b.key; });

  fs.region_of_cover_dart.assign(s.num_darts(), 0);
  for (std::size_t i = 0; i < fs.regions.size(); ++i) {
    for (Dart x : fs.regions[i].face) fs.region_of_cover_dart[x] = i;
    for (Dart x : fs.regions[i].mirror_face) fs.region_of_cover_dart[x] = i;
  }
  return fs;
}

inline FaceStructure faces(const EmbeddingScheme& d) { return faces(d, orientation_double_cover(d)); }

struct SurfaceInfo {
  int euler_characteristic = 2;
  bool orientable = true;
  int genus = 0;
  int h1_dim = 0;

  std::string name() const {
    if (orientable) return genus == 0 ? "sphere" : genus == 1 ? "torus" : "orientable genus " + std::to_string(genus);
    if (genus == 1) return "projective plane";
    if (genus == 2) return "Klein bottle";
    return "nonorientable genus " + std::to_string(genus);
  }

  friend bool operator==(const SurfaceInfo&, const SurfaceInfo&) = default;
};

inline SurfaceInfo surface_info(const EmbeddingScheme& d, const CoverScheme& cov, const FaceStructure& fs) {
  SurfaceInfo info;
  info.euler_characteristic = static_cast<int>(d.num_crossings()) - static_cast<int>(d.num_edges()) +
                              static_cast<int>(fs.num_regions());
  info.orientable = !is_connected(cov.cover);
  info.genus = info.orientable ? (2 - info.euler_characteristic) / 2 : 2 - info.euler_characteristic;
  info.h1_dim = 2 - info.euler_characteristic;
  return info;
}

inline SurfaceInfo surface_info(const EmbeddingScheme& d) {
  const CoverScheme cov = orientation_double_cover(d);
  return surface_info(d, cov, faces(d, cov));
}

}  // namespace rcc
