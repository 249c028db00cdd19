#pragma once

// Diagram transformations: the second Reidemeister move, crossing switches,
// and seeded random schemes.

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rcc/faces.hpp"
#include "rcc/rcc.hpp"
#include "rcc/scheme.hpp"

namespace rcc {

/// One side of an edge at a dart d. The side `before` d borders the corner
/// between d's rotation predecessor and d; the side `after` borders the corner
/// between d and its successor.
struct EdgeSide {
  Dart dart = 0;
  bool after = false;
};

enum class Strand { a, b };

struct R2Spec {
  EdgeSide a;
  EdgeSide b;
  Strand over = Strand::a;
};

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Dart cover_dart(const CoverScheme& cov, const EdgeSide& s) { return cov.lift(s.dart, s.after ? 1 : 0); }

inline int sheet_sign(int sheet) noexcept { return sheet == 0 ? 1 : -1; }

}  // namespace detail

/// Pushes a finger of strand a across the region bordering both named sides
/// and over (or under) strand b, creating crossings c and c+1 with a new
/// bigon between them.
///
/// Strand a's original sign stays on the segment holding its lower-id original
/// dart and the other two segments get +1. Strand b's signs are forced: its
/// middle segment gets +1 and its end segments are signed so that both new
/// crossings sit on the same sheet as strand a in the region's lift.
inline EmbeddingScheme reidemeister_two(const Analysis& an, const R2Spec& spec) {
  const EmbeddingScheme& d = an.scheme();
  const CoverScheme& cov = an.cover();
  const FaceStructure& fs = an.faces();
  const EmbeddingScheme& s = cov.cover;
  const std::size_t c = d.num_crossings();

  for (const EdgeSide* side : {&spec.a, &spec.b}) {
    if (side->dart >= d.num_darts()) {
      throw MoveError("dart " + std::to_string(side->dart) + " out of range");
    }
  }
  const Dart xa = detail::cover_dart(cov, spec.a);
  Dart xb = detail::cover_dart(cov, spec.b);
  if (fs.region_of_cover_dart[xa] != fs.region_of_cover_dart[xb]) {
    throw MoveError("darts " + std::to_string(spec.a.dart) + " and " + std::to_string(spec.b.dart) +
                    " do not border a common region");
  }
  const std::size_t face = fs.cover_face_of[xa];
  if (fs.cover_face_of[xb] != face) xb = s.opposite(cov.deck(xb));
  if (fs.cover_face_of[xb] != face) throw std::logic_error("side is missing from its region's lift");

  const Dart pa = cov.base(xa);
  const Dart pb = cov.base(xb);
  const std::size_t ea = d.edge_of(pa);
  const std::size_t eb = d.edge_of(pb);
  if (ea == eb) throw MoveError("both sides lie on edge " + std::to_string(ea));
  const Dart qa = d.opposite(pa);
  const Dart qb = d.opposite(pb);
  const int sa = d.edge(ea).sign;
  const int sb = d.edge(eb).sign;
  const int eps = detail::sheet_sign(cov.sheet(xa));
  const int delta = detail::sheet_sign(cov.sheet(xb));
  const int alpha = pa < qa ? eps * sa : eps;

  // Local picture on sheet alpha, counterclockwise: at X the b strand runs
  // east to Y and west to qb, the a strand north to pa and south to Y; at Y
  // b runs east to pb and west to X, a runs north to qa and south to X.
  const auto x0 = static_cast<Dart>(4 * c);
  const auto y0 = static_cast<Dart>(4 * c + 4);
  struct Roles {
    Dart east, north, west, south;
  };
  auto roles = [alpha](Dart base) {
    return alpha > 0 ? Roles{base, base + 1, base + 2, base + 3} : Roles{base, base + 3, base + 2, base + 1};
  };
  const Roles X = roles(x0);
  const Roles Y = roles(y0);
  const int over_pair = spec.over == Strand::a ? 1 : 0;

  DiagramData data = d.data();
  data.crossings.push_back({{x0, x0 + 1, x0 + 2, x0 + 3}, over_pair});
  data.crossings.push_back({{y0, y0 + 1, y0 + 2, y0 + 3}, over_pair});

  // Segments listed from p to q; the one holding the lower original dart
  // reuses the edge slot, keeping the original dart in its original position.
  auto splice = [&data](std::size_t slot, Dart p, Dart q, const std::array<Edge, 3>& segs) {
    const Edge original = data.edges[slot];
    const std::size_t keep = p < q ? 0 : 2;
    const Dart kept = p < q ? p : q;
    Edge replaced = segs[keep];
    const Dart fresh = replaced.darts[0] == kept ? replaced.darts[1] : replaced.darts[0];
    replaced.darts = original.darts[0] == kept ? std::array<Dart, 2>{kept, fresh} : std::array<Dart, 2>{fresh, kept};
    data.edges[slot] = replaced;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != keep) data.edges.push_back(segs[i]);
    }
  };

  splice(ea, pa, qa,
         {Edge{{pa, X.north}, eps * alpha}, Edge{{X.south, Y.south}, 1}, Edge{{Y.north, qa}, alpha * eps * sa}});
  splice(eb, pb, qb,
         {Edge{{pb, Y.east}, delta * alpha}, Edge{{Y.west, X.east}, 1}, Edge{{X.west, qb}, alpha * delta * sb}});

  EmbeddingScheme out = validate(std::move(data));

  const Analysis after(out);
  bool bigon = false;
  for (const Region& r : after.faces().regions) {
    if (r.degree() == 2 && r.corner_counts[c] == 1 && r.corner_counts[c + 1] == 1) bigon = true;
  }
  if (after.num_regions() != an.num_regions() + 2 || !bigon || after.surface() != an.surface()) {
    throw std::logic_error("second Reidemeister move did not produce the expected bigon");
  }
  return out;
}

inline EmbeddingScheme reidemeister_two(const EmbeddingScheme& d, const R2Spec& spec) {
  return reidemeister_two(Analysis(d), spec);
}

inline EmbeddingScheme switch_crossing(const EmbeddingScheme& d, std::size_t i) {
  if (i >= d.num_crossings()) {
    throw std::out_of_range("crossing index " + std::to_string(i) + " out of range");
  }
  DiagramData data = d.data();
  data.crossings[i].over_pair ^= 1;
  return validate(std::move(data));
}

/// Deterministic generator used by random_diagram: a 64-bit Mersenne twister
/// with rejection-sampled bounded integers and 53-bit uniform doubles, so the
/// stream does not depend on the standard library's distributions.
class SchemeRng {
 public:
  explicit SchemeRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

inline constexpr int random_diagram_attempts = 1000;

/// Random perfect matching on the 4c darts, signs negative with the given
/// probability, random over flags; redrawn until the shadow is connected.
inline EmbeddingScheme random_diagram(std::size_t c, double negative_sign_probability, std::uint64_t seed) {
  if (c == 0) throw std::invalid_argument("random_diagram needs at least one crossing");
  if (!(negative_sign_probability >= 0.0 && negative_sign_probability <= 1.0)) {
    throw std::invalid_argument("negative sign probability must lie in [0, 1]");
  }
  SchemeRng rng(seed);
  const std::size_t n = 4 * c;
  for (int attempt = 0; attempt < random_diagram_attempts; ++attempt) {
    std::vector<Dart> darts(n);
    for (std::size_t i = 0; i < n; ++i) darts[i] = static_cast<Dart>(i);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(darts[i], darts[rng.below(i + 1)]);

    DiagramData data;
    for (std::size_t i = 0; i < c; ++i) {
      const auto b = static_cast<Dart>(4 * i);
      data.crossings.push_back({{b, b + 1, b + 2, b + 3}, static_cast<int>(rng.next() & 1U)});
    }
    for (std::size_t k = 0; k < n; k += 2) {
      const int sign = rng.unit() < negative_sign_probability ? -1 : 1;
      data.edges.push_back({{darts[k], darts[k + 1]}, sign});
    }
    if (detail::count_graph_components(c, data.edges) == 1) return validate(std::move(data));
  }
  throw std::runtime_error("random_diagram: no connected scheme after " + std::to_string(random_diagram_attempts) +
                           " attempts");
}

}  // namespace rcc
