#pragma once

// Admissibility through bi-colourings of semi-arcs.
//
// A bi-colouring of (L, P) colours each edge 0 or 1 so that along each strand
// through a crossing the colour changes exactly when the crossing is in P.
// P is admissible iff some bi-colouring has a null-homologous 1-coloured
// set. Bi-colourings of a fixed P differ by sums of whole components, so it
// is enough to ask whether the class of one particular solution lies in the
// span of the component classes. The incidence matrix is never consulted.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rcc/gf2.hpp"
#include "rcc/homology.hpp"
#include "rcc/rcc.hpp"
#include "rcc/scheme.hpp"

namespace rcc {

struct Bicoloring {
  gf2::BitVector colours;  // one per edge
  CrossingSet crossings;
};

/// One equation per through-pair: colour(e1) + colour(e2) = [crossing in P].
inline gf2::BitMatrix bicoloring_system(const EmbeddingScheme& d) {
  gf2::BitMatrix a(2 * d.num_crossings(), d.num_edges());
  for (std::size_t v = 0; v < d.num_crossings(); ++v) {
    for (int pair = 0; pair < 2; ++pair) {
      const auto& rot = d.crossing(v).rotation;
      a.row(2 * v + static_cast<std::size_t>(pair)).flip(d.edge_of(rot[static_cast<std::size_t>(pair)]));
      a.row(2 * v + static_cast<std::size_t>(pair)).flip(d.edge_of(rot[static_cast<std::size_t>(pair + 2)]));
    }
  }
  return a;
}

inline gf2::BitVector bicoloring_rhs(const EmbeddingScheme& d, const CrossingSet& p) {
  const gf2::BitVector in_p = crossing_indicator(d.num_crossings(), p);
  gf2::BitVector rhs(2 * d.num_crossings());
  for (std::size_t v = 0; v < d.num_crossings(); ++v) {
    if (in_p.get(v)) {
      rhs.set(2 * v);
      rhs.set(2 * v + 1);
    }
  }
  return rhs;
}

inline bool satisfies(const EmbeddingScheme& d, const Bicoloring& phi) {
  if (phi.colours.size() != d.num_edges()) return false;
  return bicoloring_system(d).multiply(phi.colours) == bicoloring_rhs(d, phi.crossings);
}

/// A particular bi-colouring of (d, p), or nullopt if none exists.
inline std::optional<Bicoloring> bicoloring(const EmbeddingScheme& d, const CrossingSet& p) {
  auto x = gf2::solve(bicoloring_system(d), bicoloring_rhs(d, p));
  if (!x) return std::nullopt;
  return Bicoloring{std::move(*x), p};
}

class InvalidBicoloring : public std::invalid_argument {
 public:
  InvalidBicoloring() : std::invalid_argument("colouring violates the bi-colouring constraints of its crossing set") {}
};

/// Homology class of the 1-coloured edges.
inline gf2::BitVector phi_class(const Analysis& a, const Bicoloring& phi) {
  if (!satisfies(a.scheme(), phi)) throw InvalidBicoloring();
  return a.homology().class_of(phi.colours);
}

inline gf2::BitVector phi_class(const EmbeddingScheme& d, const Bicoloring& phi) { return phi_class(Analysis(d), phi); }

struct BicolorVerdict {
  bool admissible = false;
  std::optional<Bicoloring> witness;  // a bi-colouring with zero class
};

inline BicolorVerdict admissible_by_bicoloring(const Analysis& a, const CrossingSet& p) {
  auto phi = bicoloring(a.scheme(), p);
  if (!phi) return {};
  const gf2::BitVector cls = phi_class(a, *phi);
  auto coeffs = gf2::in_rowspace(a.homology_matrix().matrix, cls);
  if (!coeffs) return {};
  // Flipping component i adds [K_i] to the class.
  for (std::size_t i = coeffs->find_first(); i < coeffs->size(); i = coeffs->find_next(i + 1)) {
    for (std::size_t e : a.components()[i].edges) phi->colours.flip(e);
  }
  if (phi_class(a, *phi).any()) throw std::logic_error("bi-colouring witness is not null-homologous");
  return {true, std::move(phi)};
}

inline BicolorVerdict admissible_by_bicoloring(const EmbeddingScheme& d, const CrossingSet& p) {
  return admissible_by_bicoloring(Analysis(d), p);
}

}  // namespace rcc
