#pragma once

// Region crossing change as linear algebra over Z/2.
//
// Applying a region crossing change on R switches every crossing once per
// corner of R at that crossing, so only the corner parity matters. The
// incidence matrix M has one row per region and one column per crossing;
// a set of regions switches exactly the crossings in the sum of its rows.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcc/faces.hpp"
#include "rcc/gf2.hpp"
#include "rcc/homology.hpp"
#include "rcc/scheme.hpp"

namespace rcc {

using CrossingSet = std::vector<std::size_t>;
using RegionSet = std::vector<std::size_t>;

inline gf2::BitMatrix incidence_matrix(const EmbeddingScheme& d, const FaceStructure& fs) {
  gf2::BitMatrix m(fs.num_regions(), d.num_crossings());
  for (std::size_t i = 0; i < fs.num_regions(); ++i) {
    for (std::size_t j = 0; j < d.num_crossings(); ++j) {
      if (fs.regions[i].corner_counts[j] % 2 != 0) m.set(i, j);
    }
  }
  return m;
}

inline gf2::BitMatrix incidence_matrix(const EmbeddingScheme& d) { return incidence_matrix(d, faces(d)); }

/// Everything derived from one scheme, computed once.
class Analysis {
 public:
  explicit Analysis(EmbeddingScheme d)
      : scheme_(std::move(d)),
        cover_(orientation_double_cover(scheme_)),
        faces_(rcc::faces(scheme_, cover_)),
        surface_(rcc::surface_info(scheme_, cover_, faces_)),
        components_(rcc::components(scheme_)),
        incidence_(incidence_matrix(scheme_, faces_)),
        incidence_rank_(gf2::rank(incidence_)),
        homology_(scheme_, faces_),
        homology_matrix_(rcc::homology_matrix(homology_, components_)) {}

  const EmbeddingScheme& scheme() const noexcept { return scheme_; }
  const CoverScheme& cover() const noexcept { return cover_; }
  const FaceStructure& faces() const noexcept { return faces_; }
  const SurfaceInfo& surface() const noexcept { return surface_; }
  const std::vector<Component>& components() const noexcept { return components_; }
  const gf2::BitMatrix& incidence() const noexcept { return incidence_; }
  std::size_t incidence_rank() const noexcept { return incidence_rank_; }
  const HomologyContext& homology() const noexcept { return homology_; }
  const HomologyMatrix& homology_matrix() const noexcept { return homology_matrix_; }

  std::size_t num_crossings() const noexcept { return scheme_.num_crossings(); }
  std::size_t num_regions() const noexcept { return faces_.num_regions(); }
  std::size_t num_components() const noexcept { return components_.size(); }

 private:
  EmbeddingScheme scheme_;
  CoverScheme cover_;
  FaceStructure faces_;
  SurfaceInfo surface_;
  std::vector<Component> components_;
  gf2::BitMatrix incidence_;
  std::size_t incidence_rank_;
  HomologyContext homology_;
  HomologyMatrix homology_matrix_;
};

struct RankFormulaReport {
  long long lhs = 0;  // rank M
  long long rhs = 0;  // r - n - 1 + rank N
  bool equal = false;
};

inline RankFormulaReport verify_rank_formula(const Analysis& a) {
  RankFormulaReport rep;
  rep.lhs = static_cast<long long>(a.incidence_rank());
  rep.rhs = static_cast<long long>(a.num_regions()) - static_cast<long long>(a.num_components()) - 1 +
            static_cast<long long>(a.homology_matrix().rank);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

inline RankFormulaReport verify_rank_formula(const EmbeddingScheme& d) { return verify_rank_formula(Analysis(d)); }

/// There are 2^k classes of over/under assignments on the shadow.
inline std::size_t count_classes(const Analysis& a) { return a.num_crossings() - a.incidence_rank(); }
inline std::size_t count_classes(const EmbeddingScheme& d) { return count_classes(Analysis(d)); }

inline gf2::BitVector crossing_indicator(std::size_t num_crossings, const CrossingSet& p) {
  gf2::BitVector v(num_crossings);
  for (std::size_t j : p) {
    if (j >= num_crossings) {
      throw std::out_of_range("crossing index " + std::to_string(j) + " out of range (diagram has " +
                              std::to_string(num_crossings) + " crossings)");
    }
    v.set(j);
  }
  return v;
}

inline gf2::BitVector region_indicator(std::size_t num_regions, const RegionSet& s) {
  gf2::BitVector v(num_regions);
  for (std::size_t i : s) {
    if (i >= num_regions) {
      throw std::out_of_range("region index " + std::to_string(i) + " out of range (diagram has " +
                              std::to_string(num_regions) + " regions)");
    }
    v.flip(i);
  }
  return v;
}

/// Crossings switched by applying region crossing changes on every region in s.
inline gf2::BitVector switched_crossings(const Analysis& a, const RegionSet& s) {
  return a.incidence().combine_rows(region_indicator(a.num_regions(), s));
}

/// A set of regions switching exactly the crossings in p, or nullopt.
inline std::optional<RegionSet> admissible(const Analysis& a, const CrossingSet& p) {
  const gf2::BitVector target = crossing_indicator(a.num_crossings(), p);
  auto x = gf2::in_rowspace(a.incidence(), target);
  if (!x) return std::nullopt;
  if (a.incidence().combine_rows(*x) != target) throw std::logic_error("admissibility certificate failed");
  return x->support();
}

inline std::optional<RegionSet> admissible(const EmbeddingScheme& d, const CrossingSet& p) {
  return admissible(Analysis(d), p);
}

/// Basis of the region sets that switch no crossing (null space of Mᵀ).
inline std::vector<RegionSet> ineffective_basis(const Analysis& a) {
  std::vector<RegionSet> out;
  for (const auto& v : gf2::nullspace_basis(a.incidence().transpose())) out.push_back(v.support());
  return out;
}

inline std::vector<RegionSet> ineffective_basis(const EmbeddingScheme& d) { return ineffective_basis(Analysis(d)); }

inline EmbeddingScheme toggle_crossings(const EmbeddingScheme& d, const gf2::BitVector& which) {
  DiagramData data = d.data();
  for (std::size_t j = which.find_first(); j < which.size(); j = which.find_next(j + 1)) {
    data.crossings[j].over_pair ^= 1;
  }
  return validate(std::move(data));
}

inline EmbeddingScheme apply_rcc(const Analysis& a, const RegionSet& s) {
  return toggle_crossings(a.scheme(), switched_crossings(a, s));
}

inline EmbeddingScheme apply_rcc(const EmbeddingScheme& d, const RegionSet& s) { return apply_rcc(Analysis(d), s); }

inline bool same_shadow(const EmbeddingScheme& a, const EmbeddingScheme& b) {
  if (a.num_crossings() != b.num_crossings() || a.data().edges != b.data().edges) return false;
  for (std::size_t i = 0; i < a.num_crossings(); ++i) {
    if (a.crossing(i).rotation != b.crossing(i).rotation) return false;
  }
  return true;
}

class ShadowMismatch : public std::invalid_argument {
 public:
  ShadowMismatch() : std::invalid_argument("diagrams do not share the same shadow") {}
};

/// Region set turning a's diagram into `other`, or nullopt.
inline std::optional<RegionSet> rcc_equivalent(const Analysis& a, const EmbeddingScheme& other) {
  if (!same_shadow(a.scheme(), other)) throw ShadowMismatch();
  gf2::BitVector diff(a.num_crossings());
  for (std::size_t j = 0; j < a.num_crossings(); ++j) {
    if (a.scheme().crossing(j).over_pair != other.crossing(j).over_pair) diff.set(j);
  }
  auto x = gf2::in_rowspace(a.incidence(), diff);
  if (!x) return std::nullopt;
  return x->support();
}

inline std::optional<RegionSet> rcc_equivalent(const EmbeddingScheme& d1, const EmbeddingScheme& d2) {
  return rcc_equivalent(Analysis(d1), d2);
}

/// Region 2-colouring with the two sides of every edge in different colours:
/// for each edge, the colours of the regions with odd edge parity sum to 1.
/// Returns the colour (0 or 1) of each region.
inline std::optional<std::vector<int>> checkerboard(const Analysis& a) {
  gf2::BitMatrix parity(0, a.scheme().num_edges());
  for (const Region& r : a.faces().regions) parity.append_row(r.edge_parity);
  gf2::BitVector ones(a.scheme().num_edges());
  for (std::size_t e = 0; e < ones.size(); ++e) ones.set(e);
  auto x = gf2::solve(parity.transpose(), ones);
  if (!x) return std::nullopt;

  std::vector<int> colour(a.num_regions());
  RegionSet black;
  RegionSet white;
  for (std::size_t i = 0; i < colour.size(); ++i) {
    colour[i] = x->get(i) ? 1 : 0;
    (colour[i] != 0 ? black : white).push_back(i);
  }
  if (switched_crossings(a, black).any() || switched_crossings(a, white).any()) {
    throw std::logic_error("checkerboard colour class is not ineffective");
  }
  return colour;
}

inline std::optional<std::vector<int>> checkerboard(const EmbeddingScheme& d) { return checkerboard(Analysis(d)); }

}  // namespace rcc
