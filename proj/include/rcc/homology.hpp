#pragma once

// Z/2 first homology of the surface, computed from the embedded graph.
//
// Cycles are edge subsets with an even number of edge-ends at every crossing.
// Region boundaries (edge-parity vectors) span the boundary space. A cycle is
// reduced against the echelon form of the boundary space; the reduced cycle
// basis is itself put in echelon form, and the class of a cycle is its vector
// of coefficients on that reduced basis.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcc/faces.hpp"
#include "rcc/gf2.hpp"
#include "rcc/scheme.hpp"

namespace rcc {

/// Thrown by class_of when the edge set is not a Z/2 cycle.
class NotACycleError : public std::invalid_argument {
 public:
  NotACycleError(std::size_t crossing)
      : std::invalid_argument("edge set is not a cycle: odd number of edge-ends at crossing " +
                              std::to_string(crossing)),
        crossing_(crossing) {}
  std::size_t crossing() const noexcept { return crossing_; }

 private:
  std::size_t crossing_;
};

class HomologyContext {
 public:
  HomologyContext(const EmbeddingScheme& d, const FaceStructure& fs) : num_edges_(d.num_edges()) {
    const std::size_t c = d.num_crossings();

    vertex_edge_ = gf2::BitMatrix(c, num_edges_);
    for (std::size_t e = 0; e < num_edges_; ++e) {
      for (Dart x : d.edge(e).darts) vertex_edge_.row(crossing_of(x)).flip(e);
    }

    gf2::BitMatrix boundaries(0, num_edges_);
    for (const Region& r : fs.regions) boundaries.append_row(r.edge_parity);
    boundary_ = gf2::echelon(boundaries);

    cycle_basis_ = gf2::nullspace_basis(vertex_edge_);
    gf2::BitMatrix reduced_cycles(0, num_edges_);
    for (const auto& z : cycle_basis_) reduced_cycles.append_row(reduce(z));
    quotient_ = gf2::echelon(reduced_cycles);
  }

  std::size_t num_edges() const noexcept { return num_edges_; }
  std::size_t dimension() const noexcept { return quotient_.rank(); }
  std::size_t boundary_rank() const noexcept { return boundary_.rank(); }
  std::size_t cycle_rank() const noexcept { return cycle_basis_.size(); }
  const std::vector<gf2::BitVector>& cycle_basis() const noexcept { return cycle_basis_; }

  /// Crossing with an odd number of edge-ends in z, if any.
  std::optional<std::size_t> odd_crossing(const gf2::BitVector& z) const {
    const gf2::BitVector degrees = vertex_edge_.multiply(z);
    const std::size_t v = degrees.find_first();
    if (v < degrees.size()) return v;
    return std::nullopt;
  }

  bool is_cycle(const gf2::BitVector& z) const { return !odd_crossing(z).has_value(); }

  /// Homology class of the cycle z, a vector of length dimension().
  gf2::BitVector class_of(const gf2::BitVector& z) const {
    if (z.size() != num_edges_) {
      throw std::invalid_argument("class_of: edge vector has length " + std::to_string(z.size()) +
                                  ", expected " + std::to_string(num_edges_));
    }
    if (auto v = odd_crossing(z)) throw NotACycleError(*v);
    gf2::BitVector w = reduce(z);
    gf2::BitVector cls(dimension());
    for (std::size_t i = 0; i < quotient_.rank(); ++i) {
      if (w.get(quotient_.pivot_cols[i])) {
        cls.set(i);
        w ^= quotient_.reduced.row(i);
      }
    }
    if (w.any()) throw std::logic_error("cycle does not reduce into the quotient basis");
    return cls;
  }

  gf2::BitVector class_of_edges(const std::vector<std::size_t>& edges) const {
    return class_of(gf2::BitVector::from_indices(num_edges_, edges));
  }

 private:
  gf2::BitVector reduce(gf2::BitVector z) const {
    for (std::size_t i = 0; i < boundary_.rank(); ++i) {
      if (z.get(boundary_.pivot_cols[i])) z ^= boundary_.reduced.row(i);
    }
    return z;
  }

  std::size_t num_edges_;
  gf2::BitMatrix vertex_edge_;
  gf2::Echelon boundary_;
  std::vector<gf2::BitVector> cycle_basis_;
  gf2::Echelon quotient_;
};

inline HomologyContext homology_context(const EmbeddingScheme& d) { return HomologyContext(d, faces(d)); }

/// Rows are the classes of the link components, in component order.
struct HomologyMatrix {
  gf2::BitMatrix matrix;
  std::size_t rank = 0;
};

inline HomologyMatrix homology_matrix(const HomologyContext& ctx, const std::vector<Component>& comps) {
  HomologyMatrix h{gf2::BitMatrix(0, ctx.dimension()), 0};
  for (const Component& k : comps) h.matrix.append_row(ctx.class_of_edges(k.edges));
  h.rank = gf2::rank(h.matrix);
  return h;
}

inline HomologyMatrix homology_matrix(const EmbeddingScheme& d) {
  return homology_matrix(homology_context(d), components(d));
}

}  // namespace rcc
