#pragma once

// Link diagrams on closed surfaces as signed rotation systems.
//
// Crossing i owns the darts 4i..4i+3. Its rotation lists them in cyclic
// order; the position of a dart in that list is its rotation position, and
// positions {0,2} and {1,3} are the two strands passing straight through.
// over_pair == 0 means the {0,2} strand is the over-strand.
//
// Every dart lies on exactly one edge (semi-arc). An edge carries a sign; a
// -1 edge reverses the local orientation, which is how nonorientable
// surfaces are encoded.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rcc {

using Dart = std::uint32_t;

inline constexpr std::size_t crossing_of(Dart d) noexcept { return d / 4; }

struct Crossing {
  std::array<Dart, 4> rotation{};
  int over_pair = 0;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Edge {
  std::array<Dart, 2> darts{};
  int sign = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unchecked diagram data, as read from a file or built by a move.
struct DiagramData {
  std::vector<Crossing> crossings;
  std::vector<Edge> edges;

  friend bool operator==(const DiagramData&, const DiagramData&) = default;
};

struct Violation {
  enum class Kind {
    no_crossings,
    bad_rotation,
    bad_over_flag,
    bad_sign,
    dart_out_of_range,
    dart_reused,
    dart_unused,
    self_paired_dart,
    disconnected,
  };
  Kind kind;
  std::size_t index;  // crossing, edge or dart index depending on kind
  std::string message;
};

/// Thrown when diagram data breaks a structural invariant.
class DiagramError : public std::runtime_error {
 public:
  explicit DiagramError(std::vector<Violation> violations)
      : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  static std::string summarize(const std::vector<Violation>& v) {
    std::string s = "invalid diagram";
    for (const auto& x : v) s += "; " + x.message;
    return s;
  }
  std::vector<Violation> violations_;
};

class EmbeddingScheme;
EmbeddingScheme validate(DiagramData data);

/// A validated diagram. Immutable; build one with validate().
class EmbeddingScheme {
 public:
  const DiagramData& data() const noexcept { return data_; }
  std::size_t num_crossings() const noexcept { return data_.crossings.size(); }
  std::size_t num_edges() const noexcept { return data_.edges.size(); }
  std::size_t num_darts() const noexcept { return 4 * data_.crossings.size(); }

  const Crossing& crossing(std::size_t i) const { return data_.crossings.at(i); }
  const Edge& edge(std::size_t e) const { return data_.edges.at(e); }

  std::size_t edge_of(Dart d) const { return dart_edge_.at(d); }
  /// Position of d in its crossing's rotation.
  int position_of(Dart d) const { return dart_position_.at(d); }
  int sign_of(Dart d) const { return data_.edges[edge_of(d)].sign; }

  /// The dart at the other end of d's edge.
  Dart opposite(Dart d) const {
    const Edge& e = data_.edges[edge_of(d)];
    return e.darts[0] == d ? e.darts[1] : e.darts[0];
  }

  /// Next dart in the cyclic rotation at d's crossing.
  Dart rotate(Dart d, int steps = 1) const {
    const Crossing& c = data_.crossings[crossing_of(d)];
    return c.rotation[static_cast<std::size_t>(((position_of(d) + steps) % 4 + 4) % 4)];
  }

  /// The dart continuing the same strand straight through the crossing.
  Dart through_partner(Dart d) const { return rotate(d, 2); }

  bool over_at(std::size_t crossing, int pair) const {
    return data_.crossings.at(crossing).over_pair == pair;
  }

  friend bool operator==(const EmbeddingScheme& a, const EmbeddingScheme& b) { return a.data_ == b.data_; }

 private:
  friend EmbeddingScheme validate(DiagramData data);
  friend EmbeddingScheme make_unchecked(DiagramData data);

  explicit EmbeddingScheme(DiagramData data) : data_(std::move(data)) { index(); }

  void index() {
    const std::size_t n = num_darts();
    dart_edge_.assign(n, 0);
    dart_position_.assign(n, 0);
    for (std::size_t i = 0; i < data_.crossings.size(); ++i) {
      for (int k = 0; k < 4; ++k) dart_position_[data_.crossings[i].rotation[k]] = k;
    }
    for (std::size_t e = 0; e < data_.edges.size(); ++e) {
      for (Dart d : data_.edges[e].darts) dart_edge_[d] = e;
    }
  }

  DiagramData data_;
  std::vector<std::size_t> dart_edge_;
  std::vector<int> dart_position_;
};

/// Builds a scheme from data known to satisfy every dart invariant except
/// possibly connectivity. Used for the orientation double cover.
inline EmbeddingScheme make_unchecked(DiagramData data) { return EmbeddingScheme(std::move(data)); }

namespace detail {

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

/// Number of connected components of the 4-valent graph (crossings as vertices).
inline std::size_t count_graph_components(std::size_t num_crossings, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(num_crossings);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::size_t components = num_crossings;
  for (const Edge& e : edges) {
    const std::size_t a = find_root(parent, crossing_of(e.darts[0]));
    const std::size_t b = find_root(parent, crossing_of(e.darts[1]));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace detail

/// Checks every structural invariant and returns the scheme, or throws a
/// DiagramError listing all violations found.
inline EmbeddingScheme validate(DiagramData data) {
  std::vector<Violation> bad;
  using K = Violation::Kind;
  const std::size_t c = data.crossings.size();
  const std::size_t n = 4 * c;

  if (c == 0) bad.push_back({K::no_crossings, 0, "diagram has no crossings"});

  for (std::size_t i = 0; i < c; ++i) {
    const Crossing& x = data.crossings[i];
    std::array<bool, 4> seen{};
    bool ok = true;
    for (Dart d : x.rotation) {
      if (crossing_of(d) != i || seen[d % 4]) {
        ok = false;
        break;
      }
      seen[d % 4] = true;
    }
    if (!ok) {
      bad.push_back({K::bad_rotation, i,
                     "crossing " + std::to_string(i) + ": rotation must be a permutation of darts " +
                         std::to_string(4 * i) + ".." + std::to_string(4 * i + 3)});
    }
    if (x.over_pair != 0 && x.over_pair != 1) {
      bad.push_back({K::bad_over_flag, i, "crossing " + std::to_string(i) + ": over flag must be 0 or 1"});
    }
  }

  std::vector<int> uses(n, 0);
  for (std::size_t e = 0; e < data.edges.size(); ++e) {
    const Edge& edge = data.edges[e];
    if (edge.sign != 1 && edge.sign != -1) {
      bad.push_back({K::bad_sign, e, "edge " + std::to_string(e) + ": sign must be +1 or -1"});
    }
    if (edge.darts[0] == edge.darts[1]) {
      bad.push_back({K::self_paired_dart, e,
                     "edge " + std::to_string(e) + ": self-paired dart " + std::to_string(edge.darts[0])});
    }
    for (Dart d : edge.darts) {
      if (d >= n) {
        bad.push_back({K::dart_out_of_range, e,
                       "edge " + std::to_string(e) + ": dart " + std::to_string(d) + " out of range"});
      } else {
        ++uses[d];
      }
    }
  }
  for (std::size_t d = 0; d < n; ++d) {
    if (uses[d] > 1) {
      bad.push_back({K::dart_reused, d, "dart " + std::to_string(d) + " used by more than one edge end"});
    } else if (uses[d] == 0) {
      bad.push_back({K::dart_unused, d, "dart " + std::to_string(d) + " is not on any edge"});
    }
  }

  if (bad.empty() && detail::count_graph_components(c, data.edges) != 1) {
    bad.push_back({K::disconnected, 0, "diagram is disconnected"});
  }
  if (!bad.empty()) throw DiagramError(std::move(bad));
  return EmbeddingScheme(std::move(data));
}

// --- link components -------------------------------------------------------

struct Passage {
  std::size_t crossing;
  int through_pair;  // 0 for positions {0,2}, 1 for {1,3}

  friend bool operator==(const Passage&, const Passage&) = default;
};

struct Component {
  std::vector<std::size_t> edges;  // in traversal order
  std::vector<Passage> passages;
};

/// Traces each strand: leave a dart along its edge, arrive at the far dart,
/// continue straight through to its through-partner. Components are ordered by
/// their smallest edge id and each walk starts on that edge.
inline std::vector<Component> components(const EmbeddingScheme& d) {
  std::vector<bool> used(d.num_edges(), false);
  std::vector<Component> out;
  for (std::size_t start = 0; start < d.num_edges(); ++start) {
    if (used[start]) continue;
    Component comp;
    Dart at = d.edge(start).darts[0];
    while (true) {
      const std::size_t e = d.edge_of(at);
      if (used[e]) break;
      used[e] = true;
      comp.edges.push_back(e);
      const Dart arrive = d.opposite(at);
      comp.passages.push_back({crossing_of(arrive), d.position_of(arrive) % 2});
      at = d.through_partner(arrive);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// --- planar diagram codes --------------------------------------------------

/// Builds a scheme from a PD code: crossing i binds darts 4i..4i+3 to its four
/// labels in listed order, equal labels become +1 edges (ordered by first
/// occurrence), and the {1,3} strand is over.
inline EmbeddingScheme import_pd(const std::vector<std::array<long long, 4>>& code) {
  if (code.empty()) throw std::invalid_argument("PD code is empty");
  std::map<long long, std::vector<Dart>> where;
  std::vector<long long> first_seen;
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (int k = 0; k < 4; ++k) {
      auto& slots = where[code[i][k]];
      if (slots.empty()) first_seen.push_back(code[i][k]);
      slots.push_back(static_cast<Dart>(4 * i + k));
    }
  }
  DiagramData data;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto base = static_cast<Dart>(4 * i);
    data.crossings.push_back({{base, base + 1, base + 2, base + 3}, 1});
  }
  for (long long label : first_seen) {
    const auto& slots = where[label];
    if (slots.size() != 2) {
      throw std::invalid_argument("PD label " + std::to_string(label) + " occurs " +
                                  std::to_string(slots.size()) + " times (expected 2)");
    }
    data.edges.push_back({{slots[0], slots[1]}, 1});
  }
  return validate(std::move(data));
}

// --- fixtures --------------------------------------------------------------

namespace fixtures {

/// One-crossing kink on the sphere.
inline EmbeddingScheme curl() { return validate({{{{0, 1, 2, 3}, 0}}, {{{0, 1}, 1}, {{2, 3}, 1}}}); }

/// One-crossing diagram on the torus with two components.
inline EmbeddingScheme torus11() { return validate({{{{0, 1, 2, 3}, 0}}, {{{0, 2}, 1}, {{1, 3}, 1}}}); }

/// One-crossing knot on the projective plane.
inline EmbeddingScheme rp2curl() { return validate({{{{0, 1, 2, 3}, 0}}, {{{0, 1}, -1}, {{2, 3}, 1}}}); }

inline std::vector<std::array<long long, 4>> trefoil_pd() { return {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}; }

inline EmbeddingScheme trefoil() { return import_pd(trefoil_pd()); }

}  // namespace fixtures

}  // namespace rcc
