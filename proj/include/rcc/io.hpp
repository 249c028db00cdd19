#pragma once

// Diagram files (JSON, strict):
//   {"crossings":[{"rotation":[d0,d1,d2,d3],"over":0|1},...],
//    "edges":[{"darts":[a,b],"sign":1|-1},...]}
// or a planar diagram code {"pd":[[1,4,2,5],...]}.

#include <array>
#include <cstddef>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rcc/scheme.hpp"

namespace rcc {

/// Malformed document: bad JSON, wrong shape, unknown keys.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using json = nlohmann::json;

inline void require_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ParseError(where + ": unknown field \"" + key + "\"");
  }
  for (const auto& key : allowed) {
    if (!obj.contains(key)) throw ParseError(where + ": missing field \"" + key + "\"");
  }
}

inline long long get_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + " must be an integer");
  return v.get<long long>();
}

inline Dart get_dart(const json& v, const std::string& where) {
  const long long x = get_integer(v, where);
  if (x < 0 || x > 0xffffffffLL) throw ParseError(where + " must be a non-negative dart id");
  return static_cast<Dart>(x);
}

inline const json& get_array(const json& v, std::size_t expected, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + " must be an array");
  if (expected != 0 && v.size() != expected) {
    throw ParseError(where + " must have exactly " + std::to_string(expected) + " entries");
  }
  return v;
}

}  // namespace detail

/// Raw data from a crossings/edges document, before validation.
inline DiagramData parse_diagram_data(const nlohmann::json& doc) {
  using detail::get_array;
  detail::require_keys(doc, {"crossings", "edges"}, "diagram");
  DiagramData data;
  const auto& crossings = get_array(doc.at("crossings"), 0, "crossings");
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const std::string where = "crossings[" + std::to_string(i) + "]";
    detail::require_keys(crossings[i], {"rotation", "over"}, where);
    const auto& rot = get_array(crossings[i].at("rotation"), 4, where + ".rotation");
    Crossing x;
    for (std::size_t k = 0; k < 4; ++k) x.rotation[k] = detail::get_dart(rot[k], where + ".rotation");
    const long long over = detail::get_integer(crossings[i].at("over"), where + ".over");
    x.over_pair = (over == 0 || over == 1) ? static_cast<int>(over) : -1;
    data.crossings.push_back(x);
  }
  const auto& edges = get_array(doc.at("edges"), 0, "edges");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    detail::require_keys(edges[e], {"darts", "sign"}, where);
    const auto& darts = get_array(edges[e].at("darts"), 2, where + ".darts");
    Edge edge;
    edge.darts = {detail::get_dart(darts[0], where + ".darts"), detail::get_dart(darts[1], where + ".darts")};
    const long long sign = detail::get_integer(edges[e].at("sign"), where + ".sign");
    if (sign != 1 && sign != -1) throw ParseError(where + ": sign must be +1 or -1");
    edge.sign = static_cast<int>(sign);
    data.edges.push_back(edge);
  }
  return data;
}

inline std::vector<std::array<long long, 4>> parse_pd(const nlohmann::json& doc) {
  detail::require_keys(doc, {"pd"}, "diagram");
  const auto& code = detail::get_array(doc.at("pd"), 0, "pd");
  std::vector<std::array<long long, 4>> out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const std::string where = "pd[" + std::to_string(i) + "]";
    const auto& tuple = detail::get_array(code[i], 4, where);
    std::array<long long, 4> t{};
    for (std::size_t k = 0; k < 4; ++k) t[k] = detail::get_integer(tuple[k], where);
    out.push_back(t);
  }
  return out;
}

/// Parses either document form and validates. Throws ParseError for
/// malformed documents and DiagramError for invariant violations.
inline EmbeddingScheme parse_diagram(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("pd")) {
    const auto code = parse_pd(doc);
    try {
      return import_pd(code);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return validate(parse_diagram_data(doc));
}

inline std::string serialize_diagram(const DiagramData& d) {
  std::ostringstream out;
  out << "{\n  \"crossings\": [";
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& r = d.crossings[i].rotation;
    out << (i == 0 ? "\n" : ",\n") << "    {\"rotation\": [" << r[0] << ", " << r[1] << ", " << r[2] << ", " << r[3]
        << "], \"over\": " << d.crossings[i].over_pair << "}";
  }
  out << "\n  ],\n  \"edges\": [";
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto& edge = d.edges[e];
    out << (e == 0 ? "\n" : ",\n") << "    {\"darts\": [" << edge.darts[0] << ", " << edge.darts[1]
        << "], \"sign\": " << edge.sign << "}";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

inline std::string serialize_diagram(const EmbeddingScheme& d) { return serialize_diagram(d.data()); }

}  // namespace rcc
