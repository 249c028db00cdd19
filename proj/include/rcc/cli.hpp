#pragma once

// Command-line front end. run() never touches the process streams so it can
// be driven from tests; tools/rcc.cpp forwards argv and prints the result.
//
// Exit codes: 0 success (including negative answers such as "infeasible"),
// 2 usage or parse errors, 3 invalid diagram.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcc/bicolor.hpp"
#include "rcc/io.hpp"
#include "rcc/moves.hpp"
#include "rcc/rcc.hpp"
#include "rcc/scheme.hpp"

namespace rcc::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_invalid_diagram = 3;

struct CommandResult {
  int exit_code = exit_ok;
  std::string output;
  std::string diagnostics;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline EmbeddingScheme load(const std::string& path) { return parse_diagram(read_file(path)); }

inline std::vector<std::size_t> parse_index_list(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.front() == '-') throw UsageError("bad " + what + " index \"" + item + "\"");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

inline EdgeSide parse_side(std::string item) {
  EdgeSide side;
  if (!item.empty() && item.front() == '~') {
    side.after = true;
    item.erase(0, 1);
  }
  const auto v = parse_index_list(item, "dart");
  if (v.size() != 1) throw UsageError("bad dart \"" + item + "\"");
  side.dart = static_cast<Dart>(v.front());
  return side;
}

inline ojson index_array(const std::vector<std::size_t>& v) {
  ojson a = ojson::array();
  for (std::size_t x : v) a.push_back(x);
  return a;
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i == 0 ? "" : ",") + std::to_string(v[i]);
  return s.empty() ? "(none)" : s;
}

/// Prints an object either as JSON or as "key: value" lines.
inline std::string render(const ojson& doc, bool as_json) {
  if (as_json) return doc.dump(2) + "\n";
  std::string out;
  for (const auto& [key, value] : doc.items()) {
    out += key + ": ";
    if (value.is_string()) {
      out += value.get<std::string>();
    } else if (value.is_array() && !value.empty() && value.front().is_string()) {
      for (const auto& row : value) out += "\n  " + row.get<std::string>();
    } else {
      out += value.dump();
    }
    out += "\n";
  }
  return out;
}

inline std::string bits(const gf2::BitVector& v) { return v.to_string(); }

}  // namespace detail

inline CommandResult run(const std::vector<std::string>& args) {
  using detail::ojson;
  CommandResult result;

  CLI::App app{"Region crossing change on link diagrams in closed surfaces", "rcc"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  std::string file;
  std::string file2;
  std::string crossings_arg;
  std::string regions_arg;
  std::string darts_arg;
  std::string over_arg = "a";
  std::string output_path;
  std::size_t crossing_index = 0;
  std::size_t num_crossings = 0;
  double neg_prob = 0.0;
  std::uint64_t seed = 0;

  auto* info = app.add_subcommand("info", "Crossings, regions, surface and ranks of a diagram");
  info->add_option("file", file, "Diagram file")->required();
  auto* verify = app.add_subcommand("verify", "Check rank M = r - n - 1 + rank N");
  verify->add_option("file", file, "Diagram file")->required();
  auto* matrix = app.add_subcommand("matrix", "Print the incidence matrix (regions x crossings)");
  matrix->add_option("file", file, "Diagram file")->required();
  auto* homology = app.add_subcommand("homology", "Print the homology matrix (components x H1 basis)");
  homology->add_option("file", file, "Diagram file")->required();
  auto* adm = app.add_subcommand("admissible", "Decide whether a crossing set can be switched by region changes");
  adm->add_option("file", file, "Diagram file")->required();
  adm->add_option("--crossings", crossings_arg, "Comma-separated crossing indices")->required();
  auto* ineff = app.add_subcommand("ineffective", "Basis of the ineffective region sets");
  ineff->add_option("file", file, "Diagram file")->required();
  auto* bic = app.add_subcommand("bicolor", "Bi-colouring of the semi-arcs for a crossing set");
  bic->add_option("file", file, "Diagram file")->required();
  bic->add_option("--crossings", crossings_arg, "Comma-separated crossing indices")->required();
  auto* apply = app.add_subcommand("apply", "Apply region crossing changes and write the diagram");
  apply->add_option("file", file, "Diagram file")->required();
  apply->add_option("--regions", regions_arg, "Comma-separated region indices")->required();
  apply->add_option("-o,--output", output_path, "Write the diagram here instead of stdout");
  auto* equiv = app.add_subcommand("equivalent", "Decide whether two diagrams on one shadow are related");
  equiv->add_option("file1", file, "First diagram")->required();
  equiv->add_option("file2", file2, "Second diagram")->required();
  auto* r2 = app.add_subcommand("move-r2", "Second Reidemeister move across a region");
  r2->add_option("file", file, "Diagram file")->required();
  r2->add_option("--darts", darts_arg, "Two darts naming edge sides; prefix ~ for the side after the dart")
      ->required();
  r2->add_option("--over", over_arg, "Which strand passes over")->check(CLI::IsMember({"a", "b"}));
  r2->add_option("-o,--output", output_path, "Write the diagram here instead of stdout");
  auto* sw = app.add_subcommand("switch", "Switch one crossing");
  sw->add_option("file", file, "Diagram file")->required();
  sw->add_option("--crossing", crossing_index, "Crossing index")->required();
  sw->add_option("-o,--output", output_path, "Write the diagram here instead of stdout");
  auto* rnd = app.add_subcommand("random", "Random connected diagram");
  rnd->add_option("--crossings", num_crossings, "Number of crossings")->required()->check(CLI::PositiveNumber);
  rnd->add_option("--neg-prob", neg_prob, "Probability that an edge is negative")->check(CLI::Range(0.0, 1.0));
  rnd->add_option("--seed", seed, "Random seed");
  rnd->add_option("-o,--output", output_path, "Write the diagram here instead of stdout");
  auto* pd = app.add_subcommand("import-pd", "Convert a planar diagram code to a diagram file");
  pd->add_option("file", file, "JSON file with {\"pd\": [[a,b,c,d],...]} or a bare list")->required();
  pd->add_option("-o,--output", output_path, "Write the diagram here instead of stdout");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    result.output = out.str();
    result.diagnostics = err.str();
    result.exit_code = code == 0 ? exit_ok : exit_usage;
    return result;
  }

  auto emit_diagram = [&](const EmbeddingScheme& d) {
    const std::string text = serialize_diagram(d);
    if (output_path.empty()) {
      result.output = text;
      return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + output_path);
    out << text;
  };

  try {
    if (*info) {
      const Analysis a(detail::load(file));
      ojson doc;
      doc["crossings"] = a.num_crossings();
      doc["edges"] = a.scheme().num_edges();
      doc["regions"] = a.num_regions();
      doc["components"] = a.num_components();
      doc["euler_characteristic"] = a.surface().euler_characteristic;
      doc["orientable"] = a.surface().orientable;
      doc["genus"] = a.surface().genus;
      doc["surface"] = a.surface().name();
      doc["rank_incidence"] = a.incidence_rank();
      doc["rank_homology"] = a.homology_matrix().rank;
      doc["class_exponent"] = count_classes(a);
      result.output = detail::render(doc, as_json);
    } else if (*verify) {
      const Analysis a(detail::load(file));
      const auto rep = verify_rank_formula(a);
      ojson doc;
      doc["regions"] = a.num_regions();
      doc["components"] = a.num_components();
      doc["rank_homology"] = a.homology_matrix().rank;
      doc["lhs"] = rep.lhs;
      doc["rhs"] = rep.rhs;
      doc["equal"] = rep.equal;
      result.output = detail::render(doc, as_json);
    } else if (*matrix) {
      const Analysis a(detail::load(file));
      ojson doc;
      doc["regions"] = a.num_regions();
      doc["crossings"] = a.num_crossings();
      doc["rank"] = a.incidence_rank();
      ojson rows = ojson::array();
      for (const auto& row : a.incidence().row_vectors()) rows.push_back(detail::bits(row));
      doc["rows"] = rows;
      result.output = detail::render(doc, as_json);
    } else if (*homology) {
      const Analysis a(detail::load(file));
      ojson doc;
      doc["components"] = a.num_components();
      doc["h1_dim"] = a.homology().dimension();
      doc["rank"] = a.homology_matrix().rank;
      doc["rank_incidence"] = a.incidence_rank();
      ojson rows = ojson::array();
      for (const auto& row : a.homology_matrix().matrix.row_vectors()) rows.push_back(detail::bits(row));
      doc["rows"] = rows;
      result.output = detail::render(doc, as_json);
    } else if (*adm) {
      const Analysis a(detail::load(file));
      const auto p = detail::parse_index_list(crossings_arg, "crossing");
      const auto by_matrix = admissible(a, p);
      const auto by_colouring = admissible_by_bicoloring(a, p);
      ojson doc;
      doc["crossings"] = detail::index_array(p);
      doc["admissible"] = by_matrix.has_value();
      doc["infeasible"] = !by_matrix.has_value();
      doc["regions"] = by_matrix ? detail::index_array(*by_matrix) : ojson(nullptr);
      doc["bicoloring_admissible"] = by_colouring.admissible;
      doc["bicoloring_witness"] =
          by_colouring.witness ? ojson(detail::bits(by_colouring.witness->colours)) : ojson(nullptr);
      doc["methods_agree"] = by_matrix.has_value() == by_colouring.admissible;
      if (!as_json) {
        doc["regions"] = by_matrix ? detail::join(*by_matrix) : "infeasible";
        if (!by_colouring.witness) doc["bicoloring_witness"] = "none";
      }
      result.output = detail::render(doc, as_json);
    } else if (*ineff) {
      const Analysis a(detail::load(file));
      const auto basis = ineffective_basis(a);
      ojson doc;
      doc["regions"] = a.num_regions();
      doc["dimension"] = basis.size();
      ojson b = ojson::array();
      for (const auto& s : basis) b.push_back(as_json ? detail::index_array(s) : ojson(detail::join(s)));
      doc["basis"] = b;
      const auto colours = checkerboard(a);
      if (colours) {
        doc["checkerboard"] = *colours;
      } else {
        doc["checkerboard"] = as_json ? ojson(nullptr) : ojson("none");
      }
      result.output = detail::render(doc, as_json);
    } else if (*bic) {
      const Analysis a(detail::load(file));
      const auto p = detail::parse_index_list(crossings_arg, "crossing");
      const auto phi = bicoloring(a.scheme(), p);
      const auto verdict = admissible_by_bicoloring(a, p);
      ojson doc;
      doc["crossings"] = detail::index_array(p);
      doc["exists"] = phi.has_value();
      doc["colouring"] = phi ? ojson(detail::bits(phi->colours)) : ojson(nullptr);
      doc["class"] = phi ? ojson(detail::bits(phi_class(a, *phi))) : ojson(nullptr);
      doc["admissible"] = verdict.admissible;
      doc["witness"] = verdict.witness ? ojson(detail::bits(verdict.witness->colours)) : ojson(nullptr);
      if (!as_json) {
        for (const char* key : {"colouring", "class", "witness"}) {
          if (doc[key].is_null()) doc[key] = "none";
        }
      }
      result.output = detail::render(doc, as_json);
    } else if (*apply) {
      const Analysis a(detail::load(file));
      emit_diagram(apply_rcc(a, detail::parse_index_list(regions_arg, "region")));
    } else if (*equiv) {
      const Analysis a(detail::load(file));
      const auto w = rcc_equivalent(a, detail::load(file2));
      ojson doc;
      doc["equivalent"] = w.has_value();
      doc["infeasible"] = !w.has_value();
      if (as_json) {
        doc["regions"] = w ? detail::index_array(*w) : ojson(nullptr);
      } else {
        doc["regions"] = w ? detail::join(*w) : "infeasible";
      }
      result.output = detail::render(doc, as_json);
    } else if (*r2) {
      const Analysis a(detail::load(file));
      std::vector<std::string> items;
      std::stringstream ss(darts_arg);
      for (std::string item; std::getline(ss, item, ',');) items.push_back(item);
      if (items.size() != 2) throw UsageError("--darts needs exactly two darts");
      const R2Spec spec{detail::parse_side(items[0]), detail::parse_side(items[1]),
                        over_arg == "a" ? Strand::a : Strand::b};
      emit_diagram(reidemeister_two(a, spec));
    } else if (*sw) {
      emit_diagram(switch_crossing(detail::load(file), crossing_index));
    } else if (*rnd) {
      emit_diagram(random_diagram(num_crossings, neg_prob, seed));
    } else if (*pd) {
      const std::string text = detail::read_file(file);
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
      }
      if (doc.is_array()) doc = nlohmann::json{{"pd", doc}};
      emit_diagram(import_pd(parse_pd(doc)));
    }
  } catch (const DiagramError& e) {
    result.exit_code = exit_invalid_diagram;
    result.output.clear();
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    result.exit_code = exit_usage;
    result.output.clear();
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  } catch (const std::out_of_range& e) {
    result.exit_code = exit_usage;
    result.output.clear();
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  } catch (const ParseError& e) {
    result.exit_code = exit_usage;
    result.output.clear();
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  } catch (const UsageError& e) {
    result.exit_code = exit_usage;
    result.output.clear();
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace rcc::cli
