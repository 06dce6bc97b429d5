#pragma once

// Text format for graphs, weight vectors and bounds:
//
//   {"vertices": 2,
//    "edges": [{"u": 0, "v": 1, "color": "R"}, {"u": 0, "v": 1, "color": "B"}],
//    "weights": ["1/2", 1], "lower": [0, 0], "upper": [1, 1]}
//
// Edge ids follow document order. Rationals are written as strings.

#include <altcone/graph.hpp>
#include <altcone/rational.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace altcone {

using Json = nlohmann::json;

/// Malformed document. `where` names the offending field ("edges[3].color")
/// or, for syntax errors, the line and column.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

struct GraphDocument {
  TwoColoredMultigraph graph;
  std::optional<EdgeVector> weights;
  std::optional<std::vector<std::int64_t>> lower;
  std::optional<std::vector<std::int64_t>> upper;
};

namespace detail {

inline std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline std::int64_t json_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw DocumentError(where, "expected an integer");
  return j.get<std::int64_t>();
}

inline std::size_t json_index(const Json& j, const std::string& where) {
  const auto v = json_integer(j, where);
  if (v < 0) throw DocumentError(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

inline Rational json_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw DocumentError(where, e.what());
    }
  }
  throw DocumentError(where, "expected an integer or a \"p/q\" string");
}

inline const Json& require_list(const Json& doc, const char* key, std::size_t expected) {
  const Json& list = doc.at(key);
  if (!list.is_array()) throw DocumentError(key, "expected a list");
  if (list.size() != expected)
    throw DocumentError(key, "has " + std::to_string(list.size()) + " entries but there are " +
                                 std::to_string(expected) + " edges");
  return list;
}

}  // namespace detail

inline GraphDocument graph_document_from_json(const Json& doc) {
  if (!doc.is_object()) throw DocumentError("document", "expected an object");
  for (const auto& [key, _] : doc.items())
    if (key != "vertices" && key != "edges" && key != "weights" && key != "lower" && key != "upper")
      throw DocumentError(key, "unknown field");
  if (!doc.contains("vertices")) throw DocumentError("vertices", "missing");
  if (!doc.contains("edges")) throw DocumentError("edges", "missing");
  const std::size_t n = detail::json_index(doc["vertices"], "vertices");
  const Json& edge_list = doc["edges"];
  if (!edge_list.is_array()) throw DocumentError("edges", "expected a list");

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const std::string at = "edges[" + std::to_string(i) + "]";
    const Json& e = edge_list[i];
    if (!e.is_object()) throw DocumentError(at, "expected an object");
    for (const char* key : {"u", "v", "color"})
      if (!e.contains(key)) throw DocumentError(at + "." + key, "missing");
    const std::size_t u = detail::json_index(e["u"], at + ".u");
    const std::size_t v = detail::json_index(e["v"], at + ".v");
    if (u >= n) throw DocumentError(at + ".u", "vertex " + std::to_string(u) + " out of range");
    if (v >= n) throw DocumentError(at + ".v", "vertex " + std::to_string(v) + " out of range");
    if (u == v) throw DocumentError(at, "loop at vertex " + std::to_string(u));
    const Json& c = e["color"];
    if (!c.is_string() || (c != "R" && c != "B")) throw DocumentError(at + ".color", "expected \"R\" or \"B\"");
    edges.push_back({u, v, c == "R" ? Color::Red : Color::Blue});
  }

  GraphDocument out;
  out.graph = TwoColoredMultigraph(n, std::move(edges));
  const std::size_t m = out.graph.edge_count();
  if (doc.contains("weights")) {
    const Json& list = detail::require_list(doc, "weights", m);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < m; ++i)
      values.push_back(detail::json_rational(list[i], "weights[" + std::to_string(i) + "]"));
    out.weights = EdgeVector(std::move(values));
  }
  for (const char* key : {"lower", "upper"}) {
    if (!doc.contains(key)) continue;
    const Json& list = detail::require_list(doc, key, m);
    std::vector<std::int64_t> values;
    for (std::size_t i = 0; i < m; ++i)
      values.push_back(detail::json_integer(list[i], std::string(key) + "[" + std::to_string(i) + "]"));
    (std::string_view(key) == "lower" ? out.lower : out.upper) = std::move(values);
  }
  return out;
}

inline GraphDocument parse_graph_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw DocumentError(detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1), "syntax error");
  }
  return graph_document_from_json(doc);
}

inline TwoColoredMultigraph parse_graph(std::string_view text) { return parse_graph_document(text).graph; }

/// Always a string ("3", "1/2"), never a floating-point number.
inline Json rational_json(const Rational& q) { return to_string(q); }

inline Json vector_json(const EdgeVector& x) {
  Json out = Json::array();
  for (EdgeId e = 0; e < x.size(); ++e) out.push_back(rational_json(x[e]));
  return out;
}

inline Json graph_json(const TwoColoredMultigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"u", e.u}, {"v", e.v}, {"color", std::string(1, color_letter(e.color))}});
  return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Json document_json(const GraphDocument& d) {
  Json out = graph_json(d.graph);
  if (d.weights) out["weights"] = vector_json(*d.weights);
  if (d.lower) out["lower"] = *d.lower;
  if (d.upper) out["upper"] = *d.upper;
  return out;
}

inline std::string print_graph_document(const GraphDocument& d) { return document_json(d).dump(2) + "\n"; }

inline std::string print_graph(const TwoColoredMultigraph& g) { return print_graph_document({g, {}, {}, {}}); }

/// v0, e1, v1, e2, ..., v_m: parallel edges stay distinguishable.
inline Json walk_json(const Walk& w) {
  Json out = Json::array({w.start});
  for (const Step& s : w.steps) {
    out.push_back(s.edge);
    out.push_back(s.to);
  }
  return out;
}

}  // namespace altcone
