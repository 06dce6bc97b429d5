#pragma once

// Command dispatch for the altcone tool. Every subcommand prints one JSON
// document on success. Exit status: 0 when a result was computed (whatever
// the verdict), 1 for usage errors, 2 for unreadable or malformed input.

#include <altcone/boxfeas.hpp>
#include <altcone/cone.hpp>
#include <altcone/document.hpp>
#include <altcone/reachability.hpp>
#include <altcone/threshold.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace altcone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

/// Bad input that is not a document syntax problem (ids out of range,
/// missing fields a command needs, non-simple graph, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline GraphDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_document(buf.str());
  } catch (const DocumentError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline DegreeSequence parse_sequence(const std::string& text) {
  DegreeSequence out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::int64_t value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last || value < 0)
      throw InputError("bad sequence \"" + text + "\": expected nonnegative integers separated by commas");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

inline void check_edge(const TwoColoredMultigraph& g, std::size_t e) {
  if (e >= g.edge_count())
    throw InputError("edge id " + std::to_string(e) + " out of range (graph has " + std::to_string(g.edge_count()) +
                     " edges)");
}

inline void check_vertex(const TwoColoredMultigraph& g, std::size_t v) {
  if (v >= g.vertex_count())
    throw InputError("vertex " + std::to_string(v) + " out of range (graph has " + std::to_string(g.vertex_count()) +
                     " vertices)");
}

inline void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("refusing to print an unverified witness: ") + what);
}

inline SimpleGraph simple_graph(const TwoColoredMultigraph& g) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  try {
    return SimpleGraph(g.vertex_count(), pairs);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline Json cmd_dim(const GraphDocument& doc) {
  const auto& g = doc.graph;
  const EssentialEdgeSet ess = essential_edges(g);
  const auto counts = count_components(g, ess);
  const std::size_t d = dimension_from_essential(g, ess);
  ensure(d + g.vertex_count() == ess.size() + counts.bipartite, "dimension formula");
  return {{"dimension", d},
          {"essential_edges", ess.size()},
          {"vertices", g.vertex_count()},
          {"bipartite_components", counts.bipartite}};
}

inline Json cmd_essential(const GraphDocument& doc) {
  const auto& g = doc.graph;
  const EssentialEdgeSet ess = essential_edges(g);
  for (EdgeId e : ess) {
    const auto w = caw_witness_through_edge(g, e);
    ensure(w && (*w)[e] > 0 && in_alternating_cone(g, *w), "essential-edge witness");
  }
  return {{"essential", ess}};
}

inline Json cmd_threshold(const GraphDocument& doc) {
  const SimpleGraph sg = simple_graph(doc.graph);
  const TwoColoredMultigraph gh = hat(sg);
  const bool by_degrees = is_threshold_degrees(sg.degrees());
  const std::size_t hat_dim = dimension(gh);
  const auto c4 = find_alternating_c4(gh);
  Json out{{"degree_elimination", by_degrees},
           {"hat_dimension", hat_dim},
           {"cone_test", hat_dim == 0},
           {"c4_test", !c4.has_value()},
           {"agree", by_degrees == (hat_dim == 0) && by_degrees == !c4.has_value()}};
  if (c4) {
    // Start at the endpoint of the first edge not shared with the second.
    const Edge& first = gh.edge((*c4)[0]);
    const VertexId start = gh.edge((*c4)[1]).has_endpoint(first.u) ? first.v : first.u;
    const Walk w = walk_from_edges(gh, start, std::vector<EdgeId>(c4->begin(), c4->end()));
    const auto cls = classify_walk(gh, w);
    ensure(cls.isEvenAlternatingCycle && w.length() == 4, "alternating C4");
    out["alternating_c4"] = walk_json(w);
  } else {
    out["alternating_c4"] = nullptr;
  }
  if (const auto weights = threshold_weights(sg)) {
    for (VertexId a = 0; a < sg.vertex_count(); ++a)
      for (VertexId b = a + 1; b < sg.vertex_count(); ++b)
        ensure(((*weights)[a] + (*weights)[b] > 0) == sg.has_edge(a, b) && (*weights)[a] + (*weights)[b] != 0,
               "threshold weights");
    Json ws = Json::array();
    for (const auto& q : *weights) ws.push_back(rational_json(q));
    out["weights"] = std::move(ws);
  } else {
    out["weights"] = nullptr;
  }
  return out;
}

inline Json cmd_decompose(const GraphDocument& doc, const std::string& mode) {
  const auto& g = doc.graph;
  if (!doc.weights) throw InputError("decompose needs a \"weights\" field");
  const EdgeVector& x = *doc.weights;
  if (!in_alternating_cone(g, x)) throw InputError("weights are not a point of the alternating cone");
  Json terms = Json::array();
  if (mode == "rays") {
    const Decomposition d = decompose_extreme(g, x);
    ensure(d.reconstruct(g) == x, "decomposition sum");
    for (const auto& t : d.terms) {
      const auto cls = classify_walk(g, t.walk);
      ensure(t.coefficient > 0 && (cls.isEvenAlternatingCycle || cls.isAlternatingBicycle), "extreme ray");
      terms.push_back({{"coefficient", rational_json(t.coefficient)},
                       {"kind", cls.isEvenAlternatingCycle ? "cycle" : "bicycle"},
                       {"walk", walk_json(t.walk)}});
    }
  } else {
    if (!x.is_integral()) throw InputError("decompose --mode " + mode + " needs integral weights");
    if (mode == "cat" && !x.is_binary()) throw InputError("decompose --mode cat needs {0,1} weights");
    const std::vector<Walk> parts = mode == "caw" ? decompose_integral(g, x) : decompose_binary(g, x);
    EdgeVector sum(g.edge_count());
    for (const Walk& w : parts) {
      const auto cls = classify_walk(g, w);
      ensure(mode == "caw" ? cls.isCAW : cls.isCAT, "decomposition part");
      const EdgeVector chi = char_vector(g, w);
      ensure(chi.is_bounded_integral(2), "part multiplicity");
      sum += chi;
      terms.push_back({{"coefficient", "1"}, {"walk", walk_json(w)}});
    }
    ensure(sum == x, "decomposition sum");
  }
  return {{"mode", mode}, {"terms", std::move(terms)}};
}

inline Json cmd_feasible(const GraphDocument& doc, bool rational) {
  const auto& g = doc.graph;
  if (!doc.upper) throw InputError("feasible needs an \"upper\" field");
  std::vector<std::int64_t> lower = doc.lower ? *doc.lower : std::vector<std::int64_t>(g.edge_count(), 0);
  Bounds bounds;
  try {
    bounds = Bounds(std::move(lower), *doc.upper);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  auto check_witness = [&](const EdgeVector& w) {
    ensure(in_alternating_cone(g, w), "witness in cone");
    for (EdgeId e = 0; e < w.size(); ++e)
      ensure(w[e] >= bounds.lower[e] && w[e] <= bounds.upper[e], "witness in bounds");
  };
  if (rational) {
    const auto w = rational_feasible(g, bounds);
    if (!w) return {{"verdict", "infeasible"}, {"mode", "rational"}};
    check_witness(*w);
    return {{"verdict", "feasible"}, {"mode", "rational"}, {"witness", vector_json(*w)}};
  }
  const FeasibilityOutcome outcome = find_feasible(g, bounds);
  if (const auto* ok = std::get_if<Feasible>(&outcome)) {
    ensure(ok->witness.is_integral(), "integral witness");
    check_witness(ok->witness);
    return {{"verdict", "feasible"},
            {"mode", "integral"},
            {"witness", vector_json(ok->witness)},
            {"augmentations", ok->augmentations}};
  }
  const auto& bad = std::get<Infeasible>(outcome);
  return {{"verdict", "infeasible"},
          {"mode", "integral"},
          {"edge", bad.edge},
          {"side", to_string(bad.side)},
          {"augmentations", bad.augmentations}};
}

inline Json cmd_reach(const GraphDocument& doc, std::size_t s, std::size_t t) {
  const auto& g = doc.graph;
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) throw InputError("reach needs two distinct vertices");
  const auto trail = alternating_st_trail(g, s, t);
  if (!trail) return {{"reachable", false}, {"trail", nullptr}};
  const auto cls = classify_walk(g, *trail);
  ensure(trail->start == s && trail->end() == t && cls.isTrail && cls.isAlternating, "alternating trail");
  return {{"reachable", true}, {"trail", walk_json(*trail)}};
}

inline Json cmd_cat_through(const GraphDocument& doc, std::size_t e) {
  const auto& g = doc.graph;
  check_edge(g, e);
  const auto cat = cat_through_edge(g, e);
  if (!cat) return {{"exists", false}, {"cat", nullptr}};
  ensure(classify_walk(g, *cat).isCAT && edge_multiplicities(g, *cat)[e] == 1, "CAT through edge");
  return {{"exists", true}, {"cat", walk_json(*cat)}};
}

inline Json cmd_majorize(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size()) throw InputError("sequences differ in length");
  return {{"majorization", to_string(majorizes(a, b))}};
}

inline Json cmd_muirhead(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size()) throw InputError("sequences differ in length");
  const Majorization m = majorizes(a, b);
  if (m != Majorization::Strict && m != Majorization::Permutation)
    return {{"majorization", to_string(m)}, {"steps", nullptr}};
  const auto steps = muirhead_sequence(a, b);
  DegreeSequence cur = sorted_descending(a);
  Json path = Json::array({cur});
  Json pairs = Json::array();
  for (const auto& [i, j] : steps) {
    cur = unit_transformation(cur, i, j);
    const Majorization still = majorizes(cur, b);
    ensure(still == Majorization::Strict || still == Majorization::Permutation, "Muirhead prefix");
    pairs.push_back({i, j});
    path.push_back(cur);
  }
  ensure(cur == sorted_descending(b), "Muirhead endpoint");
  return {{"majorization", to_string(m)}, {"steps", std::move(pairs)}, {"sequences", std::move(path)}};
}

inline Json cmd_degdim(const DegreeSequence& d) {
  const auto g = realize_degree_sequence(d);
  if (!g) return {{"graphical", false}, {"dimension", nullptr}};
  ensure(g->degrees() == d, "realization");
  return {{"graphical", true},
          {"dimension", dimension(hat(*g))},
          {"threshold", is_threshold_degrees(d)},
          {"realization", g->edges()}};
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternating cone toolkit for 2-colored multigraphs", "altcone"};
  app.require_subcommand(1);

  std::string file, mode = "rays", seq_a, seq_b;
  std::size_t s = 0, t = 0, edge = 0;
  bool rational = false;

  auto* dim = app.add_subcommand("dim", "Dimension of the alternating cone");
  dim->add_option("FILE", file)->required();
  auto* essential = app.add_subcommand("essential", "Edges carried by some closed alternating walk");
  essential->add_option("FILE", file)->required();
  auto* threshold = app.add_subcommand("threshold", "Threshold tests on a simple graph");
  threshold->add_option("FILE", file)->required();
  auto* decompose = app.add_subcommand("decompose", "Decompose the document's weights");
  decompose->add_option("--mode", mode)->check(CLI::IsMember({"rays", "caw", "cat"}));
  decompose->add_option("FILE", file)->required();
  auto* feasible = app.add_subcommand("feasible", "Point of the cone between lower and upper");
  feasible->add_flag("--rational", rational);
  feasible->add_option("FILE", file)->required();
  auto* reach = app.add_subcommand("reach", "Alternating trail from S to T");
  reach->add_option("FILE", file)->required();
  reach->add_option("S", s)->required();
  reach->add_option("T", t)->required();
  auto* cat = app.add_subcommand("cat-through", "Closed alternating trail through an edge");
  cat->add_option("FILE", file)->required();
  cat->add_option("EDGEID", edge)->required();
  auto* majorize = app.add_subcommand("majorize", "Compare two sequences in the majorization order");
  majorize->add_option("A", seq_a)->required();
  majorize->add_option("B", seq_b)->required();
  auto* muirhead = app.add_subcommand("muirhead", "Unit transformations from A down to B");
  muirhead->add_option("A", seq_a)->required();
  muirhead->add_option("B", seq_b)->required();
  auto* degdim = app.add_subcommand("degdim", "Cone dimension of the hat of a degree sequence");
  degdim->add_option("D", seq_a)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    Json result;
    if (dim->parsed()) result = detail::cmd_dim(detail::load(file));
    else if (essential->parsed()) result = detail::cmd_essential(detail::load(file));
    else if (threshold->parsed()) result = detail::cmd_threshold(detail::load(file));
    else if (decompose->parsed()) result = detail::cmd_decompose(detail::load(file), mode);
    else if (feasible->parsed()) result = detail::cmd_feasible(detail::load(file), rational);
    else if (reach->parsed()) result = detail::cmd_reach(detail::load(file), s, t);
    else if (cat->parsed()) result = detail::cmd_cat_through(detail::load(file), edge);
    else if (majorize->parsed())
      result = detail::cmd_majorize(detail::parse_sequence(seq_a), detail::parse_sequence(seq_b));
    else if (muirhead->parsed())
      result = detail::cmd_muirhead(detail::parse_sequence(seq_a), detail::parse_sequence(seq_b));
    else if (degdim->parsed()) result = detail::cmd_degdim(detail::parse_sequence(seq_a));
    out << result.dump(2) << "\n";
    return kExitOk;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    // invalid_argument / out_of_range are logic_errors too; anything left
    // here that is not one of them is an internal failure.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      err << "input error: " << e.what() << "\n";
      return kExitInput;
    }
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

inline int run_command(int argc, const char* const* argv, std::ostream& out = std::cout,
                       std::ostream& err = std::cerr) {
  return run_command(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace altcone::cli
