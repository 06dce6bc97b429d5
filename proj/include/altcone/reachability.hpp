#pragma once

#include <altcone/caw.hpp>
#include <altcone/graph.hpp>
#include <altcone/matching.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace altcone {

/// Matching gadget for "binary balanced vector through a forced edge".
///
/// Every edge f = {u, v} contributes two port nodes, p(f,u) = 2f and
/// p(f,v) = 2f+1, joined by a slack aux edge unless f is the forced edge. At
/// each vertex w, ports of opposite-colored incident edges are joined by
/// pairing aux edges. A perfect matching selects the edges whose slack edge
/// is unmatched; at every vertex those edges' ports are paired red-to-blue.
struct PortGraph {
  struct Port {
    EdgeId edge;
    VertexId endpoint;
  };

  AuxGraph aux;
  std::vector<Port> port_of;
  std::vector<std::optional<AuxEdgeId>> slack_edge_of;
  EdgeId forced = 0;

  static NodeId port(const TwoColoredMultigraph& g, EdgeId f, VertexId w) {
    return 2 * f + (g.edge(f).u == w ? 0 : 1);
  }
};

inline PortGraph build_port_graph(const TwoColoredMultigraph& g, EdgeId forced) {
  if (forced >= g.edge_count()) throw std::out_of_range("edge id out of range");
  PortGraph pg{AuxGraph(2 * g.edge_count()), {}, std::vector<std::optional<AuxEdgeId>>(g.edge_count()),
               forced};
  pg.port_of.reserve(2 * g.edge_count());
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    pg.port_of.push_back({f, g.edge(f).u});
    pg.port_of.push_back({f, g.edge(f).v});
  }
  for (EdgeId f = 0; f < g.edge_count(); ++f)
    if (f != forced) pg.slack_edge_of[f] = pg.aux.add_edge(2 * f, 2 * f + 1);
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    const auto ids = g.incident(w);
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b)
        if (g.edge(ids[a]).color != g.edge(ids[b]).color)
          pg.aux.add_edge(PortGraph::port(g, ids[a], w), PortGraph::port(g, ids[b], w));
  }
  return pg;
}

/// A balanced {0,1}-vector with value 1 at e, if one exists. Such vectors
/// are exactly edge-disjoint unions of CATs, so this decides whether a CAT
/// passes through e.
inline std::optional<EdgeVector> balanced_through_edge(const TwoColoredMultigraph& g, EdgeId e) {
  const PortGraph pg = build_port_graph(g, e);
  const Matching m = max_matching(pg.aux);
  if (m.size() * 2 != pg.aux.node_count()) return std::nullopt;
  EdgeVector selection(g.edge_count());
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    const bool slack_used = pg.slack_edge_of[f] && m.mate[2 * f] == 2 * f + 1;
    selection[f] = slack_used ? 0 : 1;
  }
  if (selection[e] != 1 || !selection.is_binary() || !is_balanced(g, selection))
    throw std::logic_error("port-graph matching produced an invalid selection");
  return selection;
}

inline std::optional<Walk> cat_through_edge(const TwoColoredMultigraph& g, EdgeId e) {
  auto selection = balanced_through_edge(g, e);
  if (!selection) return std::nullopt;
  return extract_cat(g, *selection, e);
}

/// A {0,1,2}-valued balanced vector positive at e, if one exists. An
/// irreducible CAW is {0,1,2}-valued, so a CAW through e exists iff a binary
/// balanced vector passes through a copy of e in the 2-fold duplicated graph.
inline std::optional<EdgeVector> caw_witness_through_edge(const TwoColoredMultigraph& g, EdgeId e) {
  if (e >= g.edge_count()) throw std::out_of_range("edge id out of range");
  const DuplicatedGraph dup = duplicate_edges(g, 2);
  for (std::size_t c = 0; c < 2; ++c) {
    if (auto sel = balanced_through_edge(dup.graph, dup.copy(e, c))) {
      EdgeVector folded(g.edge_count());
      for (EdgeId f = 0; f < dup.graph.edge_count(); ++f) folded[dup.original_of[f]] += (*sel)[f];
      return folded;
    }
  }
  return std::nullopt;
}

inline bool caw_through_edge(const TwoColoredMultigraph& g, EdgeId e) {
  return caw_witness_through_edge(g, e).has_value();
}

/// Alternating s-t trail, found by closing it into a CAT with a gadget:
/// a red or a blue edge {s,t} (both end edges share a color), or a new
/// middle vertex w with {s,w}, {w,t} colored against the desired end colors
/// (end colors differ). The returned trail starts at s.
inline std::optional<Walk> alternating_st_trail(const TwoColoredMultigraph& g, VertexId s, VertexId t) {
  if (s >= g.vertex_count() || t >= g.vertex_count()) throw std::out_of_range("vertex out of range");
  if (s == t) throw std::invalid_argument("alternating_st_trail: s and t must differ");
  const std::vector<Edge> base(g.edges().begin(), g.edges().end());
  const EdgeId first_gadget = g.edge_count();

  auto strip = [&](const Walk& cat) -> Walk {
    // Rotate the CAT so that all gadget edges sit at the end, then drop them.
    std::size_t offset = 0;
    const std::size_t m = cat.length();
    for (std::size_t i = 0; i < m; ++i) {
      const bool here = cat.steps[i].edge >= first_gadget;
      const bool next = cat.steps[(i + 1) % m].edge >= first_gadget;
      if (here && !next) {
        offset = (i + 1) % m;
        break;
      }
    }
    const Walk rotated = rotate_closed_walk(cat, offset);
    Walk trail{rotated.start, {}};
    for (const Step& st : rotated.steps)
      if (st.edge < first_gadget) trail.steps.push_back(st);
    if (trail.start != s) trail = reverse_walk(trail);
    return trail;
  };

  for (Color c : {Color::Red, Color::Blue}) {
    std::vector<Edge> edges = base;
    edges.push_back({s, t, c});
    const TwoColoredMultigraph aug(g.vertex_count(), std::move(edges));
    if (auto cat = cat_through_edge(aug, first_gadget)) return strip(*cat);
  }
  const std::array<std::pair<Color, Color>, 2> end_colors{
      {{Color::Red, Color::Blue}, {Color::Blue, Color::Red}}};
  for (const auto& [at_s, at_t] : end_colors) {
    const VertexId mid = g.vertex_count();
    std::vector<Edge> edges = base;
    edges.push_back({s, mid, opposite(at_s)});
    edges.push_back({mid, t, opposite(at_t)});
    const TwoColoredMultigraph aug(g.vertex_count() + 1, std::move(edges));
    if (auto cat = cat_through_edge(aug, first_gadget)) return strip(*cat);
  }
  return std::nullopt;
}

struct ReachabilityInstance {
  TwoColoredMultigraph graph;
  VertexId source;  // s'
  VertexId sink;    // t'
  /// original_of[id in graph] = original edge id, or npos for the two new edges.
  std::vector<EdgeId> original_of;

  static constexpr EdgeId npos = static_cast<EdgeId>(-1);
};

/// Removes e = {s,t} and hangs new pendant vertices s', t' off s and t by
/// edges colored like e. The result has an alternating s'-t' trail iff the
/// input has a CAT through e.
inline ReachabilityInstance reduce_cat_to_reachability(const TwoColoredMultigraph& g, EdgeId e) {
  if (e >= g.edge_count()) throw std::out_of_range("edge id out of range");
  const Edge removed = g.edge(e);
  std::vector<Edge> edges;
  std::vector<EdgeId> original_of;
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    edges.push_back(g.edge(f));
    original_of.push_back(f);
  }
  const VertexId s_prime = g.vertex_count();
  const VertexId t_prime = g.vertex_count() + 1;
  edges.push_back({s_prime, removed.u, removed.color});
  edges.push_back({t_prime, removed.v, removed.color});
  original_of.push_back(ReachabilityInstance::npos);
  original_of.push_back(ReachabilityInstance::npos);
  return {TwoColoredMultigraph(g.vertex_count() + 2, std::move(edges)), s_prime, t_prime,
          std::move(original_of)};
}

}  // namespace altcone
