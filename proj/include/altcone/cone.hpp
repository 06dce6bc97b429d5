#pragma once

#include <altcone/caw.hpp>
#include <altcone/graph.hpp>
#include <altcone/reachability.hpp>

#include <optional>
#include <queue>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace altcone {

enum class RayKind { EvenAlternatingCycle, AlternatingBicycle };

constexpr std::string_view to_string(RayKind k) noexcept {
  return k == RayKind::EvenAlternatingCycle ? "cycle" : "bicycle";
}

/// An extreme ray of the alternating cone, carried by the walk realising it.
/// Bicycles are stored as W1 * P * W2 * P^R starting at the base of W1.
struct Ray {
  Walk walk;
  RayKind kind;
};

struct Decomposition {
  struct Term {
    Rational coefficient;
    Walk walk;
  };
  std::vector<Term> terms;

  EdgeVector reconstruct(const TwoColoredMultigraph& g) const {
    EdgeVector sum(g.edge_count());
    for (const Term& t : terms) sum += t.coefficient * char_vector(g, t.walk);
    return sum;
  }
};

/// Edge ids through which some CAW passes, ascending.
using EssentialEdgeSet = std::vector<EdgeId>;

namespace detail {

inline void require_cone_vector(const TwoColoredMultigraph& g, const EdgeVector& x, const char* who) {
  require_vector_on(g, x);
  if (!x.is_nonnegative()) throw std::invalid_argument(std::string(who) + ": vector has a negative entry");
  if (!is_balanced(g, x)) throw std::invalid_argument(std::string(who) + ": vector is not balanced");
}

/// Lowest-id edge at `at` with color `want` and x > 0, skipping `excluded`.
inline std::optional<EdgeId> next_support_edge(const TwoColoredMultigraph& g, const EdgeVector& x,
                                               VertexId at, Color want,
                                               const std::vector<bool>& excluded) {
  for (EdgeId f : g.incident(at))
    if (g.edge(f).color == want && x[f] > 0 && !excluded[f]) return f;
  return std::nullopt;
}

inline Ray checked_ray(const TwoColoredMultigraph& g, Walk walk, RayKind kind) {
  const WalkClass k = classify_walk(g, walk);
  const bool ok = kind == RayKind::EvenAlternatingCycle ? k.isEvenAlternatingCycle
                                                        : k.isAlternatingBicycle;
  if (!ok) throw std::logic_error("ray construction produced a walk of the wrong kind");
  return {std::move(walk), kind};
}

}  // namespace detail

/// An alternating cycle or bicycle inside the support of a nonzero cone
/// vector. Grows an alternating trail from the lowest-id support edge until
/// it closes. An even closure is the answer; an odd closure C is kept and a
/// tail T is grown from its base. T either closes on itself (even cycle, or
/// bicycle C * P * C2 * P^R) or runs back into C, where the arc of C whose
/// first edge has the right color completes an alternating cycle.
/// Ties always go to the lowest edge id.
inline Ray find_ray_in_support(const TwoColoredMultigraph& g, const EdgeVector& x) {
  detail::require_cone_vector(g, x, "find_ray_in_support");
  const auto support = x.support();
  if (support.empty()) throw std::invalid_argument("find_ray_in_support: vector is zero");
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  const std::vector<bool> nothing_excluded(g.edge_count(), false);

  // Phase 1: alternating trail with distinct vertices until a vertex repeats.
  const EdgeId e1 = support.front();
  std::vector<VertexId> verts{g.edge(e1).u, g.edge(e1).v};
  std::vector<EdgeId> trail{e1};
  std::vector<std::size_t> pos(g.vertex_count(), none);
  pos[verts[0]] = 0;
  pos[verts[1]] = 1;
  Walk odd_cycle;
  for (;;) {
    const VertexId at = verts.back();
    const auto f = detail::next_support_edge(g, x, at, opposite(g.edge(trail.back()).color),
                                             nothing_excluded);
    if (!f) throw std::logic_error("support exhausted: vector is not balanced");
    const VertexId w = g.edge(*f).other(at);
    if (pos[w] == none) {
      pos[w] = verts.size();
      verts.push_back(w);
      trail.push_back(*f);
      continue;
    }
    std::vector<EdgeId> loop(trail.begin() + static_cast<std::ptrdiff_t>(pos[w]), trail.end());
    loop.push_back(*f);
    Walk closed = walk_from_edges(g, w, loop);
    if (loop.size() % 2 == 0) return detail::checked_ray(g, std::move(closed), RayKind::EvenAlternatingCycle);
    odd_cycle = std::move(closed);
    break;
  }

  // Phase 2: tail T from the base u0 of the odd cycle C.
  const VertexId base = odd_cycle.start;
  const Color cycle_color = g.edge(odd_cycle.steps.front().edge).color;
  const auto cycle_vertices = odd_cycle.vertices();
  std::vector<std::size_t> cycle_pos(g.vertex_count(), none);
  for (std::size_t i = 0; i + 1 < cycle_vertices.size(); ++i) cycle_pos[cycle_vertices[i]] = i;
  std::vector<bool> in_cycle(g.edge_count(), false);
  for (const Step& s : odd_cycle.steps) in_cycle[s.edge] = true;

  std::vector<VertexId> tail_verts{base};
  std::vector<EdgeId> tail;
  std::vector<std::size_t> tail_pos(g.vertex_count(), none);
  tail_pos[base] = 0;
  for (;;) {
    const VertexId at = tail_verts.back();
    const Color want = tail.empty() ? opposite(cycle_color) : opposite(g.edge(tail.back()).color);
    const auto f = detail::next_support_edge(g, x, at, want, in_cycle);
    if (!f) throw std::logic_error("support exhausted: vector is not balanced");
    const VertexId w = g.edge(*f).other(at);
    if (tail_pos[w] != none) {
      // Case (a): T closes on itself at u_i.
      const std::size_t i = tail_pos[w];
      std::vector<EdgeId> loop(tail.begin() + static_cast<std::ptrdiff_t>(i), tail.end());
      loop.push_back(*f);
      Walk second = walk_from_edges(g, w, loop);
      if (loop.size() % 2 == 0) return detail::checked_ray(g, std::move(second), RayKind::EvenAlternatingCycle);
      const Walk path = walk_from_edges(g, base, std::span<const EdgeId>(tail.data(), i));
      Walk bicycle = concat_walks(concat_walks(concat_walks(odd_cycle, path), second), reverse_walk(path));
      return detail::checked_ray(g, std::move(bicycle), RayKind::AlternatingBicycle);
    }
    if (cycle_pos[w] != none) {
      // Case (b): T runs into C at w != u0; return along the arc of C whose
      // first edge at w changes color.
      const std::size_t j = cycle_pos[w];
      std::vector<EdgeId> cyc = tail;
      cyc.push_back(*f);
      const Step& forward_first = odd_cycle.steps[j];
      if (g.edge(forward_first.edge).color != g.edge(*f).color) {
        for (std::size_t k = j; k < odd_cycle.length(); ++k) cyc.push_back(odd_cycle.steps[k].edge);
      } else {
        for (std::size_t k = j; k-- > 0;) cyc.push_back(odd_cycle.steps[k].edge);
      }
      return detail::checked_ray(g, walk_from_edges(g, base, cyc), RayKind::EvenAlternatingCycle);
    }
    tail_pos[w] = tail_verts.size();
    tail_verts.push_back(w);
    tail.push_back(*f);
  }
}

/// Nonnegative rational combination of extreme rays equal to x. Each round
/// subtracts the largest multiple of a ray that keeps x nonnegative, which
/// zeroes at least one support edge.
inline Decomposition decompose_extreme(const TwoColoredMultigraph& g, const EdgeVector& x) {
  detail::require_cone_vector(g, x, "decompose_extreme");
  Decomposition d;
  EdgeVector rest = x;
  while (!rest.is_zero()) {
    Ray ray = find_ray_in_support(g, rest);
    const auto chi = edge_multiplicities(g, ray.walk);
    std::optional<Rational> lambda;
    for (EdgeId e = 0; e < chi.size(); ++e) {
      if (chi[e] == 0) continue;
      Rational ratio = rest[e] / chi[e];
      if (!lambda || ratio < *lambda) lambda = ratio;
    }
    for (EdgeId e = 0; e < chi.size(); ++e) rest[e] -= *lambda * chi[e];
    d.terms.push_back({*lambda, std::move(ray.walk)});
  }
  return d;
}

/// Splits a balanced nonnegative integral vector into CAWs whose
/// characteristic vectors sum to it and are each {0,1,2}-valued.
inline std::vector<Walk> decompose_integral(const TwoColoredMultigraph& g, const EdgeVector& x) {
  detail::require_cone_vector(g, x, "decompose_integral");
  if (!x.is_integral()) throw std::invalid_argument("decompose_integral: vector is not integral");
  auto rest = x.to_integers();
  std::vector<Walk> parts;
  for (EdgeId seed = 0; seed < rest.size();) {
    if (rest[seed] == 0) {
      ++seed;
      continue;
    }
    Walk caw = detail::grow_caw(g, rest, seed);
    for (const Step& s : caw.steps) --rest[s.edge];
    for (Walk& piece : reduce_caw(g, caw)) parts.push_back(std::move(piece));
  }
  return parts;
}

/// Edge-disjoint CATs covering the support of a balanced {0,1}-vector.
inline std::vector<Walk> decompose_binary(const TwoColoredMultigraph& g, const EdgeVector& x) {
  require_vector_on(g, x);
  if (!x.is_binary()) throw std::invalid_argument("decompose_binary: vector is not {0,1}-valued");
  auto parts = decompose_integral(g, x);
  for (const Walk& w : parts)
    if (!classify_walk(g, w).isCAT) throw std::logic_error("decompose_binary: part is not a CAT");
  return parts;
}

/// Edges carried by some CAW. Each successful query yields a balanced
/// {0,1,2}-vector; every edge in its support is essential too.
inline EssentialEdgeSet essential_edges(const TwoColoredMultigraph& g) {
  enum class State : std::uint8_t { Unknown, Essential, Inessential };
  std::vector<State> state(g.edge_count(), State::Unknown);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (state[e] != State::Unknown) continue;
    if (auto witness = caw_witness_through_edge(g, e)) {
      for (EdgeId f : witness->support()) state[f] = State::Essential;
    } else {
      state[e] = State::Inessential;
    }
  }
  EssentialEdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (state[e] == State::Essential) out.push_back(e);
  return out;
}

struct ComponentCounts {
  std::size_t components = 0;
  std::size_t bipartite = 0;
};

/// Components of (V, edges); isolated vertices count as bipartite components.
inline ComponentCounts count_components(const TwoColoredMultigraph& g, std::span<const EdgeId> edges) {
  std::vector<std::vector<VertexId>> adj(g.vertex_count());
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  constexpr int unseen = -1;
  std::vector<int> side(g.vertex_count(), unseen);
  ComponentCounts counts;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (side[root] != unseen) continue;
    ++counts.components;
    bool bipartite = true;
    std::queue<VertexId> q;
    side[root] = 0;
    q.push(root);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (VertexId w : adj[v]) {
        if (side[w] == unseen) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          bipartite = false;
        }
      }
    }
    if (bipartite) ++counts.bipartite;
  }
  return counts;
}

/// #E_d - #V + (bipartite components of (V, E_d)), given the essential set.
inline std::size_t dimension_from_essential(const TwoColoredMultigraph& g, const EssentialEdgeSet& essential) {
  const auto counts = count_components(g, essential);
  return essential.size() + counts.bipartite - g.vertex_count();
}

inline std::size_t dimension(const TwoColoredMultigraph& g) {
  return dimension_from_essential(g, essential_edges(g));
}

/// Every component is acyclic or has exactly one cycle, of odd length.
inline bool is_pseudo_forest(const TwoColoredMultigraph& g) {
  // Per component: #edges <= #vertices, with equality only if non-bipartite.
  std::vector<std::size_t> comp(g.vertex_count(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> comp_vertices, comp_edges;
  std::vector<bool> comp_bipartite;
  std::vector<int> side(g.vertex_count(), -1);
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (side[root] != -1) continue;
    const std::size_t c = comp_vertices.size();
    comp_vertices.push_back(0);
    comp_edges.push_back(0);
    comp_bipartite.push_back(true);
    std::queue<VertexId> q;
    side[root] = 0;
    comp[root] = c;
    q.push(root);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      ++comp_vertices[c];
      for (EdgeId id : g.incident(v)) {
        const VertexId w = g.edge(id).other(v);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          comp[w] = c;
          q.push(w);
        } else if (side[w] == side[v]) {
          comp_bipartite[c] = false;
        }
      }
    }
  }
  for (const Edge& e : g.edges()) ++comp_edges[comp[e.u]];
  for (std::size_t c = 0; c < comp_vertices.size(); ++c) {
    if (comp_edges[c] > comp_vertices[c]) return false;
    if (comp_edges[c] == comp_vertices[c] && comp_bipartite[c]) return false;
  }
  return true;
}

/// Rank of the vertex-edge incidence matrix: #V minus bipartite components.
inline std::size_t incidence_rank(const TwoColoredMultigraph& g) {
  std::vector<EdgeId> all(g.edge_count());
  for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
  return g.vertex_count() - count_components(g, all).bipartite;
}

}  // namespace altcone
