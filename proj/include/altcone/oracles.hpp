#pragma once

// Brute-force reference implementations. These depend on the core data
// model only and never call the matching, reachability, cone or box
// solvers they are used to check.

#include <altcone/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace altcone::oracle {

/// Enumeration would exceed the hard size guard.
class guard_exceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 24;

inline void check_guard(std::uint64_t choices_per_edge, std::size_t edges) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < edges; ++i) {
    total *= choices_per_edge;
    if (total > kEnumerationLimit)
      throw guard_exceeded("enumeration of " + std::to_string(choices_per_edge) + "^" +
                           std::to_string(edges) + " vectors exceeds the 2^24 guard");
  }
}

namespace detail {

/// Depth-first enumeration of integer vectors lo <= x <= hi (edge by edge, in
/// id order, values ascending) that are balanced. Branches are cut once a
/// vertex's remaining incident edges cannot restore its balance. `visit`
/// returns false to stop.
class BalancedSearch {
 public:
  BalancedSearch(const TwoColoredMultigraph& g, std::vector<std::int64_t> lo, std::vector<std::int64_t> hi)
      : g_(g), lo_(std::move(lo)), hi_(std::move(hi)), x_(g.edge_count(), 0),
        excess_(g.vertex_count(), 0), slack_red_(g.vertex_count(), 0), slack_blue_(g.vertex_count(), 0) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      const std::int64_t span = hi_[e];
      auto& slack = ed.color == Color::Red ? slack_red_ : slack_blue_;
      slack[ed.u] += span;
      slack[ed.v] += span;
    }
  }

  void run(const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    descend(0);
  }

 private:
  bool feasible_at(VertexId v) const {
    // excess = red - blue so far; the unassigned edges can add up to
    // slack_red to red and slack_blue to blue.
    return excess_[v] + slack_red_[v] >= 0 && excess_[v] - slack_blue_[v] <= 0;
  }

  void descend(EdgeId e) {
    if (stopped_) return;
    if (e == g_.edge_count()) {
      for (VertexId v = 0; v < g_.vertex_count(); ++v)
        if (excess_[v] != 0) return;
      if (!(*visit_)(x_)) stopped_ = true;
      return;
    }
    const Edge& ed = g_.edge(e);
    const std::int64_t sign = ed.color == Color::Red ? 1 : -1;
    auto& slack = ed.color == Color::Red ? slack_red_ : slack_blue_;
    slack[ed.u] -= hi_[e];
    slack[ed.v] -= hi_[e];
    for (std::int64_t val = lo_[e]; val <= hi_[e] && !stopped_; ++val) {
      x_[e] = val;
      excess_[ed.u] += sign * val;
      excess_[ed.v] += sign * val;
      if (feasible_at(ed.u) && feasible_at(ed.v)) descend(e + 1);
      excess_[ed.u] -= sign * val;
      excess_[ed.v] -= sign * val;
    }
    x_[e] = 0;
    slack[ed.u] += hi_[e];
    slack[ed.v] += hi_[e];
  }

  const TwoColoredMultigraph& g_;
  std::vector<std::int64_t> lo_, hi_, x_;
  std::vector<std::int64_t> excess_, slack_red_, slack_blue_;
  const std::function<bool(const std::vector<std::int64_t>&)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace detail

/// Every balanced vector with entries in {0..cap}, in lexicographic order
/// (edge 0 most significant).
inline std::vector<EdgeVector> enum_balanced(const TwoColoredMultigraph& g, std::int64_t cap) {
  if (cap < 0) throw std::invalid_argument("enum_balanced: negative cap");
  check_guard(static_cast<std::uint64_t>(cap) + 1, g.edge_count());
  std::vector<EdgeVector> out;
  detail::BalancedSearch search(g, std::vector<std::int64_t>(g.edge_count(), 0),
                                std::vector<std::int64_t>(g.edge_count(), cap));
  search.run([&](const std::vector<std::int64_t>& x) {
    out.push_back(EdgeVector::from_integers(x));
    return true;
  });
  return out;
}

inline bool exists_balanced_through(const TwoColoredMultigraph& g, EdgeId e, std::int64_t cap) {
  if (e >= g.edge_count()) throw std::out_of_range("edge id out of range");
  check_guard(static_cast<std::uint64_t>(cap) + 1, g.edge_count());
  std::vector<std::int64_t> lo(g.edge_count(), 0), hi(g.edge_count(), cap);
  lo[e] = 1;
  bool found = false;
  detail::BalancedSearch(g, lo, hi).run([&](const std::vector<std::int64_t>&) {
    found = true;
    return false;
  });
  return found;
}

/// Some balanced {0,1}-vector is 1 at e (equivalently, a CAT passes through e).
inline bool brute_cat_through(const TwoColoredMultigraph& g, EdgeId e) { return exists_balanced_through(g, e, 1); }

/// Some balanced {0,1,2}-vector is positive at e. Cap 2 suffices: the
/// characteristic vector of an irreducible CAW is {0,1,2}-valued.
inline bool brute_caw_through(const TwoColoredMultigraph& g, EdgeId e) { return exists_balanced_through(g, e, 2); }

/// First integral f (lexicographic) with lower <= f <= upper that is balanced.
inline std::optional<EdgeVector> brute_box(const TwoColoredMultigraph& g, const std::vector<std::int64_t>& lower,
                                           const std::vector<std::int64_t>& upper) {
  if (lower.size() != g.edge_count() || upper.size() != g.edge_count())
    throw std::invalid_argument("brute_box: bounds do not match the graph");
  std::uint64_t total = 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (lower[e] > upper[e]) return std::nullopt;
    total *= static_cast<std::uint64_t>(upper[e] - lower[e] + 1);
    if (total > kEnumerationLimit) throw guard_exceeded("brute_box: box exceeds the 2^24 guard");
  }
  std::optional<EdgeVector> found;
  detail::BalancedSearch(g, lower, upper).run([&](const std::vector<std::int64_t>& x) {
    found = EdgeVector::from_integers(x);
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Extreme rays by subset enumeration

namespace detail {

/// Walks once around an edge set that forms a single cycle, from `start`,
/// leaving along the lowest-id incident edge.
inline std::vector<EdgeId> walk_cycle(const TwoColoredMultigraph& g, const std::vector<EdgeId>& cycle,
                                      VertexId start) {
  std::vector<bool> in(g.edge_count(), false);
  for (EdgeId e : cycle) in[e] = true;
  std::vector<EdgeId> order;
  VertexId at = start;
  EdgeId prev = g.edge_count();
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    for (EdgeId f : g.incident(at)) {
      if (!in[f] || f == prev) continue;
      order.push_back(f);
      in[f] = false;
      prev = f;
      at = g.edge(f).other(at);
      break;
    }
  }
  return order;
}

}  // namespace detail

/// All even alternating cycles and alternating bicycles, one walk per
/// characteristic vector (so rotations and reflections are not repeated).
/// Cycles start at the lower endpoint of their lowest-id edge; bicycles are
/// written W1 * P * W2 * P^R from the base of the cycle with the lower
/// lowest-id edge.
inline std::vector<Walk> brute_rays(const TwoColoredMultigraph& g) {
  const std::size_t m = g.edge_count();
  if (m > 24) throw guard_exceeded("brute_rays: more than 24 edges");
  std::vector<Walk> rays;
  const std::uint64_t subsets = std::uint64_t{1} << m;
  std::vector<std::size_t> deg(g.vertex_count());
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < m; ++e)
      if (mask >> e & 1) edges.push_back(e);
    std::fill(deg.begin(), deg.end(), 0);
    for (EdgeId e : edges) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    std::vector<VertexId> verts, deg3, deg4;
    bool bad_degree = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (deg[v] == 0) continue;
      verts.push_back(v);
      if (deg[v] == 3) deg3.push_back(v);
      else if (deg[v] == 4) deg4.push_back(v);
      else if (deg[v] != 2) bad_degree = true;
    }
    if (bad_degree) continue;

    // Connectivity of the chosen edge set.
    std::vector<VertexId> comp(g.vertex_count(), g.vertex_count());
    std::vector<VertexId> stack{verts.front()};
    comp[verts.front()] = 0;
    std::size_t reached = 0;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++reached;
      for (EdgeId f : g.incident(v)) {
        if (!(mask >> f & 1)) continue;
        const VertexId w = g.edge(f).other(v);
        if (comp[w] == g.vertex_count()) {
          comp[w] = 0;
          stack.push_back(w);
        }
      }
    }
    if (reached != verts.size()) continue;

    if (deg3.empty() && deg4.empty()) {
      // A single cycle: alternating iff every vertex sees one red, one blue.
      bool alternating = true;
      for (VertexId v : verts) {
        int red = 0;
        for (EdgeId f : g.incident(v))
          if ((mask >> f & 1) && g.edge(f).color == Color::Red) ++red;
        alternating = alternating && red == 1;
      }
      if (!alternating) continue;
      const EdgeId first = edges.front();
      const VertexId start = std::min(g.edge(first).u, g.edge(first).v);
      rays.push_back(walk_from_edges(g, start, detail::walk_cycle(g, edges, start)));
      continue;
    }

    // Bicycle candidates: two odd cycles joined by a path (two degree-3
    // vertices, path edges are bridges) or sharing one vertex (one degree-4
    // vertex). Theta graphs have two degree-3 vertices and no bridges.
    std::vector<EdgeId> cycle1, cycle2, path;
    VertexId base1 = 0, base2 = 0;
    if (deg4.size() == 1 && deg3.empty()) {
      base1 = base2 = deg4.front();
      // Split at the shared vertex: walk from base along the lowest edge.
      const auto first_loop = detail::walk_cycle(g, edges, base1);
      // walk_cycle stops after |edges| steps; cut it when it first returns.
      VertexId at = base1;
      std::size_t cut = 0;
      for (; cut < first_loop.size(); ++cut) {
        at = g.edge(first_loop[cut]).other(at);
        if (at == base1) break;
      }
      cycle1.assign(first_loop.begin(), first_loop.begin() + static_cast<std::ptrdiff_t>(cut + 1));
      std::vector<bool> used(m, false);
      for (EdgeId e : cycle1) used[e] = true;
      for (EdgeId e : edges)
        if (!used[e]) cycle2.push_back(e);
    } else if (deg3.size() == 2 && deg4.empty()) {
      // Path from deg3[0] to deg3[1] through degree-2 vertices that is made
      // of bridges: follow each of the three edges at deg3[0].
      bool found = false;
      for (EdgeId start_edge : g.incident(deg3[0])) {
        if (!(mask >> start_edge & 1)) continue;
        std::vector<EdgeId> trail{start_edge};
        VertexId at = g.edge(start_edge).other(deg3[0]);
        EdgeId prev = start_edge;
        while (deg[at] == 2) {
          for (EdgeId f : g.incident(at))
            if ((mask >> f & 1) && f != prev) {
              prev = f;
              break;
            }
          trail.push_back(prev);
          at = g.edge(prev).other(at);
        }
        if (at != deg3[1]) continue;  // returned to deg3[0]: a cycle
        // A theta graph has three such arcs; a dumbbell has exactly one.
        if (found) {
          found = false;
          path.clear();
          break;
        }
        found = true;
        path = trail;
      }
      if (!found) continue;
      base1 = deg3[0];
      base2 = deg3[1];
      std::vector<bool> on_path(m, false);
      for (EdgeId e : path) on_path[e] = true;
      // Remaining edges split into the cycle through base1 and through base2.
      std::vector<EdgeId> rest;
      for (EdgeId e : edges)
        if (!on_path[e]) rest.push_back(e);
      cycle1 = detail::walk_cycle(g, rest, base1);
      {
        VertexId at = base1;
        std::size_t cut = 0;
        for (; cut < cycle1.size(); ++cut) {
          at = g.edge(cycle1[cut]).other(at);
          if (at == base1) break;
        }
        cycle1.resize(cut + 1);
      }
      std::vector<bool> used(m, false);
      for (EdgeId e : cycle1) used[e] = true;
      for (EdgeId e : rest)
        if (!used[e]) cycle2.push_back(e);
    } else {
      continue;
    }
    if (cycle1.size() % 2 == 0 || cycle2.size() % 2 == 0) continue;

    // Alternation of W1 * P * W2 * P^R is balance of 1 on cycles, 2 on P.
    std::vector<std::int64_t> excess(g.vertex_count(), 0);
    auto add = [&](EdgeId e, std::int64_t w) {
      const std::int64_t s = g.edge(e).color == Color::Red ? w : -w;
      excess[g.edge(e).u] += s;
      excess[g.edge(e).v] += s;
    };
    for (EdgeId e : cycle1) add(e, 1);
    for (EdgeId e : cycle2) add(e, 1);
    for (EdgeId e : path) add(e, 2);
    if (std::any_of(excess.begin(), excess.end(), [](std::int64_t v) { return v != 0; })) continue;

    // Canonical orientation: start from the cycle holding the lowest edge id.
    const EdgeId min1 = *std::min_element(cycle1.begin(), cycle1.end());
    const EdgeId min2 = *std::min_element(cycle2.begin(), cycle2.end());
    if (min2 < min1) {
      std::swap(cycle1, cycle2);
      std::swap(base1, base2);
      std::reverse(path.begin(), path.end());
    }
    // path runs from base1 to base2 (it was collected from deg3[0] and
    // reversed along with the swap).
    const Walk p = walk_from_edges(g, base1, path);
    const Walk w1 = walk_from_edges(g, base1, detail::walk_cycle(g, cycle1, base1));
    const Walk w2 = walk_from_edges(g, base2, detail::walk_cycle(g, cycle2, base2));
    rays.push_back(concat_walks(concat_walks(concat_walks(w1, p), w2), reverse_walk(p)));
  }
  return rays;
}

// ---------------------------------------------------------------------------
// Linear algebra

/// Vertex-edge incidence matrix: column e has ones at the endpoints of e.
struct IncidenceMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::int64_t>> entries;  // entries[row][col]

  static IncidenceMatrix of(const TwoColoredMultigraph& g, const std::vector<EdgeId>& columns) {
    IncidenceMatrix m{g.vertex_count(), columns.size(),
                      std::vector<std::vector<std::int64_t>>(g.vertex_count(),
                                                             std::vector<std::int64_t>(columns.size(), 0))};
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const Edge& e = g.edge(columns[c]);
      m.entries[e.u][c] = 1;
      m.entries[e.v][c] = 1;
    }
    return m;
  }
  static IncidenceMatrix of(const TwoColoredMultigraph& g) {
    std::vector<EdgeId> all(g.edge_count());
    for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
    return of(g, all);
  }
};

/// Rank over the rationals by fraction-free (Bareiss) elimination.
inline std::size_t rank_exact(const IncidenceMatrix& m) {
  std::vector<std::vector<BigInt>> a(m.rows, std::vector<BigInt>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = m.entries[r][c];
  std::size_t rank = 0;
  BigInt prev_pivot = 1;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      for (std::size_t c = col + 1; c < m.cols; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev_pivot;
      a[r][col] = 0;
    }
    prev_pivot = a[rank][col];
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Matching

/// Maximum matching size by exhaustive branching on the lowest uncovered node.
inline std::size_t brute_matching(std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (nodes > 24) throw guard_exceeded("brute_matching: more than 24 nodes");
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (const auto& [a, b] : edges) {
    if (a >= nodes || b >= nodes || a == b) throw std::invalid_argument("brute_matching: bad edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> covered(nodes, false);
  std::function<std::size_t(std::size_t)> best = [&](std::size_t from) -> std::size_t {
    while (from < nodes && covered[from]) ++from;
    if (from == nodes) return 0;
    covered[from] = true;
    std::size_t result = best(from + 1);  // leave `from` unmatched
    for (std::size_t to : adj[from]) {
      if (covered[to]) continue;
      covered[to] = true;
      result = std::max(result, 1 + best(from + 1));
      covered[to] = false;
    }
    covered[from] = false;
    return result;
  };
  return best(0);
}

}  // namespace altcone::oracle
