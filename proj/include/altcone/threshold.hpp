#pragma once

#include <altcone/cone.hpp>
#include <altcone/graph.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace altcone {

using DegreeSequence = std::vector<std::int64_t>;

/// Simple undirected graph (no loops, no parallel edges) with an adjacency
/// matrix for O(1) pair queries.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertex_count)
      : n_(vertex_count), adjacent_(vertex_count * vertex_count, false) {}

  SimpleGraph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges)
      : SimpleGraph(vertex_count) {
    for (const auto& [a, b] : edges) {
      if (has_edge(a, b)) throw std::invalid_argument("simple graph cannot contain parallel edges");
      add_edge(a, b);
    }
  }
  SimpleGraph(std::size_t vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edges)
      : SimpleGraph(vertex_count, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const noexcept { return n_; }

  bool has_edge(VertexId a, VertexId b) const {
    check(a, b);
    return adjacent_[a * n_ + b];
  }

  void add_edge(VertexId a, VertexId b) {
    check(a, b);
    adjacent_[a * n_ + b] = adjacent_[b * n_ + a] = true;
  }
  void remove_edge(VertexId a, VertexId b) {
    check(a, b);
    adjacent_[a * n_ + b] = adjacent_[b * n_ + a] = false;
  }

  std::size_t degree(VertexId a) const {
    std::size_t d = 0;
    for (VertexId b = 0; b < n_; ++b) d += adjacent_[a * n_ + b] ? 1 : 0;
    return d;
  }

  DegreeSequence degrees() const {
    DegreeSequence d(n_);
    for (VertexId a = 0; a < n_; ++a) d[a] = static_cast<std::int64_t>(degree(a));
    return d;
  }

  /// Edges {a,b} with a < b, lexicographic.
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId a = 0; a < n_; ++a)
      for (VertexId b = a + 1; b < n_; ++b)
        if (adjacent_[a * n_ + b]) out.emplace_back(a, b);
    return out;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check(VertexId a, VertexId b) const {
    if (a >= n_ || b >= n_) throw std::out_of_range("vertex out of range");
    if (a == b) throw std::invalid_argument("simple graph cannot contain loops");
  }

  std::size_t n_ = 0;
  std::vector<bool> adjacent_;
};

/// Complete graph on V; the pair {i,j} (i < j, lexicographic edge order) is
/// red iff it is an edge of g.
inline TwoColoredMultigraph hat(const SimpleGraph& g) {
  std::vector<Edge> edges;
  const std::size_t n = g.vertex_count();
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      edges.push_back({a, b, g.has_edge(a, b) ? Color::Red : Color::Blue});
  return TwoColoredMultigraph(n, std::move(edges));
}

/// Edge id of {a,b} in hat(g) for a graph on n vertices.
inline EdgeId hat_edge_id(std::size_t n, VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

/// Repeatedly strips a 0 entry or an entry equal to (remaining count - 1),
/// decrementing the rest in the latter case. Threshold iff nothing remains.
inline bool is_threshold_degrees(DegreeSequence d) {
  while (!d.empty()) {
    if (auto zero = std::find(d.begin(), d.end(), 0); zero != d.end()) {
      d.erase(zero);
      continue;
    }
    auto top = std::max_element(d.begin(), d.end());
    if (*top != static_cast<std::int64_t>(d.size()) - 1) return false;
    d.erase(top);
    for (auto& x : d) --x;
  }
  return true;
}

inline bool is_threshold_via_cone(const SimpleGraph& g) { return dimension(hat(g)) == 0; }

/// Vertex weights with c(a)+c(b) > 0 exactly on edges, built from an
/// isolated/dominating elimination order: the vertex removed at step k gets
/// magnitude n-k, positive if it was dominating.
inline std::optional<std::vector<Rational>> threshold_weights(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<Rational> weight(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t remaining = n - step;
    bool removed = false;
    for (VertexId v = 0; v < n && !removed; ++v) {
      if (!alive[v]) continue;
      std::size_t deg = 0;
      for (VertexId w = 0; w < n; ++w)
        if (w != v && alive[w] && g.has_edge(v, w)) ++deg;
      const std::int64_t magnitude = static_cast<std::int64_t>(remaining);
      if (deg == 0) {
        weight[v] = -magnitude;
      } else if (deg == remaining - 1) {
        weight[v] = magnitude;
      } else {
        continue;
      }
      alive[v] = false;
      removed = true;
    }
    if (!removed) return std::nullopt;
  }
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) {
      const Rational s = weight[a] + weight[b];
      if (g.has_edge(a, b) ? s <= 0 : s >= 0)
        throw std::logic_error("threshold weights failed verification");
    }
  return weight;
}

/// Edge ids (in walk order i-j-k-l, first edge red) of an alternating
/// 4-cycle in a hat graph: {i,j},{k,l} red and {j,k},{l,i} blue.
inline std::optional<std::array<EdgeId, 4>> find_alternating_c4(const TwoColoredMultigraph& ghat) {
  const std::size_t n = ghat.vertex_count();
  if (ghat.edge_count() != n * (n - (n > 0 ? 1 : 0)) / 2)
    throw std::invalid_argument("find_alternating_c4: input is not a complete graph");
  for (EdgeId id = 0; id < ghat.edge_count(); ++id) {
    const Edge& e = ghat.edge(id);
    if (hat_edge_id(n, e.u, e.v) != id)
      throw std::invalid_argument("find_alternating_c4: input is not in hat edge order");
  }
  auto color = [&](VertexId a, VertexId b) { return ghat.edge(hat_edge_id(n, a, b)).color; };
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c)
        for (VertexId d = c + 1; d < n; ++d) {
          const std::array<std::array<VertexId, 4>, 3> orders{{{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
          for (const auto& o : orders) {
            for (std::size_t shift = 0; shift < 2; ++shift) {
              const VertexId i = o[shift], j = o[shift + 1], k = o[(shift + 2) % 4], l = o[(shift + 3) % 4];
              if (color(i, j) == Color::Red && color(k, l) == Color::Red &&
                  color(j, k) == Color::Blue && color(l, i) == Color::Blue)
                return std::array<EdgeId, 4>{hat_edge_id(n, i, j), hat_edge_id(n, j, k),
                                             hat_edge_id(n, k, l), hat_edge_id(n, l, i)};
            }
          }
        }
  return std::nullopt;
}

enum class Majorization { Strict, Permutation, No, IncomparableSums };

constexpr std::string_view to_string(Majorization m) noexcept {
  switch (m) {
    case Majorization::Strict: return "strict";
    case Majorization::Permutation: return "permutation";
    case Majorization::No: return "no";
    case Majorization::IncomparableSums: return "incomparable-sums";
  }
  return "no";
}

inline DegreeSequence sorted_descending(DegreeSequence a) {
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

/// Does a majorize b? Sorted prefix sums of a dominate those of b, equal totals.
inline Majorization majorizes(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size()) throw std::invalid_argument("majorizes: sequences differ in length");
  const auto sa = sorted_descending(a), sb = sorted_descending(b);
  if (std::accumulate(sa.begin(), sa.end(), std::int64_t{0}) !=
      std::accumulate(sb.begin(), sb.end(), std::int64_t{0}))
    return Majorization::IncomparableSums;
  if (sa == sb) return Majorization::Permutation;
  std::int64_t pa = 0, pb = 0;
  for (std::size_t k = 0; k < sa.size(); ++k) {
    pa += sa[k];
    pb += sb[k];
    if (pa < pb) return Majorization::No;
  }
  return Majorization::Strict;
}

/// Moves one unit from position i to position j; requires a[i] >= a[j] + 2.
inline DegreeSequence unit_transformation(DegreeSequence a, std::size_t i, std::size_t j) {
  if (i >= a.size() || j >= a.size()) throw std::out_of_range("unit_transformation: index out of range");
  if (a[i] < a[j] + 2) throw std::invalid_argument("unit_transformation: requires a[i] >= a[j] + 2");
  --a[i];
  ++a[j];
  return a;
}

/// Unit transformations (0-based positions in sorted-descending a) that turn
/// a into sorted-descending b. Each step takes the first position where a
/// exceeds b and the first later position where a falls short.
inline std::vector<std::pair<std::size_t, std::size_t>> muirhead_sequence(const DegreeSequence& a,
                                                                          const DegreeSequence& b) {
  const Majorization m = majorizes(a, b);
  if (m != Majorization::Strict && m != Majorization::Permutation)
    throw std::invalid_argument("muirhead_sequence: a does not majorize b");
  auto cur = sorted_descending(a);
  const auto target = sorted_descending(b);
  std::vector<std::pair<std::size_t, std::size_t>> steps;
  while (cur != target) {
    std::size_t i = 0;
    while (cur[i] <= target[i]) ++i;
    std::size_t j = i + 1;
    while (cur[j] >= target[j]) ++j;
    cur = unit_transformation(std::move(cur), i, j);
    steps.emplace_back(i, j);
  }
  return steps;
}

/// Havel-Hakimi: the vertex with the largest residual demand (lowest index
/// on ties) is joined to the next-largest ones.
inline std::optional<SimpleGraph> realize_degree_sequence(const DegreeSequence& d) {
  const std::size_t n = d.size();
  SimpleGraph g(n);
  std::vector<std::int64_t> need = d;
  for (auto x : need)
    if (x < 0 || x > static_cast<std::int64_t>(n) - 1) return std::nullopt;
  std::vector<bool> done(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    VertexId v = n;
    for (VertexId w = 0; w < n; ++w)
      if (!done[w] && (v == n || need[w] > need[v])) v = w;
    done[v] = true;
    std::vector<VertexId> others;
    for (VertexId w = 0; w < n; ++w)
      if (!done[w]) others.push_back(w);
    std::stable_sort(others.begin(), others.end(), [&](VertexId x, VertexId y) { return need[x] > need[y]; });
    if (need[v] > static_cast<std::int64_t>(others.size())) return std::nullopt;
    for (std::int64_t k = 0; k < need[v]; ++k) {
      const VertexId w = others[static_cast<std::size_t>(k)];
      if (need[w] == 0) return std::nullopt;
      --need[w];
      g.add_edge(v, w);
    }
    need[v] = 0;
  }
  return g;
}

/// A(d): dimension of the alternating cone of the hat of any realization.
inline std::optional<std::size_t> cone_dim_of_degrees(const DegreeSequence& d) {
  auto g = realize_degree_sequence(d);
  if (!g) return std::nullopt;
  return dimension(hat(*g));
}

/// Graph-level unit transformation from i to j: with k, l outside {i,j}
/// adjacent to i but not to j (lexicographically least pair), move the edge
/// {i,k} to {j,k}.
inline SimpleGraph graph_unit_transformation(const SimpleGraph& g, VertexId i, VertexId j) {
  const std::size_t n = g.vertex_count();
  if (i >= n || j >= n) throw std::out_of_range("graph_unit_transformation: vertex out of range");
  if (i == j) throw std::invalid_argument("graph_unit_transformation: i and j must differ");
  if (g.degree(i) < g.degree(j) + 2)
    throw std::invalid_argument("graph_unit_transformation: requires deg(i) >= deg(j) + 2");
  std::vector<VertexId> candidates;
  for (VertexId k = 0; k < n; ++k)
    if (k != i && k != j && g.has_edge(i, k) && !g.has_edge(j, k)) candidates.push_back(k);
  if (candidates.size() < 2) throw std::logic_error("graph_unit_transformation: no valid pair k, l");
  const VertexId k = candidates[0];
  SimpleGraph out = g;
  out.remove_edge(i, k);
  out.add_edge(j, k);
  return out;
}

}  // namespace altcone
