#pragma once

#include <altcone/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace altcone {

using VertexId = std::size_t;
using EdgeId = std::size_t;

enum class Color : std::uint8_t { Red, Blue };

constexpr Color opposite(Color c) noexcept {
  return c == Color::Red ? Color::Blue : Color::Red;
}

constexpr char color_letter(Color c) noexcept { return c == Color::Red ? 'R' : 'B'; }

struct Edge {
  VertexId u;
  VertexId v;
  Color color;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool has_endpoint(VertexId w) const { return w == u || w == v; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph without loops whose edges are colored red or blue.
/// Edge ids are dense and follow insertion order. Immutable once built.
class TwoColoredMultigraph {
 public:
  TwoColoredMultigraph() = default;

  TwoColoredMultigraph(std::size_t vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)), incident_(vertex_count) {
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      if (e.u >= vertex_count_ || e.v >= vertex_count_)
        throw std::out_of_range("edge " + std::to_string(id) + ": endpoint out of range");
      if (e.u == e.v)
        throw std::invalid_argument("edge " + std::to_string(id) + ": loops are not allowed");
      incident_[e.u].push_back(id);
      incident_[e.v].push_back(id);
    }
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Edge ids incident with w, ascending.
  std::span<const EdgeId> incident(VertexId w) const { return incident_.at(w); }

  std::size_t red_degree(VertexId w) const { return degree(w, Color::Red); }
  std::size_t blue_degree(VertexId w) const { return degree(w, Color::Blue); }

  std::size_t degree(VertexId w, Color c) const {
    const auto ids = incident(w);
    return static_cast<std::size_t>(
        std::count_if(ids.begin(), ids.end(), [&](EdgeId id) { return edges_[id].color == c; }));
  }

  friend bool operator==(const TwoColoredMultigraph& a, const TwoColoredMultigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

inline TwoColoredMultigraph build_graph(std::size_t vertex_count, std::vector<Edge> edges) {
  return TwoColoredMultigraph(vertex_count, std::move(edges));
}

// ---------------------------------------------------------------------------
// Edge vectors

/// Exact rational weight per edge id.
class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(std::size_t size) : values_(size) {}
  explicit EdgeVector(std::vector<Rational> values) : values_(std::move(values)) {}

  static EdgeVector from_integers(std::span<const std::int64_t> values) {
    EdgeVector x(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) x.values_[i] = values[i];
    return x;
  }
  static EdgeVector from_integers(std::initializer_list<std::int64_t> values) {
    return from_integers(std::span<const std::int64_t>(values.begin(), values.size()));
  }

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](EdgeId e) const { return values_.at(e); }
  Rational& operator[](EdgeId e) { return values_.at(e); }
  std::span<const Rational> values() const noexcept { return values_; }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q >= 0; });
  }
  bool is_integral() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return is_integer(q); });
  }
  bool is_binary() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& q) { return q == 0 || q == 1; });
  }
  /// Every value lies in {0, 1, ..., cap}.
  bool is_bounded_integral(std::int64_t cap) const {
    return std::all_of(values_.begin(), values_.end(), [cap](const Rational& q) {
      return is_integer(q) && q >= 0 && q <= cap;
    });
  }

  std::vector<EdgeId> support() const {
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < values_.size(); ++e)
      if (values_[e] != 0) ids.push_back(e);
    return ids;
  }

  std::vector<std::int64_t> to_integers() const {
    std::vector<std::int64_t> out;
    out.reserve(values_.size());
    for (const Rational& q : values_) out.push_back(to_int64(q));
    return out;
  }

  EdgeVector& operator+=(const EdgeVector& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  EdgeVector& operator-=(const EdgeVector& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  EdgeVector& operator*=(const Rational& s) {
    for (Rational& q : values_) q *= s;
    return *this;
  }
  friend EdgeVector operator+(EdgeVector a, const EdgeVector& b) { return a += b; }
  friend EdgeVector operator-(EdgeVector a, const EdgeVector& b) { return a -= b; }
  friend EdgeVector operator*(const Rational& s, EdgeVector a) { return a *= s; }
  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;

 private:
  void require_same_size(const EdgeVector& o) const {
    if (o.size() != size()) throw std::invalid_argument("edge vectors differ in length");
  }

  std::vector<Rational> values_;
};

inline void require_vector_on(const TwoColoredMultigraph& g, const EdgeVector& x) {
  if (x.size() != g.edge_count())
    throw std::invalid_argument("edge vector has " + std::to_string(x.size()) +
                                " entries but the graph has " + std::to_string(g.edge_count()) +
                                " edges");
}

/// Red weight equals blue weight at every vertex. Signs are not checked.
inline bool is_balanced(const TwoColoredMultigraph& g, const EdgeVector& x) {
  require_vector_on(g, x);
  std::vector<Rational> excess(g.vertex_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (e.color == Color::Red) {
      excess[e.u] += x[id];
      excess[e.v] += x[id];
    } else {
      excess[e.u] -= x[id];
      excess[e.v] -= x[id];
    }
  }
  return std::all_of(excess.begin(), excess.end(), [](const Rational& q) { return q == 0; });
}

/// Membership in the alternating cone: balanced and nonnegative.
inline bool in_alternating_cone(const TwoColoredMultigraph& g, const EdgeVector& x) {
  return x.is_nonnegative() && is_balanced(g, x);
}

// ---------------------------------------------------------------------------
// Walks

/// One traversal of an edge, from one endpoint to the other.
struct Step {
  EdgeId edge;
  VertexId from;
  VertexId to;

  friend bool operator==(const Step&, const Step&) = default;
};

/// A walk stores the traversed edge ids explicitly; with parallel edges a
/// vertex sequence alone is ambiguous.
struct Walk {
  VertexId start = 0;
  std::vector<Step> steps;

  std::size_t length() const noexcept { return steps.size(); }
  bool empty() const noexcept { return steps.empty(); }
  VertexId end() const noexcept { return steps.empty() ? start : steps.back().to; }

  /// v_0, v_1, ..., v_m.
  std::vector<VertexId> vertices() const {
    std::vector<VertexId> vs{start};
    for (const Step& s : steps) vs.push_back(s.to);
    return vs;
  }

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Throws std::invalid_argument unless consecutive steps chain and every
/// step matches its edge's endpoints.
inline void validate_walk(const TwoColoredMultigraph& g, const Walk& w) {
  if (w.start >= g.vertex_count()) throw std::invalid_argument("walk starts outside the graph");
  VertexId at = w.start;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const Step& s = w.steps[i];
    if (s.edge >= g.edge_count())
      throw std::invalid_argument("walk step " + std::to_string(i) + ": unknown edge");
    const Edge& e = g.edge(s.edge);
    if (s.from != at)
      throw std::invalid_argument("walk step " + std::to_string(i) + ": does not continue from vertex " +
                                  std::to_string(at));
    if (!((e.u == s.from && e.v == s.to) || (e.v == s.from && e.u == s.to)))
      throw std::invalid_argument("walk step " + std::to_string(i) + ": endpoints do not match edge " +
                                  std::to_string(s.edge));
    at = s.to;
  }
}

/// Builds a walk from a start vertex and a sequence of edge ids, resolving
/// each traversal direction from the current vertex.
inline Walk walk_from_edges(const TwoColoredMultigraph& g, VertexId start,
                            std::span<const EdgeId> edge_ids) {
  Walk w{start, {}};
  VertexId at = start;
  for (EdgeId id : edge_ids) {
    const Edge& e = g.edge(id);
    if (!e.has_endpoint(at))
      throw std::invalid_argument("edge " + std::to_string(id) + " is not incident with vertex " +
                                  std::to_string(at));
    const VertexId next = e.other(at);
    w.steps.push_back({id, at, next});
    at = next;
  }
  return w;
}
inline Walk walk_from_edges(const TwoColoredMultigraph& g, VertexId start,
                            std::initializer_list<EdgeId> edge_ids) {
  return walk_from_edges(g, start, std::span<const EdgeId>(edge_ids.begin(), edge_ids.size()));
}

struct WalkClass {
  bool isClosed = false;
  bool isTrail = false;
  bool isPath = false;
  bool isCycle = false;
  bool isInternallyAlternating = false;
  bool isAlternating = false;
  bool isCAW = false;
  bool isCAT = false;
  bool isEvenAlternatingCycle = false;
  bool isOddInternallyAlternatingCycle = false;
  bool isAlternatingBicycle = false;
};

namespace detail {

inline bool all_distinct(std::vector<std::size_t> xs) {
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

inline bool internally_alternating(const TwoColoredMultigraph& g, std::span<const Step> steps) {
  for (std::size_t j = 1; j < steps.size(); ++j)
    if (g.edge(steps[j - 1].edge).color == g.edge(steps[j].edge).color) return false;
  return true;
}

/// Odd cycle, internally alternating, starting and ending at steps.front().from.
inline bool odd_ia_cycle(const TwoColoredMultigraph& g, std::span<const Step> steps) {
  if (steps.size() < 3 || steps.size() % 2 == 0) return false;
  if (steps.back().to != steps.front().from) return false;
  std::vector<std::size_t> vs, es;
  for (const Step& s : steps) {
    vs.push_back(s.from);
    es.push_back(s.edge);
  }
  return all_distinct(vs) && all_distinct(es) && internally_alternating(g, steps);
}

/// Recognises W = W1 * P * W2 * P^R: two odd internally alternating cycles
/// joined by a path, vertex-disjoint apart from the path's endpoints (or
/// sharing their base when P is empty). The caller checks alternation.
inline bool bicycle_shape(const TwoColoredMultigraph& g, std::span<const Step> steps) {
  const std::size_t m = steps.size();
  for (std::size_t a = 3; a < m; a += 2) {
    for (std::size_t p = 0; a + 2 * p + 3 <= m; ++p) {
      const std::size_t c = m - a - 2 * p;
      if (c % 2 == 0) continue;
      const auto w1 = steps.subspan(0, a);
      const auto path = steps.subspan(a, p);
      const auto w2 = steps.subspan(a + p, c);
      const auto back = steps.subspan(a + p + c, p);
      if (!odd_ia_cycle(g, w1) || !odd_ia_cycle(g, w2)) continue;
      bool mirrored = true;
      for (std::size_t i = 0; i < p && mirrored; ++i) {
        const Step& fwd = path[p - 1 - i];
        mirrored = back[i].edge == fwd.edge && back[i].from == fwd.to && back[i].to == fwd.from;
      }
      if (!mirrored) continue;
      // Vertex sets: W1 and W2 each own their cycle vertices, P owns its
      // interior; the only shared vertices are the two bases.
      std::vector<std::size_t> vs;
      for (const Step& s : w1) vs.push_back(s.from);
      for (const Step& s : path) vs.push_back(s.to);
      for (const Step& s : w2) vs.push_back(s.from);
      // w2.front().from is the second base; when P is nonempty it was pushed
      // as path.back().to as well, and when P is empty it equals the first base.
      if (p > 0) vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(a + p - 1));
      else vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(a));
      if (!all_distinct(vs)) continue;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Classifies a walk. A length-0 walk is closed, a trail, and a path, but is
/// neither a cycle nor alternating.
inline WalkClass classify_walk(const TwoColoredMultigraph& g, const Walk& w) {
  validate_walk(g, w);
  WalkClass k;
  const std::size_t m = w.length();
  const auto vs = w.vertices();
  std::vector<std::size_t> es;
  for (const Step& s : w.steps) es.push_back(s.edge);

  k.isClosed = w.start == w.end();
  k.isTrail = detail::all_distinct(es);
  k.isPath = k.isTrail && detail::all_distinct(vs);
  k.isCycle = m > 0 && k.isClosed && k.isTrail &&
              detail::all_distinct(std::vector<std::size_t>(vs.begin(), vs.end() - 1));
  k.isInternallyAlternating = detail::internally_alternating(g, w.steps);
  k.isAlternating = m > 0 && k.isInternallyAlternating &&
                    (!k.isClosed || g.edge(w.steps.back().edge).color !=
                                        g.edge(w.steps.front().edge).color);
  k.isCAW = k.isClosed && k.isAlternating;
  k.isCAT = k.isCAW && k.isTrail;
  k.isEvenAlternatingCycle = k.isCycle && m % 2 == 0 && k.isAlternating;
  k.isOddInternallyAlternatingCycle = k.isCycle && m % 2 == 1 && k.isInternallyAlternating;
  k.isAlternatingBicycle = k.isCAW && detail::bicycle_shape(g, w.steps);
  return k;
}

/// Occurrence count of each edge along the walk.
inline std::vector<std::int64_t> edge_multiplicities(const TwoColoredMultigraph& g, const Walk& w) {
  std::vector<std::int64_t> counts(g.edge_count(), 0);
  for (const Step& s : w.steps) ++counts.at(s.edge);
  return counts;
}

inline EdgeVector char_vector(const TwoColoredMultigraph& g, const Walk& w) {
  validate_walk(g, w);
  return EdgeVector::from_integers(edge_multiplicities(g, w));
}

inline Walk concat_walks(const Walk& first, const Walk& second) {
  if (first.end() != second.start)
    throw std::invalid_argument("cannot concatenate: first walk ends at " +
                                std::to_string(first.end()) + ", second starts at " +
                                std::to_string(second.start));
  Walk w = first;
  w.steps.insert(w.steps.end(), second.steps.begin(), second.steps.end());
  return w;
}

inline Walk reverse_walk(const Walk& w) {
  Walk r{w.end(), {}};
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it)
    r.steps.push_back({it->edge, it->to, it->from});
  return r;
}

/// The walk restarted at step `offset` (closed walks only).
inline Walk rotate_closed_walk(const Walk& w, std::size_t offset) {
  if (w.start != w.end()) throw std::invalid_argument("only closed walks can be rotated");
  if (w.empty()) return w;
  offset %= w.length();
  Walk r{w.steps[offset].from, {}};
  for (std::size_t i = 0; i < w.length(); ++i) r.steps.push_back(w.steps[(offset + i) % w.length()]);
  return r;
}

struct DuplicatedGraph {
  TwoColoredMultigraph graph;
  /// original_of[copy edge id] = original edge id.
  std::vector<EdgeId> original_of;
  std::size_t factor = 1;

  /// Copy c (0-based) of original edge e.
  EdgeId copy(EdgeId e, std::size_t c) const { return e * factor + c; }
};

/// Replaces every edge by k parallel copies of the same color; the copies of
/// edge e get ids e*k .. e*k+k-1.
inline DuplicatedGraph duplicate_edges(const TwoColoredMultigraph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("duplication factor must be at least 1");
  std::vector<Edge> edges;
  std::vector<EdgeId> original_of;
  edges.reserve(g.edge_count() * k);
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    for (std::size_t c = 0; c < k; ++c) {
      edges.push_back(g.edge(id));
      original_of.push_back(id);
    }
  return {TwoColoredMultigraph(g.vertex_count(), std::move(edges)), std::move(original_of), k};
}

}  // namespace altcone
