#pragma once

#include <altcone/graph.hpp>
#include <altcone/threshold.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace fixtures {

using namespace altcone;

constexpr Color R = Color::Red;
constexpr Color B = Color::Blue;

inline TwoColoredMultigraph parallel_pair() { return build_graph(2, {{0, 1, R}, {0, 1, B}}); }

inline TwoColoredMultigraph lone_red_edge() { return build_graph(2, {{0, 1, R}}); }

/// 0-1-2-3-0 colored R,B,R,B.
inline TwoColoredMultigraph alternating_c4() { return build_graph(4, {{0, 1, R}, {1, 2, B}, {2, 3, R}, {3, 0, B}}); }

inline TwoColoredMultigraph alternating_c6() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 6; ++i) edges.push_back({i, (i + 1) % 6, i % 2 == 0 ? R : B});
  return build_graph(6, edges);
}

/// Two triangles joined by the path edge 3 = {0,3}. Triangle a,b,c is
/// 0,1,2 with base 0; triangle d,e,f is 3,4,5 with base 3.
inline TwoColoredMultigraph bicycle_graph() {
  return build_graph(6, {{0, 1, B}, {1, 2, R}, {2, 0, B}, {0, 3, R}, {3, 4, B}, {4, 5, R}, {5, 3, B}});
}

inline EdgeVector bicycle_chi() { return EdgeVector::from_integers({1, 1, 1, 2, 1, 1, 1}); }

/// The bicycle graph plus the alternating 4-cycle 1-6-7-8-1 hanging off b.
inline TwoColoredMultigraph composite_graph() {
  return build_graph(9, {{0, 1, B},
                         {1, 2, R},
                         {2, 0, B},
                         {0, 3, R},
                         {3, 4, B},
                         {4, 5, R},
                         {5, 3, B},
                         {1, 6, R},
                         {6, 7, B},
                         {7, 8, R},
                         {8, 1, B}});
}

/// Weighted vector on a center 0 and seven outer vertices.
struct WeightedExample {
  TwoColoredMultigraph graph;
  EdgeVector x;
};

inline WeightedExample figure_vector() {
  return {build_graph(8, {{0, 2, R},
                          {0, 3, R},
                          {4, 5, R},
                          {6, 7, R},
                          {7, 1, R},
                          {0, 4, B},
                          {0, 7, B},
                          {1, 2, B},
                          {2, 3, B},
                          {3, 4, B},
                          {5, 6, B}}),
          EdgeVector::from_integers({2, 2, 2, 2, 1, 1, 3, 1, 1, 1, 2})};
}

/// Two triangles joined through a chain of small cycles; the closed walk
/// below crosses the two middle edges once in each direction.
struct IrreducibleCaw {
  TwoColoredMultigraph graph;
  Walk walk;
};

inline IrreducibleCaw irreducible_caw() {
  // n1..n14 -> 0..13
  const TwoColoredMultigraph g = build_graph(14, {{2, 0, R},     // 0  n3n1
                                                  {0, 1, B},     // 1  n1n2
                                                  {1, 2, R},     // 2  n2n3
                                                  {2, 3, B},     // 3  n3n4
                                                  {3, 5, R},     // 4  n4n6
                                                  {5, 4, R},     // 5  n6n5
                                                  {4, 3, R},     // 6  n5n4
                                                  {5, 6, B},     // 7  n6n7
                                                  {6, 7, R},     // 8  n7n8
                                                  {7, 5, B},     // 9  n8n6
                                                  {4, 9, B},     // 10 n5n10
                                                  {9, 10, R},    // 11 n10n11
                                                  {10, 8, R},    // 12 n11n9
                                                  {8, 4, B},     // 13 n9n5
                                                  {10, 11, B},   // 14 n11n12
                                                  {11, 13, R},   // 15 n12n14
                                                  {13, 12, B},   // 16 n14n13
                                                  {12, 11, R}});  // 17 n13n12
  // n3 n4 n6 n7 n8 n6 n5 n10 n11 n12 n14 n13 n12 n11 n9 n5 n4 n3 n1 n2 n3
  const std::vector<EdgeId> ids{3, 4, 7, 8, 9, 5, 10, 11, 14, 15, 16, 17, 14, 12, 13, 6, 3, 0, 1, 2};
  return {g, walk_from_edges(g, 2, ids)};
}

inline TwoColoredMultigraph complete_graph(std::size_t n, Color c) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) edges.push_back({a, b, c});
  return build_graph(n, edges);
}

inline std::vector<std::pair<std::size_t, std::size_t>> petersen_edges() {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return e;
}

inline SimpleGraph two_k2() { return SimpleGraph(4, {{0, 1}, {2, 3}}); }
inline SimpleGraph path4() { return SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline SimpleGraph star(std::size_t leaves) {
  SimpleGraph g(leaves + 1);
  for (VertexId v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// Random instances

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline TwoColoredMultigraph random_multigraph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = uniform(rng, 2, max_vertices);
  const std::size_t m = uniform(rng, 1, max_edges);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const VertexId u = uniform(rng, 0, n - 1);
    VertexId v = uniform(rng, 0, n - 2);
    if (v >= u) ++v;
    edges.push_back({u, v, uniform(rng, 0, 1) == 0 ? R : B});
  }
  return build_graph(n, edges);
}

inline SimpleGraph random_simple_graph(Rng& rng, std::size_t n, double p = 0.5) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

/// Random walk that may stop early at a dead end.
inline Walk random_walk(Rng& rng, const TwoColoredMultigraph& g, std::size_t max_len) {
  Walk w{uniform(rng, 0, g.vertex_count() - 1), {}};
  const std::size_t len = uniform(rng, 0, max_len);
  VertexId at = w.start;
  for (std::size_t i = 0; i < len; ++i) {
    const auto inc = g.incident(at);
    if (inc.empty()) break;
    const EdgeId e = inc[uniform(rng, 0, inc.size() - 1)];
    const VertexId to = g.edge(e).other(at);
    w.steps.push_back({e, at, to});
    at = to;
  }
  return w;
}

}  // namespace fixtures
