#pragma once

#include <altcone/graph.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace altcone {

namespace detail {

/// Grows an internally alternating walk from `seed` (traversed u -> v) that
/// never uses an edge more often than `capacity` allows, until it closes up
/// with a color change. Balanced integral capacity guarantees an extension
/// at every open end, so the loop always terminates in a CAW.
inline Walk grow_caw(const TwoColoredMultigraph& g, std::span<const std::int64_t> capacity,
                     EdgeId seed) {
  std::vector<std::int64_t> used(g.edge_count(), 0);
  const Edge& first = g.edge(seed);
  Walk w{first.u, {{seed, first.u, first.v}}};
  used[seed] = 1;
  const Color first_color = first.color;
  for (;;) {
    const Step& last = w.steps.back();
    const Color last_color = g.edge(last.edge).color;
    if (last.to == w.start && last_color != first_color) return w;
    const Color want = opposite(last_color);
    bool extended = false;
    for (EdgeId f : g.incident(last.to)) {
      if (g.edge(f).color != want || used[f] >= capacity[f]) continue;
      ++used[f];
      w.steps.push_back({f, last.to, g.edge(f).other(last.to)});
      extended = true;
      break;
    }
    if (!extended)
      throw std::logic_error("walk extension stalled: capacity vector is not balanced");
  }
}

}  // namespace detail

/// Splits a CAW into CAWs with the same total characteristic vector, none of
/// which traverses an edge twice in the same direction. Whenever
/// W = A*e*B*e*C with both e-traversals in the same direction, W is replaced
/// by e*B and A*e*C. Every output characteristic vector is {0,1,2}-valued.
inline std::vector<Walk> reduce_caw(const TwoColoredMultigraph& g, const Walk& w) {
  if (!classify_walk(g, w).isCAW) throw std::invalid_argument("reduce_caw: input is not a CAW");
  std::vector<Walk> done;
  std::vector<Walk> pending{w};
  while (!pending.empty()) {
    Walk cur = std::move(pending.back());
    pending.pop_back();
    std::map<std::pair<EdgeId, VertexId>, std::size_t> first_seen;
    std::size_t i = 0, j = 0;
    bool found = false;
    for (std::size_t k = 0; k < cur.steps.size() && !found; ++k) {
      const auto key = std::make_pair(cur.steps[k].edge, cur.steps[k].from);
      auto [it, inserted] = first_seen.emplace(key, k);
      if (!inserted) {
        i = it->second;
        j = k;
        found = true;
      }
    }
    if (!found) {
      done.push_back(std::move(cur));
      continue;
    }
    Walk loop{cur.steps[i].from, {cur.steps.begin() + static_cast<std::ptrdiff_t>(i),
                                  cur.steps.begin() + static_cast<std::ptrdiff_t>(j)}};
    Walk rest{cur.start, {cur.steps.begin(), cur.steps.begin() + static_cast<std::ptrdiff_t>(i)}};
    rest.steps.insert(rest.steps.end(), cur.steps.begin() + static_cast<std::ptrdiff_t>(j),
                      cur.steps.end());
    pending.push_back(std::move(rest));
    pending.push_back(std::move(loop));
  }
  return done;
}

/// A CAT through `e` inside the support of a balanced {0,1}-vector `f`
/// with f(e) = 1.
inline Walk extract_cat(const TwoColoredMultigraph& g, const EdgeVector& f, EdgeId e) {
  require_vector_on(g, f);
  if (e >= g.edge_count()) throw std::out_of_range("extract_cat: edge id out of range");
  if (!f.is_binary()) throw std::invalid_argument("extract_cat: vector is not {0,1}-valued");
  if (!is_balanced(g, f)) throw std::invalid_argument("extract_cat: vector is not balanced");
  if (f[e] != 1) throw std::invalid_argument("extract_cat: vector is 0 on the requested edge");
  const auto capacity = f.to_integers();
  return detail::grow_caw(g, capacity, e);
}

}  // namespace altcone
