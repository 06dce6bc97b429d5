// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <altcone/boxfeas.hpp>
#include <altcone/cone.hpp>
#include <altcone/matching.hpp>
#include <altcone/oracles.hpp>
#include <altcone/reachability.hpp>
#include <altcone/threshold.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"

using namespace altcone;
using namespace fixtures;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Result& r) {
  std::printf("%s criterion %d: %s (%s)\n", r.pass ? "PASS" : "FAIL", id, title, r.detail.c_str());
  std::fflush(stdout);
  if (!r.pass) ++failures;
}

template <typename... Args>
std::string format(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

/// Calls visit(n, edges) for every multigraph on n vertices with at most
/// max_edges edges (a multiset of vertex pairs), uncolored.
void each_multigraph(std::size_t n, std::size_t max_edges,
                     const std::function<void(const std::vector<std::pair<VertexId, VertexId>>&)>& visit) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<std::pair<VertexId, VertexId>> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    visit(chosen);
    if (chosen.size() == max_edges) return;
    for (std::size_t p = from; p < pairs.size(); ++p) {
      chosen.push_back(pairs[p]);
      rec(p);
      chosen.pop_back();
    }
  };
  rec(0);
}

// 1 ---------------------------------------------------------------------------

Result extreme_ray_soundness() {
  Rng rng(1);
  std::size_t instances = 0, terms = 0, bad = 0, attempts = 0;
  double solver_time = 0;
  while (instances < 200) {
    ++attempts;
    const auto g = random_multigraph(rng, 8, 14);
    const auto rays = oracle::brute_rays(g);
    if (rays.empty()) continue;
    EdgeVector x(g.edge_count());
    for (const Walk& w : rays) {
      const long num = static_cast<long>(uniform(rng, 0, 5));
      if (num != 0) x += Rational(num, static_cast<long>(uniform(rng, 1, 7))) * char_vector(g, w);
    }
    if (x.is_zero()) x = char_vector(g, rays[uniform(rng, 0, rays.size() - 1)]);
    ++instances;
    const auto t0 = Clock::now();
    const Decomposition d = decompose_extreme(g, x);
    solver_time += seconds_since(t0);
    if (d.reconstruct(g) != x) ++bad;
    for (const auto& t : d.terms) {
      ++terms;
      const auto c = classify_walk(g, t.walk);
      if (!(t.coefficient > 0) || !(c.isEvenAlternatingCycle || c.isAlternatingBicycle)) ++bad;
    }
  }
  return {bad == 0 && solver_time <= 10.0,
          format("%zu instances from %zu graphs, %zu terms, %zu failures, %.2f s", instances, attempts, terms, bad,
                 solver_time)};
}

// 2 ---------------------------------------------------------------------------

bool dimension_matches(const TwoColoredMultigraph& g) {
  std::vector<EdgeId> ess;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (oracle::brute_caw_through(g, e)) ess.push_back(e);
  const std::size_t rank = oracle::rank_exact(oracle::IncidenceMatrix::of(g, ess));
  return dimension(g) == ess.size() - rank;
}

Result dimension_vs_rank() {
  std::size_t exhaustive = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    each_multigraph(n, 6, [&](const std::vector<std::pair<VertexId, VertexId>>& pairs) {
      const std::size_t m = pairs.size();
      for (std::uint32_t colors = 0; colors < (1u << m); ++colors) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < m; ++i) edges.push_back({pairs[i].first, pairs[i].second, (colors >> i & 1) ? R : B});
        ++exhaustive;
        if (!dimension_matches(build_graph(n, edges))) ++mismatches;
      }
    });
  }
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = uniform(rng, 5, 7);
    const std::size_t m = uniform(rng, 7, 11);
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < m; ++k) {
      const VertexId u = uniform(rng, 0, n - 1);
      VertexId v = uniform(rng, 0, n - 2);
      if (v >= u) ++v;
      edges.push_back({u, v, uniform(rng, 0, 1) ? R : B});
    }
    if (!dimension_matches(build_graph(n, edges))) ++mismatches;
  }
  return {mismatches == 0, format("%zu exhaustive colorings + 300 random, %zu mismatches", exhaustive, mismatches)};
}

// 3 ---------------------------------------------------------------------------

Result threshold_agreement() {
  const auto t0 = Clock::now();
  std::size_t graphs = 0, mismatches = 0, threshold = 0;
  auto check = [&](const SimpleGraph& g) {
    ++graphs;
    const bool a = is_threshold_degrees(g.degrees());
    const bool b = is_threshold_via_cone(g);
    const bool c = !find_alternating_c4(hat(g)).has_value();
    if (a != b || b != c) ++mismatches;
    threshold += a ? 1 : 0;
  };
  for (std::size_t n = 0; n <= 5; ++n) {
    const std::size_t slots = n * (n - (n > 0 ? 1 : 0)) / 2;
    for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
      SimpleGraph g(n);
      std::size_t bit = 0;
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b, ++bit)
          if (mask >> bit & 1) g.add_edge(a, b);
      check(g);
    }
  }
  Rng rng(3);
  for (int i = 0; i < 300; ++i) check(random_simple_graph(rng, uniform(rng, 6, 7), std::uniform_real_distribution<double>(0.1, 0.9)(rng)));
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs <= 60.0,
          format("%zu graphs (%zu threshold), %zu mismatches, %.2f s", graphs, threshold, mismatches, secs)};
}

// 4 ---------------------------------------------------------------------------

Result majorization_monotonicity() {
  Rng rng(4);
  std::size_t steps = 0, violations = 0;
  for (int chain = 0; chain < 500; ++chain) {
    const std::size_t n = uniform(rng, 3, 7);
    SimpleGraph g(n);
    if (chain % 2 == 0) {
      g = random_simple_graph(rng, n, std::uniform_real_distribution<double>(0.2, 0.8)(rng));
    } else {
      // Threshold start: each new vertex is isolated or dominating.
      for (VertexId v = 1; v < n; ++v)
        if (uniform(rng, 0, 1))
          for (VertexId u = 0; u < v; ++u) g.add_edge(u, v);
    }
    std::size_t prev = *cone_dim_of_degrees(g.degrees());
    for (;;) {
      std::vector<std::pair<VertexId, VertexId>> moves;
      for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j)
          if (i != j && g.degree(i) >= g.degree(j) + 2) moves.emplace_back(i, j);
      if (moves.empty()) break;
      const auto [i, j] = moves[uniform(rng, 0, moves.size() - 1)];
      const DegreeSequence before = g.degrees();
      g = graph_unit_transformation(g, i, j);
      if (g.degrees() != unit_transformation(before, i, j)) ++violations;
      if (majorizes(before, g.degrees()) != Majorization::Strict) ++violations;
      const std::size_t next = *cone_dim_of_degrees(g.degrees());
      if (next < prev) ++violations;
      prev = next;
      ++steps;
    }
  }
  const bool spots = cone_dim_of_degrees({3, 1, 1, 1}) == 0 && cone_dim_of_degrees({2, 2, 1, 1}) == 1 &&
                     cone_dim_of_degrees({1, 1, 1, 1}) == 2;
  return {violations == 0 && spots,
          format("500 chains, %zu steps, %zu violations, spot values %s", steps, violations, spots ? "ok" : "wrong")};
}

// 5 ---------------------------------------------------------------------------

Result reachability_vs_oracle() {
  Rng rng(5);
  std::size_t mismatches = 0, cats = 0, caws = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto g = random_multigraph(rng, 7, 12);
    const EdgeId e = uniform(rng, 0, g.edge_count() - 1);
    const auto cat = cat_through_edge(g, e);
    if (cat && !(classify_walk(g, *cat).isCAT && edge_multiplicities(g, *cat)[e] == 1)) ++mismatches;
    const bool caw = caw_through_edge(g, e);
    if (cat.has_value() != oracle::brute_cat_through(g, e)) ++mismatches;
    if (caw != oracle::brute_caw_through(g, e)) ++mismatches;
    cats += cat ? 1 : 0;
    caws += caw ? 1 : 0;
  }
  return {mismatches == 0, format("1000 pairs, %zu with a CAT, %zu with a CAW, %zu mismatches", cats, caws, mismatches)};
}

// 6, 7 ------------------------------------------------------------------------

struct BoxInstance {
  TwoColoredMultigraph graph;
  Bounds bounds;
};

std::vector<BoxInstance> box_instances() {
  Rng rng(6);
  std::vector<BoxInstance> out;
  while (out.size() < 500) {
    const auto g = random_multigraph(rng, 5, 6);
    std::vector<std::int64_t> lo(g.edge_count()), hi(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      hi[e] = static_cast<std::int64_t>(uniform(rng, 0, 3));
      lo[e] = static_cast<std::int64_t>(uniform(rng, 0, static_cast<std::size_t>(hi[e])));
    }
    out.push_back({g, Bounds(lo, hi)});
  }
  return out;
}

Result box_vs_oracle(const std::vector<BoxInstance>& instances) {
  std::size_t mismatches = 0, feasible = 0, bad_witness = 0, over_budget = 0;
  for (const auto& inst : instances) {
    const auto& g = inst.graph;
    const auto outcome = find_feasible(g, inst.bounds);
    const bool brute = oracle::brute_box(g, inst.bounds.lower, inst.bounds.upper).has_value();
    const std::int64_t budget = total_infeasibility(EdgeVector(g.edge_count()), inst.bounds);
    if (std::holds_alternative<Feasible>(outcome) != brute) ++mismatches;
    std::size_t augmentations = 0;
    if (const auto* ok = std::get_if<Feasible>(&outcome)) {
      ++feasible;
      augmentations = ok->augmentations;
      if (!ok->witness.is_integral() || !in_alternating_cone(g, ok->witness) ||
          total_infeasibility(ok->witness, inst.bounds) != 0)
        ++bad_witness;
    } else {
      augmentations = std::get<Infeasible>(outcome).augmentations;
    }
    if (static_cast<std::int64_t>(augmentations) > budget) ++over_budget;
  }
  return {mismatches == 0 && bad_witness == 0 && over_budget == 0,
          format("500 instances, %zu feasible, %zu verdict mismatches, %zu bad witnesses, %zu over budget", feasible,
                 mismatches, bad_witness, over_budget)};
}

Result half_integrality(const std::vector<BoxInstance>& instances) {
  std::size_t mismatches = 0, feasible = 0, gap = 0;
  for (const auto& inst : instances) {
    const auto& g = inst.graph;
    const auto half = rational_feasible(g, inst.bounds);
    const Bounds twice = inst.bounds.doubled();
    const bool brute = oracle::brute_box(g, twice.lower, twice.upper).has_value();
    if (half.has_value() != brute) ++mismatches;
    if (half) {
      ++feasible;
      if (!std::holds_alternative<Feasible>(find_feasible(g, inst.bounds))) ++gap;
      const EdgeVector doubled = Rational(2) * *half;
      if (!doubled.is_integral() || !in_alternating_cone(g, *half)) ++mismatches;
    }
  }
  const auto bi = bicycle_graph();
  const Bounds b({0, 0, 0, 1, 0, 0, 0}, {1, 1, 1, 1, 1, 1, 1});
  const auto half = rational_feasible(bi, b);
  const bool example = half && *half == Rational(1, 2) * bicycle_chi() &&
                       !oracle::brute_box(bi, b.lower, b.upper).has_value() &&
                       std::holds_alternative<Infeasible>(find_feasible(bi, b));
  return {mismatches == 0 && example,
          format("500 instances, %zu rationally feasible (%zu only fractionally), %zu mismatches, bicycle example %s",
                 feasible, gap, mismatches, example ? "ok" : "wrong")};
}

// 8 ---------------------------------------------------------------------------

Result normal_form() {
  Rng rng(8);
  std::size_t vectors = 0, parts = 0, bad = 0, binaries = 0;
  while (vectors < 500) {
    const auto g = random_multigraph(rng, 6, 9);
    const auto pool = oracle::enum_balanced(g, 2);
    if (pool.size() < 2) continue;
    EdgeVector x(g.edge_count());
    for (std::size_t k = uniform(rng, 1, 4); k > 0; --k) x += pool[uniform(rng, 1, pool.size() - 1)];
    ++vectors;
    EdgeVector sum(g.edge_count());
    for (const Walk& w : decompose_integral(g, x)) {
      ++parts;
      const EdgeVector chi = char_vector(g, w);
      if (!classify_walk(g, w).isCAW || !chi.is_bounded_integral(2)) ++bad;
      sum += chi;
    }
    if (sum != x) ++bad;

    std::vector<EdgeVector> binary;
    for (const auto& y : pool)
      if (y.is_binary() && !y.is_zero()) binary.push_back(y);
    if (binary.empty()) continue;
    const EdgeVector y = binary[uniform(rng, 0, binary.size() - 1)];
    ++binaries;
    std::vector<int> used(g.edge_count(), 0);
    for (const Walk& w : decompose_binary(g, y)) {
      if (!classify_walk(g, w).isCAT) ++bad;
      for (const Step& s : w.steps) ++used[s.edge];
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (used[e] != (y[e] == 1 ? 1 : 0)) ++bad;
  }
  return {bad == 0, format("500 integral vectors (%zu parts), %zu binary vectors, %zu failures", parts, binaries, bad)};
}

// 9 ---------------------------------------------------------------------------

Result matching_engine() {
  Rng rng(9);
  std::size_t mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = uniform(rng, 1, 10);
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.1, 0.8)(rng));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    AuxGraph h(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (coin(rng)) {
          pairs.emplace_back(a, b);
          h.add_edge(a, b);
        }
    if (max_matching(h).size() != oracle::brute_matching(n, pairs)) ++mismatches;
  }
  AuxGraph petersen(10);
  for (const auto& [a, b] : petersen_edges()) petersen.add_edge(a, b);
  const std::size_t p = max_matching(petersen).size();
  return {mismatches == 0 && p == 5, format("500 graphs, %zu mismatches, Petersen %zu", mismatches, p)};
}

}  // namespace

int main() {
  report(1, "extreme-ray decomposition soundness", extreme_ray_soundness());
  report(2, "dimension formula vs rank oracle", dimension_vs_rank());
  report(3, "threshold triple agreement", threshold_agreement());
  report(4, "majorization monotonicity", majorization_monotonicity());
  report(5, "reachability vs oracle", reachability_vs_oracle());
  const auto boxes = box_instances();
  report(6, "box feasibility vs oracle", box_vs_oracle(boxes));
  report(7, "half-integrality and doubling", half_integrality(boxes));
  report(8, "normal form of integral decompositions", normal_form());
  report(9, "matching engine", matching_engine());
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
