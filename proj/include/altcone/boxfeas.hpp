#pragma once

#include <altcone/graph.hpp>
#include <altcone/reachability.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

namespace altcone {

/// Per-edge integral box [lower(e), upper(e)] with 0 <= lower <= upper.
struct Bounds {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;

  Bounds() = default;
  Bounds(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi)
      : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() != upper.size()) throw std::invalid_argument("bounds: lower and upper differ in length");
    for (std::size_t e = 0; e < lower.size(); ++e) {
      if (lower[e] < 0) throw std::invalid_argument("bounds: negative lower bound on edge " + std::to_string(e));
      if (lower[e] > upper[e])
        throw std::invalid_argument("bounds: lower exceeds upper on edge " + std::to_string(e));
    }
  }

  std::size_t size() const noexcept { return lower.size(); }

  Bounds doubled() const {
    Bounds b = *this;
    for (auto& x : b.lower) x *= 2;
    for (auto& x : b.upper) x *= 2;
    return b;
  }
};

/// Copies of an original edge in the residual graph. Raise copies keep the
/// edge's color, lower copies take the opposite one.
enum class ResidualCopy : std::uint8_t { Raise1 = 1, Raise2 = 2, Lower1 = 3, Lower2 = 4 };

/// G(f): per original edge e, e1 (f <= u-1) and e2 (f <= u-2) with color
/// C(e); e3 (f >= l+1) and e4 (f >= l+2) with the opposite color.
struct ResidualGraph {
  struct Origin {
    EdgeId edge;
    ResidualCopy copy;
  };

  TwoColoredMultigraph graph;
  std::vector<Origin> copy_of;
  /// residual_id[e][c-1] = id of copy c of e, when present.
  std::vector<std::array<std::optional<EdgeId>, 4>> residual_id;

  std::optional<EdgeId> find(EdgeId e, ResidualCopy c) const {
    return residual_id.at(e)[static_cast<std::size_t>(c) - 1];
  }
};

enum class InfeasibleSide { BelowLower, AboveUpper };

constexpr std::string_view to_string(InfeasibleSide s) noexcept {
  return s == InfeasibleSide::BelowLower ? "below_lower" : "above_upper";
}

struct Feasible {
  EdgeVector witness;
  std::size_t augmentations = 0;
};

struct Infeasible {
  EdgeId edge;
  InfeasibleSide side;
  std::size_t augmentations = 0;
};

using FeasibilityOutcome = std::variant<Feasible, Infeasible>;

namespace detail {

inline void require_bounds_on(const TwoColoredMultigraph& g, const Bounds& b) {
  if (b.size() != g.edge_count())
    throw std::invalid_argument("bounds have " + std::to_string(b.size()) + " entries but the graph has " +
                                std::to_string(g.edge_count()) + " edges");
}

inline std::vector<std::int64_t> require_flow(const TwoColoredMultigraph& g, const EdgeVector& f) {
  require_vector_on(g, f);
  if (!f.is_integral()) throw std::invalid_argument("vector is not integral");
  if (!f.is_nonnegative()) throw std::invalid_argument("vector has a negative entry");
  if (!is_balanced(g, f)) throw std::invalid_argument("vector is not balanced");
  return f.to_integers();
}

inline std::int64_t edge_infeasibility(std::int64_t value, std::int64_t lo, std::int64_t hi) {
  return std::max({lo - value, value - hi, std::int64_t{0}});
}

}  // namespace detail

inline ResidualGraph residual_graph(const TwoColoredMultigraph& g, const Bounds& bounds, const EdgeVector& f) {
  detail::require_bounds_on(g, bounds);
  const auto values = detail::require_flow(g, f);
  ResidualGraph r;
  r.residual_id.resize(g.edge_count());
  std::vector<Edge> edges;
  auto place = [&](EdgeId e, ResidualCopy c, Color color) {
    r.residual_id[e][static_cast<std::size_t>(c) - 1] = edges.size();
    edges.push_back({g.edge(e).u, g.edge(e).v, color});
    r.copy_of.push_back({e, c});
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Color c = g.edge(e).color;
    const std::int64_t v = values[e], lo = bounds.lower[e], hi = bounds.upper[e];
    if (v <= hi - 1) place(e, ResidualCopy::Raise1, c);
    if (v <= hi - 2) place(e, ResidualCopy::Raise2, c);
    if (v >= lo + 1) place(e, ResidualCopy::Lower1, opposite(c));
    if (v >= lo + 2) place(e, ResidualCopy::Lower2, opposite(c));
  }
  r.graph = TwoColoredMultigraph(g.vertex_count(), std::move(edges));
  return r;
}

inline std::int64_t total_infeasibility(const EdgeVector& f, const Bounds& bounds) {
  if (f.size() != bounds.size()) throw std::invalid_argument("vector and bounds differ in length");
  std::int64_t total = 0;
  for (EdgeId e = 0; e < f.size(); ++e)
    total += detail::edge_infeasibility(to_int64(f[e]), bounds.lower[e], bounds.upper[e]);
  return total;
}

/// f_T(e) = f(e) + chi_T(e1) + chi_T(e2) - chi_T(e3) - chi_T(e4).
inline EdgeVector augment(const TwoColoredMultigraph& g, const EdgeVector& f, const ResidualGraph& residual,
                          const Walk& cat) {
  require_vector_on(g, f);
  if (!classify_walk(residual.graph, cat).isCAT)
    throw std::invalid_argument("augment: walk is not a CAT of the residual graph");
  EdgeVector out = f;
  for (const Step& s : cat.steps) {
    const auto& origin = residual.copy_of.at(s.edge);
    switch (origin.copy) {
      case ResidualCopy::Raise1:
      case ResidualCopy::Raise2: out[origin.edge] += 1; break;
      case ResidualCopy::Lower1:
      case ResidualCopy::Lower2: out[origin.edge] -= 1; break;
    }
  }
  return out;
}

/// Augmentation loop from f0 (zero by default). The lowest-id infeasible edge
/// e is targeted through e1 (below its lower bound) or e3 (above its upper
/// bound); when G(f) has no CAT through that copy, no feasible integral
/// vector exists.
inline FeasibilityOutcome find_feasible(const TwoColoredMultigraph& g, const Bounds& bounds,
                                        std::optional<EdgeVector> f0 = std::nullopt) {
  detail::require_bounds_on(g, bounds);
  EdgeVector f = f0 ? *f0 : EdgeVector(g.edge_count());
  detail::require_flow(g, f);
  std::size_t augmentations = 0;
  for (;;) {
    const auto values = f.to_integers();
    std::optional<EdgeId> target;
    for (EdgeId e = 0; e < values.size() && !target; ++e)
      if (values[e] < bounds.lower[e] || values[e] > bounds.upper[e]) target = e;
    if (!target) return Feasible{std::move(f), augmentations};

    const bool below = values[*target] < bounds.lower[*target];
    const ResidualGraph residual = residual_graph(g, bounds, f);
    const auto copy = residual.find(*target, below ? ResidualCopy::Raise1 : ResidualCopy::Lower1);
    std::optional<Walk> cat;
    if (copy) cat = cat_through_edge(residual.graph, *copy);
    if (!cat)
      return Infeasible{*target, below ? InfeasibleSide::BelowLower : InfeasibleSide::AboveUpper, augmentations};

    EdgeVector next = augment(g, f, residual, *cat);
    const auto next_values = detail::require_flow(g, next);
    for (EdgeId e = 0; e < values.size(); ++e)
      if (detail::edge_infeasibility(next_values[e], bounds.lower[e], bounds.upper[e]) >
          detail::edge_infeasibility(values[e], bounds.lower[e], bounds.upper[e]))
        throw std::logic_error("augmentation increased the infeasibility of an edge");
    if (total_infeasibility(next, bounds) >= total_infeasibility(f, bounds))
      throw std::logic_error("augmentation did not reduce total infeasibility");
    f = std::move(next);
    ++augmentations;
  }
}

/// A rational point of the cone in the box exists iff an integral one exists
/// in the doubled box; the result is that point halved.
inline std::optional<EdgeVector> rational_feasible(const TwoColoredMultigraph& g, const Bounds& bounds) {
  detail::require_bounds_on(g, bounds);
  const auto outcome = find_feasible(g, bounds.doubled());
  const auto* ok = std::get_if<Feasible>(&outcome);
  if (!ok) return std::nullopt;
  EdgeVector half = Rational(1, 2) * ok->witness;
  for (EdgeId e = 0; e < half.size(); ++e)
    if (half[e] < bounds.lower[e] || half[e] > bounds.upper[e])
      throw std::logic_error("rational witness escaped the box");
  if (!in_alternating_cone(g, half)) throw std::logic_error("rational witness is not in the cone");
  return half;
}

}  // namespace altcone
