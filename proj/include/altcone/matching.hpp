#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace altcone {

using NodeId = std::size_t;
using AuxEdgeId = std::size_t;

/// Simple undirected graph used as matching input. Adding an edge that is
/// already present returns the existing id.
class AuxGraph {
 public:
  AuxGraph() = default;
  explicit AuxGraph(std::size_t node_count) : adjacency_(node_count) {}

  AuxEdgeId add_edge(NodeId a, NodeId b) {
    if (a >= node_count() || b >= node_count()) throw std::out_of_range("aux edge endpoint out of range");
    if (a == b) throw std::invalid_argument("aux graph cannot contain loops");
    const auto key = std::minmax(a, b);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    const AuxEdgeId id = edges_.size();
    edges_.emplace_back(key.first, key.second);
    index_.emplace(key, id);
    adjacency_[a].push_back({b, id});
    adjacency_[b].push_back({a, id});
    return id;
  }

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::pair<NodeId, NodeId>>& edges() const noexcept { return edges_; }
  const std::pair<NodeId, NodeId>& edge(AuxEdgeId id) const { return edges_.at(id); }

  struct Arc {
    NodeId to;
    AuxEdgeId edge;
  };
  const std::vector<Arc>& neighbors(NodeId a) const { return adjacency_.at(a); }

 private:
  std::vector<std::vector<Arc>> adjacency_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::map<std::pair<NodeId, NodeId>, AuxEdgeId> index_;
};

struct Matching {
  /// Selected aux edge ids, ascending.
  std::vector<AuxEdgeId> edges;
  /// mate[n] is the partner of n, or npos.
  std::vector<NodeId> mate;

  static constexpr NodeId npos = static_cast<NodeId>(-1);

  std::size_t size() const noexcept { return edges.size(); }
  bool covers(NodeId n) const { return mate.at(n) != npos; }
};

namespace detail {

/// Edmonds' blossom algorithm: one BFS per exposed root, blossoms contracted
/// by relabelling their members' base. O(n^3).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const AuxGraph& h)
      : h_(h), n_(h.node_count()), mate_(n_, Matching::npos), parent_(n_), base_(n_),
        in_queue_(n_), in_blossom_(n_), on_path_(n_) {}

  Matching run() {
    for (NodeId root = 0; root < n_; ++root) {
      if (mate_[root] != Matching::npos) continue;
      NodeId v = find_augmenting_path(root);
      while (v != Matching::npos) {
        const NodeId pv = parent_[v];
        const NodeId next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
    Matching m;
    m.mate = mate_;
    for (NodeId a = 0; a < n_; ++a)
      for (const auto& arc : h_.neighbors(a))
        if (a < arc.to && mate_[a] == arc.to) m.edges.push_back(arc.edge);
    std::sort(m.edges.begin(), m.edges.end());
    return m;
  }

 private:
  NodeId lowest_common_base(NodeId a, NodeId b) {
    std::fill(on_path_.begin(), on_path_.end(), false);
    for (;;) {
      a = base_[a];
      on_path_[a] = true;
      if (mate_[a] == Matching::npos) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_blossom_path(NodeId v, NodeId blossom_base, NodeId child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  NodeId find_augmenting_path(NodeId root) {
    std::fill(in_queue_.begin(), in_queue_.end(), false);
    std::fill(parent_.begin(), parent_.end(), Matching::npos);
    for (NodeId i = 0; i < n_; ++i) base_[i] = i;
    std::queue<NodeId> q;
    in_queue_[root] = true;
    q.push(root);
    while (!q.empty()) {
      const NodeId v = q.front();
      q.pop();
      for (const auto& arc : h_.neighbors(v)) {
        const NodeId to = arc.to;
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != Matching::npos && parent_[mate_[to]] != Matching::npos)) {
          const NodeId cur = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_blossom_path(v, cur, to);
          mark_blossom_path(to, cur, v);
          for (NodeId i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!in_queue_[i]) {
              in_queue_[i] = true;
              q.push(i);
            }
          }
        } else if (parent_[to] == Matching::npos) {
          parent_[to] = v;
          if (mate_[to] == Matching::npos) return to;
          in_queue_[mate_[to]] = true;
          q.push(mate_[to]);
        }
      }
    }
    return Matching::npos;
  }

  const AuxGraph& h_;
  std::size_t n_;
  std::vector<NodeId> mate_, parent_, base_;
  std::vector<bool> in_queue_, in_blossom_, on_path_;
};

}  // namespace detail

/// Maximum-cardinality matching. Deterministic: roots and neighbours are
/// scanned in ascending node / insertion order.
inline Matching max_matching(const AuxGraph& h) { return detail::BlossomMatcher(h).run(); }

inline bool has_perfect_matching(const AuxGraph& h) {
  if (h.node_count() % 2 != 0) return false;
  return max_matching(h).size() * 2 == h.node_count();
}

}  // namespace altcone
