#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gsu/error.hpp"

namespace gsu {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Simple undirected graph in compressed adjacency form. Neighbor lists are
// sorted ascending, symmetric, and free of self-loops and duplicates.
// Immutable once built; share freely across threads.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(NodeId a, NodeId b) const {
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  // Each undirected edge once, as (lo, hi), in ascending order.
  std::vector<std::pair<NodeId, NodeId>> edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId v = 0; v < node_count(); ++v)
      for (NodeId w : neighbors(v))
        if (v < w) out.emplace_back(v, w);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::span<const std::pair<std::int64_t, std::int64_t>>,
                           std::optional<std::size_t>);

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
};

// Self-loops are dropped and parallel edges collapsed. Without node_count the
// node count is max id + 1.
inline Graph build_graph(std::span<const std::pair<std::int64_t, std::int64_t>> edges,
                         std::optional<std::size_t> node_count = std::nullopt) {
  std::int64_t max_id = -1;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0) throw Error(Errc::InvalidEdge, "negative node id");
    max_id = std::max({max_id, a, b});
  }
  std::size_t n = node_count.value_or(static_cast<std::size_t>(max_id + 1));
  if (n == 0) throw Error(Errc::InvalidParams, "graph needs at least one node");
  if (n >= kNoNode) throw Error(Errc::TooLarge, "node count exceeds id range");
  if (max_id >= static_cast<std::int64_t>(n))
    throw Error(Errc::InvalidEdge, "node id " + std::to_string(max_id) + " out of range");

  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [a, b] : edges) {
    if (a == b) continue;
    arcs.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
    arcs.emplace_back(static_cast<NodeId>(b), static_cast<NodeId>(a));
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [a, b] : arcs) ++g.offsets_[a + 1];
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.neighbors_.reserve(arcs.size());
  for (auto [a, b] : arcs) g.neighbors_.push_back(b);
  return g;
}

inline Graph build_graph(const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                         std::optional<std::size_t> node_count = std::nullopt) {
  return build_graph(std::span<const std::pair<std::int64_t, std::int64_t>>(edges), node_count);
}

// Convenience for generators that already hold NodeId pairs.
inline Graph build_graph(const std::vector<std::pair<NodeId, NodeId>>& edges, std::size_t node_count) {
  std::vector<std::pair<std::int64_t, std::int64_t>> wide(edges.begin(), edges.end());
  return build_graph(wide, node_count);
}

inline constexpr std::int64_t kUnreachable = -1;

// Hop distances from source; kUnreachable where no path exists.
inline std::vector<std::int64_t> bfs_distances(const Graph& g, NodeId source) {
  std::vector<std::int64_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId v = queue[head];
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.node_count() == 0) return false;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::int64_t d) { return d == kUnreachable; });
}

struct PathResult {
  std::vector<NodeId> nodes;
  std::size_t length = 0;  // edge count
};

// Shortest unweighted s-t path. Neighbors are expanded in ascending id order
// and each node keeps its first discoverer, so the result is deterministic.
inline PathResult bfs_path(const Graph& g, NodeId s, NodeId t) {
  const std::size_t n = g.node_count();
  if (s >= n || t >= n) throw Error(Errc::InvalidParams, "node out of range");
  if (s == t) return {{s}, 0};

  std::vector<NodeId> parent(n, kNoNode);
  std::vector<NodeId> queue;
  parent[s] = s;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size() && parent[t] == kNoNode; ++head) {
    NodeId v = queue[head];
    for (NodeId w : g.neighbors(v)) {
      if (parent[w] == kNoNode) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (parent[t] == kNoNode) throw Error(Errc::Disconnected, "target unreachable from source");

  PathResult out;
  for (NodeId v = t; v != s; v = parent[v]) out.nodes.push_back(v);
  out.nodes.push_back(s);
  std::reverse(out.nodes.begin(), out.nodes.end());
  out.length = out.nodes.size() - 1;
  return out;
}

// Exact diameter by BFS from every node.
inline std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (std::int64_t d : bfs_distances(g, v)) {
      if (d == kUnreachable) throw Error(Errc::Disconnected, "diameter of a disconnected graph");
      best = std::max(best, static_cast<std::size_t>(d));
    }
  }
  return best;
}

// H = ceil(D / 2), so that D = 2H for even diameters and K2 has H = 1.
inline std::size_t half_diameter(std::size_t diam) { return (diam + 1) / 2; }
inline std::size_t half_diameter(const Graph& g) { return half_diameter(diameter(g)); }

// Component label per node, labels assigned in order of smallest member id.
inline std::vector<std::size_t> component_labels(const Graph& g, std::size_t* count = nullptr) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(g.node_count(), kUnset);
  std::vector<NodeId> stack;
  std::size_t next = 0;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (label[root] != kUnset) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(v)) {
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

struct Subgraph {
  Graph graph;
  std::vector<NodeId> old_to_new;  // kNoNode for dropped nodes
  std::vector<NodeId> new_to_old;
};

// Induced subgraph on the largest connected component. Among equal sizes the
// component holding the smallest original id wins.
inline Subgraph largest_component(const Graph& g) {
  std::size_t ncomp = 0;
  auto label = component_labels(g, &ncomp);
  std::vector<std::size_t> size(ncomp, 0);
  for (std::size_t l : label) ++size[l];
  // Labels follow smallest-member order, so the first maximum is the tie winner.
  const std::size_t keep =
      static_cast<std::size_t>(std::max_element(size.begin(), size.end()) - size.begin());

  Subgraph out;
  out.old_to_new.assign(g.node_count(), kNoNode);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (label[v] == keep) {
      out.old_to_new[v] = static_cast<NodeId>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<std::pair<NodeId, NodeId>> kept;
  for (auto [a, b] : g.edges())
    if (label[a] == keep) kept.emplace_back(out.old_to_new[a], out.old_to_new[b]);
  out.graph = build_graph(kept, out.new_to_old.size());
  return out;
}

struct DegreeStats {
  double mean = 0.0;
  double median = 0.0;
  std::size_t mode = 0;  // most frequent degree, smallest on ties
  std::size_t max = 0;
  std::map<std::size_t, std::size_t> histogram;

  friend bool operator==(const DegreeStats&, const DegreeStats&) = default;
};

// Median of an even-length list is the lower middle element.
inline DegreeStats degree_stats(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) throw Error(Errc::InvalidParams, "empty graph");
  std::vector<std::size_t> deg(n);
  for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);

  DegreeStats s;
  for (std::size_t d : deg) ++s.histogram[d];
  s.mean = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
  std::sort(deg.begin(), deg.end());
  s.median = static_cast<double>(deg[(n - 1) / 2]);
  s.max = deg.back();
  std::size_t best = 0;
  for (auto [d, count] : s.histogram) {
    if (count > best) {
      best = count;
      s.mode = d;
    }
  }
  return s;
}

}  // namespace gsu
