#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gsu/error.hpp"
#include "gsu/graph.hpp"
#include "gsu/rng.hpp"
#include "gsu/uncertainty.hpp"

namespace gsu {

// Default walk cap is this many steps per node of the graph.
inline constexpr std::uint64_t kDefaultStepsPerNode = 10'000;

inline std::uint64_t default_max_steps(const Graph& g) {
  return kDefaultStepsPerNode * static_cast<std::uint64_t>(g.node_count());
}

struct RunOutcome {
  NodeId source = 0;
  NodeId target = 0;
  std::size_t path_length = 0;  // L, hop count of the prior shortest path
  double w_d = 0.0;             // realized weight along the prior path
  double w_g = 0.0;             // realized weight of the greedy walk
  std::uint64_t steps = 0;      // greedy edge traversals
  double ratio = 0.0;           // w_g / w_d
  bool censored = false;        // walk hit max_steps before the target

  friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

// Realized weight of an L-edge prior path: every edge costs 1 plus a fresh
// xi. Only L matters, not which shortest path was taken.
inline double dijkstra_path_weight(std::size_t path_length, const UncertaintyModel& m, Rng& rng) {
  double w = static_cast<double>(path_length);
  for (std::size_t e = 0; e < path_length; ++e) w += sample_xi(m, rng);
  return w;
}

struct WalkResult {
  double w_g = 0.0;
  std::uint64_t steps = 0;
  bool censored = false;
};

// Greedy walk from s to t. Each step draws a fresh xi for every incident
// edge, moves along a minimum-weight edge (uniform among ties) and pays
// 1 + xi of that edge.
inline WalkResult greedy_walk(const Graph& g, NodeId s, NodeId t, const UncertaintyModel& m, Rng& rng,
                              std::uint64_t max_steps) {
  if (s >= g.node_count() || t >= g.node_count()) throw Error(Errc::InvalidParams, "node out of range");
  if (max_steps < 1) throw Error(Errc::InvalidParams, "max_steps must be >= 1");
  WalkResult out;
  if (s == t) return out;
  if (bfs_distances(g, t)[s] == kUnreachable) throw Error(Errc::Disconnected, "target unreachable from source");

  std::vector<NodeId> ties;
  NodeId cur = s;
  while (cur != t) {
    if (out.steps == max_steps) {
      out.censored = true;
      break;
    }
    auto nb = g.neighbors(cur);
    double best = 0.0;
    ties.clear();
    for (NodeId w : nb) {
      const double xi = sample_xi(m, rng);
      if (ties.empty() || xi < best) {
        best = xi;
        ties.assign(1, w);
      } else if (xi == best) {
        ties.push_back(w);
      }
    }
    cur = ties.size() == 1 ? ties.front() : ties[uniform_index(rng, ties.size())];
    out.w_g += 1.0 + best;
    ++out.steps;
  }
  return out;
}

// One head-to-head trial: uniform source, uniform distinct target, then the
// prior-path weight and the greedy walk on the same stream.
inline RunOutcome simulation_run(const Graph& g, const UncertaintyModel& m, Rng& rng,
                                 std::uint64_t max_steps) {
  const std::size_t n = g.node_count();
  if (n < 2) throw Error(Errc::InvalidParams, "simulation needs at least two nodes");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "simulation graph must be connected");

  RunOutcome r;
  r.source = static_cast<NodeId>(uniform_index(rng, n));
  do {
    r.target = static_cast<NodeId>(uniform_index(rng, n));
  } while (r.target == r.source);

  r.path_length = bfs_path(g, r.source, r.target).length;
  r.w_d = dijkstra_path_weight(r.path_length, m, rng);
  WalkResult walk = greedy_walk(g, r.source, r.target, m, rng, max_steps);
  r.w_g = walk.w_g;
  r.steps = walk.steps;
  r.censored = walk.censored;
  r.ratio = r.w_g / r.w_d;
  return r;
}

}  // namespace gsu
