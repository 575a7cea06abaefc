#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gsu/error.hpp"
#include "gsu/graph.hpp"
#include "gsu/rng.hpp"

namespace gsu {

inline constexpr std::size_t kDenseSolveLimit = 4000;
inline constexpr double kResidualTolerance = 1e-8;

struct MfptVector {
  NodeId target = 0;
  std::vector<double> values;  // values[target] == 0
};

// Largest violation of m_i = 1 + sum_{l != t} m_l / k_i over non-target
// nodes, relative to max(1, max_i m_i).
inline double mfpt_residual(const Graph& g, const MfptVector& m) {
  double scale = 1.0, worst = 0.0;
  for (double v : m.values) scale = std::max(scale, std::abs(v));
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (i == m.target) continue;
    double acc = 1.0;
    const double inv_k = 1.0 / static_cast<double>(g.degree(i));
    for (NodeId l : g.neighbors(i))
      if (l != m.target) acc += inv_k * m.values[l];
    worst = std::max(worst, std::abs(m.values[i] - acc));
  }
  return worst / scale;
}

// Random-walk MFPT to t from every node: solves (I - Q) m = 1 over the
// non-target nodes with dense LU (partial pivoting).
inline MfptVector mfpt_linear_solve(const Graph& g, NodeId t, std::size_t size_limit = kDenseSolveLimit) {
  const std::size_t n = g.node_count();
  if (t >= n) throw Error(Errc::InvalidParams, "target out of range");
  if (n > size_limit) throw Error(Errc::TooLarge, "graph exceeds the dense solve limit");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "mfpt_linear_solve needs a connected graph");

  MfptVector out{t, std::vector<double>(n, 0.0)};
  if (n == 1) return out;

  // Row index of node v in the reduced system skips the target.
  auto row = [t](NodeId v) -> Eigen::Index { return v < t ? v : v - 1; };
  const auto dim = static_cast<Eigen::Index>(n - 1);
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(dim, dim);
  for (NodeId i = 0; i < n; ++i) {
    if (i == t) continue;
    const double inv_k = 1.0 / static_cast<double>(g.degree(i));
    for (NodeId l : g.neighbors(i))
      if (l != t) a(row(i), row(l)) -= inv_k;
  }
  Eigen::VectorXd x = a.partialPivLu().solve(Eigen::VectorXd::Ones(dim));
  for (NodeId i = 0; i < n; ++i)
    if (i != t) out.values[i] = x(row(i));

  if (mfpt_residual(g, out) > kResidualTolerance)
    throw Error(Errc::TooLarge, "dense MFPT solve lost accuracy");
  return out;
}

inline bool is_tree(const Graph& g) {
  return g.node_count() >= 1 && g.edge_count() + 1 == g.node_count() && is_connected(g);
}

// Degree sums W_0 .. W_L of the clusters hanging off the s-t backbone: the
// cluster of v_K is its component once all backbone edges are removed, and
// degrees are counted in the full tree.
inline std::vector<std::uint64_t> tree_cluster_weights(const Graph& g, NodeId s, NodeId t) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "tree must be connected");
  if (g.edge_count() + 1 != g.node_count()) throw Error(Errc::NotATree, "graph has a cycle");
  const PathResult backbone = bfs_path(g, s, t);

  const std::size_t n = g.node_count();
  std::vector<std::size_t> cluster(n, backbone.length + 1);  // unassigned marker
  for (std::size_t k = 0; k < backbone.nodes.size(); ++k) cluster[backbone.nodes[k]] = k;

  std::vector<std::uint64_t> weights(backbone.nodes.size(), 0);
  std::vector<NodeId> stack;
  for (std::size_t k = 0; k < backbone.nodes.size(); ++k) {
    stack.assign(1, backbone.nodes[k]);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      weights[k] += g.degree(v);
      for (NodeId w : g.neighbors(v)) {
        // Backbone nodes are pre-labelled, so backbone edges are never crossed.
        if (cluster[w] == backbone.length + 1) {
          cluster[w] = k;
          stack.push_back(w);
        }
      }
    }
  }
  return weights;
}

// Exact tree MFPT m(s, t) = sum_{I=1}^{L} sum_{K=0}^{I-1} W_K.
inline double mfpt_tree_cluster_sum(const Graph& g, NodeId s, NodeId t) {
  if (s >= g.node_count() || t >= g.node_count()) throw Error(Errc::InvalidParams, "node out of range");
  if (s == t) throw Error(Errc::InvalidParams, "cluster sum needs s != t");
  const auto w = tree_cluster_weights(g, s, t);
  const std::size_t len = w.size() - 1;
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < len; ++k) total += (len - k) * w[k];
  return static_cast<double>(total);
}

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_err = 0.0;
};

// Simple random walk first-passage times, sample mean and standard error.
inline MonteCarloEstimate mfpt_monte_carlo(const Graph& g, NodeId s, NodeId t, std::size_t runs, Rng& rng) {
  if (runs < 1) throw Error(Errc::InvalidParams, "runs must be >= 1");
  if (s >= g.node_count() || t >= g.node_count()) throw Error(Errc::InvalidParams, "node out of range");
  if (bfs_distances(g, s)[t] == kUnreachable) throw Error(Errc::Disconnected, "target unreachable");

  // Welford accumulation.
  double mean = 0.0, m2 = 0.0;
  for (std::size_t r = 0; r < runs; ++r) {
    std::uint64_t steps = 0;
    for (NodeId v = s; v != t; ++steps) {
      auto nb = g.neighbors(v);
      v = nb[uniform_index(rng, nb.size())];
    }
    const double x = static_cast<double>(steps);
    const double delta = x - mean;
    mean += delta / static_cast<double>(r + 1);
    m2 += delta * (x - mean);
  }
  MonteCarloEstimate est;
  est.mean = mean;
  if (runs > 1) est.std_err = std::sqrt(m2 / static_cast<double>(runs - 1) / static_cast<double>(runs));
  return est;
}

}  // namespace gsu
