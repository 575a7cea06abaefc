#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gsu/error.hpp"
#include "gsu/graph.hpp"
#include "gsu/rng.hpp"

namespace gsu {

inline constexpr std::size_t kMaxGeneratedNodes = 50'000'000;

// Retry budget for families that regenerate until the draw is usable.
inline constexpr int kDefaultRetries = 200;

using EdgeVec = std::vector<std::pair<NodeId, NodeId>>;

// N_c(H) = (c^{H+1} - 1) / (c - 1), or nullopt past kMaxGeneratedNodes.
inline std::optional<std::size_t> cary_node_count(std::size_t c, std::size_t height) {
  std::size_t total = 1, level = 1;
  for (std::size_t d = 0; d < height; ++d) {
    if (level > kMaxGeneratedNodes / c) return std::nullopt;
    level *= c;
    total += level;
    if (total > kMaxGeneratedNodes) return std::nullopt;
  }
  return total;
}

// Complete c-ary tree of the given height, breadth-first numbering: root 0,
// children of v are c*v + 1 .. c*v + c.
inline Graph c_ary_tree(std::size_t c, std::size_t height) {
  if (c < 2 || height < 1) throw Error(Errc::InvalidParams, "c_ary_tree needs c >= 2 and H >= 1");
  auto n = cary_node_count(c, height);
  if (!n) throw Error(Errc::TooLarge, "c-ary tree node count overflows the size limit");
  EdgeVec edges;
  edges.reserve(*n - 1);
  for (std::size_t child = 1; child < *n; ++child)
    edges.emplace_back(static_cast<NodeId>((child - 1) / c), static_cast<NodeId>(child));
  return build_graph(edges, *n);
}

namespace detail {

// One pass of the pairing model that avoids self-loops and multi-edges by
// re-pairing leftover stubs. Returns false when stubs can no longer be paired.
inline bool try_regular_pairing(std::size_t n, std::size_t c, Rng& rng, EdgeVec& out) {
  std::vector<std::set<NodeId>> adj(n);
  std::vector<NodeId> stubs;
  stubs.reserve(n * c);
  for (NodeId v = 0; v < n; ++v)
    for (std::size_t k = 0; k < c; ++k) stubs.push_back(v);

  auto suitable = [&](const std::vector<NodeId>& pending) {
    // Any pair of distinct, non-adjacent nodes among the leftovers?
    std::vector<NodeId> uniq(pending);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (std::size_t i = 0; i < uniq.size(); ++i)
      for (std::size_t j = i + 1; j < uniq.size(); ++j)
        if (!adj[uniq[i]].contains(uniq[j])) return true;
    return false;
  };

  while (!stubs.empty()) {
    for (std::size_t i = stubs.size(); i > 1; --i)
      std::swap(stubs[i - 1], stubs[uniform_index(rng, i)]);
    std::vector<NodeId> leftover;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      NodeId a = stubs[i], b = stubs[i + 1];
      if (a != b && !adj[a].contains(b)) {
        adj[a].insert(b);
        adj[b].insert(a);
      } else {
        leftover.push_back(a);
        leftover.push_back(b);
      }
    }
    if (!leftover.empty() && !suitable(leftover)) return false;
    stubs = std::move(leftover);
  }
  out.clear();
  for (NodeId v = 0; v < n; ++v)
    for (NodeId w : adj[v])
      if (v < w) out.emplace_back(v, w);
  return true;
}

}  // namespace detail

// Connected simple c-regular graph on n nodes.
inline Graph random_regular(std::size_t n, std::size_t c, Rng& rng, int retries = kDefaultRetries) {
  if ((n * c) % 2 != 0) throw Error(Errc::InvalidParams, "n*c must be even for a c-regular graph");
  if (c < 1 || c >= n) throw Error(Errc::InvalidParams, "random_regular needs 1 <= c < n");
  if (n > kMaxGeneratedNodes) throw Error(Errc::TooLarge, "random_regular size");
  EdgeVec edges;
  for (int attempt = 0; attempt < retries; ++attempt) {
    if (!detail::try_regular_pairing(n, c, rng, edges)) continue;
    Graph g = build_graph(edges, n);
    if (is_connected(g)) return g;
  }
  throw Error(Errc::GenerationFailed, "random_regular: retry budget exhausted");
}

// Grid graph, row-major ids with the first axis varying slowest. A periodic
// lattice wraps every axis and has degree 2 * dims.size() everywhere.
inline Graph lattice(const std::vector<std::size_t>& dims, bool periodic) {
  if (dims.empty()) throw Error(Errc::InvalidParams, "lattice needs at least one dimension");
  std::size_t n = 1;
  for (std::size_t d : dims) {
    if (d < 2 || (periodic && d < 3))
      throw Error(Errc::InvalidParams, periodic ? "periodic lattice sides must be >= 3"
                                                : "lattice sides must be >= 2");
    if (n > kMaxGeneratedNodes / d) throw Error(Errc::TooLarge, "lattice size");
    n *= d;
  }
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t a = dims.size() - 1; a > 0; --a) stride[a - 1] = stride[a] * dims[a];

  EdgeVec edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t a = 0; a < dims.size(); ++a) {
      std::size_t coord = (v / stride[a]) % dims[a];
      if (coord + 1 < dims[a])
        edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>(v + stride[a]));
      else if (periodic)
        edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>(v - coord * stride[a]));
    }
  }
  return build_graph(edges, n);
}

// Ring of n nodes, each joined to its k nearest neighbors; the far endpoint of
// every lattice edge is rewired with probability beta. Draws are regenerated
// until connected.
inline Graph watts_strogatz(std::size_t n, std::size_t k, double beta, Rng& rng,
                            int retries = kDefaultRetries) {
  if (k % 2 != 0 || k < 2 || k >= n) throw Error(Errc::InvalidParams, "watts_strogatz needs even 2 <= k < n");
  if (!(beta >= 0.0 && beta <= 1.0)) throw Error(Errc::InvalidParams, "beta must lie in [0, 1]");
  if (n > kMaxGeneratedNodes) throw Error(Errc::TooLarge, "watts_strogatz size");

  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<std::set<NodeId>> adj(n);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t j = 1; j <= k / 2; ++j) {
        NodeId w = static_cast<NodeId>((v + j) % n);
        adj[v].insert(w);
        adj[w].insert(static_cast<NodeId>(v));
      }
    for (std::size_t j = 1; j <= k / 2; ++j) {
      for (std::size_t v = 0; v < n; ++v) {
        if (!bernoulli(rng, beta)) continue;
        NodeId w = static_cast<NodeId>((v + j) % n);
        if (!adj[v].contains(w) || adj[v].size() >= n - 1) continue;
        NodeId target;
        do {
          target = static_cast<NodeId>(uniform_index(rng, n));
        } while (target == v || adj[v].contains(target));
        adj[v].erase(w);
        adj[w].erase(static_cast<NodeId>(v));
        adj[v].insert(target);
        adj[target].insert(static_cast<NodeId>(v));
      }
    }
    EdgeVec edges;
    for (NodeId v = 0; v < n; ++v)
      for (NodeId w : adj[v])
        if (v < w) edges.emplace_back(v, w);
    Graph g = build_graph(edges, n);
    if (is_connected(g)) return g;
  }
  throw Error(Errc::GenerationFailed, "watts_strogatz: retry budget exhausted");
}

// G(n, q): every pair present independently with probability q. No
// connectivity enforcement.
inline Graph erdos_renyi(std::size_t n, double q, Rng& rng) {
  if (n < 1) throw Error(Errc::InvalidParams, "erdos_renyi needs n >= 1");
  if (!(q >= 0.0 && q <= 1.0)) throw Error(Errc::InvalidParams, "q must lie in [0, 1]");
  if (n > kMaxGeneratedNodes) throw Error(Errc::TooLarge, "erdos_renyi size");
  EdgeVec edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (bernoulli(rng, q)) edges.emplace_back(i, j);
  return build_graph(edges, n);
}

// Preferential attachment from m isolated seeds. While every existing node
// has degree zero the m targets are drawn uniformly.
inline Graph barabasi_albert(std::size_t n, std::size_t m, Rng& rng) {
  if (m < 1 || m >= n) throw Error(Errc::InvalidParams, "barabasi_albert needs 1 <= m < n");
  if (n > kMaxGeneratedNodes) throw Error(Errc::TooLarge, "barabasi_albert size");
  EdgeVec edges;
  std::vector<NodeId> endpoints;  // node repeated once per unit of degree
  std::vector<NodeId> targets;
  for (std::size_t v = m; v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      NodeId pick = endpoints.empty() ? static_cast<NodeId>(uniform_index(rng, v))
                                      : endpoints[uniform_index(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
    }
    for (NodeId w : targets) {
      edges.emplace_back(static_cast<NodeId>(v), w);
      endpoints.push_back(w);
      endpoints.push_back(static_cast<NodeId>(v));
    }
  }
  return build_graph(edges, n);
}

struct ScaleFreeParams {
  double alpha = 0.41;  // new node -> existing node (chosen by in-degree)
  double beta = 0.54;   // existing -> existing
  double gamma = 0.05;  // existing node (chosen by out-degree) -> new node
  double delta_in = 0.2;
  double delta_out = 0.0;
};

// Directed scale-free growth from a 3-cycle, then symmetrized: direction
// dropped, self-loops removed, parallel edges collapsed.
inline Graph directed_scale_free(std::size_t n, const ScaleFreeParams& sp, Rng& rng) {
  if (sp.alpha < 0 || sp.beta < 0 || sp.gamma < 0 || sp.delta_in < 0 || sp.delta_out < 0)
    throw Error(Errc::InvalidParams, "scale-free parameters must be non-negative");
  if (std::abs(sp.alpha + sp.beta + sp.gamma - 1.0) > 1e-9)
    throw Error(Errc::InvalidParams, "alpha + beta + gamma must equal 1");
  if (sp.alpha + sp.gamma <= 0) throw Error(Errc::InvalidParams, "alpha + gamma must be positive to grow");
  if (n < 3) throw Error(Errc::InvalidParams, "directed_scale_free needs n >= 3");
  if (n > kMaxGeneratedNodes) throw Error(Errc::TooLarge, "directed_scale_free size");

  EdgeVec arcs{{0, 1}, {1, 2}, {2, 0}};
  std::vector<NodeId> heads{1, 2, 0};  // one entry per unit of in-degree
  std::vector<NodeId> tails{0, 1, 2};  // one entry per unit of out-degree
  std::size_t nodes = 3;

  auto choose = [&](const std::vector<NodeId>& pool, double delta) -> NodeId {
    const double total = static_cast<double>(pool.size()) + delta * static_cast<double>(nodes);
    if (pool.empty() || uniform01(rng) * total < delta * static_cast<double>(nodes))
      return static_cast<NodeId>(uniform_index(rng, nodes));
    return pool[uniform_index(rng, pool.size())];
  };

  while (nodes < n) {
    const double r = uniform01(rng);
    NodeId from, to;
    if (r < sp.alpha) {
      to = choose(heads, sp.delta_in);
      from = static_cast<NodeId>(nodes++);
    } else if (r < sp.alpha + sp.beta) {
      from = choose(tails, sp.delta_out);
      to = choose(heads, sp.delta_in);
    } else {
      from = choose(tails, sp.delta_out);
      to = static_cast<NodeId>(nodes++);
    }
    arcs.emplace_back(from, to);
    tails.push_back(from);
    heads.push_back(to);
  }
  return build_graph(arcs, nodes);
}

enum class Family { CaryTree, RandomRegular, Lattice, WattsStrogatz, ErdosRenyi, BarabasiAlbert, DirectedScaleFree };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::CaryTree: return "cary";
    case Family::RandomRegular: return "regular";
    case Family::Lattice: return "lattice";
    case Family::WattsStrogatz: return "ws";
    case Family::ErdosRenyi: return "er";
    case Family::BarabasiAlbert: return "ba";
    case Family::DirectedScaleFree: return "dsf";
  }
  return "unknown";
}

inline Family parse_family(const std::string& s) {
  for (Family f : {Family::CaryTree, Family::RandomRegular, Family::Lattice, Family::WattsStrogatz,
                   Family::ErdosRenyi, Family::BarabasiAlbert, Family::DirectedScaleFree})
    if (to_string(f) == s) return f;
  throw Error(Errc::InvalidParams, "unknown family '" + s + "'");
}

// Per-family parameter records.
struct CaryTreeParams { std::size_t c = 2; std::size_t height = 1; };
struct RegularParams { std::size_t n = 0; std::size_t c = 0; };
struct LatticeParams { std::vector<std::size_t> dims; bool periodic = false; };
struct WattsStrogatzParams { std::size_t n = 0; std::size_t k = 0; double beta = 0.0; };
struct ErdosRenyiParams { std::size_t n = 0; double q = 0.0; };
struct BarabasiAlbertParams { std::size_t n = 0; std::size_t m = 1; };
struct DirectedScaleFreeParams { std::size_t n = 0; ScaleFreeParams sf; };

using FamilyParams = std::variant<CaryTreeParams, RegularParams, LatticeParams, WattsStrogatzParams,
                                  ErdosRenyiParams, BarabasiAlbertParams, DirectedScaleFreeParams>;

struct GeneratorSpec {
  FamilyParams params;
  std::uint64_t seed = 0;

  Family family() const { return static_cast<Family>(params.index()); }
};

inline Graph generate(const FamilyParams& params, Rng& rng) {
  struct Visitor {
    Rng& rng;
    Graph operator()(const CaryTreeParams& p) const { return c_ary_tree(p.c, p.height); }
    Graph operator()(const RegularParams& p) const { return random_regular(p.n, p.c, rng); }
    Graph operator()(const LatticeParams& p) const { return lattice(p.dims, p.periodic); }
    Graph operator()(const WattsStrogatzParams& p) const { return watts_strogatz(p.n, p.k, p.beta, rng); }
    Graph operator()(const ErdosRenyiParams& p) const { return erdos_renyi(p.n, p.q, rng); }
    Graph operator()(const BarabasiAlbertParams& p) const { return barabasi_albert(p.n, p.m, rng); }
    Graph operator()(const DirectedScaleFreeParams& p) const { return directed_scale_free(p.n, p.sf, rng); }
  };
  return std::visit(Visitor{rng}, params);
}

inline Graph generate(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  return generate(spec.params, rng);
}

namespace detail {

// n_k = ceil(start * 1.25^k), strictly increasing.
inline std::vector<std::size_t> geometric_sizes(std::size_t start, std::size_t count) {
  std::vector<std::size_t> out;
  double x = static_cast<double>(start);
  for (std::size_t i = 0; i < count; ++i) {
    auto v = static_cast<std::size_t>(std::ceil(x));
    if (!out.empty() && v <= out.back()) v = out.back() + 1;
    if (v > kMaxGeneratedNodes) break;
    out.push_back(v);
    x *= 1.25;
  }
  return out;
}

}  // namespace detail

// Brute-force search over family parameters and seeds for a graph with mean
// degree within tol_c of c_target and half-diameter exactly h_target. Each
// generated candidate costs one unit of budget. Random families whose draws
// may be disconnected are reduced to their largest component before testing.
inline Graph find_graph_with(Family family, double c_target, std::size_t h_target, double tol_c,
                             std::size_t budget, Rng& rng) {
  if (budget < 1) throw Error(Errc::InvalidParams, "budget must be >= 1");
  if (h_target < 1) throw Error(Errc::InvalidParams, "H target must be >= 1");

  std::size_t spent = 0;
  auto accept = [&](const Graph& g) {
    if (g.node_count() < 2) return false;
    double mean = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
    if (std::abs(mean - c_target) > tol_c) return false;
    return half_diameter(g) == h_target;
  };
  auto not_found = [&] {
    return Error(Errc::NotFound, "no " + to_string(family) + " graph with c~" + std::to_string(c_target) +
                                     " H=" + std::to_string(h_target) + " within budget " +
                                     std::to_string(budget));
  };

  // Degree parameter shared by the regular-type families.
  const auto c_int = static_cast<std::size_t>(std::llround(c_target));

  switch (family) {
    case Family::CaryTree: {
      // The tree is parameterized directly by (c, H); c is the child count.
      if (c_int < 2 || std::abs(static_cast<double>(c_int) - c_target) > tol_c) throw not_found();
      if (!cary_node_count(c_int, h_target)) throw not_found();
      return c_ary_tree(c_int, h_target);
    }
    case Family::Lattice: {
      // Periodic lattice with c = 2 * dims; side length scanned upward.
      if (c_int < 2 || c_int % 2 != 0) throw not_found();
      const std::size_t ndim = c_int / 2;
      for (std::size_t side = 3; spent < budget; ++side) {
        ++spent;
        Graph g;
        try {
          g = lattice(std::vector<std::size_t>(ndim, side), true);
        } catch (const Error& e) {
          if (e.code() == Errc::TooLarge) break;
          throw;
        }
        if (accept(g)) return g;
        if (half_diameter(g) > h_target) break;
      }
      throw not_found();
    }
    case Family::RandomRegular: {
      if (c_int < 1 || std::abs(static_cast<double>(c_int) - c_target) > tol_c) throw not_found();
      for (std::size_t n : detail::geometric_sizes(c_int + 1, 64)) {
        if ((n * c_int) % 2 != 0) ++n;
        for (int draw = 0; draw < 2 && spent < budget; ++draw) {
          ++spent;
          try {
            Graph g = random_regular(n, c_int, rng, 20);
            if (accept(g)) return g;
          } catch (const Error& e) {
            if (e.code() != Errc::GenerationFailed) throw;
          }
        }
        if (spent >= budget) break;
      }
      throw not_found();
    }
    case Family::WattsStrogatz: {
      std::size_t k = 2 * static_cast<std::size_t>(std::max<long long>(1, std::llround(c_target / 2.0)));
      if (std::abs(static_cast<double>(k) - c_target) > tol_c) throw not_found();
      const double betas[] = {0.05, 0.1, 0.2, 0.4, 0.8};
      for (std::size_t n : detail::geometric_sizes(k + 2, 64)) {
        for (double beta : betas) {
          if (spent++ >= budget) throw not_found();
          try {
            Graph g = watts_strogatz(n, k, beta, rng, 20);
            if (accept(g)) return g;
          } catch (const Error& e) {
            if (e.code() != Errc::GenerationFailed) throw;
          }
        }
      }
      throw not_found();
    }
    case Family::ErdosRenyi: {
      const double scales[] = {1.0, 1.15, 0.85, 1.3, 0.7};
      for (std::size_t n : detail::geometric_sizes(std::max<std::size_t>(3, c_int + 1), 64)) {
        for (double s : scales) {
          if (spent++ >= budget) throw not_found();
          double q = std::min(1.0, s * c_target / static_cast<double>(n - 1));
          Graph g = largest_component(erdos_renyi(n, q, rng)).graph;
          if (accept(g)) return g;
        }
      }
      throw not_found();
    }
    case Family::BarabasiAlbert: {
      std::size_t m = static_cast<std::size_t>(std::max<long long>(1, std::llround(c_target / 2.0)));
      for (std::size_t n : detail::geometric_sizes(m + 1, 64)) {
        for (int draw = 0; draw < 2; ++draw) {
          if (spent++ >= budget) throw not_found();
          Graph g = barabasi_albert(n, m, rng);
          if (accept(g)) return g;
        }
      }
      throw not_found();
    }
    case Family::DirectedScaleFree: {
      for (std::size_t n : detail::geometric_sizes(3, 64)) {
        for (int draw = 0; draw < 2; ++draw) {
          if (spent++ >= budget) throw not_found();
          Graph g = largest_component(directed_scale_free(n, ScaleFreeParams{}, rng)).graph;
          if (accept(g)) return g;
        }
      }
      throw not_found();
    }
  }
  throw not_found();
}

}  // namespace gsu
