#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gsu/error.hpp"
#include "gsu/format.hpp"
#include "gsu/generators.hpp"
#include "gsu/graph.hpp"
#include "gsu/rng.hpp"
#include "gsu/searchers.hpp"
#include "gsu/theory.hpp"
#include "gsu/uncertainty.hpp"

namespace gsu {

// A cell whose censored fraction exceeds this is flagged unreliable.
inline constexpr double kUnreliableCensoredFraction = 0.01;

struct CellStats {
  double mean_ratio = std::numeric_limits<double>::quiet_NaN();
  double std_err = std::numeric_limits<double>::quiet_NaN();
  double ratio_of_means = std::numeric_limits<double>::quiet_NaN();
  double mean_wd = std::numeric_limits<double>::quiet_NaN();
  double mean_wg = std::numeric_limits<double>::quiet_NaN();
  std::size_t runs = 0;        // completed trials, censored included
  std::size_t censored = 0;
  std::size_t gen_failed = 0;  // trials dropped because no graph was found
  bool present = false;
  bool unreliable = false;
  std::string absent_reason;
};

// Mean of per-run ratios and ratio of mean weights over the non-censored
// outcomes; std_err is that of the per-run ratio sample.
inline CellStats average_ratio(std::span<const RunOutcome> outcomes) {
  CellStats s;
  s.runs = outcomes.size();
  std::size_t used = 0;
  double mean = 0.0, m2 = 0.0, sum_wd = 0.0, sum_wg = 0.0;
  for (const RunOutcome& r : outcomes) {
    if (r.censored) {
      ++s.censored;
      continue;
    }
    ++used;
    const double delta = r.ratio - mean;
    mean += delta / static_cast<double>(used);
    m2 += delta * (r.ratio - mean);
    sum_wd += r.w_d;
    sum_wg += r.w_g;
  }
  if (used == 0) throw Error(Errc::AllCensored, "every run hit the step cap");
  s.present = true;
  s.mean_ratio = mean;
  s.std_err = used > 1 ? std::sqrt(m2 / static_cast<double>(used - 1) / static_cast<double>(used)) : 0.0;
  s.mean_wd = sum_wd / static_cast<double>(used);
  s.mean_wg = sum_wg / static_cast<double>(used);
  s.ratio_of_means = sum_wg / sum_wd;
  s.unreliable = static_cast<double>(s.censored) > kUnreliableCensoredFraction * static_cast<double>(s.runs);
  return s;
}

inline CellStats average_ratio(const std::vector<RunOutcome>& outcomes) {
  return average_ratio(std::span<const RunOutcome>(outcomes));
}

struct SweepGrid {
  Plane plane = Plane::UP;
  std::vector<double> x_axis;  // u values (UP) or c values (CH)
  std::vector<double> y_axis;  // p values (UP) or H values (CH)
  std::vector<CellStats> cells;  // cells[ix * y_axis.size() + iy]
  std::uint64_t master_seed = 0;
  std::size_t runs_per_cell = 0;
  std::vector<std::pair<std::string, std::string>> provenance;

  const CellStats& at(std::size_t ix, std::size_t iy) const { return cells[ix * y_axis.size() + iy]; }
};

// Runs task(i) for i in [0, count) on `workers` threads. Tasks must write
// only to their own slot. If tasks throw, the exception of the lowest
// index is rethrown, so failures do not depend on scheduling.
template <typename Task>
void parallel_for(std::size_t count, unsigned workers, Task&& task) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, count))));
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::size_t err_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr err;

  auto body = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  if (workers == 1) {
    body();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  }
  if (err) std::rethrow_exception(err);
}

// Stream derivation tags.
inline constexpr std::uint64_t kStreamUP = 1;
inline constexpr std::uint64_t kStreamCH = 2;
inline constexpr std::uint64_t kStreamCellGraph = ~std::uint64_t{0};

// 10^d for d = first..last.
inline std::vector<double> decades(int first, int last) {
  std::vector<double> out;
  for (int d = first; d <= last; ++d) out.push_back(std::pow(10.0, d));
  return out;
}

// Grid over (u, p) on one fixed graph. Run r of every cell in the same p row
// uses the stream (master_seed, UP, iy, r): the u axis shares random numbers,
// so cells differ only through u. max_steps = 0 selects the default cap.
inline SweepGrid sweep_up(const Graph& g, const std::vector<double>& u_values, const std::vector<double>& p_values,
                          std::size_t runs, std::uint64_t master_seed, std::uint64_t max_steps = 0,
                          unsigned workers = 1) {
  if (runs < 1) throw Error(Errc::InvalidParams, "runs must be >= 1");
  if (u_values.empty() || p_values.empty()) throw Error(Errc::InvalidParams, "empty sweep axis");
  for (double u : u_values) UncertaintyModel{u, 0.0}.validate();
  for (double p : p_values) UncertaintyModel{0.0, p}.validate();
  if (g.node_count() < 2) throw Error(Errc::InvalidParams, "sweep graph needs at least two nodes");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "sweep graph must be connected");
  const std::uint64_t cap = max_steps ? max_steps : default_max_steps(g);

  const std::size_t nx = u_values.size(), ny = p_values.size();
  std::vector<RunOutcome> outcomes(nx * ny * runs);
  parallel_for(outcomes.size(), workers, [&](std::size_t i) {
    const std::size_t cell = i / runs, r = i % runs;
    const std::size_t ix = cell / ny, iy = cell % ny;
    Rng rng = make_stream(master_seed, {kStreamUP, iy, r});
    outcomes[i] = simulation_run(g, UncertaintyModel{u_values[ix], p_values[iy]}, rng, cap);
  });

  SweepGrid grid{Plane::UP, u_values, p_values, {}, master_seed, runs, {}};
  grid.cells.reserve(nx * ny);
  for (std::size_t cell = 0; cell < nx * ny; ++cell) {
    std::span<const RunOutcome> slice(outcomes.data() + cell * runs, runs);
    try {
      grid.cells.push_back(average_ratio(slice));
    } catch (const Error& e) {
      if (e.code() != Errc::AllCensored) throw;
      CellStats absent;
      absent.runs = runs;
      absent.censored = runs;
      absent.unreliable = true;
      absent.absent_reason = e.what();
      grid.cells.push_back(std::move(absent));
    }
  }
  grid.provenance = {{"nodes", std::to_string(g.node_count())},
                     {"edges", std::to_string(g.edge_count())},
                     {"max_steps", std::to_string(cap)}};
  return grid;
}

struct ChSweepOptions {
  double tol_c = 0.5;
  std::size_t gen_budget = 200;
  // Generate one graph per cell instead of one per run.
  bool fix_graph_per_cell = false;
  std::uint64_t max_steps = 0;  // 0: default cap for each graph
  unsigned workers = 1;
};

// Grid over (c, H) at fixed (u, p). Every run draws a fresh graph hitting
// (c, H) via find_graph_with, then runs one trial on it with the same
// stream (master_seed, CH, ix, iy, r). Cells where no graph is found are
// marked absent with the reason.
inline SweepGrid sweep_ch(Family family, const UncertaintyModel& model, const std::vector<std::size_t>& c_values,
                          const std::vector<std::size_t>& h_values, std::size_t runs, std::uint64_t master_seed,
                          const ChSweepOptions& opt = {}) {
  model.validate();
  if (runs < 1) throw Error(Errc::InvalidParams, "runs must be >= 1");
  if (c_values.empty() || h_values.empty()) throw Error(Errc::InvalidParams, "empty sweep axis");
  const std::size_t nx = c_values.size(), ny = h_values.size();

  struct Slot {
    std::optional<RunOutcome> outcome;
    std::string failure;
  };

  auto make_graph = [&](std::size_t ix, std::size_t iy, Rng& rng, std::string& failure) -> std::optional<Graph> {
    try {
      return find_graph_with(family, static_cast<double>(c_values[ix]), h_values[iy], opt.tol_c,
                             opt.gen_budget, rng);
    } catch (const Error& e) {
      if (e.code() != Errc::NotFound && e.code() != Errc::GenerationFailed) throw;
      failure = e.what();
      return std::nullopt;
    }
  };

  std::vector<std::optional<Graph>> cell_graphs;
  std::vector<std::string> cell_failures(nx * ny);
  if (opt.fix_graph_per_cell) {
    cell_graphs.resize(nx * ny);
    parallel_for(nx * ny, opt.workers, [&](std::size_t cell) {
      Rng rng = make_stream(master_seed, {kStreamCH, cell / ny, cell % ny, kStreamCellGraph});
      cell_graphs[cell] = make_graph(cell / ny, cell % ny, rng, cell_failures[cell]);
    });
  }

  std::vector<Slot> slots(nx * ny * runs);
  parallel_for(slots.size(), opt.workers, [&](std::size_t i) {
    const std::size_t cell = i / runs, r = i % runs;
    const std::size_t ix = cell / ny, iy = cell % ny;
    Rng rng = make_stream(master_seed, {kStreamCH, ix, iy, r});
    const Graph* g = nullptr;
    std::optional<Graph> fresh;
    if (opt.fix_graph_per_cell) {
      if (!cell_graphs[cell]) {
        slots[i].failure = cell_failures[cell];
        return;
      }
      g = &*cell_graphs[cell];
    } else {
      fresh = make_graph(ix, iy, rng, slots[i].failure);
      if (!fresh) return;
      g = &*fresh;
    }
    const std::uint64_t cap = opt.max_steps ? opt.max_steps : default_max_steps(*g);
    slots[i].outcome = simulation_run(*g, model, rng, cap);
  });

  SweepGrid grid{Plane::CH, {}, {}, {}, master_seed, runs, {}};
  for (std::size_t c : c_values) grid.x_axis.push_back(static_cast<double>(c));
  for (std::size_t h : h_values) grid.y_axis.push_back(static_cast<double>(h));
  std::vector<RunOutcome> done;
  for (std::size_t cell = 0; cell < nx * ny; ++cell) {
    done.clear();
    std::size_t failed = 0;
    std::string reason;
    for (std::size_t r = 0; r < runs; ++r) {
      const Slot& s = slots[cell * runs + r];
      if (s.outcome) {
        done.push_back(*s.outcome);
      } else {
        ++failed;
        if (reason.empty()) reason = s.failure;
      }
    }
    CellStats stats;
    if (done.empty()) {
      stats.absent_reason = reason;
    } else {
      try {
        stats = average_ratio(done);
      } catch (const Error& e) {
        if (e.code() != Errc::AllCensored) throw;
        stats.runs = done.size();
        stats.censored = done.size();
        stats.unreliable = true;
        stats.absent_reason = e.what();
      }
    }
    stats.gen_failed = failed;
    grid.cells.push_back(std::move(stats));
  }
  grid.provenance = {{"family", to_string(family)},
                     {"u", format_real(model.u)},
                     {"p", format_real(model.p)},
                     {"tol_c", format_real(opt.tol_c)},
                     {"gen_budget", std::to_string(opt.gen_budget)},
                     {"fix_graph_per_cell", opt.fix_graph_per_cell ? "true" : "false"}};
  return grid;
}

}  // namespace gsu
