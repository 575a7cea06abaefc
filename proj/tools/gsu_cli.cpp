// gsu: command-line driver for graph generation, head-to-head searcher
// simulation, parameter sweeps, closed-form theory and MFPT oracles.
//
// Exit codes: 0 success, 2 invalid parameters, 3 I/O or parse error,
// 4 computation error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gsu/gsu.hpp"

namespace {

using nlohmann::json;

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;
constexpr int kExitCompute = 4;

int exit_code_for(gsu::Errc e) {
  switch (e) {
    case gsu::Errc::InvalidParams:
    case gsu::Errc::InvalidEdge:
    case gsu::Errc::NoInteriorOptimum:
      return kExitInvalid;
    case gsu::Errc::Io:
    case gsu::Errc::Parse:
      return kExitIo;
    default:
      return kExitCompute;
  }
}

double parse_real(const std::string& tok) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) throw gsu::Error(gsu::Errc::InvalidParams, "not a number: '" + tok + "'");
  return v;
}

// "a,b,c" or an inclusive range "start:stop:step".
std::vector<double> parse_axis(const std::string& spec) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(parse_real(tok));
    if (parts.size() != 3 || !(parts[2] > 0) || parts[1] < parts[0])
      throw gsu::Error(gsu::Errc::InvalidParams, "range must be start:stop:step with step > 0");
    const auto count = static_cast<std::size_t>(std::llround((parts[1] - parts[0]) / parts[2]));
    for (std::size_t i = 0; i <= count; ++i) out.push_back(parts[0] + static_cast<double>(i) * parts[2]);
    return out;
  }
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_real(tok));
  if (out.empty()) throw gsu::Error(gsu::Errc::InvalidParams, "empty list");
  return out;
}

std::vector<std::size_t> to_sizes(const std::vector<double>& v, const char* what) {
  std::vector<std::size_t> out;
  for (double x : v) {
    if (x < 0 || x != std::floor(x)) throw gsu::Error(gsu::Errc::InvalidParams, std::string(what) + " must be integers");
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

unsigned default_workers() {
  if (const char* env = std::getenv("GSU_WORKERS")) {
    try {
      int w = std::stoi(env);
      if (w >= 1) return static_cast<unsigned>(w);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw gsu::Error(gsu::Errc::Io, "cannot write '" + path + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json real_or_null(double x) { return std::isfinite(x) ? json(x) : json(); }

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::size_t c = 0, height = 0, n = 0, k = 0, m = 0;
  double beta = 0.0, q = 0.0;
  std::string dims;
  bool periodic = false;
  double sf_alpha = 0.41, sf_beta = 0.54, sf_gamma = 0.05, delta_in = 0.2, delta_out = 0.0;
  std::optional<double> target_c;
  std::size_t target_h = 0, budget = 200;
  double tol_c = 0.5;
  std::uint64_t seed = 0;
  std::string out, stats;
};

int run_generate(const GenerateArgs& a) {
  const gsu::Family family = gsu::parse_family(a.family);
  gsu::Rng rng(a.seed);
  gsu::Graph g;
  json params;
  if (a.target_c) {
    if (a.target_h < 1) throw gsu::Error(gsu::Errc::InvalidParams, "--target-H is required with --target-c");
    g = gsu::find_graph_with(family, *a.target_c, a.target_h, a.tol_c, a.budget, rng);
    params = {{"target_c", *a.target_c}, {"target_H", a.target_h}, {"tol_c", a.tol_c}, {"budget", a.budget}};
  } else {
    gsu::FamilyParams fp;
    switch (family) {
      case gsu::Family::CaryTree:
        fp = gsu::CaryTreeParams{a.c, a.height};
        params = {{"c", a.c}, {"H", a.height}};
        break;
      case gsu::Family::RandomRegular:
        fp = gsu::RegularParams{a.n, a.c};
        params = {{"n", a.n}, {"c", a.c}};
        break;
      case gsu::Family::Lattice: {
        auto dims = to_sizes(parse_axis(a.dims), "--dims");
        fp = gsu::LatticeParams{dims, a.periodic};
        params = {{"dims", dims}, {"periodic", a.periodic}};
        break;
      }
      case gsu::Family::WattsStrogatz:
        fp = gsu::WattsStrogatzParams{a.n, a.k, a.beta};
        params = {{"n", a.n}, {"k", a.k}, {"beta", a.beta}};
        break;
      case gsu::Family::ErdosRenyi:
        fp = gsu::ErdosRenyiParams{a.n, a.q};
        params = {{"n", a.n}, {"q", a.q}};
        break;
      case gsu::Family::BarabasiAlbert:
        fp = gsu::BarabasiAlbertParams{a.n, a.m};
        params = {{"n", a.n}, {"m", a.m}};
        break;
      case gsu::Family::DirectedScaleFree:
        fp = gsu::DirectedScaleFreeParams{a.n, {a.sf_alpha, a.sf_beta, a.sf_gamma, a.delta_in, a.delta_out}};
        params = {{"n", a.n},        {"alpha", a.sf_alpha},      {"beta", a.sf_beta},
                  {"gamma", a.sf_gamma}, {"delta_in", a.delta_in}, {"delta_out", a.delta_out}};
        break;
    }
    g = gsu::generate(fp, rng);
  }

  if (a.out.empty()) throw gsu::Error(gsu::Errc::InvalidParams, "-o/--output is required");
  gsu::write_edge_list_file(a.out, g);
  json stats = gsu::graph_stats_json(g);
  stats["family"] = a.family;
  stats["seed"] = a.seed;
  stats["params"] = params;
  emit(a.stats, dump(stats));
  return 0;
}

// ---------------------------------------------------------------------------

struct GraphInput {
  gsu::Graph graph;
  std::vector<std::uint64_t> new_to_original;
  bool compacted = false;
  bool reduced = false;
};

GraphInput load_graph(const std::string& path, bool strict, const std::string& mapping_out) {
  gsu::EdgeList el = gsu::read_edge_list_file(path);
  GraphInput in{std::move(el.graph), std::move(el.new_to_original), el.compacted, false};
  if (!gsu::is_connected(in.graph)) {
    if (strict) throw gsu::Error(gsu::Errc::Disconnected, "graph is disconnected (--strict)");
    std::cerr << "warning: graph is disconnected; using its largest component\n";
    gsu::Subgraph sub = gsu::largest_component(in.graph);
    std::vector<std::uint64_t> remapped;
    for (gsu::NodeId old : sub.new_to_old) remapped.push_back(in.new_to_original[old]);
    in.graph = std::move(sub.graph);
    in.new_to_original = std::move(remapped);
    in.reduced = true;
  }
  if (!mapping_out.empty()) {
    std::ostringstream m;
    m << "# original new\n";
    for (std::size_t i = 0; i < in.new_to_original.size(); ++i) m << in.new_to_original[i] << ' ' << i << '\n';
    emit(mapping_out, m.str());
  }
  return in;
}

struct SimulateArgs {
  std::string graph;
  double u = 0, p = 0;
  std::size_t runs = 1000;
  std::uint64_t seed = 0, max_steps = 0;
  unsigned workers = 1;
  bool strict = false;
  std::string mapping_out, out;
};

int run_simulate(const SimulateArgs& a) {
  gsu::UncertaintyModel{a.u, a.p}.validate();
  GraphInput in = load_graph(a.graph, a.strict, a.mapping_out);
  gsu::SweepGrid grid = gsu::sweep_up(in.graph, {a.u}, {a.p}, a.runs, a.seed, a.max_steps, a.workers);
  const gsu::CellStats& c = grid.at(0, 0);
  if (c.censored) std::cerr << "warning: " << c.censored << " censored run(s) excluded from the means\n";
  json j{{"schema_version", gsu::kSchemaVersion},
         {"u", a.u},
         {"p", a.p},
         {"seed", a.seed},
         {"mean_ratio", real_or_null(c.mean_ratio)},
         {"std_err", real_or_null(c.std_err)},
         {"ratio_of_means", real_or_null(c.ratio_of_means)},
         {"mean_wd", real_or_null(c.mean_wd)},
         {"mean_wg", real_or_null(c.mean_wg)},
         {"runs", c.runs},
         {"censored", c.censored},
         {"unreliable", c.unreliable},
         {"max_steps", a.max_steps ? a.max_steps : gsu::default_max_steps(in.graph)},
         {"nodes", in.graph.node_count()},
         {"edges", in.graph.edge_count()},
         {"compacted", in.compacted},
         {"reduced_to_largest_component", in.reduced}};
  emit(a.out, dump(j));
  return 0;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  std::string plane;
  std::string graph, family;
  std::string u, p, c, height, u_decades;
  std::size_t runs = 1000, gen_budget = 200;
  double tol_c = 0.5;
  bool fix_graph = false, strict = false;
  std::uint64_t seed = 0, max_steps = 0;
  unsigned workers = 1;
  std::string out, meta;
};

int run_sweep(const SweepArgs& a) {
  const gsu::Plane plane = gsu::parse_plane(a.plane);
  gsu::SweepGrid grid;
  if (plane == gsu::Plane::UP) {
    if (a.graph.empty()) throw gsu::Error(gsu::Errc::InvalidParams, "--graph is required for the up plane");
    std::vector<double> us;
    if (!a.u_decades.empty()) {
      auto d = parse_axis(a.u_decades);
      if (d.size() < 1) throw gsu::Error(gsu::Errc::InvalidParams, "--u-decades");
      for (double x : d) us.push_back(std::pow(10.0, x));
    } else {
      us = parse_axis(a.u);
    }
    GraphInput in = load_graph(a.graph, a.strict, "");
    grid = gsu::sweep_up(in.graph, us, parse_axis(a.p), a.runs, a.seed, a.max_steps, a.workers);
  } else {
    if (a.family.empty()) throw gsu::Error(gsu::Errc::InvalidParams, "--family is required for the ch plane");
    auto us = parse_axis(a.u), ps = parse_axis(a.p);
    if (us.size() != 1 || ps.size() != 1)
      throw gsu::Error(gsu::Errc::InvalidParams, "the ch plane takes a single --u and --p");
    gsu::ChSweepOptions opt;
    opt.tol_c = a.tol_c;
    opt.gen_budget = a.gen_budget;
    opt.fix_graph_per_cell = a.fix_graph;
    opt.max_steps = a.max_steps;
    opt.workers = a.workers;
    grid = gsu::sweep_ch(gsu::parse_family(a.family), {us[0], ps[0]}, to_sizes(parse_axis(a.c), "--c"),
                         to_sizes(parse_axis(a.height), "--H"), a.runs, a.seed, opt);
  }
  for (const auto& cell : grid.cells)
    if (cell.unreliable) {
      std::cerr << "warning: some cells exceed the censored-run threshold (see metadata)\n";
      break;
    }
  emit(a.out, gsu::grid_csv(grid));
  if (!a.meta.empty()) emit(a.meta, dump(gsu::grid_metadata_json(grid)));
  return 0;
}

// ---------------------------------------------------------------------------

struct TheoryArgs {
  std::string u, p, c, height;
  bool critical_u = false, critical_curve = false;
  std::string plane = "ch", x_grid, y_grid;
  double tol = gsu::kContourTolerance;
  std::string out;
};

json theory_point_json(double u, double p, double c, double h) {
  const gsu::TheoryPoint tp = gsu::theory_point(u, p, c, h);
  gsu::UncertaintyModel m{u, p};
  json j{{"schema_version", gsu::kSchemaVersion},
         {"u", u},
         {"p", p},
         {"c", c},
         {"H", h},
         {"z_tilde", tp.z_tilde},
         {"ln_z", tp.ln_z},
         {"expected_xi", gsu::expected_xi(m)},
         {"expected_eps", u * std::pow(p, c)},
         {"critical_u", gsu::critical_u(h)}};
  try {
    j["optimal_p"] = gsu::optimal_p(u, c);
    j["z_star"] = gsu::z_star(u, c, h);
  } catch (const gsu::Error& e) {
    if (e.code() != gsu::Errc::NoInteriorOptimum) throw;
    j["optimal_p"] = nullptr;
    j["z_star"] = nullptr;
    j["optimal_p_reason"] = e.what();
  }
  return j;
}

int run_theory(const TheoryArgs& a) {
  if (a.critical_u) {
    auto hs = parse_axis(a.height);
    if (hs.size() == 1) {
      emit(a.out, dump({{"schema_version", gsu::kSchemaVersion}, {"H", hs[0]}, {"critical_u", gsu::critical_u(hs[0])}}));
    } else {
      std::string csv = "H,critical_u\n";
      for (double h : hs) csv += gsu::format_real(h) + "," + gsu::format_real(gsu::critical_u(h)) + "\n";
      emit(a.out, csv);
    }
    return 0;
  }
  if (a.critical_curve) {
    const gsu::Plane plane = gsu::parse_plane(a.plane);
    gsu::CurveFixed fixed;
    if (plane == gsu::Plane::UP) {
      fixed.c = parse_axis(a.c).at(0);
      fixed.height = parse_axis(a.height).at(0);
    } else {
      fixed.u = parse_axis(a.u).at(0);
      fixed.p = parse_axis(a.p).at(0);
    }
    auto curve = gsu::critical_curve(plane, fixed, parse_axis(a.x_grid), parse_axis(a.y_grid), a.tol);
    json pts = json::array();
    for (auto [x, y] : curve.points) pts.push_back({x, y});
    json j{{"schema_version", gsu::kSchemaVersion},
           {"plane", gsu::to_string(plane)},
           {"axes", plane == gsu::Plane::UP ? json{"u", "p"} : json{"H", "c"}},
           {"shape", gsu::to_string(curve.shape)},
           {"points", pts}};
    if (plane == gsu::Plane::UP)
      j["fixed"] = {{"c", fixed.c}, {"H", fixed.height}};
    else
      j["fixed"] = {{"u", fixed.u}, {"p", fixed.p}};
    emit(a.out, dump(j));
    return 0;
  }

  auto us = parse_axis(a.u), ps = parse_axis(a.p), cs = parse_axis(a.c), hs = parse_axis(a.height);
  if (us.size() * ps.size() * cs.size() * hs.size() == 1) {
    emit(a.out, dump(theory_point_json(us[0], ps[0], cs[0], hs[0])));
    return 0;
  }
  std::string csv = "u,p,c,H,z_tilde,ln_z\n";
  for (double u : us)
    for (double p : ps)
      for (double c : cs)
        for (double h : hs) {
          auto tp = gsu::theory_point(u, p, c, h);
          csv += gsu::format_real(u) + "," + gsu::format_real(p) + "," + gsu::format_real(c) + "," +
                 gsu::format_real(h) + "," + gsu::format_real(tp.z_tilde) + "," + gsu::format_real(tp.ln_z) + "\n";
        }
  emit(a.out, csv);
  return 0;
}

// ---------------------------------------------------------------------------

struct MfptArgs {
  bool cary = false;
  std::size_t c = 0, height = 0, depth = 0;
  std::string graph;
  std::uint64_t s = 0, t = 0;
  std::string oracle = "solve";
  std::size_t runs = 100000;
  std::uint64_t seed = 0;
  std::string out;
};

int run_mfpt(const MfptArgs& a) {
  std::vector<std::string> oracles;
  {
    std::stringstream ss(a.oracle);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok != "solve" && tok != "cluster" && tok != "mc" && tok != "formula")
        throw gsu::Error(gsu::Errc::InvalidParams, "unknown oracle '" + tok + "'");
      oracles.push_back(tok);
    }
  }

  gsu::Graph g;
  gsu::NodeId s = 0, t = 0;
  json j{{"schema_version", gsu::kSchemaVersion}};
  if (a.cary) {
    if (a.depth > a.height) throw gsu::Error(gsu::Errc::InvalidParams, "L must not exceed H");
    g = gsu::c_ary_tree(a.c, a.height);
    // Leftmost backbone: root, its first child, that child's first child, ...
    for (std::size_t d = 0; d < a.depth; ++d) t = static_cast<gsu::NodeId>(a.c * t + 1);
    j["tree"] = {{"c", a.c}, {"H", a.height}, {"L", a.depth}};
  } else {
    if (a.graph.empty()) throw gsu::Error(gsu::Errc::InvalidParams, "either --cary or --graph is required");
    gsu::EdgeList el = gsu::read_edge_list_file(a.graph);
    auto sn = el.to_new(a.s), tn = el.to_new(a.t);
    if (!sn || !tn) throw gsu::Error(gsu::Errc::InvalidParams, "--s/--t not present in the graph");
    g = std::move(el.graph);
    s = *sn;
    t = *tn;
  }
  j["s"] = a.cary ? std::uint64_t{s} : a.s;
  j["t"] = a.cary ? std::uint64_t{t} : a.t;

  json values = json::object();
  for (const auto& o : oracles) {
    if (o == "formula") {
      if (!a.cary) throw gsu::Error(gsu::Errc::InvalidParams, "the formula oracle needs --cary");
      values["formula"] = gsu::mfpt_cary_exact(a.c, a.height, a.depth);
      j["formula_approx"] = gsu::mfpt_cary_approx(static_cast<double>(a.c), static_cast<double>(a.height),
                                                  static_cast<double>(a.depth));
    } else if (o == "solve") {
      values["solve"] = gsu::mfpt_linear_solve(g, t).values[s];
    } else if (o == "cluster") {
      values["cluster"] = s == t ? 0.0 : gsu::mfpt_tree_cluster_sum(g, s, t);
    } else {
      gsu::Rng rng = gsu::make_stream(a.seed, {0x6d66707475ULL});
      auto est = gsu::mfpt_monte_carlo(g, s, t, a.runs, rng);
      values["mc"] = est.mean;
      j["mc"] = {{"mean", est.mean}, {"std_err", est.std_err}, {"runs", a.runs}, {"seed", a.seed}};
    }
  }
  j["values"] = values;

  json rel = json::object();
  for (auto it = values.begin(); it != values.end(); ++it)
    for (auto jt = std::next(it); jt != values.end(); ++jt) {
      const double x = it->get<double>(), y = jt->get<double>();
      const double scale = std::max(std::abs(x), std::abs(y));
      rel[it.key() + "/" + jt.key()] = scale == 0 ? 0.0 : std::abs(x - y) / scale;
    }
  j["rel_errors"] = rel;
  emit(a.out, dump(j));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy vs. prior shortest-path search under edge-weight uncertainty"};
  app.require_subcommand(1);
  const unsigned workers_default = default_workers();

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "Generate a graph, write its edge list and print stats JSON");
  gen->add_option("--family", ga.family, "cary|regular|lattice|ws|er|ba|dsf")->required();
  gen->add_option("--c", ga.c, "Children per node (cary) or degree (regular)");
  gen->add_option("--H", ga.height, "Tree height (cary)");
  gen->add_option("--n", ga.n, "Node count");
  gen->add_option("--k", ga.k, "Ring neighbors (ws, even)");
  gen->add_option("--beta", ga.beta, "Rewiring probability (ws)");
  gen->add_option("--q", ga.q, "Edge probability (er)");
  gen->add_option("--m", ga.m, "Edges per arriving node (ba)");
  gen->add_option("--dims", ga.dims, "Lattice sides, comma separated");
  gen->add_flag("--periodic", ga.periodic, "Wrap every lattice axis");
  gen->add_option("--sf-alpha", ga.sf_alpha, "dsf: new-node -> existing probability");
  gen->add_option("--sf-beta", ga.sf_beta, "dsf: existing -> existing probability");
  gen->add_option("--sf-gamma", ga.sf_gamma, "dsf: existing -> new-node probability");
  gen->add_option("--delta-in", ga.delta_in, "dsf: in-degree bias");
  gen->add_option("--delta-out", ga.delta_out, "dsf: out-degree bias");
  gen->add_option("--target-c", ga.target_c, "Search for this mean degree");
  gen->add_option("--target-H", ga.target_h, "Search for this half-diameter");
  gen->add_option("--tol-c", ga.tol_c, "Mean-degree tolerance for the search");
  gen->add_option("--budget", ga.budget, "Generation attempts for the search");
  gen->add_option("--seed", ga.seed, "RNG seed");
  gen->add_option("-o,--output", ga.out, "Edge list output path")->required();
  gen->add_option("--stats", ga.stats, "Stats JSON path (default stdout)");

  SimulateArgs sa;
  sa.workers = workers_default;
  auto* sim = app.add_subcommand("simulate", "Average head-to-head trials on an edge-list graph");
  sim->add_option("--graph", sa.graph, "Edge list file")->required();
  sim->add_option("--u", sa.u, "Extra weight u")->required();
  sim->add_option("--p", sa.p, "Realization probability p")->required();
  sim->add_option("--runs", sa.runs, "Trials");
  sim->add_option("--seed", sa.seed, "Master seed");
  sim->add_option("--max-steps", sa.max_steps, "Greedy walk cap (0: 10^4 x nodes)");
  sim->add_option("--workers", sa.workers, "Threads (default $GSU_WORKERS or all cores)");
  sim->add_flag("--strict", sa.strict, "Fail on disconnected graphs instead of using the largest component");
  sim->add_option("--mapping-out", sa.mapping_out, "Write the original->internal node id mapping");
  sim->add_option("-o,--output", sa.out, "JSON output path (default stdout)");

  SweepArgs wa;
  wa.workers = workers_default;
  auto* swp = app.add_subcommand("sweep", "Averaged ratio grid over (u,p) or (c,H); writes CSV");
  swp->add_option("--plane", wa.plane, "up|ch")->required();
  swp->add_option("--graph", wa.graph, "Edge list (up plane)");
  swp->add_option("--family", wa.family, "Graph family (ch plane)");
  swp->add_option("--u", wa.u, "u values: list or start:stop:step");
  swp->add_option("--u-decades", wa.u_decades, "u = 10^d for d in list or range");
  swp->add_option("--p", wa.p, "p values: list or start:stop:step");
  swp->add_option("--c", wa.c, "c values (ch plane)");
  swp->add_option("--H", wa.height, "H values (ch plane)");
  swp->add_option("--runs", wa.runs, "Trials per cell");
  swp->add_option("--seed", wa.seed, "Master seed");
  swp->add_option("--max-steps", wa.max_steps, "Greedy walk cap (0: 10^4 x nodes)");
  swp->add_option("--gen-budget", wa.gen_budget, "Graph search attempts per run (ch plane)");
  swp->add_option("--tol-c", wa.tol_c, "Mean-degree tolerance (ch plane)");
  swp->add_flag("--fix-graph", wa.fix_graph, "One graph per (c,H) cell instead of one per run");
  swp->add_flag("--strict", wa.strict, "Fail on disconnected graphs");
  swp->add_option("--workers", wa.workers, "Threads (default $GSU_WORKERS or all cores)");
  swp->add_option("-o,--output", wa.out, "CSV output path (default stdout)");
  swp->add_option("--meta", wa.meta, "Metadata JSON path");

  TheoryArgs ta;
  auto* th = app.add_subcommand("theory", "Closed-form z~, optimal p, z*, u_c and critical curves");
  th->add_option("--u", ta.u, "u (list or range for a CSV grid)");
  th->add_option("--p", ta.p, "p (list or range)");
  th->add_option("--c", ta.c, "c (list or range)");
  th->add_option("--H", ta.height, "H (list or range)");
  th->add_flag("--critical-u", ta.critical_u, "Print u_c = H e^{H+1}");
  th->add_flag("--critical-curve", ta.critical_curve, "Extract the z~ = 1 level set");
  th->add_option("--plane", ta.plane, "Critical-curve plane: up (x=u, y=p) or ch (x=H, y=c)");
  th->add_option("--x-grid", ta.x_grid, "Column values");
  th->add_option("--y-grid", ta.y_grid, "Values searched along each column");
  th->add_option("--tol", ta.tol, "Contour tolerance on ln z~");
  th->add_option("-o,--output", ta.out, "Output path (default stdout)");

  MfptArgs ma;
  auto* mf = app.add_subcommand("mfpt", "Compare MFPT oracles");
  mf->add_flag("--cary", ma.cary, "Use a complete c-ary tree, root to depth L");
  mf->add_option("--c", ma.c, "Tree arity");
  mf->add_option("--H", ma.height, "Tree height");
  mf->add_option("--L", ma.depth, "Target depth");
  mf->add_option("--graph", ma.graph, "Edge list file");
  mf->add_option("--s", ma.s, "Source id (original numbering)");
  mf->add_option("--t", ma.t, "Target id (original numbering)");
  mf->add_option("--oracle", ma.oracle, "Comma list of formula,solve,cluster,mc");
  mf->add_option("--runs", ma.runs, "Monte Carlo walks");
  mf->add_option("--seed", ma.seed, "Monte Carlo seed");
  mf->add_option("-o,--output", ma.out, "JSON output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*gen) return run_generate(ga);
    if (*sim) return run_simulate(sa);
    if (*swp) return run_sweep(wa);
    if (*th) return run_theory(ta);
    if (*mf) return run_mfpt(ma);
  } catch (const gsu::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  }
  return 0;
}
