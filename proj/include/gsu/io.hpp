#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gsu/error.hpp"
#include "gsu/format.hpp"
#include "gsu/graph.hpp"
#include "gsu/sweep.hpp"

namespace gsu {

inline constexpr const char* kSchemaVersion = "1";

// Edge list file: one "i j" pair of non-negative integers per line,
// whitespace separated. Lines whose first non-blank character is '#' are
// comments; blank lines are ignored. Ids may be sparse; they are compacted
// to 0..n-1 in ascending order.
struct EdgeList {
  Graph graph;
  std::vector<std::uint64_t> new_to_original;
  bool compacted = false;  // true unless ids were exactly 0..n-1

  std::optional<NodeId> to_new(std::uint64_t original) const {
    auto it = std::lower_bound(new_to_original.begin(), new_to_original.end(), original);
    if (it == new_to_original.end() || *it != original) return std::nullopt;
    return static_cast<NodeId>(it - new_to_original.begin());
  }
};

namespace detail {

inline bool parse_uint(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

inline EdgeList read_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    std::uint64_t a = 0, b = 0;
    if (tokens.size() != 2 || !detail::parse_uint(tokens[0], a) || !detail::parse_uint(tokens[1], b))
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": expected two non-negative integers");
    raw.emplace_back(a, b);
  }
  if (raw.empty()) throw Error(Errc::Parse, "edge list has no edges");

  EdgeList out;
  for (auto [a, b] : raw) {
    out.new_to_original.push_back(a);
    out.new_to_original.push_back(b);
  }
  std::sort(out.new_to_original.begin(), out.new_to_original.end());
  out.new_to_original.erase(std::unique(out.new_to_original.begin(), out.new_to_original.end()),
                            out.new_to_original.end());
  if (out.new_to_original.size() >= kNoNode) throw Error(Errc::TooLarge, "too many nodes");
  out.compacted = out.new_to_original.back() + 1 != out.new_to_original.size();

  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) edges.emplace_back(*out.to_new(a), *out.to_new(b));
  out.graph = build_graph(edges, out.new_to_original.size());
  return out;
}

inline EdgeList read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open '" + path + "'");
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

inline void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot write '" + path + "'");
  write_edge_list(out, g);
  if (!out) throw Error(Errc::Io, "write failed for '" + path + "'");
}

inline nlohmann::json to_json(const DegreeStats& s) {
  nlohmann::json hist = nlohmann::json::object();
  for (auto [d, count] : s.histogram) hist[std::to_string(d)] = count;
  return {{"mean", s.mean}, {"median", s.median}, {"mode", s.mode}, {"max", s.max}, {"histogram", hist}};
}

inline DegreeStats degree_stats_from_json(const nlohmann::json& j) {
  DegreeStats s;
  s.mean = j.at("mean").get<double>();
  s.median = j.at("median").get<double>();
  s.mode = j.at("mode").get<std::size_t>();
  s.max = j.at("max").get<std::size_t>();
  for (auto& [k, v] : j.at("histogram").items()) s.histogram[std::stoull(k)] = v.get<std::size_t>();
  return s;
}

// Graph summary written next to generated edge lists.
inline nlohmann::json graph_stats_json(const Graph& g) {
  nlohmann::json j{{"schema_version", kSchemaVersion},
                   {"nodes", g.node_count()},
                   {"edges", g.edge_count()},
                   {"degree", to_json(degree_stats(g))}};
  j["connected"] = is_connected(g);
  if (is_connected(g)) {
    const std::size_t d = diameter(g);
    j["diameter"] = d;
    j["H"] = half_diameter(d);
  } else {
    j["diameter"] = nullptr;
    j["H"] = nullptr;
  }
  return j;
}

inline nlohmann::json to_json(const CellStats& s) {
  auto real = [](double x) -> nlohmann::json { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(); };
  nlohmann::json j{{"mean_ratio", real(s.mean_ratio)},
                   {"std_err", real(s.std_err)},
                   {"ratio_of_means", real(s.ratio_of_means)},
                   {"mean_wd", real(s.mean_wd)},
                   {"mean_wg", real(s.mean_wg)},
                   {"runs", s.runs},
                   {"censored", s.censored},
                   {"unreliable", s.unreliable}};
  if (s.gen_failed) j["gen_failed"] = s.gen_failed;
  if (!s.present) j["absent_reason"] = s.absent_reason;
  return j;
}

// One row per cell, x-major. Columns: the two axis names, then the
// statistics. Reals carry 17 significant digits.
inline std::string grid_csv(const SweepGrid& grid) {
  std::ostringstream out;
  out << (grid.plane == Plane::UP ? "u,p" : "c,H")
      << ",mean_ratio,ln_mean_ratio,std_err,ratio_of_means,runs,censored\n";
  for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
    for (std::size_t iy = 0; iy < grid.y_axis.size(); ++iy) {
      const CellStats& c = grid.at(ix, iy);
      out << format_real(grid.x_axis[ix]) << ',' << format_real(grid.y_axis[iy]) << ','
          << format_real(c.mean_ratio) << ',' << format_real(std::log(c.mean_ratio)) << ','
          << format_real(c.std_err) << ',' << format_real(c.ratio_of_means) << ',' << c.runs << ','
          << c.censored << '\n';
    }
  }
  return out.str();
}

// Sidecar metadata for a grid: seed, provenance, per-cell flags.
inline nlohmann::json grid_metadata_json(const SweepGrid& grid) {
  nlohmann::json j{{"schema_version", kSchemaVersion},
                   {"plane", to_string(grid.plane)},
                   {"master_seed", grid.master_seed},
                   {"runs_per_cell", grid.runs_per_cell}};
  nlohmann::json prov = nlohmann::json::object();
  for (const auto& [k, v] : grid.provenance) prov[k] = v;
  j["provenance"] = prov;
  std::size_t censored = 0, unreliable = 0, absent = 0;
  nlohmann::json flagged = nlohmann::json::array();
  for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
    for (std::size_t iy = 0; iy < grid.y_axis.size(); ++iy) {
      const CellStats& c = grid.at(ix, iy);
      censored += c.censored;
      if (c.unreliable) ++unreliable;
      if (!c.present) ++absent;
      if (c.unreliable || !c.present || c.gen_failed)
        flagged.push_back({{"x", grid.x_axis[ix]}, {"y", grid.y_axis[iy]}, {"cell", to_json(c)}});
    }
  }
  j["censored_total"] = censored;
  j["unreliable_cells"] = unreliable;
  j["absent_cells"] = absent;
  j["flagged"] = flagged;
  return j;
}

}  // namespace gsu
