#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gsu/error.hpp"

namespace gsu {

/// Upper-bound estimate of the greedy-to-prior path weight ratio,
/// z~ = 2 c^H (u p^c + 1) / (u p + 1). Values below 1 mean the greedy
/// searcher wins on average. It does not depend on the source-target
/// distance. c is continuous here; trees only need it integral when built.
inline double z_tilde(double u, double p, double c, double height) {
  return 2.0 * std::pow(c, height) * (u * std::pow(p, c) + 1.0) / (u * p + 1.0);
}

/// Natural log of z_tilde, evaluated without forming c^H so large
/// (c, H) stay finite.
inline double ln_z_tilde(double u, double p, double c, double height) {
  return std::log(2.0) + height * std::log(c) + std::log1p(u * std::pow(p, c)) - std::log1p(u * p);
}

/// Distribution-agnostic ratio z = (E_eps + 1) m / (L (1 + E_xi)).
inline double z_general(double e_eps, double e_xi, double mfpt, std::size_t path_length) {
  if (path_length < 1) throw Error(Errc::InvalidParams, "z_general needs L >= 1");
  if (mfpt < 0) throw Error(Errc::InvalidParams, "mfpt must be >= 0");
  return (e_eps + 1.0) * mfpt / (static_cast<double>(path_length) * (1.0 + e_xi));
}

/// Exact mean first passage time on a complete c-ary tree of height H from
/// the root to a node at depth L:
///   L (2c^{H+1}/(c-1) - 1) - 2c^{H+1} (1 - c^{-L}) / (c-1)^2
inline double mfpt_cary_exact(std::size_t c, std::size_t height, std::size_t depth) {
  if (c < 2 || height < 1) throw Error(Errc::InvalidParams, "mfpt_cary_exact needs c >= 2, H >= 1");
  if (depth > height) throw Error(Errc::InvalidParams, "depth L must not exceed H");
  const double cd = static_cast<double>(c);
  const double ch1 = std::pow(cd, static_cast<double>(height) + 1.0);
  const double l = static_cast<double>(depth);
  return l * (2.0 * ch1 / (cd - 1.0) - 1.0) -
         2.0 * ch1 * (1.0 - std::pow(cd, -l)) / ((cd - 1.0) * (cd - 1.0));
}

/// Large-c form 2 L c^H.
inline double mfpt_cary_approx(double c, double height, double depth) {
  return 2.0 * depth * std::pow(c, height);
}

/// Asymptotic (u >> 1) minimizer of z~ over p: [u (c-1)]^{-1/c}.
/// Throws NoInteriorOptimum when u (c-1) <= 1, where it would leave (0, 1).
inline double optimal_p(double u, double c) {
  if (c < 2) throw Error(Errc::InvalidParams, "optimal_p needs c >= 2");
  const double base = u * (c - 1.0);
  if (!(base > 1.0)) throw Error(Errc::NoInteriorOptimum, "u (c - 1) <= 1: no optimum in (0, 1)");
  return std::pow(base, -1.0 / c);
}

/// z~ at the optimal p. Evaluated by substitution rather than a simplified
/// closed form.
inline double z_star(double u, double c, double height) {
  return z_tilde(u, optimal_p(u, c), c, height);
}

/// Extra weight below which z~ has no interior extremum in c, so the prior
/// searcher wins for every (p, c): u_c = H e^{H+1}.
inline double critical_u(double height) {
  if (height < 1) throw Error(Errc::InvalidParams, "critical_u needs H >= 1");
  return height * std::exp(height + 1.0);
}

struct TheoryPoint {
  double u = 0.0;
  double p = 0.0;
  double c = 2.0;
  double height = 1.0;
  double z_tilde = 0.0;
  double ln_z = 0.0;
};

inline TheoryPoint theory_point(double u, double p, double c, double height) {
  if (u < 0 || !(p >= 0 && p <= 1) || c < 2 || height < 1)
    throw Error(Errc::InvalidParams, "theory needs u >= 0, p in [0,1], c >= 2, H >= 1");
  return {u, p, c, height, z_tilde(u, p, c, height), ln_z_tilde(u, p, c, height)};
}

// ---------------------------------------------------------------------------
// Critical curve: the level set z~ = 1.

enum class Plane { UP, CH };

inline std::string to_string(Plane p) { return p == Plane::UP ? "up" : "ch"; }

inline Plane parse_plane(const std::string& s) {
  if (s == "up") return Plane::UP;
  if (s == "ch") return Plane::CH;
  throw Error(Errc::InvalidParams, "plane must be 'up' or 'ch'");
}

enum class CurveShape { Empty, Monotonic, Bell };

inline std::string to_string(CurveShape s) {
  switch (s) {
    case CurveShape::Empty: return "Empty";
    case CurveShape::Monotonic: return "Monotonic";
    case CurveShape::Bell: return "Bell";
  }
  return "Unknown";
}

// Parameters held fixed while the other pair spans the plane.
//   UP plane: x = u, y = p, fixed (c, H).
//   CH plane: x = H, y = c, fixed (u, p).
struct CurveFixed {
  double u = 0.0;
  double p = 0.0;
  double c = 2.0;
  double height = 1.0;
};

struct CriticalCurve {
  Plane plane = Plane::UP;
  CurveFixed fixed;
  std::vector<std::pair<double, double>> points;  // (x, y) with z~ = 1
  CurveShape shape = CurveShape::Empty;
};

inline constexpr double kContourTolerance = 1e-10;
inline constexpr int kMaxBisections = 60;

namespace detail {

inline double bisect_root(const std::function<double(double)>& f, double lo, double hi, double f_lo,
                          double tol) {
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxBisections; ++it) {
    mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) <= tol) break;
    if ((fm < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
    }
  }
  return mid;
}

}  // namespace detail

/// Roots of ln z~ = 0 along y for each x column, found by bisection inside
/// every grid bracket with a sign change. A column is two-rooted only when
/// both of its brackets change sign by more than tol on each side, which
/// keeps near-tangent columns from being read as Bell.
inline CriticalCurve critical_curve(Plane plane, const CurveFixed& fixed, const std::vector<double>& x_grid,
                                    const std::vector<double>& y_grid, double tol = kContourTolerance) {
  if (!(tol > 0)) throw Error(Errc::InvalidParams, "contour tolerance must be positive");
  for (const auto* grid : {&x_grid, &y_grid})
    for (std::size_t i = 1; i < grid->size(); ++i)
      if (!((*grid)[i] > (*grid)[i - 1])) throw Error(Errc::InvalidParams, "grids must be strictly increasing");

  CriticalCurve curve{plane, fixed, {}, CurveShape::Empty};
  bool two_rooted = false;
  std::vector<std::pair<double, double>> single_roots;

  for (double x : x_grid) {
    std::function<double(double)> f;
    if (plane == Plane::UP)
      f = [&](double p) { return ln_z_tilde(x, p, fixed.c, fixed.height); };
    else
      f = [&](double c) { return ln_z_tilde(fixed.u, fixed.p, c, x); };

    std::size_t strong = 0;
    std::vector<double> roots;
    double prev = f(y_grid.empty() ? 0.0 : y_grid.front());
    if (!y_grid.empty() && std::abs(prev) <= tol) roots.push_back(y_grid.front());
    for (std::size_t k = 1; k < y_grid.size(); ++k) {
      const double cur = f(y_grid[k]);
      if (std::abs(cur) <= tol) {
        if (std::abs(prev) > tol) roots.push_back(y_grid[k]);
      } else if (std::abs(prev) > tol && (prev < 0) != (cur < 0)) {
        roots.push_back(detail::bisect_root(f, y_grid[k - 1], y_grid[k], prev, tol));
        ++strong;
      }
      prev = cur;
    }
    for (double y : roots) curve.points.emplace_back(x, y);
    if (strong >= 2) two_rooted = true;
    if (roots.size() == 1) single_roots.emplace_back(x, roots.front());
  }

  if (curve.points.empty()) {
    curve.shape = CurveShape::Empty;
  } else if (two_rooted) {
    curve.shape = CurveShape::Bell;
  } else {
    bool up = true, down = true;
    for (std::size_t i = 1; i < single_roots.size(); ++i) {
      if (single_roots[i].second < single_roots[i - 1].second) up = false;
      if (single_roots[i].second > single_roots[i - 1].second) down = false;
    }
    curve.shape = (up || down) ? CurveShape::Monotonic : CurveShape::Bell;
  }
  return curve;
}

}  // namespace gsu
