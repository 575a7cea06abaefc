#include <gtest/gtest.h>

#include <cmath>

#include "gsu/theory.hpp"

using namespace gsu;

namespace {

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

}  // namespace

// Values computed independently in exact rational arithmetic.
TEST(ZTilde, FrozenValues) {
  EXPECT_NEAR(z_tilde(1e6, 1e-3, 2, 3), 0.03196803196803197, 1e-15);
  EXPECT_NEAR(z_tilde(500, 0.15, 6, 3), 5.7165838815789485, 1e-12);
  EXPECT_NEAR(z_tilde(1e6, 0.0766, 6, 3), 0.006778870636080462, 1e-15);
  EXPECT_NEAR(z_tilde(1e4, 0.01, 2, 4), 0.6336633663366337, 1e-13);
  EXPECT_NEAR(z_tilde(1e4, 0.01, 7, 4), 47.544554460200004, 1e-10);
}

TEST(ZTilde, NoUncertaintyLimit) {
  EXPECT_DOUBLE_EQ(z_tilde(0, 0.3, 3, 2), 18.0);
  EXPECT_DOUBLE_EQ(z_tilde(100, 0.0, 3, 2), 18.0);
  // p = 1: every edge heavy, ratio returns to 2 c^H.
  EXPECT_NEAR(z_tilde(100, 1.0, 3, 2), 18.0, 1e-12);
}

TEST(ZTilde, LogFormAgrees) {
  for (double u : {0.0, 1.0, 1e3, 1e8})
    for (double p : {0.001, 0.1, 0.7})
      for (double c : {2.0, 3.5, 12.0})
        for (double h : {1.0, 3.0, 6.0})
          EXPECT_NEAR(ln_z_tilde(u, p, c, h), std::log(z_tilde(u, p, c, h)), 1e-12);
  EXPECT_TRUE(std::isfinite(ln_z_tilde(1e6, 0.1, 1e4, 200)));
}

TEST(ZGeneral, ReducesToTildeOnTrees) {
  const double u = 1e3, p = 0.05;
  const std::size_t c = 4, h = 3, l = 2;
  const double m = 2.0 * l * std::pow(c, h);
  EXPECT_NEAR(z_general(u * std::pow(p, c), u * p, m, l), z_tilde(u, p, c, h), 1e-12);
  EXPECT_THROW(z_general(0, 0, 1, 0), Error);
}

TEST(MfptCary, FrozenExactValues) {
  EXPECT_NEAR(mfpt_cary_exact(2, 1, 1), 3.0, 1e-12);
  EXPECT_NEAR(mfpt_cary_exact(2, 2, 1), 7.0, 1e-12);
  EXPECT_NEAR(mfpt_cary_exact(2, 2, 2), 18.0, 1e-12);
  EXPECT_NEAR(mfpt_cary_exact(3, 2, 1), 17.0, 1e-12);
  EXPECT_NEAR(mfpt_cary_exact(3, 2, 2), 40.0, 1e-12);
  EXPECT_NEAR(mfpt_cary_exact(2, 3, 1), 15.0, 1e-12);
  EXPECT_NEAR(mfpt_cary_exact(2, 3, 2), 38.0, 1e-12);
  EXPECT_NEAR(mfpt_cary_exact(2, 3, 3), 65.0, 1e-12);
  EXPECT_EQ(mfpt_cary_exact(3, 3, 0), 0.0);
  EXPECT_THROW(mfpt_cary_exact(2, 2, 3), Error);
  EXPECT_THROW(mfpt_cary_exact(1, 2, 1), Error);
}

TEST(MfptCary, ApproximationGapShrinksWithC) {
  for (std::size_t c : {2u, 3u, 4u, 10u, 50u})
    for (std::size_t h = 1; h <= 4; ++h)
      for (std::size_t l = 1; l <= h; ++l) {
        const double ex = mfpt_cary_exact(c, h, l);
        const double gap = std::abs(ex - mfpt_cary_approx(c, h, l)) / ex;
        EXPECT_LT(gap, 3.0 / c) << c << ' ' << h << ' ' << l;
      }
}

TEST(OptimalP, MatchesGridArgmin) {
  const auto grid = linspace(0, 1, 10000);
  const double step = grid[1] - grid[0];
  for (double u : {1e4, 1e6, 1e8})
    for (double c : {2.0, 4.0, 8.0}) {
      std::size_t best = 1;
      for (std::size_t i = 1; i + 1 < grid.size(); ++i)
        if (z_tilde(u, grid[i], c, 3) < z_tilde(u, grid[best], c, 3)) best = i;
      EXPECT_LE(std::abs(grid[best] - optimal_p(u, c)), step) << u << ' ' << c;
    }
}

TEST(OptimalP, FrozenAndDomain) {
  EXPECT_NEAR(optimal_p(1e5, 4), 0.042728700639623404, 1e-15);
  EXPECT_NEAR(optimal_p(1e6, 2), 1e-3, 1e-15);
  try {
    optimal_p(1.0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoInteriorOptimum);
  }
  EXPECT_THROW(optimal_p(100, 1.5), Error);
}

TEST(ZStar, IsTildeAtOptimum) {
  EXPECT_DOUBLE_EQ(z_star(1e6, 6, 3), z_tilde(1e6, optimal_p(1e6, 6), 6, 3));
  // Near the optimum z~ is flat: finite differences are tiny relative to z*.
  const double p = optimal_p(1e8, 4), h = 1e-6;
  const double slope = (z_tilde(1e8, p + h, 4, 3) - z_tilde(1e8, p - h, 4, 3)) / (2 * h);
  EXPECT_LT(std::abs(slope) * p, 1e-2 * z_star(1e8, 4, 3));
}

TEST(CriticalU, Values) {
  EXPECT_NEAR(critical_u(4), 593.6526364103063, 1e-9);
  EXPECT_NEAR(critical_u(9), 198238.19215326034, 1e-6);
  EXPECT_NEAR(critical_u(1), std::exp(2.0), 1e-12);
  EXPECT_THROW(critical_u(0), Error);
}

TEST(CriticalU, SeparatesRegimes) {
  const auto ps = linspace(0, 1, 1002);
  for (double h : {2.0, 3.0, 4.0}) {
    auto min_z = [&](double u) {
      double best = INFINITY;
      for (double c = 2; c <= 64; ++c)
        for (std::size_t i = 1; i + 1 < ps.size(); ++i) best = std::min(best, z_tilde(u, ps[i], c, h));
      return best;
    };
    EXPECT_GT(min_z(0.5 * critical_u(h)), 1.0);
    EXPECT_LT(min_z(1e3 * critical_u(h)), 1.0);
  }
}

TEST(TheoryPoint, ValidatesAndEvaluates) {
  TheoryPoint tp = theory_point(500, 0.15, 6, 3);
  EXPECT_NEAR(tp.z_tilde, 5.7165838815789485, 1e-12);
  EXPECT_NEAR(tp.ln_z, std::log(5.7165838815789485), 1e-12);
  EXPECT_THROW(theory_point(-1, 0.1, 2, 1), Error);
  EXPECT_THROW(theory_point(1, 1.1, 2, 1), Error);
  EXPECT_THROW(theory_point(1, 0.1, 1, 1), Error);
  EXPECT_THROW(theory_point(1, 0.1, 2, 0), Error);
}

TEST(CriticalCurve, PointsLieOnLevelSet) {
  CurveFixed fixed;
  fixed.c = 4;
  fixed.height = 3;
  std::vector<double> us;
  for (double e = 2; e <= 9; e += 0.5) us.push_back(std::pow(10.0, e));
  auto curve = critical_curve(Plane::UP, fixed, us, linspace(0.0, 1.0, 201));
  ASSERT_FALSE(curve.points.empty());
  for (auto [u, p] : curve.points) EXPECT_LT(std::abs(ln_z_tilde(u, p, 4, 3)), 1e-9);
}

TEST(CriticalCurve, EmptyBelowCriticalU) {
  CurveFixed fixed;
  fixed.u = 0.5 * critical_u(3);
  fixed.p = 0.1;
  // u_c grows with H, so every column here sits below its own threshold.
  auto curve = critical_curve(Plane::CH, fixed, {3, 4, 5}, linspace(2, 64, 125));
  for (double h : {3.0, 4.0, 5.0})
    for (double c : linspace(2, 64, 125)) EXPECT_GT(ln_z_tilde(fixed.u, fixed.p, c, h), 0.0);
  EXPECT_EQ(curve.shape, CurveShape::Empty);
  EXPECT_TRUE(curve.points.empty());
}

TEST(CriticalCurve, BellInChPlane) {
  // At u = 1e4, p = 0.1 the H = 3 column crosses z~ = 1 twice in c.
  CurveFixed fixed;
  fixed.u = 1e4;
  fixed.p = 0.1;
  auto curve = critical_curve(Plane::CH, fixed, {1, 2, 3, 4, 5}, linspace(2, 60, 117));
  EXPECT_EQ(curve.shape, CurveShape::Bell);
  std::size_t at3 = 0;
  for (auto [h, c] : curve.points) {
    EXPECT_LT(std::abs(ln_z_tilde(1e4, 0.1, c, h)), 1e-9);
    if (h == 3) ++at3;
  }
  EXPECT_EQ(at3, 2u);
}

TEST(CriticalCurve, MonotonicSingleRoots) {
  // c = 2, H = 1: the lower root in p is near 3/u; p <= 0.1 excludes the
  // upper root near 0.25.
  CurveFixed fixed;
  fixed.c = 2;
  fixed.height = 1;
  std::vector<double> us{1e2, 1e3, 1e4, 1e5};
  auto curve = critical_curve(Plane::UP, fixed, us, linspace(0.0, 0.1, 1001));
  EXPECT_EQ(curve.shape, CurveShape::Monotonic);
  EXPECT_EQ(curve.points.size(), us.size());
}

TEST(CriticalCurve, RejectsBadGrids) {
  EXPECT_THROW(critical_curve(Plane::UP, {}, {2, 1}, {0.1, 0.2}), Error);
  EXPECT_THROW(critical_curve(Plane::UP, {}, {1, 2}, {0.1, 0.2}, 0.0), Error);
}

TEST(Plane, NamesRoundTrip) {
  EXPECT_EQ(parse_plane("up"), Plane::UP);
  EXPECT_EQ(parse_plane(to_string(Plane::CH)), Plane::CH);
  EXPECT_THROW(parse_plane("xy"), Error);
}
