#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "lcinterp/errors.hpp"
#include "lcinterp/interp.hpp"
#include "lcinterp/measure.hpp"

using namespace lcinterp;

namespace {

NormSpec spec_p(double p, int points = 512) {
  NormSpec s;
  s.p = p;
  s.quadrature_points_per_axis = points;
  return s;
}

}  // namespace

TEST(Norm2D, Constants) {
  EXPECT_NEAR(lp_weighted_norm_2d([](double, double) { return 1.0; }, spec_p(2)), std::numbers::pi, 1e-12);
  EXPECT_NEAR(lp_weighted_norm_2d([](double, double) { return 1.0; }, spec_p(1)), std::numbers::pi * std::numbers::pi,
              1e-10);
  EXPECT_EQ(lp_weighted_norm_2d([](double, double) { return 0.0; }, spec_p(2)), 0.0);
  EXPECT_NEAR(lp_weighted_norm_2d([](double x, double) { return cheb_That(1, x); }, spec_p(2)), std::numbers::pi, 1e-12);
}

TEST(Norm2D, ProductBasisHasNormPi) {
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) {
      const double v = lp_weighted_norm_2d([=](double x, double y) { return cheb_That(i, x) * cheb_That(j, y); },
                                           spec_p(2, 128));
      EXPECT_NEAR(v / std::numbers::pi, 1.0, 1e-8) << i << "," << j;
    }
}

TEST(Norm2D, TriangleAndHomogeneity) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 10; ++t) {
    const double a = u(rng), b = u(rng), c = u(rng), alpha = u(rng);
    const auto f = [=](double x, double y) { return std::sin(a * x + b * y) + c; };
    const auto g = [=](double x, double y) { return std::abs(x - a / 4) * (y + c); };
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
      auto s = spec_p(p, 128);
      s.max_refinements = 0;
      const double nf = lp_weighted_norm_2d(f, s), ng = lp_weighted_norm_2d(g, s);
      EXPECT_LE(lp_weighted_norm_2d([&](double x, double y) { return f(x, y) + g(x, y); }, s), nf + ng + 1e-12);
      EXPECT_NEAR(lp_weighted_norm_2d([&](double x, double y) { return alpha * f(x, y); }, s), std::abs(alpha) * nf,
                  1e-12 * (1 + nf));
    }
  }
}

TEST(Norm2D, RefinementFailureThrows) {
  NormSpec s = spec_p(1, 20);
  s.refinement_tolerance = 1e-12;
  s.absolute_floor = 0.0;
  EXPECT_THROW((void)lp_weighted_norm_2d([](double x, double) { return x >= 0.37 ? 1.0 : 0.0; }, s), QuadratureError);
}

TEST(Norm2D, BreaksRemoveJumpCellError) {
  // 1{x >= 0.37}: exact norm^1 = pi * arccos(0.37)
  const double exact = std::numbers::pi * std::acos(0.37);
  NormSpec s = spec_p(1, 64);
  s.phi_breaks = {std::acos(0.37)};
  EXPECT_NEAR(lp_weighted_norm_2d([](double x, double) { return x >= 0.37 ? 1.0 : 0.0; }, s), exact, 1e-12);
}

TEST(Norm2D, SpecValidation) {
  EXPECT_THROW(validate(spec_p(0.5)), DomainError);
  EXPECT_THROW(validate(spec_p(INFINITY)), DomainError);
  EXPECT_THROW(validate(spec_p(2, 0)), DomainError);
  NormSpec s;
  s.refinement_tolerance = 0.0;
  EXPECT_THROW(validate(s), DomainError);
}

TEST(MidpointRule, SplitsAtBreaks) {
  const auto plain = midpoint_rule(4, 2.0);
  EXPECT_EQ(plain.nodes, (std::vector<double>{0.25, 0.75, 1.25, 1.75}));
  const std::vector<double> breaks{0.6, 1.0, 1.2};
  const auto r = midpoint_rule(4, 2.0, breaks);
  EXPECT_EQ(r.nodes.size(), 6u);
  double total = 0.0;
  for (double w : r.weights) total += w;
  EXPECT_NEAR(total, 2.0, 1e-15);
  EXPECT_NEAR(r.nodes[1], 0.55, 1e-15);
  EXPECT_NEAR(r.weights[1], 0.1, 1e-15);
}

TEST(Norm1D, Values) {
  EXPECT_NEAR(lp_weighted_norm_1d([](double) { return 1.0; }, spec_p(2)), std::sqrt(std::numbers::pi), 1e-12);
  EXPECT_NEAR(lp_norm_torus([](double) { return 1.0; }, spec_p(1)), 2.0 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(lp_norm_torus([](double t) { return std::sin(t); }, spec_p(2)), std::sqrt(std::numbers::pi), 1e-12);
}

TEST(DiscreteNorm, Examples) {
  EXPECT_DOUBLE_EQ(discrete_lp_norm(std::vector<double>{1, 1, 1}, 3.0), 1.0);
  EXPECT_DOUBLE_EQ(discrete_lp_norm(std::vector<double>{1, 0, 0, 0}, 1.0), 0.25);
  EXPECT_NEAR(discrete_lp_norm(std::vector<double>{3, 4}, 2.0), 3.5355339059327378, 1e-15);
  EXPECT_THROW((void)discrete_lp_norm(std::vector<double>{}, 2.0), DomainError);
  EXPECT_THROW((void)discrete_lp_norm(std::vector<double>{1.0}, 0.5), DomainError);
}

TEST(InterpolationError, ExactForMembers) {
  const auto d = make_degree_pair(5, 4);
  const auto f = [](double x, double y) { return cheb_That(2, x) * cheb_That(1, y) - 0.5 * x; };
  EXPECT_LE(interpolation_error(f, interpolate(f, d), spec_p(2, 256)), 1e-12);
}

TEST(InterpolationError, SpecScalesWithDegree) {
  EXPECT_EQ(interpolation_error_spec(make_degree_pair(8, 9), 2, true).quadrature_points_per_axis, 2048);
  EXPECT_EQ(interpolation_error_spec(make_degree_pair(64, 65), 2, true).quadrature_points_per_axis, 4096);
  EXPECT_EQ(interpolation_error_spec(make_degree_pair(128, 129), 1, false).quadrature_points_per_axis, 8192);
  EXPECT_EQ(interpolation_error_spec(make_degree_pair(3, 2), 1, true).refinement_tolerance, 1e-4);
  EXPECT_EQ(interpolation_error_spec(make_degree_pair(3, 2), 1, false).refinement_tolerance, 1e-6);
}

TEST(Mz, ConstantPolynomial) {
  const auto d = make_degree_pair(7, 5);
  const ChebSeries2D one({{0, 0}}, {1.0});
  EXPECT_NEAR(weighted_node_norm(one, node_set_from_grid(d), 2.0), 1.0, 1e-12);
  EXPECT_NEAR(mz_ratio_of(one, node_set_from_grid(d), mz_norm_spec(d, 2.0)), 1.0 / std::numbers::pi, 1e-12);
}

TEST(Mz, RandomSeriesNormalized) {
  std::mt19937_64 rng(1);
  const auto s = random_series(spectral_set(make_degree_pair(5, 4)), rng);
  double sq = 0.0;
  for (double c : s.coeffs()) sq += c * c;
  EXPECT_NEAR(sq, 1.0, 1e-14);
  for (int k = 0; k < 1000; ++k) {
    const double v = uniform_pm1(rng);
    EXPECT_GE(v, -1.0);
    EXPECT_LT(v, 1.0);
  }
}

TEST(Mz, DeterministicAndPositive) {
  const auto d = make_degree_pair(7, 5);
  const auto a = mz_ratio(d, 2.0, 40, 42);
  const auto b = mz_ratio(d, 2.0, 40, 42);
  EXPECT_EQ(a.ratio_min, b.ratio_min);
  EXPECT_EQ(a.ratio_max, b.ratio_max);
  EXPECT_GT(a.ratio_min, 0.0);
  EXPECT_LE(a.ratio_min, a.ratio_max);
  EXPECT_EQ(a.trials, 40);
  EXPECT_EQ(a.seed, 42u);
  EXPECT_NE(mz_ratio(d, 2.0, 40, 43).ratio_max, a.ratio_max);
  EXPECT_THROW((void)mz_ratio(d, 2.0, 0, 1), DomainError);
}

TEST(Mz, TwoSidedBoundsAtP2) {
  // sum lambda |P|^2 = sum c^2 + c_{0,n}^2 and ||P||^2 = pi^2 sum c^2
  for (auto [m, n] : {std::pair{3, 2}, {7, 5}, {13, 12}}) {
    const auto rep = mz_ratio(make_degree_pair(m, n), 2.0, 60, 7);
    EXPECT_GE(rep.ratio_min, 1.0 / std::numbers::pi - 1e-9);
    EXPECT_LE(rep.ratio_max, std::numbers::sqrt2 / std::numbers::pi + 1e-9);
  }
}

TEST(Mz, BoundedForOtherP) {
  for (double p : {1.0, 4.0})
    for (auto [m, n] : {std::pair{3, 2}, {7, 5}}) {
      const auto rep = mz_ratio(make_degree_pair(m, n), p, 40, 3);
      EXPECT_GT(rep.ratio_min, 0.02);
      EXPECT_LT(rep.ratio_max, 2.0);
    }
}

TEST(Lebesgue, OneTwoOracle) {
  // L_{1,2} is quadratic interpolation in y at {1, -1, 0}
  double brute = 0.0;
  for (int a = 0; a < 1024; ++a) {
    const double y = std::cos(std::numbers::pi * a / 1023);
    brute = std::max(brute, std::abs(y * (y + 1) / 2) + std::abs(y * (y - 1) / 2) + std::abs(1 - y * y));
  }
  EXPECT_NEAR(brute, 1.25, 1e-12);
  EXPECT_NEAR(lebesgue_constant(make_degree_pair(1, 2), 1024), brute, 1e-12);
}

TEST(Lebesgue, MatchesFundamentalSum) {
  const auto d = make_degree_pair(3, 2);
  const int g = 64;
  const auto ns = node_set_from_grid(d);
  std::vector<ChebSeries2D> ell;
  for (const auto& nd : ns.nodes()) ell.push_back(fundamental_polynomial(d, nd));
  double brute = 0.0;
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      const double x = std::cos(std::numbers::pi * a / (g - 1)), y = std::cos(std::numbers::pi * b / (g - 1));
      double s = 0.0;
      for (const auto& l : ell) s += std::abs(eval_series_2d(l, x, y));
      brute = std::max(brute, s);
    }
  EXPECT_NEAR(lebesgue_constant(d, g), brute, 1e-12);
}

TEST(Lebesgue, AtLeastOneAndMonotone) {
  for (auto [m, n] : {std::pair{1, 1}, {3, 2}, {5, 6}, {9, 4}}) {
    const auto d = make_degree_pair(m, n);
    const double v65 = lebesgue_constant(d, 65), v129 = lebesgue_constant(d, 129), v257 = lebesgue_constant(d, 257);
    EXPECT_GE(v65, 1.0 - 1e-12);
    EXPECT_LE(v65, v129 + 1e-12);
    EXPECT_LE(v129, v257 + 1e-12);
  }
  EXPECT_THROW((void)lebesgue_constant(make_degree_pair(3, 2), 32), DomainError);
}

TEST(FitRate, SyntheticPowerLaws) {
  for (double slope : {-1.0, -0.5, -2.5}) {
    std::vector<RateRecord> r;
    for (int n : {8, 16, 32, 64, 128}) r.push_back({n, n + 1, 3.0 * std::pow(n + 1.0, slope)});
    EXPECT_NEAR(fit_rate("s", r, 0, r.size()).fitted_slope, slope, 1e-10);
  }
}

TEST(FitRate, TailWindowAndErrors) {
  std::vector<RateRecord> r;
  r.push_back({2, 3, 100.0});
  for (int n : {8, 16, 32, 64, 128}) r.push_back({n, n + 1, 1.0 / (n + 1.0)});
  const auto rep = fit_rate_tail("tail", r, 5);
  EXPECT_EQ(rep.window_begin, 1u);
  EXPECT_EQ(rep.window_end, 6u);
  EXPECT_NEAR(rep.fitted_slope, -1.0, 1e-10);
  EXPECT_EQ(rep.records.size(), 6u);
  EXPECT_THROW((void)fit_rate("few", r, 0, 2), DomainError);
  r[3].error = 0.0;
  EXPECT_THROW((void)fit_rate_tail("zero", r, 5), DataError);
}
