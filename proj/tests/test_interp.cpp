#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "lcinterp/errors.hpp"
#include "lcinterp/interp.hpp"
#include "lcinterp/testbed.hpp"

using namespace lcinterp;

namespace {

ChebSeries2D random_member(DegreePair d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto g = spectral_set(d);
  std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
  std::vector<double> c(e.size());
  for (auto& v : c) v = u(rng);
  return ChebSeries2D(e, c);
}

double coeff_distance(const ChebSeries2D& a, const ChebSeries2D& b) {
  double worst = 0.0;
  for (auto e : a.index_set()) worst = std::max(worst, std::abs(a.coeff(e) - b.coeff(e)));
  for (auto e : b.index_set()) worst = std::max(worst, std::abs(a.coeff(e) - b.coeff(e)));
  return worst;
}

BivariateFn as_fn(const ChebSeries2D& s) {
  return [s](double x, double y) { return eval_series_2d(s, x, y); };
}

}  // namespace

TEST(Fundamental, KroneckerDelta) {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {3, 2}, {5, 4}, {7, 5}, {8, 9}}) {
    const auto d = make_degree_pair(m, n);
    const auto ns = node_set_from_grid(d);
    for (const auto& own : ns.nodes()) {
      const auto ell = fundamental_polynomial(d, own);
      for (const auto& other : ns.nodes()) {
        const double expected = (own.i == other.i && own.j == other.j) ? 1.0 : 0.0;
        EXPECT_NEAR(eval_series_2d(ell, other.x, other.y), expected, 1e-10);
      }
    }
  }
}

TEST(Fundamental, ConstantCoefficient) {
  const auto d = make_degree_pair(3, 2);
  const auto ns = node_set_from_grid(d);
  const auto ell = fundamental_polynomial(d, ns[*ns.find(1, 1)]);
  EXPECT_NEAR(ell.coeff({0, 0}), 1.0 / 3, 1e-15);
  const auto g = spectral_set(d);
  ASSERT_EQ(ell.size(), g.size());
  for (std::size_t q = 0; q < g.size(); ++q) EXPECT_EQ(ell.index_set()[q], g.exponents()[q]);
}

TEST(Fundamental, RejectsForeignNode) {
  const auto d = make_degree_pair(3, 2);
  Node bogus;
  bogus.i = 1;
  bogus.j = 0;
  EXPECT_THROW((void)fundamental_polynomial(d, bogus), DomainError);
}

TEST(Interpolate, Constant) {
  const auto ip = interpolate([](double, double) { return 1.0; }, make_degree_pair(7, 5));
  for (auto e : ip.series().index_set()) EXPECT_NEAR(ip.series().coeff(e), (e == Exponent{0, 0}) ? 1.0 : 0.0, 1e-12);
  EXPECT_LE(residual_at_nodes(ip), 1e-14);
}

TEST(Interpolate, Zero) {
  const auto ip = interpolate([](double, double) { return 0.0; }, make_degree_pair(5, 4));
  for (double x : {-1.0, 0.1, 0.9})
    for (double y : {-0.5, 1.0}) EXPECT_EQ(evaluate(ip, x, y), 0.0);
}

TEST(Interpolate, ProductBasisReproduced) {
  const auto d = make_degree_pair(3, 2);
  const auto ip = interpolate([](double x, double y) { return cheb_That(1, x) * cheb_That(1, y); }, d);
  for (auto e : ip.series().index_set()) EXPECT_NEAR(ip.series().coeff(e), (e == Exponent{1, 1}) ? 1.0 : 0.0, 1e-12);
}

TEST(Interpolate, CubeMatchesLinearSolve) {
  const auto d = make_degree_pair(3, 2);
  const auto ns = node_set_from_grid(d);
  const auto g = spectral_set(d);
  const auto f = [](double x, double) { return x * x * x; };
  Eigen::MatrixXd a(6, 6);
  Eigen::VectorXd rhs(6);
  for (std::size_t q = 0; q < 6; ++q) {
    for (std::size_t e = 0; e < 6; ++e) a(q, e) = cheb_That(g.exponents()[e].i, ns[q].x) * cheb_That(g.exponents()[e].j, ns[q].y);
    rhs(q) = f(ns[q].x, ns[q].y);
  }
  const Eigen::VectorXd c = a.fullPivLu().solve(rhs);
  const auto ip = interpolate(f, d);
  for (std::size_t e = 0; e < 6; ++e) EXPECT_NEAR(ip.series().coeff(g.exponents()[e]), c(e), 1e-12);
  // x^3 itself is not in the space
  EXPECT_GT(std::abs(evaluate(ip, 0.3, 0.2) - 0.027), 1e-3);
}

TEST(Interpolate, RandomMemberOnGrid) {
  std::mt19937_64 rng(7);
  const auto d = make_degree_pair(5, 4);
  const auto p = random_member(d, rng);
  const auto ip = interpolate(as_fn(p), d);
  for (int a = 0; a <= 32; ++a)
    for (int b = 0; b <= 32; ++b) {
      const double x = -1.0 + a / 16.0, y = -1.0 + b / 16.0;
      EXPECT_NEAR(evaluate(ip, x, y), eval_series_2d(p, x, y), 1e-9);
    }
}

TEST(Interpolate, Reproduction) {
  std::mt19937_64 rng(2024);
  for (auto [m, n] : {std::pair{3, 2}, {5, 4}, {7, 5}, {2, 9}}) {
    const auto d = make_degree_pair(m, n);
    for (int t = 0; t < 50; ++t) {
      const auto p = random_member(d, rng);
      EXPECT_LE(coeff_distance(interpolate(as_fn(p), d).series(), p), 1e-10);
    }
  }
}

TEST(Interpolate, EquivalentToFundamentalSum) {
  const auto f = [](double x, double y) { return std::exp(x) * std::sin(2.0 * y) + x * y; };
  for (auto [m, n] : {std::pair{3, 2}, {5, 4}, {7, 5}}) {
    const auto d = make_degree_pair(m, n);
    const auto ns = node_set_from_grid(d);
    const auto g = spectral_set(d);
    std::vector<double> sum(g.size(), 0.0);
    for (const auto& nd : ns.nodes()) {
      const auto ell = fundamental_polynomial(d, nd);
      for (std::size_t q = 0; q < g.size(); ++q) sum[q] += f(nd.x, nd.y) * ell.coeff(g.exponents()[q]);
    }
    const auto ip = interpolate(f, d);
    for (std::size_t q = 0; q < g.size(); ++q) EXPECT_NEAR(ip.series().coeff(g.exponents()[q]), sum[q], 1e-12);
  }
}

TEST(Interpolate, Linearity) {
  const auto f = [](double x, double y) { return std::cos(x + 3.0 * y); };
  const auto g = [](double x, double y) { return x * x - y; };
  const double alpha = 1.7, beta = -0.4;
  const auto d = make_degree_pair(9, 7);
  const auto lhs = interpolate([&](double x, double y) { return alpha * f(x, y) + beta * g(x, y); }, d);
  const auto lf = interpolate(f, d);
  const auto lg = interpolate(g, d);
  for (auto e : lhs.series().index_set())
    EXPECT_NEAR(lhs.series().coeff(e), alpha * lf.series().coeff(e) + beta * lg.series().coeff(e), 1e-12);
}

TEST(Interpolate, NodeConditionsForCorpus) {
  for (const auto& f : corpus())
    for (auto [m, n] : {std::pair{3, 2}, {7, 5}, {13, 12}, {33, 32}, {17, 33}}) {
      const auto ip = interpolate(f, make_degree_pair(m, n));
      EXPECT_LE(residual_at_nodes(ip), 1e-10) << f.id << " " << m << "," << n;
      for (std::size_t q = 0; q < ip.nodes().size(); ++q) {
        const auto& nd = ip.nodes()[q];
        EXPECT_NEAR(evaluate(ip, nd.x, nd.y), f(nd.x, nd.y), 1e-10);
      }
    }
}

TEST(Interpolate, StepResidual) {
  const auto ip = interpolate([](double x, double) { return x >= 0.37 ? 1.0 : 0.0; }, make_degree_pair(21, 20));
  EXPECT_LE(residual_at_nodes(ip), 1e-10);
}

TEST(Interpolate, NonFiniteSampleNamesNode) {
  const auto d = make_degree_pair(3, 2);
  try {
    (void)interpolate([](double x, double y) { return (std::abs(x - 0.5) < 1e-12 && y == 0.0) ? std::numeric_limits<double>::quiet_NaN() : 1.0; }, d);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("(1, 1)"), std::string::npos) << e.what();
  }
}

TEST(Interpolate, ValuesLengthChecked) {
  EXPECT_THROW((void)interpolate_values(make_degree_pair(3, 2), {1.0, 2.0}), DomainError);
}

TEST(Evaluate, RejectsOutside) {
  const auto ip = interpolate([](double x, double) { return x; }, make_degree_pair(3, 2));
  EXPECT_THROW((void)evaluate(ip, 1.01, 0.0), DomainError);
  EXPECT_THROW((void)evaluate(ip, 0.0, -1.5), DomainError);
}

TEST(Evaluate, TensorMatchesPointwise) {
  const auto ip = interpolate([](double x, double y) { return std::exp(x - y); }, make_degree_pair(6, 5));
  const std::vector<double> xs{-1.0, -0.3, 0.5, 1.0}, ys{-1.0, 0.2, 0.9};
  const auto v = evaluate_tensor(ip, cheb_That_table(ip.series().max_i(), xs), cheb_That_table(ip.series().max_j(), ys));
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < ys.size(); ++b) EXPECT_NEAR(v(a, b), evaluate(ip, xs[a], ys[b]), 1e-13);
}
