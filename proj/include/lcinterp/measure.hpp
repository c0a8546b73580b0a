#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lcinterp/interp.hpp"
#include "lcinterp/lissajous.hpp"
#include "lcinterp/sampled_function.hpp"

namespace lcinterp {

/// Parameters of a continuous L_p norm computed by midpoint quadrature in the
/// trigonometric variables x = cos(phi), y = cos(psi).
struct NormSpec {
  double p = 2.0;
  int quadrature_points_per_axis = 2048;
  /// Relative change of the norm allowed between successive halvings.
  double refinement_tolerance = 1e-6;
  int max_refinements = 1;
  /// Changes below this absolute size always count as converged.
  double absolute_floor = 1e-13;
  /// Angles where the integrand may jump; quadrature cells are split there.
  std::vector<double> phi_breaks;
  std::vector<double> psi_breaks;
};

/// Composite midpoint rule on [0, length) with `cells` uniform cells, each
/// cell containing a break split at it.
struct MidpointRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
[[nodiscard]] MidpointRule midpoint_rule(int cells, double length, std::span<const double> breaks = {});

void validate(const NormSpec& spec);

/// Measure in one trigonometric variable: Chebyshev (the weight cancels the
/// Jacobian, d phi) or plain Lebesgue on J (sin(phi) d phi).
enum class AxisMeasure { Chebyshev, Lebesgue };

/// Integrand sampled on tensor grids of angles in [0, pi]. prepare() runs
/// once per grid, serially; fill() may run concurrently on disjoint blocks.
class TrigIntegrand {
 public:
  virtual ~TrigIntegrand() = default;
  virtual void prepare(std::span<const double> /*psis*/) {}
  /// out(a, b) = g(cos phis[a], cos psis[b])
  virtual void fill(std::span<const double> phis, std::span<const double> psis, Eigen::Ref<Eigen::MatrixXd> out) const = 0;
};

/// Plain function integrand.
class FunctionIntegrand final : public TrigIntegrand {
 public:
  explicit FunctionIntegrand(BivariateFn f) : f_(std::move(f)) {}
  void fill(std::span<const double> phis, std::span<const double> psis, Eigen::Ref<Eigen::MatrixXd> out) const override;

 private:
  BivariateFn f_;
};

/// Series integrand (optionally minus a function): s(x, y) - f(x, y).
class SeriesIntegrand final : public TrigIntegrand {
 public:
  explicit SeriesIntegrand(const ChebSeries2D& s, BivariateFn subtract = {});
  void prepare(std::span<const double> psis) override;
  void fill(std::span<const double> phis, std::span<const double> psis, Eigen::Ref<Eigen::MatrixXd> out) const override;

 private:
  const ChebSeries2D& series_;
  BivariateFn subtract_;
  Eigen::MatrixXd by_x_;  // dense * y_table^T
};

/// (int int |g|^p d mu_x d mu_y)^(1/p) over [0, pi]^2 on an N x N midpoint grid.
[[nodiscard]] double lp_norm_trig_grid(TrigIntegrand& g, int points_per_axis, double p,
                                       AxisMeasure mx = AxisMeasure::Chebyshev,
                                       AxisMeasure my = AxisMeasure::Chebyshev);
[[nodiscard]] double lp_norm_trig_grid(TrigIntegrand& g, const MidpointRule& rx, const MidpointRule& ry, double p,
                                       AxisMeasure mx = AxisMeasure::Chebyshev,
                                       AxisMeasure my = AxisMeasure::Chebyshev);

/// Adds halving refinement per spec; throws QuadratureError when it fails.
[[nodiscard]] double lp_norm_trig_refined(TrigIntegrand& g, const NormSpec& spec);

/// ||f||_{L_{p,w}(J^2)} with the Chebyshev-type weight.
[[nodiscard]] double lp_weighted_norm_2d(const BivariateFn& f, const NormSpec& spec);

/// ||f||_{L_{p,w}(J)} in one variable: (int_0^pi |f(cos phi)|^p d phi)^(1/p).
[[nodiscard]] double lp_weighted_norm_1d(const UnivariateFn& f, const NormSpec& spec);

/// ||f||_{L_p(T)} over [0, 2 pi) with spec.quadrature_points_per_axis points.
[[nodiscard]] double lp_norm_torus(const UnivariateFn& f, const NormSpec& spec);

/// Quadrature for interpolation errors at degree d: at least 2048 points and
/// 32 per degree, one halving, tolerance 1e-4 (nonsmooth) or 1e-6.
[[nodiscard]] NormSpec interpolation_error_spec(DegreePair d, double p, bool nonsmooth);

/// ||f - L_{m,n} f||_{L_{p,w}(J^2)}.
[[nodiscard]] double interpolation_error(const BivariateFn& f, const Interpolant& ip, const NormSpec& spec);

/// ((1/N) sum |a_k|^p)^(1/p).
[[nodiscard]] double discrete_lp_norm(std::span<const double> values, double p);

/// (sum lambda_{k,l} |P(x_k, y_l)|^p)^(1/p) over the node set.
[[nodiscard]] double weighted_node_norm(const ChebSeries2D& poly, const NodeSet& nodes, double p);

struct MzReport {
  DegreePair degrees;
  double p = 2.0;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Quadrature used by mz_ratio: resolution scaled to the polynomial degree.
[[nodiscard]] NormSpec mz_norm_spec(DegreePair d, double p);

/// R(P) = weighted node norm / continuous weighted norm.
[[nodiscard]] double mz_ratio_of(const ChebSeries2D& poly, const NodeSet& nodes, const NormSpec& spec);

/// Random series over the spectral index set: i.i.d. uniform [-1, 1]
/// coefficients normalized in l2. Deterministic for a given generator state.
[[nodiscard]] ChebSeries2D random_series(const SpectralIndexSet& gamma, std::mt19937_64& rng);

/// Uniform on [-1, 1) from the top 53 bits of one draw.
[[nodiscard]] double uniform_pm1(std::mt19937_64& rng);

[[nodiscard]] MzReport mz_ratio(DegreePair d, double p, int trials, std::uint64_t seed);

/// Max of sum_k |l_k| over the tensor grid cos(a pi/(G-1)), a = 0..G-1; G >= 64.
[[nodiscard]] double lebesgue_constant(DegreePair d, int grid_per_axis);

struct RateRecord {
  int m = 0;
  int n = 0;
  double error = 0.0;
};

struct RateReport {
  std::string experiment;
  std::vector<RateRecord> records;
  double fitted_slope = 0.0;
  std::size_t window_begin = 0;
  std::size_t window_end = 0;
};

/// Least-squares slope of log(error) against log(max(m, n)) over records
/// [window_begin, window_end).
[[nodiscard]] RateReport fit_rate(std::string experiment, std::vector<RateRecord> records, std::size_t window_begin,
                                  std::size_t window_end);

/// Window covering the last `count` records (or all of them).
[[nodiscard]] RateReport fit_rate_tail(std::string experiment, std::vector<RateRecord> records, std::size_t count = 5);

}  // namespace lcinterp
