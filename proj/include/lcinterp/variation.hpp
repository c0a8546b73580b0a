#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lcinterp/sampled_function.hpp"

namespace lcinterp {

/// Strictly increasing points inside [lo, hi].
class Partition1D {
 public:
  explicit Partition1D(std::vector<double> points, double lo = -1.0, double hi = 1.0);

  [[nodiscard]] std::span<const double> points() const { return points_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] double lo() const { return lo_; }
  [[nodiscard]] double hi() const { return hi_; }

 private:
  std::vector<double> points_;
  double lo_;
  double hi_;
};

/// count CGL points of J (ascending) merged with the extra points.
[[nodiscard]] Partition1D dense_partition(int count, std::span<const double> extra = {});

struct GridFunction2D {
  GridFunction2D(Partition1D xs, Partition1D ys, Eigen::MatrixXd values);

  Partition1D xs;
  Partition1D ys;
  Eigen::MatrixXd values;  // values(a, b) = f(xs[a], ys[b])
};

[[nodiscard]] GridFunction2D sample_grid(const BivariateFn& f, const Partition1D& xs, const Partition1D& ys);

/// Sum |f(xi_{k+1}) - f(xi_k)| of samples taken along a partition.
[[nodiscard]] double total_variation_1d(std::span<const double> samples);
[[nodiscard]] double total_variation_1d(const UnivariateFn& f, const Partition1D& partition);

/// Sum over cells of the absolute mixed difference.
[[nodiscard]] double hardy_krause(const GridFunction2D& g);

enum class DerivativePath { Auto, Numeric, Analytic };

/// Central-difference step in (phi, psi) used on the numeric path.
inline constexpr double kTrigDerivativeStep = 1e-5;

/// D~^{(r,s)} f: derivative in (phi, psi) of f(cos phi, cos psi), evaluated at
/// phi = arccos x, psi = arccos y. Auto uses a registered closed form when
/// present and central differences (r + s <= 2) otherwise.
[[nodiscard]] BivariateFn d_tilde(const SampledFunction& f, int r, int s, DerivativePath path = DerivativePath::Auto);

/// W_delta(x) = ((1 - x - delta phi(x)/2)(1 + x - delta phi(x)/2))^(1/2), 0 where a factor is nonpositive.
[[nodiscard]] double weight_W(double delta, double x);

/// nu-th symmetric difference with step h phi(x) at x, 0 if x +- nu h phi(x)/2 leaves J.
[[nodiscard]] double symmetric_difference(const UnivariateFn& f, int nu, double h, double x);

struct SmoothnessQuery {
  int nu = 1;
  double alpha = 0.0;
  double t = 0.1;
  double p = 2.0;
  int h_grid_size = 64;
  int x_grid_size = 2048;
};

enum class SmoothnessAxis { X, Y, Mixed };

/// h values t r^k, k = 0..h_grid_size-1, r = 2^(-8/h_grid_size) (eight octaves below t).
[[nodiscard]] std::vector<double> modulus_h_grid(const SmoothnessQuery& q);

/// Weighted modulus of smoothness: max over the h grid of the norm of
/// W^alpha_{nu h} Delta^nu_{h phi} f along the axis. X and Y use the Chebyshev
/// weight in the other variable; Mixed takes the max over h1 x h2 pairs in
/// the unweighted L_p(J^2) norm. A lower bound for the supremum over h.
[[nodiscard]] double modulus_estimate(const BivariateFn& f, const SmoothnessQuery& q, SmoothnessAxis axis);

/// Same integrand at a single step h (h2 = h for Mixed).
[[nodiscard]] double modulus_at_step(const BivariateFn& f, const SmoothnessQuery& q, SmoothnessAxis axis, double h,
                                     double h2);

}  // namespace lcinterp
