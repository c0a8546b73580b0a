#pragma once

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lcinterp/cheb.hpp"
#include "lcinterp/lissajous.hpp"
#include "lcinterp/sampled_function.hpp"

namespace lcinterp {

/// The interpolation polynomial L_{m,n} f, held as coefficients over the
/// spectral index set together with the samples it was built from.
class Interpolant {
 public:
  Interpolant(std::shared_ptr<const NodeSet> nodes, ChebSeries2D series, std::vector<double> node_values);

  [[nodiscard]] DegreePair degrees() const { return nodes_->degrees(); }
  [[nodiscard]] const NodeSet& nodes() const { return *nodes_; }
  [[nodiscard]] const ChebSeries2D& series() const { return series_; }
  /// Samples aligned with nodes().nodes().
  [[nodiscard]] std::span<const double> node_values() const { return node_values_; }

  [[nodiscard]] double operator()(double x, double y) const;

 private:
  std::shared_ptr<const NodeSet> nodes_;
  ChebSeries2D series_;
  std::vector<double> node_values_;
};

/// Fundamental polynomial of the node as a series over the spectral index
/// set: coefficient lambda That_i(x_k) That_j(y_l), halved at (0, n).
[[nodiscard]] ChebSeries2D fundamental_polynomial(DegreePair d, const Node& node);

/// Coefficient transform of node samples (aligned with node_set_from_grid(d)).
[[nodiscard]] Interpolant interpolate_values(DegreePair d, std::vector<double> node_values);

[[nodiscard]] Interpolant interpolate(const BivariateFn& f, DegreePair d);
[[nodiscard]] Interpolant interpolate(const SampledFunction& f, DegreePair d);

[[nodiscard]] double evaluate(const Interpolant& ip, double x, double y);

/// Values on a tensor grid given basis tables (see cheb_That_table).
[[nodiscard]] Eigen::MatrixXd evaluate_tensor(const Interpolant& ip, const Eigen::MatrixXd& x_table,
                                              const Eigen::MatrixXd& y_table);

/// max over nodes of |L f(node) - f(node)|.
[[nodiscard]] double residual_at_nodes(const Interpolant& ip);

}  // namespace lcinterp
