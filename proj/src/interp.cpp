#include "lcinterp/interp.hpp"

#include <cmath>

#include <fmt/format.h>

#include "lcinterp/errors.hpp"

namespace lcinterp {

Interpolant::Interpolant(std::shared_ptr<const NodeSet> nodes, ChebSeries2D series, std::vector<double> node_values)
    : nodes_(std::move(nodes)), series_(std::move(series)), node_values_(std::move(node_values)) {
  if (node_values_.size() != nodes_->size()) throw DomainError("Interpolant: sample count does not match node count");
}

double Interpolant::operator()(double x, double y) const { return eval_series_2d(series_, x, y); }

ChebSeries2D fundamental_polynomial(DegreePair d, const Node& node) {
  const auto nodes = node_set_from_grid(d);
  const auto q = nodes.find(node.i, node.j);
  if (!q) throw DomainError(fmt::format("node ({}, {}) is not in LC_{{{},{}}}", node.i, node.j, d.m(), d.n()));
  const auto& nd = nodes[*q];
  const auto gamma = spectral_set(d);
  std::vector<Exponent> exps(gamma.exponents().begin(), gamma.exponents().end());
  std::vector<double> coeffs;
  coeffs.reserve(exps.size());
  for (const auto& e : exps) {
    double c = nd.weight * cheb_That_at_cgl(e.i, nd.i, d.m()) * cheb_That_at_cgl(e.j, nd.j, d.n());
    // the -1/2 That_n(y_l) That_n(y) correction term
    if (e.i == 0 && e.j == d.n()) c *= 0.5;
    coeffs.push_back(c);
  }
  return ChebSeries2D(std::move(exps), std::move(coeffs));
}

Interpolant interpolate_values(DegreePair d, std::vector<double> node_values) {
  auto nodes = std::make_shared<const NodeSet>(node_set_from_grid(d));
  if (node_values.size() != nodes->size())
    throw DomainError(fmt::format("interpolate: {} samples for {} nodes", node_values.size(), nodes->size()));
  const int m = d.m();
  const int n = d.n();
  Eigen::MatrixXd weighted = Eigen::MatrixXd::Zero(m + 1, n + 1);
  for (std::size_t q = 0; q < nodes->size(); ++q) {
    const auto& nd = (*nodes)[q];
    if (!std::isfinite(node_values[q]))
      throw DataError(fmt::format("non-finite sample {} at node ({}, {})", node_values[q], nd.i, nd.j));
    weighted(nd.i, nd.j) = nd.weight * node_values[q];
  }
  // x_table(k, i) = That_i(x_k), y_table(l, j) = That_j(y_l)
  Eigen::MatrixXd x_table(m + 1, m);
  for (int k = 0; k <= m; ++k)
    for (int i = 0; i < m; ++i) x_table(k, i) = cheb_That_at_cgl(i, k, m);
  Eigen::MatrixXd y_table(n + 1, n + 1);
  for (int l = 0; l <= n; ++l)
    for (int j = 0; j <= n; ++j) y_table(l, j) = cheb_That_at_cgl(j, l, n);
  const Eigen::MatrixXd full = x_table.transpose() * weighted * y_table;

  const auto gamma = spectral_set(d);
  std::vector<Exponent> exps(gamma.exponents().begin(), gamma.exponents().end());
  std::vector<double> coeffs;
  coeffs.reserve(exps.size());
  for (const auto& e : exps) {
    double c = full(e.i, e.j);
    // the -1/2 That_n(y_l) That_n(y) correction term
    if (e.i == 0 && e.j == n) c *= 0.5;
    coeffs.push_back(c);
  }
  return Interpolant(std::move(nodes), ChebSeries2D(std::move(exps), std::move(coeffs)), std::move(node_values));
}

Interpolant interpolate(const BivariateFn& f, DegreePair d) {
  const auto nodes = node_set_from_grid(d);
  std::vector<double> values;
  values.reserve(nodes.size());
  for (const auto& nd : nodes.nodes()) values.push_back(f(nd.x, nd.y));
  return interpolate_values(d, std::move(values));
}

Interpolant interpolate(const SampledFunction& f, DegreePair d) { return interpolate(f.eval, d); }

double evaluate(const Interpolant& ip, double x, double y) { return ip(x, y); }

Eigen::MatrixXd evaluate_tensor(const Interpolant& ip, const Eigen::MatrixXd& x_table,
                                const Eigen::MatrixXd& y_table) {
  return eval_series_2d_tensor(ip.series(), x_table, y_table);
}

double residual_at_nodes(const Interpolant& ip) {
  double worst = 0.0;
  const auto values = ip.node_values();
  for (std::size_t q = 0; q < ip.nodes().size(); ++q) {
    const auto& nd = ip.nodes()[q];
    worst = std::max(worst, std::abs(ip(nd.x, nd.y) - values[q]));
  }
  return worst;
}

}  // namespace lcinterp
