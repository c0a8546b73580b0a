#include "lcinterp/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "lcinterp/errors.hpp"
#include "lcinterp/parallel.hpp"

namespace lcinterp {

namespace {

constexpr Eigen::Index kBlockRows = 64;

double abs_pow(double v, double p) {
  const double a = std::abs(v);
  if (p == 1.0) return a;
  if (p == 2.0) return a * a;
  return std::pow(a, p);
}

template <class Compute>
double refine(const NormSpec& spec, Compute&& compute) {
  validate(spec);
  int points = spec.quadrature_points_per_axis;
  double prev = compute(points);
  if (spec.max_refinements == 0) return prev;
  double change = 0.0;
  for (int r = 0; r < spec.max_refinements; ++r) {
    points *= 2;
    const double cur = compute(points);
    change = std::abs(cur - prev);
    if (change <= spec.refinement_tolerance * std::abs(cur) + spec.absolute_floor) return cur;
    prev = cur;
  }
  throw QuadratureError(fmt::format("quadrature did not converge: relative change {:.3g} > {:.3g} at {} points",
                                    change / std::max(std::abs(prev), std::numeric_limits<double>::min()),
                                    spec.refinement_tolerance, points));
}

}  // namespace

void validate(const NormSpec& spec) {
  if (!(spec.p >= 1.0) || !std::isfinite(spec.p)) throw DomainError(fmt::format("norm exponent p = {} not in [1, inf)", spec.p));
  if (spec.quadrature_points_per_axis < 1) throw DomainError("quadrature needs at least one point per axis");
  if (!(spec.refinement_tolerance > 0.0)) throw DomainError("refinement tolerance must be positive");
  if (spec.max_refinements < 0) throw DomainError("max_refinements must be nonnegative");
}

void FunctionIntegrand::fill(std::span<const double> phis, std::span<const double> psis,
                             Eigen::Ref<Eigen::MatrixXd> out) const {
  std::vector<double> ys(psis.size());
  for (std::size_t b = 0; b < psis.size(); ++b) ys[b] = std::cos(psis[b]);
  for (std::size_t a = 0; a < phis.size(); ++a) {
    const double x = std::cos(phis[a]);
    for (std::size_t b = 0; b < psis.size(); ++b) out(a, b) = f_(x, ys[b]);
  }
}

SeriesIntegrand::SeriesIntegrand(const ChebSeries2D& s, BivariateFn subtract)
    : series_(s), subtract_(std::move(subtract)) {}

void SeriesIntegrand::prepare(std::span<const double> psis) {
  if (series_.max_i() < 0) {
    by_x_.resize(0, static_cast<Eigen::Index>(psis.size()));
    return;
  }
  const auto y_table = cheb_That_table_trig(series_.max_j(), psis);
  by_x_ = series_.dense() * y_table.transpose();
}

void SeriesIntegrand::fill(std::span<const double> phis, std::span<const double> psis,
                           Eigen::Ref<Eigen::MatrixXd> out) const {
  if (series_.max_i() < 0) {
    out.setZero();
  } else {
    const auto x_table = cheb_That_table_trig(series_.max_i(), phis);
    out.noalias() = x_table * by_x_;
  }
  if (subtract_) {
    std::vector<double> ys(psis.size());
    for (std::size_t b = 0; b < psis.size(); ++b) ys[b] = std::cos(psis[b]);
    for (std::size_t a = 0; a < phis.size(); ++a) {
      const double x = std::cos(phis[a]);
      for (std::size_t b = 0; b < psis.size(); ++b) out(a, b) -= subtract_(x, ys[b]);
    }
  }
}

MidpointRule midpoint_rule(int cells, double length, std::span<const double> breaks) {
  std::vector<double> sorted(breaks.begin(), breaks.end());
  std::sort(sorted.begin(), sorted.end());
  MidpointRule rule;
  rule.nodes.reserve(cells + sorted.size());
  rule.weights.reserve(cells + sorted.size());
  const double h = length / cells;
  auto next = sorted.begin();
  for (int a = 0; a < cells; ++a) {
    double lo = a * h;
    const double hi = (a + 1) * h;
    while (next != sorted.end() && *next <= lo) ++next;
    for (; next != sorted.end() && *next < hi; ++next) {
      rule.nodes.push_back(0.5 * (lo + *next));
      rule.weights.push_back(*next - lo);
      lo = *next;
    }
    rule.nodes.push_back(0.5 * (lo + hi));
    rule.weights.push_back(hi - lo);
  }
  return rule;
}

double lp_norm_trig_grid(TrigIntegrand& g, int points_per_axis, double p, AxisMeasure mx, AxisMeasure my) {
  const auto rule = midpoint_rule(points_per_axis, std::numbers::pi);
  return lp_norm_trig_grid(g, rule, rule, p, mx, my);
}

double lp_norm_trig_grid(TrigIntegrand& g, const MidpointRule& rx, const MidpointRule& ry, double p, AxisMeasure mx,
                         AxisMeasure my) {
  const auto nx = static_cast<Eigen::Index>(rx.nodes.size());
  const auto ny = static_cast<Eigen::Index>(ry.nodes.size());
  std::vector<double> wx = rx.weights;
  std::vector<double> wy = ry.weights;
  if (mx == AxisMeasure::Lebesgue)
    for (Eigen::Index a = 0; a < nx; ++a) wx[a] *= std::sin(rx.nodes[a]);
  if (my == AxisMeasure::Lebesgue)
    for (Eigen::Index b = 0; b < ny; ++b) wy[b] *= std::sin(ry.nodes[b]);
  g.prepare(ry.nodes);
  const auto blocks = static_cast<std::size_t>((nx + kBlockRows - 1) / kBlockRows);
  std::vector<double> row_sums(nx, 0.0);
  parallel_for(blocks, [&](std::size_t blk) {
    const auto begin = static_cast<Eigen::Index>(blk) * kBlockRows;
    const auto rows = std::min<Eigen::Index>(kBlockRows, nx - begin);
    Eigen::MatrixXd vals(rows, ny);
    g.fill(std::span<const double>(rx.nodes).subspan(begin, rows), ry.nodes, vals);
    std::vector<double> terms(ny);
    for (Eigen::Index a = 0; a < rows; ++a) {
      for (Eigen::Index b = 0; b < ny; ++b) terms[b] = abs_pow(vals(a, b), p) * wy[b];
      row_sums[begin + a] = wx[begin + a] * pairwise_sum(terms);
    }
  });
  return std::pow(pairwise_sum(row_sums), 1.0 / p);
}

double lp_norm_trig_refined(TrigIntegrand& g, const NormSpec& spec) {
  return refine(spec, [&](int pts) {
    return lp_norm_trig_grid(g, midpoint_rule(pts, std::numbers::pi, spec.phi_breaks),
                             midpoint_rule(pts, std::numbers::pi, spec.psi_breaks), spec.p);
  });
}

double lp_weighted_norm_2d(const BivariateFn& f, const NormSpec& spec) {
  FunctionIntegrand g(f);
  return lp_norm_trig_refined(g, spec);
}

double lp_weighted_norm_1d(const UnivariateFn& f, const NormSpec& spec) {
  return refine(spec, [&](int pts) {
    const auto rule = midpoint_rule(pts, std::numbers::pi, spec.phi_breaks);
    std::vector<double> terms(rule.nodes.size());
    for (std::size_t a = 0; a < terms.size(); ++a) terms[a] = rule.weights[a] * abs_pow(f(std::cos(rule.nodes[a])), spec.p);
    return std::pow(pairwise_sum(terms), 1.0 / spec.p);
  });
}

double lp_norm_torus(const UnivariateFn& f, const NormSpec& spec) {
  return refine(spec, [&](int pts) {
    const auto rule = midpoint_rule(pts, 2.0 * std::numbers::pi, spec.phi_breaks);
    std::vector<double> terms(rule.nodes.size());
    for (std::size_t a = 0; a < terms.size(); ++a) terms[a] = rule.weights[a] * abs_pow(f(rule.nodes[a]), spec.p);
    return std::pow(pairwise_sum(terms), 1.0 / spec.p);
  });
}

double interpolation_error(const BivariateFn& f, const Interpolant& ip, const NormSpec& spec) {
  SeriesIntegrand g(ip.series(), f);
  return lp_norm_trig_refined(g, spec);
}

double discrete_lp_norm(std::span<const double> values, double p) {
  if (values.empty()) throw DomainError("discrete_lp_norm: empty sequence");
  if (!(p >= 1.0)) throw DomainError(fmt::format("discrete_lp_norm: p = {} not in [1, inf)", p));
  std::vector<double> terms(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) terms[k] = abs_pow(values[k], p);
  return std::pow(pairwise_sum(terms) / static_cast<double>(values.size()), 1.0 / p);
}

double weighted_node_norm(const ChebSeries2D& poly, const NodeSet& nodes, double p) {
  std::vector<double> terms(nodes.size());
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    const auto& nd = nodes[q];
    terms[q] = nd.weight * abs_pow(eval_series_2d(poly, nd.x, nd.y), p);
  }
  return std::pow(pairwise_sum(terms), 1.0 / p);
}

NormSpec mz_norm_spec(DegreePair d, double p) {
  // |P|^p is a trig polynomial of degree <= 2 max(m, n) for p = 2; the
  // starting grid resolves that exactly and the other p by refinement.
  int points = 64;
  while (points < 16 * std::max(d.m(), d.n())) points *= 2;
  NormSpec s;
  s.p = p;
  s.quadrature_points_per_axis = points;
  s.max_refinements = 4;
  return s;
}

NormSpec interpolation_error_spec(DegreePair d, double p, bool nonsmooth) {
  NormSpec s;
  s.p = p;
  while (s.quadrature_points_per_axis < 32 * std::max(d.m(), d.n())) s.quadrature_points_per_axis *= 2;
  s.refinement_tolerance = nonsmooth ? 1e-4 : 1e-6;
  return s;
}

double mz_ratio_of(const ChebSeries2D& poly, const NodeSet& nodes, const NormSpec& spec) {
  SeriesIntegrand g(poly);
  const double continuous = lp_norm_trig_refined(g, spec);
  if (!(continuous > 0.0)) throw DataError("mz_ratio: zero polynomial");
  return weighted_node_norm(poly, nodes, spec.p) / continuous;
}

double uniform_pm1(std::mt19937_64& rng) {
  const auto bits = rng() >> 11;  // 53 bits
  return -1.0 + 2.0 * static_cast<double>(bits) * 0x1.0p-53;
}

ChebSeries2D random_series(const SpectralIndexSet& gamma, std::mt19937_64& rng) {
  std::vector<Exponent> exps(gamma.exponents().begin(), gamma.exponents().end());
  std::vector<double> coeffs(exps.size());
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& c : coeffs) {
      c = uniform_pm1(rng);
      norm2 += c * c;
    }
  } while (norm2 == 0.0);
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : coeffs) c *= scale;
  return ChebSeries2D(std::move(exps), std::move(coeffs));
}

MzReport mz_ratio(DegreePair d, double p, int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("mz_ratio: trials must be >= 1");
  const auto nodes = node_set_from_grid(d);
  const auto gamma = spectral_set(d);
  std::mt19937_64 rng(seed);
  std::vector<ChebSeries2D> ensemble;
  ensemble.reserve(trials);
  for (int t = 0; t < trials; ++t) ensemble.push_back(random_series(gamma, rng));
  const auto spec = mz_norm_spec(d, p);
  std::vector<double> ratios(trials);
  parallel_for(static_cast<std::size_t>(trials),
               [&](std::size_t t) { ratios[t] = mz_ratio_of(ensemble[t], nodes, spec); });
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  return MzReport{d, p, *lo, *hi, trials, seed};
}

double lebesgue_constant(DegreePair d, int grid_per_axis) {
  if (grid_per_axis < 64) throw DomainError(fmt::format("lebesgue_constant: grid {} below 64 points per axis", grid_per_axis));
  const int m = d.m();
  const int n = d.n();
  const int g = grid_per_axis;
  const auto nodes = node_set_from_grid(d);
  const auto gamma = spectral_set(d);
  std::vector<double> angles(g);
  for (int a = 0; a < g; ++a) angles[a] = a * std::numbers::pi / (g - 1);
  const auto x_eval = cheb_That_table_trig(m - 1, angles);  // G x m
  const auto y_eval = cheb_That_table_trig(n, angles);      // G x (n+1)
  Eigen::MatrixXd x_node(m + 1, m);
  for (int k = 0; k <= m; ++k)
    for (int i = 0; i < m; ++i) x_node(k, i) = cheb_That_at_cgl(i, k, m);
  Eigen::MatrixXd y_node(n + 1, n + 1);
  for (int l = 0; l <= n; ++l)
    for (int j = 0; j <= n; ++j) y_node(l, j) = cheb_That_at_cgl(j, l, n);
  std::vector<int> row_len(m);
  for (int i = 0; i < m; ++i) row_len[i] = gamma.strict_row_length(i);
  const auto count = static_cast<Eigen::Index>(nodes.size());

  std::vector<double> column_max(g, 0.0);
  parallel_for(static_cast<std::size_t>(g), [&](std::size_t b) {
    // kernel(i, l) = sum over row i of That_j(y_l) That_j(y_b), plus the
    // halved (0, n) term in row 0
    Eigen::MatrixXd kernel(m, n + 1);
    std::vector<double> prefix(n + 2);
    for (int l = 0; l <= n; ++l) {
      prefix[0] = 0.0;
      for (int j = 0; j <= n; ++j) prefix[j + 1] = prefix[j] + y_node(l, j) * y_eval(b, j);
      for (int i = 0; i < m; ++i) kernel(i, l) = prefix[row_len[i]];
      kernel(0, l) += 0.5 * y_node(l, n) * y_eval(b, n);
    }
    Eigen::MatrixXd per_node(m, count);
    for (Eigen::Index q = 0; q < count; ++q) {
      const auto& nd = nodes[q];
      per_node.col(q) = nd.weight * x_node.row(nd.i).transpose().cwiseProduct(kernel.col(nd.j));
    }
    const Eigen::MatrixXd values = x_eval * per_node;  // G x |I|
    column_max[b] = values.cwiseAbs().rowwise().sum().maxCoeff();
  });
  return *std::max_element(column_max.begin(), column_max.end());
}

RateReport fit_rate(std::string experiment, std::vector<RateRecord> records, std::size_t window_begin,
                    std::size_t window_end) {
  if (window_end > records.size() || window_begin >= window_end || window_end - window_begin < 3)
    throw DomainError("fit_rate: window must contain at least 3 records");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const auto count = static_cast<double>(window_end - window_begin);
  for (std::size_t r = window_begin; r < window_end; ++r) {
    const auto& rec = records[r];
    if (!(rec.error > 0.0) || !std::isfinite(rec.error))
      throw DataError(fmt::format("fit_rate: nonpositive error {} at ({}, {})", rec.error, rec.m, rec.n));
    const double lx = std::log(static_cast<double>(std::max(rec.m, rec.n)));
    const double ly = std::log(rec.error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = count * sxx - sx * sx;
  if (!(denom > 0.0)) throw DataError("fit_rate: abscissae in window are not distinct");
  RateReport report;
  report.experiment = std::move(experiment);
  report.records = std::move(records);
  report.fitted_slope = (count * sxy - sx * sy) / denom;
  report.window_begin = window_begin;
  report.window_end = window_end;
  return report;
}

RateReport fit_rate_tail(std::string experiment, std::vector<RateRecord> records, std::size_t count) {
  const auto end = records.size();
  const auto begin = end > count ? end - count : 0;
  return fit_rate(std::move(experiment), std::move(records), begin, end);
}

}  // namespace lcinterp
