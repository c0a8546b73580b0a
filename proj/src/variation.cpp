#include "lcinterp/variation.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "lcinterp/cheb.hpp"
#include "lcinterp/errors.hpp"
#include "lcinterp/measure.hpp"
#include "lcinterp/parallel.hpp"

namespace lcinterp {

Partition1D::Partition1D(std::vector<double> points, double lo, double hi)
    : points_(std::move(points)), lo_(lo), hi_(hi) {
  if (!(lo_ < hi_)) throw DomainError("Partition1D: empty interval");
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (!(points_[k] >= lo_ && points_[k] <= hi_))
      throw DomainError(fmt::format("Partition1D: point {} outside [{}, {}]", points_[k], lo_, hi_));
    if (k > 0 && !(points_[k] > points_[k - 1])) throw DomainError("Partition1D: points not strictly increasing");
  }
}

Partition1D dense_partition(int count, std::span<const double> extra) {
  if (count < 2) throw DomainError("dense_partition: need at least 2 points");
  auto pts = cgl_points(count - 1);
  std::reverse(pts.begin(), pts.end());
  pts.insert(pts.end(), extra.begin(), extra.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return Partition1D(std::move(pts));
}

GridFunction2D::GridFunction2D(Partition1D xs_, Partition1D ys_, Eigen::MatrixXd values_)
    : xs(std::move(xs_)), ys(std::move(ys_)), values(std::move(values_)) {
  if (values.rows() != static_cast<Eigen::Index>(xs.size()) || values.cols() != static_cast<Eigen::Index>(ys.size()))
    throw DomainError("GridFunction2D: value matrix does not match the partitions");
  if (!values.allFinite()) throw DataError("GridFunction2D: non-finite value");
}

GridFunction2D sample_grid(const BivariateFn& f, const Partition1D& xs, const Partition1D& ys) {
  Eigen::MatrixXd v(xs.size(), ys.size());
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < ys.size(); ++b) v(a, b) = f(xs.points()[a], ys.points()[b]);
  return GridFunction2D(xs, ys, std::move(v));
}

double total_variation_1d(std::span<const double> samples) {
  if (samples.size() < 2) throw DomainError("total_variation_1d: need at least 2 points");
  double v = 0.0;
  for (std::size_t k = 1; k < samples.size(); ++k) v += std::abs(samples[k] - samples[k - 1]);
  return v;
}

double total_variation_1d(const UnivariateFn& f, const Partition1D& partition) {
  std::vector<double> samples;
  samples.reserve(partition.size());
  for (double x : partition.points()) samples.push_back(f(x));
  return total_variation_1d(samples);
}

double hardy_krause(const GridFunction2D& g) {
  if (g.values.rows() < 2 || g.values.cols() < 2) throw DomainError("hardy_krause: grid must be at least 2 x 2");
  double total = 0.0;
  for (Eigen::Index a = 0; a + 1 < g.values.rows(); ++a)
    for (Eigen::Index b = 0; b + 1 < g.values.cols(); ++b)
      total += std::abs(g.values(a + 1, b + 1) - g.values(a + 1, b) - g.values(a, b + 1) + g.values(a, b));
  return total;
}

BivariateFn d_tilde(const SampledFunction& f, int r, int s, DerivativePath path) {
  if (r < 0 || s < 0) throw DomainError("d_tilde: negative order");
  if (r == 0 && s == 0) return f.eval;
  const auto registered = f.trig_derivatives.find({r, s});
  const bool have = registered != f.trig_derivatives.end();
  if (path == DerivativePath::Analytic || (path == DerivativePath::Auto && have)) {
    if (!have) throw CapabilityError(fmt::format("d_tilde: no closed form registered for ({}, {}) on {}", r, s, f.id));
    return registered->second;
  }
  if (r + s > 2)
    throw CapabilityError(fmt::format("d_tilde: order ({}, {}) needs a registered closed form on {}", r, s, f.id));
  const BivariateFn g = f.eval;
  constexpr double h = kTrigDerivativeStep;
  // star(phi, psi) = f(cos phi, cos psi); cosine evenness covers phi +- h past 0 or pi
  auto star = [g](double phi, double psi) { return g(std::cos(phi), std::cos(psi)); };
  return [star, r, s](double x, double y) {
    const double phi = std::acos(std::clamp(x, -1.0, 1.0));
    const double psi = std::acos(std::clamp(y, -1.0, 1.0));
    if (r == 1 && s == 0) return (star(phi + h, psi) - star(phi - h, psi)) / (2.0 * h);
    if (r == 0 && s == 1) return (star(phi, psi + h) - star(phi, psi - h)) / (2.0 * h);
    if (r == 2 && s == 0) return (star(phi + h, psi) - 2.0 * star(phi, psi) + star(phi - h, psi)) / (h * h);
    if (r == 0 && s == 2) return (star(phi, psi + h) - 2.0 * star(phi, psi) + star(phi, psi - h)) / (h * h);
    // r == 1 && s == 1
    return (star(phi + h, psi + h) - star(phi + h, psi - h) - star(phi - h, psi + h) + star(phi - h, psi - h)) /
           (4.0 * h * h);
  };
}

double weight_W(double delta, double x) {
  const double half = 0.5 * delta * std::sqrt(std::max(0.0, 1.0 - x * x));
  const double left = 1.0 - x - half;
  const double right = 1.0 + x - half;
  if (left <= 0.0 || right <= 0.0) return 0.0;
  return std::sqrt(left * right);
}

namespace {

std::vector<double> binomial_signs(int nu) {
  // c_i = binom(nu, i) (-1)^(nu - i)
  std::vector<double> c(nu + 1);
  double b = 1.0;
  for (int i = 0; i <= nu; ++i) {
    c[i] = ((nu - i) % 2 == 0 ? 1.0 : -1.0) * b;
    b = b * (nu - i) / (i + 1);
  }
  return c;
}

constexpr int kMaxOrder = 16;
using Stencil = std::array<double, kMaxOrder + 1>;

// points x + (i - nu/2) delta; false if the stencil leaves J
bool stencil(int nu, double h, double x, Stencil& pts) {
  const double delta = h * std::sqrt(std::max(0.0, 1.0 - x * x));
  if (x - 0.5 * nu * delta < -1.0 || x + 0.5 * nu * delta > 1.0) return false;
  for (int i = 0; i <= nu; ++i) pts[i] = x + (i - 0.5 * nu) * delta;
  return true;
}

double weight_pow(double delta, double x, double alpha) {
  if (alpha == 0.0) return 1.0;
  const double w = weight_W(delta, x);
  if (w <= 0.0) return 0.0;
  return std::pow(w, alpha);
}

}  // namespace

double symmetric_difference(const UnivariateFn& f, int nu, double h, double x) {
  if (nu < 1 || nu > kMaxOrder) throw DomainError(fmt::format("symmetric_difference: order {} not in [1, {}]", nu, kMaxOrder));
  Stencil pts;
  if (!stencil(nu, h, x, pts)) return 0.0;
  const auto c = binomial_signs(nu);
  double sum = 0.0;
  for (int i = 0; i <= nu; ++i) sum += c[i] * f(pts[i]);
  return sum;
}

std::vector<double> modulus_h_grid(const SmoothnessQuery& q) {
  if (q.h_grid_size < 1) throw DomainError("modulus_h_grid: empty grid");
  const double ratio = std::pow(2.0, -8.0 / q.h_grid_size);
  std::vector<double> h(q.h_grid_size);
  double cur = q.t;
  for (int k = 0; k < q.h_grid_size; ++k) {
    h[k] = cur;
    cur *= ratio;
  }
  return h;
}

double modulus_at_step(const BivariateFn& f, const SmoothnessQuery& q, SmoothnessAxis axis, double h, double h2) {
  const int nu = q.nu;
  if (nu < 1 || nu > kMaxOrder) throw DomainError(fmt::format("modulus_at_step: order {} not in [1, {}]", nu, kMaxOrder));
  const double alpha = q.alpha;
  const auto c = binomial_signs(nu);
  BivariateFn integrand;
  AxisMeasure mx = AxisMeasure::Chebyshev;
  AxisMeasure my = AxisMeasure::Chebyshev;
  switch (axis) {
    case SmoothnessAxis::X:
      mx = AxisMeasure::Lebesgue;
      integrand = [&](double x, double y) {
        Stencil px;
        if (!stencil(nu, h, x, px)) return 0.0;
        double d = 0.0;
        for (int i = 0; i <= nu; ++i) d += c[i] * f(px[i], y);
        return weight_pow(nu * h, x, alpha) * d;
      };
      break;
    case SmoothnessAxis::Y:
      my = AxisMeasure::Lebesgue;
      integrand = [&](double x, double y) {
        Stencil py;
        if (!stencil(nu, h, y, py)) return 0.0;
        double d = 0.0;
        for (int j = 0; j <= nu; ++j) d += c[j] * f(x, py[j]);
        return weight_pow(nu * h, y, alpha) * d;
      };
      break;
    case SmoothnessAxis::Mixed:
      mx = AxisMeasure::Lebesgue;
      my = AxisMeasure::Lebesgue;
      integrand = [&](double x, double y) {
        Stencil px, py;
        if (!stencil(nu, h, x, px) || !stencil(nu, h2, y, py)) return 0.0;
        double d = 0.0;
        for (int i = 0; i <= nu; ++i)
          for (int j = 0; j <= nu; ++j) d += c[i] * c[j] * f(px[i], py[j]);
        return weight_pow(nu * h, x, alpha) * weight_pow(nu * h2, y, alpha) * d;
      };
      break;
  }
  FunctionIntegrand g(integrand);
  return lp_norm_trig_grid(g, q.x_grid_size, q.p, mx, my);
}

double modulus_estimate(const BivariateFn& f, const SmoothnessQuery& q, SmoothnessAxis axis) {
  if (q.nu < 1 || q.nu > kMaxOrder) throw DomainError(fmt::format("modulus_estimate: order {} not in [1, {}]", q.nu, kMaxOrder));
  if (!(q.t > 0.0 && q.t <= 1.0)) throw DomainError(fmt::format("modulus_estimate: step cap t = {} not in (0, 1]", q.t));
  if (!(q.p >= 1.0)) throw DomainError("modulus_estimate: p must be >= 1");
  if (q.x_grid_size < 1) throw DomainError("modulus_estimate: empty quadrature grid");
  const auto hs = modulus_h_grid(q);
  const std::size_t pairs = axis == SmoothnessAxis::Mixed ? hs.size() * hs.size() : hs.size();
  std::vector<double> values(pairs);
  parallel_for(pairs, [&](std::size_t k) {
    const double h1 = axis == SmoothnessAxis::Mixed ? hs[k / hs.size()] : hs[k];
    const double h2 = axis == SmoothnessAxis::Mixed ? hs[k % hs.size()] : hs[k];
    values[k] = modulus_at_step(f, q, axis, h1, h2);
  });
  return *std::max_element(values.begin(), values.end());
}

}  // namespace lcinterp
