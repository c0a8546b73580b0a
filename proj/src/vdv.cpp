#include "lcinterp/vdv.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "lcinterp/errors.hpp"

namespace lcinterp {

namespace {

void require_order(int n, const char* what) {
  if (n < 1) throw DomainError(fmt::format("{}: order n = {} must be positive", what, n));
}

// cos(pi r/(3n)) and sin(pi r/(3n)) with r reduced modulo 6n
double cos_param(long r, int n) { return std::cos(std::numbers::pi * static_cast<double>(r % (6L * n)) / (3.0 * n)); }
double sin_param(long r, int n) { return std::sin(std::numbers::pi * static_cast<double>(r % (6L * n)) / (3.0 * n)); }

// sum_k a_k cos k phi + b_k sin k phi by the Clenshaw recurrence.
double trig_clenshaw(std::span<const double> a, std::span<const double> b, double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  double u1 = 0.0, u2 = 0.0, v1 = 0.0, v2 = 0.0;
  for (auto k = static_cast<std::ptrdiff_t>(a.size()) - 1; k >= 1; --k) {
    const double u0 = a[k] + 2.0 * c * u1 - u2;
    const double v0 = b[k] + 2.0 * c * v1 - v2;
    u2 = u1;
    u1 = u0;
    v2 = v1;
    v1 = v0;
  }
  return a[0] + u1 * c - u2 + v1 * s;
}

}  // namespace

double vdv_taper(int n, int k) {
  if (k <= 2 * n) return 1.0;
  if (k < 4 * n) return static_cast<double>(4 * n - k) / (2.0 * n);
  return 0.0;
}

double vdv_kernel(int n, double phi) {
  require_order(n, "vdv_kernel");
  double sum = 0.5;
  for (int k = 1; k <= 2 * n; ++k) sum += std::cos(k * phi);
  for (int k = 2 * n + 1; k <= 4 * n - 1; ++k) sum += (4.0 * n - k) / (2.0 * n) * std::cos(k * phi);
  return sum;
}

std::vector<double> vdv_sample_params(int n) {
  require_order(n, "vdv_sample_params");
  std::vector<double> t(6 * n);
  for (int k = 0; k < 6 * n; ++k) t[k] = std::numbers::pi * k / (3.0 * n);
  return t;
}

double vdv_apply_1d(std::span<const double> samples, int n, double phi) {
  require_order(n, "vdv_apply_1d");
  if (samples.size() != static_cast<std::size_t>(6 * n))
    throw DomainError(fmt::format("vdv_apply_1d: expected {} samples, got {}", 6 * n, samples.size()));
  const auto t = vdv_sample_params(n);
  double sum = 0.0;
  for (int k = 0; k < 6 * n; ++k) sum += samples[k] * vdv_kernel(n, phi - t[k]);
  return sum / (3.0 * n);
}

VdvOperator1D::VdvOperator1D(int n, std::span<const double> samples) : n_(n), params_(vdv_sample_params(n)) {
  if (samples.size() != static_cast<std::size_t>(6 * n))
    throw DomainError(fmt::format("VdvOperator1D: expected {} samples, got {}", 6 * n, samples.size()));
  for (double v : samples)
    if (!std::isfinite(v)) throw DataError("VdvOperator1D: non-finite sample");
  const int modes = 4 * n;
  cos_.assign(modes, 0.0);
  sin_.assign(modes, 0.0);
  const double scale = 1.0 / (3.0 * n);
  double mean = 0.0;
  for (double v : samples) mean += v;
  cos_[0] = 0.5 * scale * mean;
  for (int k = 1; k < modes; ++k) {
    double a = 0.0, b = 0.0;
    for (int s = 0; s < 6 * n; ++s) {
      const long r = static_cast<long>(k) * s;
      a += samples[s] * cos_param(r, n);
      b += samples[s] * sin_param(r, n);
    }
    const double w = vdv_taper(n, k) * scale;
    cos_[k] = w * a;
    sin_[k] = w * b;
  }
}

namespace {
std::vector<double> sample_torus(int n, const UnivariateFn& f) {
  const auto t = vdv_sample_params(n);
  std::vector<double> v(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) v[k] = f(t[k]);
  return v;
}
}  // namespace

VdvOperator1D::VdvOperator1D(int n, const UnivariateFn& f) : VdvOperator1D(n, sample_torus(n, f)) {}

double VdvOperator1D::operator()(double phi) const { return trig_clenshaw(cos_, sin_, phi); }

VdvOperator2D::VdvOperator2D(int m, int n, const BivariateFn& f_star) : m_(m), n_(n) {
  require_order(m, "VdvOperator2D");
  require_order(n, "VdvOperator2D");
  const auto phis = vdv_sample_params(m);
  const auto psis = vdv_sample_params(n);
  rows_.reserve(phis.size());
  std::vector<double> row(psis.size());
  for (double phi : phis) {
    for (std::size_t l = 0; l < psis.size(); ++l) row[l] = f_star(phi, psis[l]);
    rows_.emplace_back(n, row);
  }
}

double VdvOperator2D::operator()(double phi, double psi) const {
  std::vector<double> inner(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) inner[k] = rows_[k](psi);
  return VdvOperator1D(m_, inner)(phi);
}

double vdv_apply_2d(const BivariateFn& f_star, int m, int n, double phi, double psi) {
  require_order(m, "vdv_apply_2d");
  require_order(n, "vdv_apply_2d");
  const auto phis = vdv_sample_params(m);
  const auto psis = vdv_sample_params(n);
  std::vector<double> kernel_psi(psis.size());
  for (std::size_t l = 0; l < psis.size(); ++l) kernel_psi[l] = vdv_kernel(n, psi - psis[l]);
  double total = 0.0;
  for (double phi_k : phis) {
    double inner = 0.0;
    for (std::size_t l = 0; l < psis.size(); ++l) inner += f_star(phi_k, psis[l]) * kernel_psi[l];
    total += inner / (3.0 * n) * vdv_kernel(m, phi - phi_k);
  }
  return total / (3.0 * m);
}

int vdv_spectral_degree_check(std::span<const double> samples, int n, double rel_threshold) {
  const VdvOperator1D op(n, samples);
  const int points = 16 * n;
  std::vector<double> values(points);
  for (int a = 0; a < points; ++a) values[a] = op(2.0 * std::numbers::pi * a / points);
  // plain DFT; modes up to 8n are alias-free on 16n points
  std::vector<double> magnitude(points / 2 + 1);
  for (int k = 0; k <= points / 2; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (int a = 0; a < points; ++a) {
      const long r = (static_cast<long>(k) * a) % points;
      const double ang = -2.0 * std::numbers::pi * static_cast<double>(r) / points;
      acc += values[a] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    magnitude[k] = std::abs(acc) / points;
  }
  double largest = 0.0;
  for (double v : magnitude) largest = std::max(largest, v);
  if (largest == 0.0) return 0;
  int degree = 0;
  for (int k = 0; k <= points / 2; ++k)
    if (magnitude[k] > rel_threshold * largest) degree = k;
  return degree;
}

Lemma56Report check_lemma56(int n, std::uint64_t seed, double tolerance) {
  require_order(n, "check_lemma56");
  std::mt19937_64 rng(seed);
  Lemma56Report report;
  report.n = n;
  report.tolerance = tolerance;

  std::vector<double> samples(6 * n);
  for (auto& v : samples) v = uniform_pm1(rng);
  report.degree = vdv_spectral_degree_check(samples, n);

  const VdvOperator1D op(n, samples);
  const auto t = vdv_sample_params(n);
  for (int k = 0; k < 6 * n; ++k)
    report.interpolation_residual = std::max(report.interpolation_residual, std::abs(op(t[k]) - samples[k]));

  // random T of order 2n, including the top modes cos 2n phi and sin 2n phi
  std::vector<double> a(2 * n + 1), b(2 * n + 1);
  for (int k = 0; k <= 2 * n; ++k) {
    a[k] = uniform_pm1(rng);
    b[k] = k == 0 ? 0.0 : uniform_pm1(rng);
  }
  auto trig = [&](double phi) {
    double s = a[0];
    for (int k = 1; k <= 2 * n; ++k) s += a[k] * std::cos(k * phi) + b[k] * std::sin(k * phi);
    return s;
  };
  const VdvOperator1D repro(n, UnivariateFn(trig));
  for (int q = 0; q <= 100; ++q) {
    const double phi = 2.0 * std::numbers::pi * q / 101.0 + 0.1;
    report.reproduction_error = std::max(report.reproduction_error, std::abs(repro(phi) - trig(phi)));
  }
  return report;
}

NormSpec vdv_norm_spec(int n, double p) {
  NormSpec s;
  s.p = p;
  s.quadrature_points_per_axis = 1 << 14;
  while (s.quadrature_points_per_axis < 512 * n) s.quadrature_points_per_axis *= 2;
  s.refinement_tolerance = 1e-4;
  return s;
}

double vdv_lp_error(const UnivariateFn& f, int n, const NormSpec& spec) {
  const VdvOperator1D op(n, f);
  return lp_norm_torus([&](double phi) { return f(phi) - op(phi); }, spec);
}

}  // namespace lcinterp
