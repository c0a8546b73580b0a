#pragma once

#include <span>
#include <vector>

#include "lcinterp/measure.hpp"
#include "lcinterp/sampled_function.hpp"

namespace lcinterp {

/// K_n(phi) = 1/2 + sum_{k=1}^{2n} cos k phi + sum_{k=2n+1}^{4n-1} (4n-k)/(2n) cos k phi.
[[nodiscard]] double vdv_kernel(int n, double phi);

/// Taper factor of mode k in K_n (1 up to 2n, linear to 0 at 4n).
[[nodiscard]] double vdv_taper(int n, int k);

/// Sample parameters t_k = pi k/(3n), k = 0..6n-1.
[[nodiscard]] std::vector<double> vdv_sample_params(int n);

/// (1/(3n)) sum_k samples[k] K_n(phi - t_k), by direct kernel sums.
[[nodiscard]] double vdv_apply_1d(std::span<const double> samples, int n, double phi);

/// The same mean held as its trigonometric coefficients, O(n) per evaluation.
class VdvOperator1D {
 public:
  VdvOperator1D(int n, std::span<const double> samples);
  VdvOperator1D(int n, const UnivariateFn& f);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::span<const double> sample_params() const { return params_; }
  /// cos_coeffs()[k], sin_coeffs()[k]: coefficients of cos k phi, sin k phi.
  [[nodiscard]] std::span<const double> cos_coeffs() const { return cos_; }
  [[nodiscard]] std::span<const double> sin_coeffs() const { return sin_; }
  [[nodiscard]] double operator()(double phi) const;

 private:
  int n_;
  std::vector<double> params_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

/// Tensor mean on the 6m x 6n grid (pi k/(3m), pi l/(3n)), applied as a
/// psi pass followed by a phi pass.
class VdvOperator2D {
 public:
  VdvOperator2D(int m, int n, const BivariateFn& f_star);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t grid_size() const { return rows_.size() * static_cast<std::size_t>(6 * n_); }
  [[nodiscard]] double operator()(double phi, double psi) const;

 private:
  int m_;
  int n_;
  std::vector<VdvOperator1D> rows_;  // one psi operator per phi_k
};

[[nodiscard]] double vdv_apply_2d(const BivariateFn& f_star, int m, int n, double phi, double psi);

/// Highest Fourier mode of V_n f with magnitude above rel_threshold times the
/// largest one, read off a 16n-point uniform sampling.
[[nodiscard]] int vdv_spectral_degree_check(std::span<const double> samples, int n, double rel_threshold = 1e-9);

struct Lemma56Report {
  int n = 0;
  int degree = 0;               // measured degree of V_n f for random samples
  double interpolation_residual = 0.0;
  double reproduction_error = 0.0;
  double tolerance = 1e-9;
  [[nodiscard]] bool degree_ok() const { return degree <= 4 * n - 1; }
  [[nodiscard]] bool interpolation_ok() const { return interpolation_residual <= tolerance; }
  [[nodiscard]] bool reproduction_ok() const { return reproduction_error <= tolerance; }
  [[nodiscard]] bool passed() const { return degree_ok() && interpolation_ok() && reproduction_ok(); }
};

/// Degree bound, interpolation at t_k and reproduction of a random T of order 2n.
[[nodiscard]] Lemma56Report check_lemma56(int n, std::uint64_t seed = 1, double tolerance = 1e-9);

/// ||f - V_n f||_{L_p(T)}.
[[nodiscard]] double vdv_lp_error(const UnivariateFn& f, int n, const NormSpec& spec);

/// max(2^14, 512 n) points rounded up to a power of two, one halving, tolerance 1e-4.
[[nodiscard]] NormSpec vdv_norm_spec(int n, double p);

}  // namespace lcinterp
