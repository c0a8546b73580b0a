#include "lcinterp/cheb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "lcinterp/errors.hpp"

namespace lcinterp {

namespace {

void require_in_interval(double x, const char* what) {
  if (!(std::abs(x) <= 1.0)) throw DomainError(fmt::format("{}: x = {} outside [-1, 1]", what, x));
}

}  // namespace

std::vector<double> cgl_points(int n) {
  if (n < 1) throw DomainError(fmt::format("cgl_points: invalid degree {}", n));
  std::vector<double> raw(n + 1);
  for (int k = 0; k <= n; ++k) raw[k] = std::cos(k * std::numbers::pi / n);
  std::vector<double> x(n + 1);
  for (int k = 0; k <= n; ++k) x[k] = 0.5 * (raw[k] - raw[n - k]);
  return x;
}

double cheb_T(int k, double x) {
  require_in_interval(x, "cheb_T");
  if (k < 0) throw DomainError(fmt::format("cheb_T: negative degree {}", k));
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int d = 1; d < k; ++d) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double cheb_That(int k, double x) {
  const double t = cheb_T(k, x);
  return k == 0 ? t : std::numbers::sqrt2 * t;
}

double cheb_That_at_cgl(int k, int i, int m) {
  if (k == 0) return 1.0;
  // cos(k i pi / m) with k*i reduced modulo 2m, then folded onto [0, m].
  long r = (static_cast<long>(k) * i) % (2L * m);
  if (r > m) r = 2L * m - r;
  // Same symmetrization as cgl_points, so That_1 at x_k is sqrt(2) x_k exactly.
  const double c = 0.5 * (std::cos(r * std::numbers::pi / m) - std::cos((m - r) * std::numbers::pi / m));
  return std::numbers::sqrt2 * c;
}

Eigen::MatrixXd cheb_That_table(int max_degree, std::span<const double> xs) {
  Eigen::MatrixXd t(static_cast<Eigen::Index>(xs.size()), max_degree + 1);
  for (Eigen::Index a = 0; a < t.rows(); ++a) {
    const double x = xs[a];
    require_in_interval(x, "cheb_That_table");
    double prev = 1.0;
    double cur = x;
    t(a, 0) = 1.0;
    if (max_degree >= 1) t(a, 1) = std::numbers::sqrt2 * x;
    for (int k = 2; k <= max_degree; ++k) {
      const double next = 2.0 * x * cur - prev;
      prev = cur;
      cur = next;
      t(a, k) = std::numbers::sqrt2 * cur;
    }
  }
  return t;
}

Eigen::MatrixXd cheb_That_table_trig(int max_degree, std::span<const double> angles) {
  Eigen::MatrixXd t(static_cast<Eigen::Index>(angles.size()), max_degree + 1);
  for (Eigen::Index a = 0; a < t.rows(); ++a) {
    t(a, 0) = 1.0;
    for (int k = 1; k <= max_degree; ++k) t(a, k) = std::numbers::sqrt2 * std::cos(k * angles[a]);
  }
  return t;
}

double clenshaw_normalized(std::span<const double> coeffs, double x) {
  const auto n = static_cast<int>(coeffs.size());
  if (n == 0) return 0.0;
  // Plain Clenshaw on a_0 = c_0, a_k = sqrt(2) c_k.
  double b1 = 0.0;
  double b2 = 0.0;
  for (int k = n - 1; k >= 1; --k) {
    const double b0 = std::numbers::sqrt2 * coeffs[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs[0] + x * b1 - b2;
}

ChebSeries1D::ChebSeries1D(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("ChebSeries1D: empty coefficient array");
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw DataError("ChebSeries1D: non-finite coefficient");
}

double ChebSeries1D::operator()(double x) const {
  require_in_interval(x, "ChebSeries1D");
  return clenshaw_normalized(coeffs_, x);
}

ChebSeries2D::ChebSeries2D(std::vector<Exponent> index_set, std::vector<double> coeffs)
    : index_set_(std::move(index_set)), coeffs_(std::move(coeffs)) {
  if (index_set_.size() != coeffs_.size())
    throw DomainError("ChebSeries2D: index set and coefficient array differ in length");
  std::vector<std::size_t> order(index_set_.size());
  for (std::size_t q = 0; q < order.size(); ++q) order[q] = q;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return index_set_[a] < index_set_[b]; });
  std::vector<Exponent> sorted_set;
  std::vector<double> sorted_coeffs;
  sorted_set.reserve(order.size());
  sorted_coeffs.reserve(order.size());
  for (auto q : order) {
    const auto e = index_set_[q];
    if (e.i < 0 || e.j < 0) throw DomainError("ChebSeries2D: negative exponent");
    if (!sorted_set.empty() && sorted_set.back() == e) throw DomainError("ChebSeries2D: duplicate exponent");
    if (!std::isfinite(coeffs_[q])) throw DataError("ChebSeries2D: non-finite coefficient");
    sorted_set.push_back(e);
    sorted_coeffs.push_back(coeffs_[q]);
    max_i_ = std::max(max_i_, e.i);
    max_j_ = std::max(max_j_, e.j);
  }
  index_set_ = std::move(sorted_set);
  coeffs_ = std::move(sorted_coeffs);
  dense_ = Eigen::MatrixXd::Zero(max_i_ + 1, max_j_ + 1);
  row_length_.assign(max_i_ + 1, 0);
  for (std::size_t q = 0; q < index_set_.size(); ++q) {
    const auto [i, j] = index_set_[q];
    dense_(i, j) = coeffs_[q];
    row_length_[i] = std::max(row_length_[i], j + 1);
  }
}

bool ChebSeries2D::contains(Exponent e) const {
  return std::binary_search(index_set_.begin(), index_set_.end(), e);
}

double ChebSeries2D::coeff(Exponent e) const {
  auto it = std::lower_bound(index_set_.begin(), index_set_.end(), e);
  if (it == index_set_.end() || *it != e) return 0.0;
  return coeffs_[static_cast<std::size_t>(it - index_set_.begin())];
}

double eval_series_2d(const ChebSeries2D& s, double x, double y) {
  require_in_interval(x, "eval_series_2d");
  require_in_interval(y, "eval_series_2d");
  if (s.max_i_ < 0) return 0.0;
  std::vector<double> row(s.max_j_ + 1);
  std::vector<double> by_i(s.max_i_ + 1, 0.0);
  for (int i = 0; i <= s.max_i_; ++i) {
    const int len = s.row_length_[i];
    for (int j = 0; j < len; ++j) row[j] = s.dense_(i, j);
    by_i[i] = clenshaw_normalized(std::span<const double>(row.data(), len), y);
  }
  return clenshaw_normalized(by_i, x);
}

Eigen::MatrixXd eval_series_2d_tensor(const ChebSeries2D& s, const Eigen::MatrixXd& x_table,
                                      const Eigen::MatrixXd& y_table) {
  if (s.max_i() < 0) return Eigen::MatrixXd::Zero(x_table.rows(), y_table.rows());
  if (x_table.cols() <= s.max_i() || y_table.cols() <= s.max_j())
    throw DomainError("eval_series_2d_tensor: basis table has too few columns");
  const Eigen::MatrixXd by_x = s.dense() * y_table.leftCols(s.max_j() + 1).transpose();
  return x_table.leftCols(s.max_i() + 1) * by_x;
}

}  // namespace lcinterp
