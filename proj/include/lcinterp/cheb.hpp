#pragma once

#include <compare>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace lcinterp {

/// Chebyshev-Gauss-Lobatto points cos(k*pi/n), k = 0..n, strictly decreasing.
/// Symmetrized so that x[n-k] == -x[k] bit for bit (x[n/2] == 0 for even n).
[[nodiscard]] std::vector<double> cgl_points(int n);

/// Chebyshev polynomial of the first kind C_k(x) by three-term recurrence.
[[nodiscard]] double cheb_T(int k, double x);

/// Normalized Chebyshev polynomial: 1 for k = 0, sqrt(2) C_k(x) otherwise.
[[nodiscard]] double cheb_That(int k, double x);

/// Normalized Chebyshev polynomial at a CGL point, exact reduction of the
/// angle k*i*pi/m modulo 2*pi before the cosine.
[[nodiscard]] double cheb_That_at_cgl(int k, int i, int m);

/// Table T(a, k) = That_k(xs[a]) for k = 0..max_degree.
[[nodiscard]] Eigen::MatrixXd cheb_That_table(int max_degree, std::span<const double> xs);

/// Same table for points given by their angles, xs[a] = cos(angles[a]); uses
/// sqrt(2) cos(k*angle) directly so no arccos round trip is involved.
[[nodiscard]] Eigen::MatrixXd cheb_That_table_trig(int max_degree, std::span<const double> angles);

/// Sum_k c_k That_k(x) over a coefficient array, Clenshaw backward recurrence.
[[nodiscard]] double clenshaw_normalized(std::span<const double> coeffs, double x);

/// Univariate series in the normalized basis.
class ChebSeries1D {
 public:
  explicit ChebSeries1D(std::vector<double> coeffs);

  [[nodiscard]] int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] std::span<const double> coeffs() const { return coeffs_; }
  [[nodiscard]] double operator()(double x) const;

 private:
  std::vector<double> coeffs_;
};

/// Exponent pair (i, j) of the product basis That_i(x) That_j(y).
struct Exponent {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Bivariate series over an explicit exponent set. Exponents are kept sorted
/// and unique; coefficients are aligned with them.
class ChebSeries2D {
 public:
  ChebSeries2D() = default;
  ChebSeries2D(std::vector<Exponent> index_set, std::vector<double> coeffs);

  [[nodiscard]] std::span<const Exponent> index_set() const { return index_set_; }
  [[nodiscard]] std::span<const double> coeffs() const { return coeffs_; }
  [[nodiscard]] std::size_t size() const { return index_set_.size(); }
  [[nodiscard]] bool contains(Exponent e) const;
  /// Coefficient at e; zero if e is not in the index set.
  [[nodiscard]] double coeff(Exponent e) const;
  [[nodiscard]] int max_i() const { return max_i_; }
  [[nodiscard]] int max_j() const { return max_j_; }

  /// Dense (max_i+1) x (max_j+1) coefficient matrix, zero off the index set.
  [[nodiscard]] const Eigen::MatrixXd& dense() const { return dense_; }

 private:
  std::vector<Exponent> index_set_;
  std::vector<double> coeffs_;
  Eigen::MatrixXd dense_;
  std::vector<int> row_length_;
  int max_i_ = -1;
  int max_j_ = -1;

  friend double eval_series_2d(const ChebSeries2D& s, double x, double y);
};

/// Sum c_ij That_i(x) That_j(y); Clenshaw along y per row, then along x.
[[nodiscard]] double eval_series_2d(const ChebSeries2D& s, double x, double y);

/// Values of s on the tensor grid xs x ys: result(a, b) = s(xs[a], ys[b]).
[[nodiscard]] Eigen::MatrixXd eval_series_2d_tensor(const ChebSeries2D& s, const Eigen::MatrixXd& x_table,
                                                    const Eigen::MatrixXd& y_table);

}  // namespace lcinterp
