#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lcinterp/cheb.hpp"

namespace lcinterp {

/// Coprime degree pair (m, n) indexing a Lissajous-Chebyshev node set.
class DegreePair {
 public:
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int n() const { return n_; }
  friend bool operator==(const DegreePair&, const DegreePair&) = default;

 private:
  DegreePair(int m, int n) : m_(m), n_(n) {}
  int m_;
  int n_;
  friend DegreePair make_degree_pair(int m, int n);
};

/// Validates m, n >= 1 (DomainError) and gcd(m, n) == 1 (CoprimalityError).
[[nodiscard]] DegreePair make_degree_pair(int m, int n);

enum class NodeClass { Vertex, Edge, Interior };

[[nodiscard]] std::string_view to_string(NodeClass c);

struct Node {
  int i = 0;
  int j = 0;
  double x = 0.0;
  double y = 0.0;
  NodeClass cls = NodeClass::Interior;
  double weight = 0.0;
};

/// The node set LC_{m,n}: grid points (x_i, y_j) with i + j even, ordered
/// lexicographically by (i, j), with boundary class and quadrature weight.
class NodeSet {
 public:
  NodeSet(DegreePair degrees, std::vector<Node> nodes);

  [[nodiscard]] DegreePair degrees() const { return degrees_; }
  [[nodiscard]] std::span<const Node> nodes() const { return nodes_; }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] const Node& operator[](std::size_t q) const { return nodes_[q]; }
  /// Position of grid index (i, j) in nodes(), if present.
  [[nodiscard]] std::optional<std::size_t> find(int i, int j) const;

 private:
  DegreePair degrees_;
  std::vector<Node> nodes_;
  std::vector<int> position_;
};

/// Exponent set {(i, j) : i/m + j/n < 1} plus (0, n), sorted.
class SpectralIndexSet {
 public:
  explicit SpectralIndexSet(DegreePair degrees);

  [[nodiscard]] DegreePair degrees() const { return degrees_; }
  [[nodiscard]] std::span<const Exponent> exponents() const { return exponents_; }
  [[nodiscard]] std::size_t size() const { return exponents_.size(); }
  [[nodiscard]] bool contains(Exponent e) const;
  /// Number of j with i/m + j/n < 1 for row i (the (0, n) extra is not counted).
  [[nodiscard]] int strict_row_length(int i) const;

 private:
  DegreePair degrees_;
  std::vector<Exponent> exponents_;
};

[[nodiscard]] NodeClass classify(int i, int j, DegreePair d);
[[nodiscard]] double node_weight(NodeClass c, DegreePair d);

/// Canonical constructor from the parity-constrained Chebyshev grid.
[[nodiscard]] NodeSet node_set_from_grid(DegreePair d);

/// Samples the curve (cos(n t), cos(m t)) at t = pi k/(mn), k = 0..mn. Node
/// identity is decided by integer reduction of k modulo 2m and 2n; each
/// sampled point must also lie within tol of its grid node. Throws
/// ConsistencyError if either check or the cardinality fails.
[[nodiscard]] NodeSet node_set_from_curve(DegreePair d, double tol = 1e-12);

[[nodiscard]] SpectralIndexSet spectral_set(DegreePair d);

/// Max coordinate deviation between two node sets with equal index content;
/// throws ConsistencyError if the index sets differ.
[[nodiscard]] double max_node_deviation(const NodeSet& a, const NodeSet& b);

}  // namespace lcinterp
