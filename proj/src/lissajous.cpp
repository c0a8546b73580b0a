#include "lcinterp/lissajous.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "lcinterp/errors.hpp"

namespace lcinterp {

DegreePair make_degree_pair(int m, int n) {
  if (m < 1 || n < 1) throw DomainError(fmt::format("degree pair ({}, {}) must be positive", m, n));
  if (std::gcd(m, n) != 1) throw CoprimalityError(fmt::format("degree pair ({}, {}) is not coprime", m, n));
  return DegreePair(m, n);
}

std::string_view to_string(NodeClass c) {
  switch (c) {
    case NodeClass::Vertex: return "vertex";
    case NodeClass::Edge: return "edge";
    case NodeClass::Interior: return "interior";
  }
  return "?";
}

NodeClass classify(int i, int j, DegreePair d) {
  const bool on_x = (i == 0 || i == d.m());
  const bool on_y = (j == 0 || j == d.n());
  if (on_x && on_y) return NodeClass::Vertex;
  if (on_x || on_y) return NodeClass::Edge;
  return NodeClass::Interior;
}

double node_weight(NodeClass c, DegreePair d) {
  const double mn = static_cast<double>(d.m()) * d.n();
  switch (c) {
    case NodeClass::Vertex: return 1.0 / (2.0 * mn);
    case NodeClass::Edge: return 1.0 / mn;
    case NodeClass::Interior: return 2.0 / mn;
  }
  return 0.0;
}

NodeSet::NodeSet(DegreePair degrees, std::vector<Node> nodes)
    : degrees_(degrees), nodes_(std::move(nodes)), position_((degrees.m() + 1) * (degrees.n() + 1), -1) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const Node& a, const Node& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
  for (std::size_t q = 0; q < nodes_.size(); ++q) {
    const auto& nd = nodes_[q];
    if (nd.i < 0 || nd.i > degrees_.m() || nd.j < 0 || nd.j > degrees_.n() || (nd.i + nd.j) % 2 != 0)
      throw DomainError(fmt::format("node index ({}, {}) not in I_{{{},{}}}", nd.i, nd.j, degrees_.m(), degrees_.n()));
    auto& slot = position_[nd.i * (degrees_.n() + 1) + nd.j];
    if (slot >= 0) throw ConsistencyError(fmt::format("duplicate node ({}, {})", nd.i, nd.j));
    slot = static_cast<int>(q);
  }
}

std::optional<std::size_t> NodeSet::find(int i, int j) const {
  if (i < 0 || i > degrees_.m() || j < 0 || j > degrees_.n()) return std::nullopt;
  const int q = position_[i * (degrees_.n() + 1) + j];
  if (q < 0) return std::nullopt;
  return static_cast<std::size_t>(q);
}

SpectralIndexSet::SpectralIndexSet(DegreePair degrees) : degrees_(degrees) {
  const long m = degrees.m();
  const long n = degrees.n();
  for (int i = 0; i < m; ++i) {
    // i/m + j/n < 1  <=>  i n + j m < m n
    for (int j = 0; i * n + j * m < m * n; ++j) exponents_.push_back({i, j});
  }
  exponents_.push_back({0, static_cast<int>(n)});
  std::sort(exponents_.begin(), exponents_.end());
}

bool SpectralIndexSet::contains(Exponent e) const {
  return std::binary_search(exponents_.begin(), exponents_.end(), e);
}

int SpectralIndexSet::strict_row_length(int i) const {
  const long m = degrees_.m();
  const long n = degrees_.n();
  if (i < 0 || i >= m) return 0;
  // largest j with j m < m n - i n, plus one
  const long rhs = m * n - i * n;
  return static_cast<int>((rhs - 1) / m + 1);
}

NodeSet node_set_from_grid(DegreePair d) {
  const auto xs = cgl_points(d.m());
  const auto ys = cgl_points(d.n());
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>((d.m() + 1) * (d.n() + 1) / 2));
  for (int i = 0; i <= d.m(); ++i) {
    for (int j = i % 2; j <= d.n(); j += 2) {
      const auto cls = classify(i, j, d);
      nodes.push_back({i, j, xs[i], ys[j], cls, node_weight(cls, d)});
    }
  }
  return NodeSet(d, std::move(nodes));
}

NodeSet node_set_from_curve(DegreePair d, double tol) {
  if (!(tol > 0.0)) throw DomainError("node_set_from_curve: tolerance must be positive");
  const long m = d.m();
  const long n = d.n();
  const auto xs = cgl_points(d.m());
  const auto ys = cgl_points(d.n());
  auto fold = [](long k, long period) {
    long r = k % (2 * period);
    return r > period ? 2 * period - r : r;
  };
  std::set<std::pair<int, int>> seen;
  std::vector<Node> nodes;
  for (long k = 0; k <= m * n; ++k) {
    const double t = std::numbers::pi * static_cast<double>(k) / static_cast<double>(m * n);
    const double px = std::cos(n * t);
    const double py = std::cos(m * t);
    // cos(n t) = cos(k pi / m), cos(m t) = cos(k pi / n)
    const int i = static_cast<int>(fold(k, m));
    const int j = static_cast<int>(fold(k, n));
    if (std::abs(px - xs[i]) > tol || std::abs(py - ys[j]) > tol)
      throw ConsistencyError(fmt::format("curve sample k={} deviates from grid node ({}, {})", k, i, j));
    if (!seen.emplace(i, j).second) continue;
    const auto cls = classify(i, j, d);
    nodes.push_back({i, j, px, py, cls, node_weight(cls, d)});
  }
  const auto expected = static_cast<std::size_t>((m + 1) * (n + 1) / 2);
  if (nodes.size() != expected)
    throw ConsistencyError(
        fmt::format("curve sampling produced {} distinct points, expected {}", nodes.size(), expected));
  return NodeSet(d, std::move(nodes));
}

SpectralIndexSet spectral_set(DegreePair d) { return SpectralIndexSet(d); }

double max_node_deviation(const NodeSet& a, const NodeSet& b) {
  if (a.size() != b.size() || !(a.degrees() == b.degrees()))
    throw ConsistencyError("node sets differ in size or degrees");
  double dev = 0.0;
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (a[q].i != b[q].i || a[q].j != b[q].j) throw ConsistencyError("node sets differ in index content");
    dev = std::max({dev, std::abs(a[q].x - b[q].x), std::abs(a[q].y - b[q].y)});
  }
  return dev;
}

}  // namespace lcinterp
