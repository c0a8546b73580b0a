#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcinterp/cheb.hpp"

namespace lcinterp {

using BivariateFn = std::function<double(double, double)>;
using UnivariateFn = std::function<double(double)>;

enum class Regularity { MemberOfSpace, Analytic, SmoothBV, HBVOnly };

[[nodiscard]] std::string to_string(Regularity r);

/// A real function on J^2 with the regularity metadata the experiments need.
struct SampledFunction {
  std::string id;
  BivariateFn eval;
  Regularity regularity = Regularity::Analytic;
  /// (r, s) of SmoothBV: the trig-domain derivative of that order is HBV.
  std::pair<int, int> smooth_order{0, 0};
  std::vector<double> breakpoints_x;
  std::vector<double> breakpoints_y;
  /// Registered closed-form quantities, e.g. "H_{J2}" -> 1.
  std::map<std::string, double> analytic_facts;
  /// Closed forms of the trig-domain derivatives D~^{(r,s)} f, pulled back to J^2.
  std::map<std::pair<int, int>, BivariateFn> trig_derivatives;
  /// Set for polynomial members: the exact expansion in the normalized basis.
  std::optional<ChebSeries2D> series;
  /// Set for 2*pi-periodic univariate functions on the torus; eval is then
  /// the pullback (x, y) -> torus(arccos x).
  UnivariateFn torus;
  std::vector<double> torus_breakpoints;

  double operator()(double x, double y) const { return eval(x, y); }
};

}  // namespace lcinterp
