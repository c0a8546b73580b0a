#include "lcinterp/testbed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>

#include <fmt/format.h>

#include "lcinterp/errors.hpp"
#include "lcinterp/variation.hpp"

namespace lcinterp {

std::string to_string(Regularity r) {
  switch (r) {
    case Regularity::MemberOfSpace: return "MemberOfSpace";
    case Regularity::Analytic: return "Analytic";
    case Regularity::SmoothBV: return "SmoothBV";
    case Regularity::HBVOnly: return "HBVOnly";
  }
  return "?";
}

namespace {

constexpr double kStepX = 0.37;
constexpr double kStepY = -0.21;
constexpr double kKinkX = 0.3;
constexpr double kKinkY = -0.4;
constexpr double kTorusLo = 1.0;
constexpr double kTorusHi = 2.5;

double phi_weight(double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)); }

SampledFunction polynomial(std::string id, std::vector<Exponent> exps, std::vector<double> coeffs) {
  SampledFunction f;
  f.id = std::move(id);
  f.regularity = Regularity::MemberOfSpace;
  f.series = ChebSeries2D(std::move(exps), std::move(coeffs));
  f.eval = [s = *f.series](double x, double y) { return eval_series_2d(s, x, y); };
  return f;
}

std::vector<SampledFunction> build_corpus() {
  std::vector<SampledFunction> out;

  auto one = polynomial("const_one", {{0, 0}}, {1.0});
  one.eval = [](double, double) { return 1.0; };
  one.analytic_facts = {{"H_{J2}", 0.0}, {"V_{1,J}", 0.0}, {"V_{2,J}", 0.0}};
  out.push_back(std::move(one));

  auto px = polynomial("poly_x", {{1, 0}}, {1.0 / std::numbers::sqrt2});
  px.eval = [](double x, double) { return x; };
  px.trig_derivatives[{1, 0}] = [](double x, double) { return -phi_weight(x); };
  px.trig_derivatives[{0, 1}] = [](double, double) { return 0.0; };
  px.analytic_facts = {{"V_{1,J}", 2.0}, {"H_{J2}", 0.0}};
  out.push_back(std::move(px));

  out.push_back(polynomial("poly_c11", {{1, 1}}, {1.0}));
  out.push_back(polynomial("poly_c21", {{2, 1}, {0, 0}, {1, 0}}, {1.0, 0.25, -0.5}));

  SampledFunction an;
  an.id = "analytic_cos";
  an.regularity = Regularity::Analytic;
  an.eval = [](double x, double y) { return std::cos(3.0 * x + 2.0 * y); };
  // d/dphi cos(3 cos phi + 2 cos psi) = 3 sin phi sin(3x + 2y)
  an.trig_derivatives[{1, 0}] = [](double x, double y) { return 3.0 * phi_weight(x) * std::sin(3.0 * x + 2.0 * y); };
  an.trig_derivatives[{0, 1}] = [](double x, double y) { return 2.0 * phi_weight(y) * std::sin(3.0 * x + 2.0 * y); };
  an.trig_derivatives[{1, 1}] = [](double x, double y) {
    return -6.0 * phi_weight(x) * phi_weight(y) * std::cos(3.0 * x + 2.0 * y);
  };
  out.push_back(std::move(an));

  SampledFunction step;
  step.id = "hbv_step";
  step.regularity = Regularity::HBVOnly;
  step.eval = [](double x, double y) { return (x >= kStepX && y >= kStepY) ? 1.0 : 0.0; };
  step.breakpoints_x = {kStepX};
  step.breakpoints_y = {kStepY};
  step.analytic_facts = {{"H_{J2}", 1.0}, {"V_{1,J}", 1.0}, {"V_{2,J}", 1.0}};
  out.push_back(std::move(step));

  SampledFunction kink;
  kink.id = "kink";
  kink.regularity = Regularity::SmoothBV;
  kink.smooth_order = {1, 1};
  kink.eval = [](double x, double y) {
    return 0.5 * (x - kKinkX) * std::abs(x - kKinkX) + 0.5 * (y - kKinkY) * std::abs(y - kKinkY);
  };
  kink.breakpoints_x = {kKinkX};
  kink.breakpoints_y = {kKinkY};
  kink.trig_derivatives[{1, 0}] = [](double x, double) { return -phi_weight(x) * std::abs(x - kKinkX); };
  kink.trig_derivatives[{0, 1}] = [](double, double y) { return -phi_weight(y) * std::abs(y - kKinkY); };
  kink.trig_derivatives[{1, 1}] = [](double, double) { return 0.0; };
  // f_x = |x - 0.3| and f_y = |y + 0.4| vary by 2; the D~ values are twice the
  // depth of the two dips of -sqrt(1 - x^2)|x - c| (tests/oracles/corpus_facts.py).
  kink.analytic_facts = {{"V_{1,J}(f_x)", 2.0},
                         {"V_{2,J}(f_y)", 2.0},
                         {"V_{1,J}(D10)", 2.045518112014372},
                         {"V_{2,J}(D01)", 2.0816689058313673},
                         {"H_{J2}(D11)", 0.0}};
  out.push_back(std::move(kink));

  SampledFunction torus;
  torus.id = "torus_step";
  torus.regularity = Regularity::HBVOnly;
  torus.torus = [](double phi) {
    const double t = phi - 2.0 * std::numbers::pi * std::floor(phi / (2.0 * std::numbers::pi));
    return (t >= kTorusLo && t < kTorusHi) ? 1.0 : 0.0;
  };
  torus.torus_breakpoints = {kTorusLo, kTorusHi};
  torus.eval = [g = torus.torus](double x, double) { return g(std::acos(std::clamp(x, -1.0, 1.0))); };
  torus.breakpoints_x = {std::cos(kTorusHi), std::cos(kTorusLo)};
  torus.analytic_facts = {{"V_T", 2.0}};
  out.push_back(std::move(torus));

  return out;
}

std::vector<double> straddle(std::span<const double> breakpoints) {
  std::vector<double> pts;
  for (double b : breakpoints) {
    pts.push_back(b);
    pts.push_back(std::nextafter(b, -2.0));
  }
  return pts;
}

// central difference, one-sided at the ends of J
double partial(const BivariateFn& f, double x, double y, bool in_x) {
  constexpr double h = 1e-7;
  const double t = in_x ? x : y;
  const double lo = std::max(-1.0, t - h);
  const double hi = std::min(1.0, t + h);
  return in_x ? (f(hi, y) - f(lo, y)) / (hi - lo) : (f(x, hi) - f(x, lo)) / (hi - lo);
}

double sup_variation(const BivariateFn& g, const Partition1D& along, const Partition1D& across, bool along_x) {
  double best = 0.0;
  for (double c : across.points()) {
    const auto v = total_variation_1d(
        [&](double t) { return along_x ? g(t, c) : g(c, t); }, along);
    best = std::max(best, v);
  }
  return best;
}

}  // namespace

const std::vector<SampledFunction>& corpus() {
  static const std::vector<SampledFunction> registry = build_corpus();
  return registry;
}

const SampledFunction& corpus_function(std::string_view id) {
  for (const auto& f : corpus())
    if (f.id == id) return f;
  throw DomainError(fmt::format("unknown corpus function '{}'", id));
}

double recompute_fact(const SampledFunction& f, const std::string& name, int grid_points) {
  if (name == "V_T") {
    if (!f.torus) throw CapabilityError(fmt::format("{} is not a torus function", f.id));
    std::vector<double> pts;
    for (int k = 0; k < grid_points; ++k) pts.push_back(2.0 * std::numbers::pi * k / (grid_points - 1));
    for (double b : f.torus_breakpoints) pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<double> samples;
    for (double t : pts) samples.push_back(f.torus(t));
    return total_variation_1d(samples);
  }
  const auto xs = dense_partition(grid_points, straddle(f.breakpoints_x));
  const auto ys = dense_partition(grid_points, straddle(f.breakpoints_y));
  // a coarser set of cross sections keeps sup-variations cheap
  const auto xs_cut = dense_partition(65, straddle(f.breakpoints_x));
  const auto ys_cut = dense_partition(65, straddle(f.breakpoints_y));
  if (name == "H_{J2}") return hardy_krause(sample_grid(f.eval, xs, ys));
  if (name == "V_{1,J}") return sup_variation(f.eval, xs, ys_cut, true);
  if (name == "V_{2,J}") return sup_variation(f.eval, ys, xs_cut, false);
  if (name == "V_{1,J}(f_x)")
    return sup_variation([&](double x, double y) { return partial(f.eval, x, y, true); }, xs, ys_cut, true);
  if (name == "V_{2,J}(f_y)")
    return sup_variation([&](double x, double y) { return partial(f.eval, x, y, false); }, ys, xs_cut, false);
  if (name == "V_{1,J}(D10)") return sup_variation(d_tilde(f, 1, 0), xs, ys_cut, true);
  if (name == "V_{2,J}(D01)") return sup_variation(d_tilde(f, 0, 1), ys, xs_cut, false);
  if (name == "H_{J2}(D11)") return hardy_krause(sample_grid(d_tilde(f, 1, 1), xs, ys));
  throw DomainError(fmt::format("unknown fact '{}'", name));
}

bool is_smooth(const SampledFunction& f) {
  return f.regularity == Regularity::MemberOfSpace || f.regularity == Regularity::Analytic;
}

NormSpec with_breaks(NormSpec spec, const SampledFunction& f, bool torus) {
  if (torus) {
    spec.phi_breaks = f.torus_breakpoints;
    spec.psi_breaks.clear();
    return spec;
  }
  spec.phi_breaks.clear();
  spec.psi_breaks.clear();
  for (double b : f.breakpoints_x) spec.phi_breaks.push_back(std::acos(b));
  for (double b : f.breakpoints_y) spec.psi_breaks.push_back(std::acos(b));
  return spec;
}

double breakpoint_clearance(const SampledFunction& f, int max_degree) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> bps = f.breakpoints_x;
  bps.insert(bps.end(), f.breakpoints_y.begin(), f.breakpoints_y.end());
  for (double b : bps)
    for (int m = 1; m <= max_degree; ++m)
      for (int k = 0; k <= m; ++k) best = std::min(best, std::abs(std::cos(k * std::numbers::pi / m) - b));
  return best;
}

}  // namespace lcinterp
