#include "lcinterp/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "lcinterp/errors.hpp"
#include "lcinterp/interp.hpp"
#include "lcinterp/measure.hpp"
#include "lcinterp/parallel.hpp"
#include "lcinterp/testbed.hpp"
#include "lcinterp/variation.hpp"
#include "lcinterp/vdv.hpp"

namespace lcinterp {

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

int parse_int(std::string_view text, std::string_view what) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw DomainError(fmt::format("cannot parse {} '{}'", what, text));
  return v;
}

std::string join_doubles(const std::vector<double>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + fmt::format("{}", v[k]);
  return out;
}

void finish(ExperimentResult& r, const ExperimentConfig& cfg) {
  r.csv += fmt::format("# lcinterp {} | {}\n", LCINTERP_VERSION, canonical_config(cfg));
}

void check(ExperimentResult& r, bool ok, std::string what) {
  if (!ok) {
    r.checks_passed = false;
    r.log.push_back("check failed: " + std::move(what));
  }
}

void validate_ps(const std::vector<double>& ps) {
  if (ps.empty()) throw DomainError("no p values given");
  for (double p : ps)
    if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError(fmt::format("p = {} not in [1, inf)", p));
}

std::vector<std::string> functions_or(const ExperimentConfig& cfg, std::vector<std::string> fallback) {
  auto ids = cfg.functions.empty() ? std::move(fallback) : cfg.functions;
  for (const auto& id : ids) (void)corpus_function(id);
  return ids;
}

NormSpec error_spec(const SampledFunction& f, DegreePair d, double p, int points) {
  auto s = interpolation_error_spec(d, p, !is_smooth(f));
  if (points > 0) s.quadrature_points_per_axis = points;
  return with_breaks(s, f);
}

std::vector<int> vdv_degrees(const ExperimentConfig& cfg, std::vector<int> fallback) {
  auto ns = cfg.vdv_ns.empty() ? std::move(fallback) : cfg.vdv_ns;
  for (int n : ns)
    if (n < 1) throw DomainError(fmt::format("vdv degree n = {} must be positive", n));
  return ns;
}

void emit_rate(ExperimentResult& r, const ExperimentConfig& cfg, const std::string& label,
               std::vector<RateRecord> records) {
  double slope = std::nan("");
  if (records.size() >= 3) {
    const auto report = fit_rate_tail(label, records, 5);
    slope = report.fitted_slope;
  } else {
    r.log.push_back(fmt::format("{}: {} usable records, no slope fitted", label, records.size()));
  }
  for (const auto& rec : records)
    r.csv += fmt::format("{},{},{},{},{}\n", label, rec.m, rec.n, num(rec.error), num(slope));
  if (cfg.expect_slope_max)
    check(r, slope <= *cfg.expect_slope_max, fmt::format("{}: slope {} > {}", label, num(slope), *cfg.expect_slope_max));
  if (cfg.expect_error_max && !records.empty()) {
    const double last = records.back().error;
    check(r, last <= *cfg.expect_error_max, fmt::format("{}: final error {} > {}", label, num(last), *cfg.expect_error_max));
  }
}

}  // namespace

DegreePair parse_pair(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw DomainError(fmt::format("pair '{}' is not of the form m,n", text));
  return make_degree_pair(parse_int(text.substr(0, comma), "degree"), parse_int(text.substr(comma + 1), "degree"));
}

std::vector<DegreePair> parse_sequence(std::string_view text) {
  const auto colon = text.find(':');
  const auto dots = text.find("..");
  if (colon == std::string_view::npos || dots == std::string_view::npos || dots < colon)
    throw DomainError(fmt::format("sequence '{}' is not of the form name:a..b", text));
  const auto name = text.substr(0, colon);
  const int lo = parse_int(text.substr(colon + 1, dots - colon - 1), "sequence start");
  const int hi = parse_int(text.substr(dots + 2), "sequence end");
  if (lo < 1 || hi < lo) throw DomainError(fmt::format("sequence '{}' has an empty range", text));
  std::vector<DegreePair> out;
  for (int n = lo; n <= hi; n *= 2) {
    if (name == "padua")
      out.push_back(make_degree_pair(n, n + 1));
    else if (name == "skew")
      out.push_back(make_degree_pair(2 * n + 1, n));
    else
      throw DomainError(fmt::format("unknown sequence '{}'", name));
  }
  return out;
}

std::vector<DegreePair> config_pairs(const ExperimentConfig& cfg) {
  auto out = cfg.pairs;
  if (!cfg.sequence.empty()) {
    const auto seq = parse_sequence(cfg.sequence);
    out.insert(out.end(), seq.begin(), seq.end());
  }
  return out;
}

std::string canonical_config(const ExperimentConfig& cfg) {
  std::string pairs;
  for (std::size_t k = 0; k < cfg.pairs.size(); ++k)
    pairs += fmt::format("{}{},{}", k ? ";" : "", cfg.pairs[k].m(), cfg.pairs[k].n());
  std::string funcs;
  for (std::size_t k = 0; k < cfg.functions.size(); ++k) funcs += (k ? "," : "") + cfg.functions[k];
  std::string ns;
  for (std::size_t k = 0; k < cfg.vdv_ns.size(); ++k) ns += fmt::format("{}{}", k ? "," : "", cfg.vdv_ns[k]);
  auto s = fmt::format("{} pairs={} seq={} p={} func={} seed={} trials={} grid={} quad={} n={}", cfg.subcommand, pairs,
                       cfg.sequence, join_doubles(cfg.ps), funcs, cfg.seed, cfg.trials, cfg.grid,
                       cfg.quadrature_points, ns);
  if (cfg.check_lemma56) s += " check-lemma56";
  if (cfg.kernel_table) s += " kernel-table";
  if (cfg.vdv_rate) s += " rate";
  if (cfg.dump_coeffs) s += " coeffs";
  if (cfg.verify_facts) s += " verify";
  if (cfg.expect_slope_max) s += fmt::format(" expect-slope-max={}", *cfg.expect_slope_max);
  if (cfg.expect_error_max) s += fmt::format(" expect-error-max={}", *cfg.expect_error_max);
  if (cfg.expect_trend_max) s += fmt::format(" expect-trend-max={}", *cfg.expect_trend_max);
  return s;
}

ExperimentResult run_nodes(const ExperimentConfig& cfg) {
  const auto pairs = config_pairs(cfg);
  if (pairs.size() != 1) throw DomainError("nodes takes exactly one pair");
  const auto d = pairs.front();
  const auto grid = node_set_from_grid(d);
  const auto curve = node_set_from_curve(d);
  ExperimentResult r;
  r.csv = "i,j,x,y,class,weight\n";
  std::vector<double> weights;
  for (const auto& nd : grid.nodes()) {
    r.csv += fmt::format("{},{},{},{},{},{}\n", nd.i, nd.j, num(nd.x), num(nd.y), to_string(nd.cls), num(nd.weight));
    weights.push_back(nd.weight);
  }
  const double deviation = max_node_deviation(grid, curve);
  const double weight_sum = pairwise_sum(weights);
  const auto expected = static_cast<std::size_t>((d.m() + 1) * (d.n() + 1) / 2);
  r.csv += fmt::format("# consistency grid_vs_curve={} weight_sum={} nodes={} expected={}\n", num(deviation),
                       num(weight_sum), grid.size(), expected);
  check(r, deviation <= 1e-12, fmt::format("grid and curve nodes differ by {}", num(deviation)));
  check(r, std::abs(weight_sum - 1.0) <= 1e-12, fmt::format("weights sum to {}", num(weight_sum)));
  check(r, grid.size() == expected, fmt::format("{} nodes, expected {}", grid.size(), expected));
  finish(r, cfg);
  return r;
}

ExperimentResult run_interp_error(const ExperimentConfig& cfg) {
  const auto pairs = config_pairs(cfg);
  if (pairs.empty()) throw DomainError("interp-error needs --pair or --seq");
  const auto ids = functions_or(cfg, {"hbv_step"});
  validate_ps(cfg.ps);
  ExperimentResult r;
  if (cfg.dump_coeffs) {
    const auto ip = interpolate(corpus_function(ids.front()), pairs.front());
    r.csv = "i,j,c\n";
    const auto& s = ip.series();
    for (std::size_t k = 0; k < s.size(); ++k)
      r.csv += fmt::format("{},{},{}\n", s.index_set()[k].i, s.index_set()[k].j, num(s.coeffs()[k]));
    finish(r, cfg);
    return r;
  }
  r.csv = "function,m,n,p,error\n";
  for (const auto& id : ids) {
    const auto& f = corpus_function(id);
    for (const auto d : pairs) {
      const auto ip = interpolate(f, d);
      for (double p : cfg.ps) {
        const double e = interpolation_error(f.eval, ip, error_spec(f, d, p, cfg.quadrature_points));
        r.csv += fmt::format("{},{},{},{},{}\n", id, d.m(), d.n(), p, num(e));
        if (cfg.expect_error_max)
          check(r, e <= *cfg.expect_error_max, fmt::format("{} at ({},{}) p={}: error {}", id, d.m(), d.n(), p, num(e)));
      }
    }
  }
  finish(r, cfg);
  return r;
}

ExperimentResult run_converge(const ExperimentConfig& cfg) {
  const auto pairs = config_pairs(cfg);
  if (pairs.empty()) throw DomainError("converge needs --pair or --seq");
  const auto ids = functions_or(cfg, {"hbv_step"});
  validate_ps(cfg.ps);
  ExperimentResult r;
  r.csv = "experiment,m,n,error,slope\n";
  for (const auto& id : ids) {
    const auto& f = corpus_function(id);
    std::vector<std::vector<RateRecord>> per_p(cfg.ps.size());
    for (const auto d : pairs) {
      const auto ip = interpolate(f, d);
      for (std::size_t k = 0; k < cfg.ps.size(); ++k) {
        try {
          per_p[k].push_back({d.m(), d.n(), interpolation_error(f.eval, ip, error_spec(f, d, cfg.ps[k], cfg.quadrature_points))});
        } catch (const QuadratureError& e) {
          const auto msg = fmt::format("{}:p={} ({},{}) skipped: {}", id, cfg.ps[k], d.m(), d.n(), e.what());
          r.csv += "# " + msg + "\n";
          r.log.push_back(msg);
        }
      }
    }
    for (std::size_t k = 0; k < cfg.ps.size(); ++k)
      emit_rate(r, cfg, fmt::format("{}:p={}", id, cfg.ps[k]), std::move(per_p[k]));
  }
  finish(r, cfg);
  return r;
}

ExperimentResult run_lebesgue(const ExperimentConfig& cfg) {
  const auto pairs = config_pairs(cfg);
  if (pairs.empty()) throw DomainError("lebesgue needs --pair or --seq");
  if (cfg.grid < 64) throw DomainError(fmt::format("grid = {} below 64", cfg.grid));
  ExperimentResult r;
  r.csv = "m,n,grid,value,ratio\n";
  std::vector<double> ratios;
  for (const auto d : pairs) {
    const double v = lebesgue_constant(d, cfg.grid);
    const double ratio = v / (std::log(d.m() + 1.0) * std::log(d.n() + 1.0));
    ratios.push_back(ratio);
    r.csv += fmt::format("{},{},{},{},{}\n", d.m(), d.n(), cfg.grid, num(v), num(ratio));
  }
  if (cfg.expect_trend_max) {
    const double trend = ratios.back() / ratios.front();
    check(r, trend < *cfg.expect_trend_max, fmt::format("ratio trend last/first = {}", num(trend)));
  }
  finish(r, cfg);
  return r;
}

ExperimentResult run_mz(const ExperimentConfig& cfg) {
  const auto pairs = config_pairs(cfg);
  if (pairs.empty()) throw DomainError("mz needs --pair or --seq");
  validate_ps(cfg.ps);
  if (cfg.trials < 1) throw DomainError("trials must be positive");
  ExperimentResult r;
  r.csv = "m,n,p,ratio_min,ratio_max,trials,seed\n";
  for (const auto d : pairs)
    for (double p : cfg.ps) {
      const auto rep = mz_ratio(d, p, cfg.trials, cfg.seed);
      r.csv += fmt::format("{},{},{},{},{},{},{}\n", d.m(), d.n(), p, num(rep.ratio_min), num(rep.ratio_max),
                           rep.trials, rep.seed);
      check(r, rep.ratio_min > 0.0, fmt::format("({},{}) p={}: nonpositive ratio", d.m(), d.n(), p));
    }
  finish(r, cfg);
  return r;
}

ExperimentResult run_vdv(const ExperimentConfig& cfg) {
  const int modes = int{cfg.check_lemma56} + int{cfg.kernel_table} + int{cfg.vdv_rate};
  if (modes != 1) throw DomainError("vdv takes exactly one of --check-lemma56, --kernel-table, --rate");
  ExperimentResult r;
  if (cfg.kernel_table) {
    if (cfg.grid < 2) throw DomainError("kernel table needs grid >= 2");
    r.csv = "n,phi,kernel\n";
    for (int n : vdv_degrees(cfg, {4})) {
      for (int a = 0; a < cfg.grid; ++a) {
        const double phi = std::numbers::pi * a / (cfg.grid - 1);
        r.csv += fmt::format("{},{},{}\n", n, num(phi), num(vdv_kernel(n, phi)));
      }
    }
  } else if (cfg.check_lemma56) {
    r.csv = "n,degree,interpolation_residual,reproduction_error,tolerance,passed\n";
    for (int n : vdv_degrees(cfg, {1, 2, 4, 8, 16})) {
      const auto rep = check_lemma56(n, cfg.seed);
      r.csv += fmt::format("{},{},{},{},{},{}\n", n, rep.degree, num(rep.interpolation_residual),
                           num(rep.reproduction_error), rep.tolerance, rep.passed() ? 1 : 0);
      check(r, rep.passed(), fmt::format("n={}: degree {} residual {} reproduction {}", n, rep.degree,
                                         num(rep.interpolation_residual), num(rep.reproduction_error)));
    }
  } else {
    validate_ps(cfg.ps);
    const auto ns = vdv_degrees(cfg, {8, 16, 32, 64, 128});
    r.csv = "experiment,m,n,error,slope\n";
    for (const auto& id : functions_or(cfg, {"torus_step"})) {
      const auto& f = corpus_function(id);
      if (!f.torus) throw CapabilityError(fmt::format("{} is not a torus function", id));
      for (double p : cfg.ps) {
        std::vector<RateRecord> records;
        for (int n : ns) {
          auto spec = with_breaks(vdv_norm_spec(n, p), f, true);
          if (cfg.quadrature_points > 0) spec.quadrature_points_per_axis = cfg.quadrature_points;
          records.push_back({n, n, vdv_lp_error(f.torus, n, spec)});
        }
        emit_rate(r, cfg, fmt::format("vdv:{}:p={}", id, p), std::move(records));
      }
    }
  }
  finish(r, cfg);
  return r;
}

ExperimentResult run_corpus(const ExperimentConfig& cfg) {
  ExperimentResult r;
  if (!cfg.verify_facts) {
    r.csv = "id,regularity,facts\n";
    for (const auto& f : corpus()) {
      std::string facts;
      for (const auto& [name, v] : f.analytic_facts) facts += fmt::format("{}{}={}", facts.empty() ? "" : ";", name, num(v));
      r.csv += fmt::format("{},{},\"{}\"\n", f.id, to_string(f.regularity), facts);
    }
    finish(r, cfg);
    return r;
  }
  r.csv = "id,fact,registered,recomputed,passed\n";
  (void)functions_or(cfg, {});
  for (const auto& f : corpus()) {
    if (!cfg.functions.empty() && std::find(cfg.functions.begin(), cfg.functions.end(), f.id) == cfg.functions.end())
      continue;
    for (const auto& [name, v] : f.analytic_facts) {
      const double got = recompute_fact(f, name);
      const bool ok = std::abs(got - v) <= 1e-4 * std::max(std::abs(v), 1.0);
      r.csv += fmt::format("{},{},{},{},{}\n", f.id, name, num(v), num(got), ok ? 1 : 0);
      check(r, ok, fmt::format("{} {}: registered {} recomputed {}", f.id, name, num(v), num(got)));
    }
    if (!f.breakpoints_x.empty() || !f.breakpoints_y.empty()) {
      const double c = breakpoint_clearance(f);
      const bool ok = c >= 1e-6;
      r.csv += fmt::format("{},breakpoint_clearance,1e-06,{},{}\n", f.id, num(c), ok ? 1 : 0);
      check(r, ok, fmt::format("{}: breakpoint within {} of a CGL point", f.id, num(c)));
    }
  }
  finish(r, cfg);
  return r;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.subcommand == "nodes") return run_nodes(cfg);
  if (cfg.subcommand == "interp-error") return run_interp_error(cfg);
  if (cfg.subcommand == "converge") return run_converge(cfg);
  if (cfg.subcommand == "lebesgue") return run_lebesgue(cfg);
  if (cfg.subcommand == "mz") return run_mz(cfg);
  if (cfg.subcommand == "vdv") return run_vdv(cfg);
  if (cfg.subcommand == "corpus") return run_corpus(cfg);
  throw DomainError(fmt::format("unknown subcommand '{}'", cfg.subcommand));
}

}  // namespace lcinterp
