#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lcinterp/errors.hpp"
#include "lcinterp/experiments.hpp"
#include "lcinterp/parallel.hpp"

namespace {

const char* error_kind(const std::exception& e) {
  using namespace lcinterp;
  if (dynamic_cast<const CoprimalityError*>(&e)) return "CoprimalityError";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const ConsistencyError*>(&e)) return "ConsistencyError";
  if (dynamic_cast<const DataError*>(&e)) return "DataError";
  if (dynamic_cast<const QuadratureError*>(&e)) return "QuadratureError";
  if (dynamic_cast<const CapabilityError*>(&e)) return "CapabilityError";
  return "error";
}

struct Raw {
  std::vector<std::string> pairs;
  double slope = 0, error = 0, trend = 0;
};

void add_pairs(CLI::App* sub, Raw& raw, lcinterp::ExperimentConfig& cfg) {
  sub->add_option("--pair", raw.pairs, "degree pair m,n (repeatable)");
  sub->add_option("--seq", cfg.sequence, "named sequence padua:a..b or skew:a..b");
}

void add_ps(CLI::App* sub, lcinterp::ExperimentConfig& cfg) {
  sub->add_option("--p", cfg.ps, "norm exponents (repeatable)");
}

void add_funcs(CLI::App* sub, lcinterp::ExperimentConfig& cfg) {
  sub->add_option("--func", cfg.functions, "corpus ids (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  lcinterp::ExperimentConfig cfg;
  Raw raw;
  int threads = 1;

  CLI::App app{"Lissajous-Chebyshev interpolation experiments"};
  app.set_version_flag("--version", std::string(LCINTERP_VERSION));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", threads, "worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", cfg.output_path, "output CSV path (default stdout)");
  app.add_option("--seed", cfg.seed, "random seed");

  auto* nodes = app.add_subcommand("nodes", "node table with class and weight");
  add_pairs(nodes, raw, cfg);

  auto* ierr = app.add_subcommand("interp-error", "interpolation errors or coefficient dump");
  add_pairs(ierr, raw, cfg);
  add_ps(ierr, cfg);
  add_funcs(ierr, cfg);
  ierr->add_flag("--coeffs", cfg.dump_coeffs, "dump i,j,c of the first pair and function");
  ierr->add_option("--quad", cfg.quadrature_points, "quadrature points per axis");
  auto* ierr_max = ierr->add_option("--expect-error-max", raw.error, "fail if any error exceeds this");

  auto* conv = app.add_subcommand("converge", "error sequence and fitted rate");
  add_pairs(conv, raw, cfg);
  add_ps(conv, cfg);
  add_funcs(conv, cfg);
  conv->add_option("--quad", cfg.quadrature_points, "quadrature points per axis");
  auto* conv_slope = conv->add_option("--expect-slope-max", raw.slope, "fail if a fitted slope exceeds this");
  auto* conv_err = conv->add_option("--expect-error-max", raw.error, "fail if a final error exceeds this");

  auto* leb = app.add_subcommand("lebesgue", "Lebesgue constants");
  add_pairs(leb, raw, cfg);
  leb->add_option("--grid", cfg.grid, "evaluation points per axis (>= 64)");
  auto* leb_trend = leb->add_option("--expect-trend-max", raw.trend, "fail unless last/first ratio is below this");

  auto* mz = app.add_subcommand("mz", "Marcinkiewicz-Zygmund ratio bands");
  add_pairs(mz, raw, cfg);
  add_ps(mz, cfg);
  mz->add_option("--trials", cfg.trials, "random polynomials per pair");

  auto* vdv = app.add_subcommand("vdv", "de la Vallee-Poussin means");
  vdv->add_option("--n", cfg.vdv_ns, "degrees n (repeatable)");
  vdv->add_flag("--check-lemma56", cfg.check_lemma56, "degree, interpolation and reproduction checks");
  vdv->add_flag("--kernel-table", cfg.kernel_table, "kernel values on [0, pi]");
  vdv->add_flag("--rate", cfg.vdv_rate, "1D error rate for torus functions");
  vdv->add_option("--grid", cfg.grid, "kernel table points");
  add_ps(vdv, cfg);
  add_funcs(vdv, cfg);
  vdv->add_option("--quad", cfg.quadrature_points, "quadrature points");
  auto* vdv_slope = vdv->add_option("--expect-slope-max", raw.slope, "fail if a fitted slope exceeds this");

  auto* corp = app.add_subcommand("corpus", "registered test functions");
  corp->add_flag("--verify", cfg.verify_facts, "recompute registered facts on dense grids");
  add_funcs(corp, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    for (const auto& p : raw.pairs) cfg.pairs.push_back(lcinterp::parse_pair(p));
    if (*ierr_max || *conv_err) cfg.expect_error_max = raw.error;
    if (*conv_slope || *vdv_slope) cfg.expect_slope_max = raw.slope;
    if (*leb_trend) cfg.expect_trend_max = raw.trend;
    lcinterp::set_thread_count(threads == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : threads);

    const auto result = lcinterp::run_experiment(cfg);
    if (cfg.output_path.empty()) {
      std::cout << result.csv << std::flush;
    } else {
      std::ofstream out(cfg.output_path, std::ios::binary);
      out << result.csv;
      out.close();
      if (!out) {
        std::cerr << "error: cannot write " << cfg.output_path << "\n";
        return 2;
      }
    }
    for (const auto& line : result.log) std::cerr << line << "\n";
    return result.checks_passed ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << error_kind(e) << ": " << e.what() << "\n";
    return 2;
  }
}
