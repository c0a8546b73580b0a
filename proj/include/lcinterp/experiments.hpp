#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcinterp/lissajous.hpp"

namespace lcinterp {

struct ExperimentConfig {
  std::string subcommand;
  /// Explicit pairs, in the order given.
  std::vector<DegreePair> pairs;
  /// Named sequence such as "padua:8..128" or "skew:4..32"; appended after pairs.
  std::string sequence;
  std::vector<double> ps{2.0};
  std::vector<std::string> functions;
  std::uint64_t seed = 42;
  int trials = 200;
  int grid = 256;
  /// 0 selects the default quadrature size.
  int quadrature_points = 0;
  std::vector<int> vdv_ns;
  bool check_lemma56 = false;
  bool kernel_table = false;
  bool vdv_rate = false;
  bool dump_coeffs = false;
  bool verify_facts = false;
  std::optional<double> expect_slope_max;
  std::optional<double> expect_error_max;
  std::optional<double> expect_trend_max;
  std::string output_path;
};

struct ExperimentResult {
  std::string csv;
  bool checks_passed = true;
  /// Human readable notes for stderr (failed checks, skipped pairs).
  std::vector<std::string> log;
};

/// "7,5" -> DegreePair; throws DomainError / CoprimalityError.
[[nodiscard]] DegreePair parse_pair(std::string_view text);

/// "padua:a..b" -> (n, n+1), "skew:a..b" -> (2n+1, n), n = a, 2a, ... <= b.
[[nodiscard]] std::vector<DegreePair> parse_sequence(std::string_view text);

/// Pairs of cfg (explicit pairs first, then the named sequence), validated.
[[nodiscard]] std::vector<DegreePair> config_pairs(const ExperimentConfig& cfg);

/// Deterministic one-line rendering of the config (never the thread count).
[[nodiscard]] std::string canonical_config(const ExperimentConfig& cfg);

[[nodiscard]] ExperimentResult run_nodes(const ExperimentConfig& cfg);
[[nodiscard]] ExperimentResult run_interp_error(const ExperimentConfig& cfg);
[[nodiscard]] ExperimentResult run_converge(const ExperimentConfig& cfg);
[[nodiscard]] ExperimentResult run_lebesgue(const ExperimentConfig& cfg);
[[nodiscard]] ExperimentResult run_mz(const ExperimentConfig& cfg);
[[nodiscard]] ExperimentResult run_vdv(const ExperimentConfig& cfg);
[[nodiscard]] ExperimentResult run_corpus(const ExperimentConfig& cfg);

/// Dispatch on cfg.subcommand.
[[nodiscard]] ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace lcinterp
