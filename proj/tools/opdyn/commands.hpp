#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opdyn/generators.hpp"

namespace opdyn::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Fully resolved options of one invocation. Filled from flags, the
/// MAJ_SEED environment variable and an optional key=value config file, in
/// that order of precedence.
struct ExperimentConfig {
  std::string command;

  // Graph source: a file, or a generator family.
  std::string graph_path;
  std::string dataset = "custom";
  std::string family;
  std::size_t n = 0;
  double q = 0.0;
  std::size_t d = 0;
  std::size_t m_out = 1;
  double avg_deg = 0.0;
  double beta = 2.5;
  double temperature = 0.6;
  std::string rrg_strategy = "steger-wormald";
  std::string match;  // replace the loaded graph by a matched random graph

  // Update rule.
  std::string model = "majority";
  std::string psi1 = "0.7";
  std::string psi2 = "0.8";

  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t trials = 8;
  std::size_t max_rounds = 0;
  double mono_tol = 0.05;
  double balance_tol = 0.05;
  std::string out;

  // elites
  std::vector<std::uint32_t> r_values{1, 2, 4, 8, 16, 32, 64, 128};
  bool cm1 = false;
  bool cm2 = false;
  std::string criterion = "wins";
  double resolution = 0.0;  // 0: one node up to n = 1000, else 0.001
  std::string strategy = "ascending";

  // sweep
  std::string p_grid = "0:1:0.05";

  // run
  double p_black = 0.5;

  // conjecture
  std::size_t conjecture_n = 100000;
  std::vector<double> c_values{8.0, 12.0};

  // verify
  std::string suite;
  std::size_t instances = 0;  // 0: suite default
  bool exhaustive = false;
  std::size_t graphs = 20;
  std::size_t samples = 100;
  std::size_t max_n = 0;  // 0: suite default
  std::size_t degree = 16;
  std::string psi_list = "0.51,0.6,0.75,1";
};

int cmd_generate(const ExperimentConfig& config, std::ostream& out);
int cmd_elites(const ExperimentConfig& config, std::ostream& out);
int cmd_sweep(const ExperimentConfig& config, std::ostream& out);
int cmd_run(const ExperimentConfig& config, std::ostream& out);
int cmd_conjecture(const ExperimentConfig& config, std::ostream& out);
int cmd_verify(const ExperimentConfig& config, std::ostream& out);

// "lo:hi:step" or a comma-separated list.
std::vector<double> parse_grid(const std::string& text);

}  // namespace opdyn::cli
