#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string_view>

#include "commands.hpp"
#include "opdyn/error.hpp"

using opdyn::cli::ExperimentConfig;

namespace {

void add_shared_options(CLI::App& app, ExperimentConfig& c) {
  auto* source = app.add_option_group("graph source");
  source->add_option("--graph", c.graph_path, "Edge list file (plain or gzip)");
  source->add_option("--dataset", c.dataset, "Dataset label YT, SD, TW, FB (checks published counts) or custom")
      ->capture_default_str();
  source->add_option("--family", c.family, "Generate the graph instead: er, rrg, pa, hrg, cycle");
  source->add_option("--n", c.n, "Number of nodes (verify: instance size)");
  source->add_option("--q", c.q, "ER edge probability");
  source->add_option("--d", c.d, "RRG degree");
  source->add_option("--m-out", c.m_out, "PA edges per new node")->capture_default_str();
  source->add_option("--avg-deg", c.avg_deg, "HRG target average degree");
  source->add_option("--beta", c.beta, "HRG power-law exponent")->capture_default_str();
  source->add_option("--temperature", c.temperature, "HRG temperature")->capture_default_str();
  source->add_option("--rrg-strategy", c.rrg_strategy, "steger-wormald or restart")->capture_default_str();
  source->add_option("--match", c.match, "Replace --graph by a random graph of this family with matched n and m");

  auto* model = app.add_option_group("update rule");
  model->add_option("--model", c.model, "majority or psi")->capture_default_str();
  model->add_option("--psi1", c.psi1, "Threshold for black nodes turning white")->capture_default_str();
  model->add_option("--psi2", c.psi2, "Threshold for white nodes turning black")->capture_default_str();

  app.add_option("--seed", c.seed, "Base seed (MAJ_SEED in the environment overrides the config file)")
      ->capture_default_str();
  app.add_option("--jobs", c.jobs, "Worker threads for independent trials")->capture_default_str()->check(
      CLI::PositiveNumber);
  app.add_option("--trials", c.trials, "Trials per grid point")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-rounds", c.max_rounds, "Round limit per run (0: 4m+10)")->capture_default_str();
  app.add_option("--mono-tol", c.mono_tol, "Minority fraction counted as almost monochromatic")->capture_default_str();
  app.add_option("--balance-tol", c.balance_tol, "Distance from 1/2 counted as almost balanced")
      ->capture_default_str();
  app.add_option("--out", c.out, "Output file (default: stdout)");
}

// Seed precedence is flag, then MAJ_SEED, then config file. CLI11 lets the
// config file win over the environment, so the variable is applied here.
bool apply_seed_env(int argc, char** argv, ExperimentConfig& c) {
  const char* env = std::getenv("MAJ_SEED");
  if (env == nullptr) return true;
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--seed" || arg.starts_with("--seed=")) return true;
  }
  try {
    std::size_t used = 0;
    const std::string text = env;
    const unsigned long long value = std::stoull(text, &used);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
    c.seed = value;
    return true;
  } catch (const std::logic_error&) {
    std::cerr << "error: MAJ_SEED must be a non-negative integer, got '" << env << "'\n";
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  ExperimentConfig c;
  CLI::App app{"Opinion dynamics experiments: majority and threshold models on graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(OPDYN_VERSION_STRING));
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  add_shared_options(app, c);

  auto* generate = app.add_subcommand("generate", "Write a generated graph as a canonical edge list");

  auto* elites = app.add_subcommand("elites", "Smallest winning elite fraction per influence factor");
  elites->add_option("--r", c.r_values, "Influence factors")->delimiter(',')->capture_default_str();
  elites->add_flag("--cm1", c.cm1, "Countermeasure 1: overlay a random regular graph of degree 2 r avg_deg");
  elites->add_flag("--cm2", c.cm2, "Countermeasure 2: uniform stubbornness 1 - 1/(2r)");
  elites->add_option("--criterion", c.criterion, "wins or takes-over")->capture_default_str();
  elites->add_option("--resolution", c.resolution, "Scan step as a fraction of n (default 1/n up to n=1000, else 0.001)");
  elites->add_option("--strategy", c.strategy, "ascending or gallop")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Outcome statistics over a grid of initial black densities");
  sweep->add_option("--p-grid", c.p_grid, "lo:hi:step or comma list")->capture_default_str();

  auto* run = app.add_subcommand("run", "One run from a random colouring, with its trajectory");
  run->add_option("--p-b", c.p_black, "Initial black probability")->capture_default_str();

  auto* conjecture = app.add_subcommand("conjecture", "Majority model on G(n, c/n) from a balanced colouring");
  conjecture->add_option("--c", c.c_values, "Average degrees c")->delimiter(',')->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a property suite; exit 1 on any violation");
  verify->add_option("suite", c.suite, "period, potential, mixing, cycle or stubbornness")->required();
  verify->add_option("--instances", c.instances, "Instances (potential: random colourings per graph)");
  verify->add_flag("--exhaustive", c.exhaustive, "potential: all 2^n colourings");
  verify->add_option("--graphs", c.graphs, "potential: random graphs")->capture_default_str();
  verify->add_option("--samples", c.samples, "mixing: random set pairs")->capture_default_str();
  verify->add_option("--max-n", c.max_n, "Largest random graph");
  verify->add_option("--degree", c.degree, "mixing: RRG degree")->capture_default_str();
  verify->add_option("--psi", c.psi_list, "potential: comma-separated psi values")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : opdyn::cli::kExitUsage;
  }

  if (!apply_seed_env(argc, argv, c)) return opdyn::cli::kExitUsage;

  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << c.out << '\n';
      return opdyn::cli::kExitUsage;
    }
  }
  std::ostream& out = c.out.empty() ? std::cout : file;

  try {
    if (generate->parsed()) {
      c.command = "generate";
      return opdyn::cli::cmd_generate(c, out);
    }
    if (elites->parsed()) {
      c.command = "elites";
      return opdyn::cli::cmd_elites(c, out);
    }
    if (sweep->parsed()) {
      c.command = "sweep";
      return opdyn::cli::cmd_sweep(c, out);
    }
    if (run->parsed()) {
      c.command = "run";
      return opdyn::cli::cmd_run(c, out);
    }
    if (conjecture->parsed()) {
      c.command = "conjecture";
      return opdyn::cli::cmd_conjecture(c, out);
    }
    c.command = "verify";
    return opdyn::cli::cmd_verify(c, out);
  } catch (const opdyn::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return opdyn::cli::kExitVerificationFailed;
  } catch (const opdyn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return opdyn::cli::kExitUsage;
  }
}
