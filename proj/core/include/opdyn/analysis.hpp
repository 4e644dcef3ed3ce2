#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "opdyn/coloring.hpp"
#include "opdyn/dynamics.hpp"
#include "opdyn/graph.hpp"
#include "opdyn/rational.hpp"

namespace opdyn {

// ---------------------------------------------------------------------------
// Elite winning sets and countermeasures

enum class WinCriterion { Wins, TakesOver };

const char* to_string(WinCriterion criterion);

struct EliteQuery {
  std::uint32_t influence = 1;  // r on the elite nodes, 1 elsewhere
  WinCriterion criterion = WinCriterion::Wins;
  Color background = Color::White;
  // Base update rule; its influence vector is replaced per evaluation. Use
  // apply_cm2() here for the stubbornness countermeasure.
  ModelConfig model;
};

enum class ScanStrategy {
  Ascending,
  // Doubling probes to bracket the first winner, then an ascending scan
  // inside the bracket. Assumes nothing about monotonicity beyond the bracket.
  GallopThenLinear,
};

struct EliteScanResult {
  double fraction = 0.0;  // k / n, or 1 + resolution when nothing wins
  std::size_t k = 0;
  bool found = false;
  std::size_t simulations = 0;
};

// Whether the k highest-degree nodes, black with influence r, make black
// satisfy the query's criterion.
bool elite_set_wins(const Graph& g, const EliteQuery& query, std::size_t k);

// Grid step in nodes for a resolution given as a fraction of n.
std::size_t elite_grid_step(std::size_t n, double resolution);

// 1 node for n <= 1000, else 0.001 n.
double default_elite_resolution(std::size_t n);

EliteScanResult scan_winning_elite(const Graph& g, const EliteQuery& query, double resolution,
                                   ScanStrategy strategy = ScanStrategy::Ascending);

inline double min_winning_elite_fraction(const Graph& g, const EliteQuery& query, double resolution) {
  return scan_winning_elite(g, query, resolution).fraction;
}

// Overlay degree round(2 r avg_deg), adjusted so that n*d is even.
std::size_t cm1_degree(const DegreeStats& stats, std::uint32_t r);

// Union of g with a random regular graph of degree cm1_degree().
Graph apply_cm1(const Graph& g, std::uint32_t r, std::uint64_t seed);

// Uniform stubbornness 1 - 1/(2r) on every node.
ModelConfig apply_cm2(const Graph& g, std::uint32_t r);

struct StubbornnessBound {
  Rational f;          // max over v outside Z of d_Z(v) / d(v)
  Rational gamma_min;  // r / (r + (1 - f) / f)
  bool infeasible = false;  // f = 1
};

// Throws ParameterError unless |Z| < n/2. Degree-0 nodes outside Z are
// skipped since they never update.
StubbornnessBound stubbornness_bound(const Graph& g, const NodeSet& z, std::uint32_t r);

// ---------------------------------------------------------------------------
// Random initial colourings

struct PhaseRow {
  double parameter = 0.0;  // p_b for density sweeps, c for the ER experiment
  double mean_black_fraction = 0.0;
  double mean_stabilization_time = 0.0;
  std::size_t trials = 0;
  std::size_t timeouts = 0;
  std::array<std::size_t, kOutcomeLabelCount> label_counts{};    // membership
  std::array<std::size_t, kOutcomeLabelCount> primary_counts{};
  std::vector<Outcome> outcomes;  // per trial, empty entry label mask on timeout
  std::vector<std::size_t> stabilization_times;

  std::size_t count(OutcomeLabel label) const noexcept { return label_counts[static_cast<std::size_t>(label)]; }
};

struct PhaseReport {
  const char* parameter_name = "p_b";
  std::vector<PhaseRow> rows;
};

struct SweepSpec {
  ModelConfig config;
  std::vector<double> p_grid;
  std::size_t trials = 8;
  std::uint64_t base_seed = 1;
  std::size_t jobs = 1;
  double mono_tol = kDefaultMonoTolerance;
  double balance_tol = kDefaultBalanceTolerance;
  std::size_t max_rounds = 0;  // 0: run()'s default
};

// p_b grid lo, lo + step, ..., hi (inclusive up to rounding).
std::vector<double> linear_grid(double lo, double hi, double step);

// Trial i at every grid point colours with seed base_seed + i.
PhaseReport density_sweep(const Graph& g, const SweepSpec& spec);

struct ConjectureSpec {
  std::size_t n = 100000;
  std::vector<double> c_values{8.0, 12.0};
  std::size_t trials = 8;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  double mono_tol = kDefaultMonoTolerance;
  double balance_tol = kDefaultBalanceTolerance;
};

// Majority model on a fresh G(n, c/n) per trial with p_b = 1/2.
PhaseReport conjecture_experiment(const ConjectureSpec& spec);

// ---------------------------------------------------------------------------
// Spectral mixing and cycles

struct MixingViolation {
  std::size_t size1 = 0;
  std::size_t size2 = 0;
  std::uint64_t edges = 0;
  double bound = 0.0;
};

struct MixingReport {
  double sigma = 0.0;
  std::size_t degree = 0;
  std::size_t checked = 0;
  double max_slack_ratio = 0.0;  // max |e - |S||S'|d/n| / (sigma d sqrt(|S||S'|))
  bool sigma_retried = false;
  std::vector<MixingViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

// |e(S,S') - |S||S'|d/n| divided by sigma d sqrt(|S||S'|); <= 1 when the
// mixing bound holds. Returns 0 for empty sets.
double mixing_slack_ratio(const Graph& g, const NodeSet& s1, const NodeSet& s2, double sigma);

// Checks the expander mixing bound on `samples` random set pairs of random
// sizes. Throws ParameterError if g is not regular.
MixingReport verify_mixing(const Graph& g, std::size_t samples, std::uint64_t seed);

struct AlternatingPathReport {
  std::size_t longest = 0;   // nodes in the longest alternating path
  // Longest run of nodes with no same-coloured neighbour. Every round strips
  // one node from each end of such a run, the rest of the cycle is frozen.
  std::size_t interior = 0;
  std::size_t bound = 0;     // ceil(longest / 2), 0 when longest < 2
  bool periodic = false;    // whole (even) cycle alternates: period-2 blinker
};

// Longest alternating path (adjacent nodes of opposite colour) on the cycle
// 0-1-...-(n-1)-0.
AlternatingPathReport alternating_path_bound(const Coloring& coloring);

}  // namespace opdyn
