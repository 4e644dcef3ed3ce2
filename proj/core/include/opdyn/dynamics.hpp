#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "opdyn/coloring.hpp"
#include "opdyn/graph.hpp"
#include "opdyn/rational.hpp"

namespace opdyn {

enum class Variant { Majority, Psi };

/// Update rule for the synchronous threshold process.
///
/// Every tally is weighted by the *neighbour's* influence factor r(u). With
/// no stubbornness the rule is either strict majority (ties keep the current
/// colour) or the (psi1, psi2) rule: a black node turns white when at least
/// psi1 of the weight is white, a white node turns black when at least psi2 of
/// it is black. A per-node stubbornness gamma(v) replaces the majority rule
/// with "flip when at least gamma(v) of the weight is opposite". Stubbornness
/// and the psi variant are mutually exclusive.
struct ModelConfig {
  Variant variant = Variant::Majority;
  Rational psi_black{1};  // psi1
  Rational psi_white{1};  // psi2
  std::vector<std::uint32_t> influence;  // empty: every r(v) = 1
  std::vector<Rational> stubbornness;    // empty: no stubbornness

  static ModelConfig majority() { return {}; }
  static ModelConfig psi(Rational psi1, Rational psi2);
  static ModelConfig uniform_stubbornness(std::size_t n, Rational gamma);

  std::uint32_t influence_of(NodeId v) const noexcept { return influence.empty() ? 1u : influence[v]; }

  // Throws ParameterError on psi outside (1/2, 1], gamma outside (0, 1),
  // zero influence, size mismatches, or psi combined with stubbornness.
  void validate(std::size_t n) const;
};

struct Tally {
  std::int64_t opposite = 0;
  std::int64_t total = 0;
  friend bool operator==(const Tally&, const Tally&) = default;
};

Tally weighted_tally(const Graph& g, const Coloring& coloring, const ModelConfig& config, NodeId v);

// Whether node v changes colour given its tally. Degree-0 nodes never do.
bool flips(const ModelConfig& config, NodeId v, Color current, const Tally& tally);

// One synchronous round. Reads only `coloring`.
Coloring step(const Graph& g, const Coloring& coloring, const ModelConfig& config);

// Double-buffered variant; returns the number of nodes that changed.
std::size_t step_into(const Graph& g, const Coloring& in, const ModelConfig& config, Coloring& out);

struct RunOptions {
  // 0 selects the default 4m + 10.
  std::size_t max_rounds = 0;
  bool record_bichromatic = false;
};

struct RunResult {
  std::size_t stabilization_time = 0;
  std::size_t period = 1;
  // First entry is the colouring at stabilization_time; a second entry is
  // present for period 2.
  std::vector<Coloring> final_colorings;
  // Rounds 0..rounds_executed inclusive.
  std::vector<std::size_t> black_count_per_round;
  std::vector<std::size_t> bichromatic_per_round;  // only with record_bichromatic
  std::size_t m_star = 0;
  std::size_t rounds_executed = 0;
};

// Iterates step() until C_t = C_{t-1} (period 1) or C_t = C_{t-2} (period 2).
// Throws TimeoutError if neither happens within max_rounds.
RunResult run(const Graph& g, const Coloring& initial, const ModelConfig& config, const RunOptions& options = {});

std::size_t default_max_rounds(const Graph& g);

Coloring random_coloring(std::size_t n, double p_black, std::uint64_t seed);

std::size_t count_bichromatic(const Graph& g, const Coloring& coloring);

enum class OutcomeLabel : std::uint8_t {
  BlackTakesOver,
  WhiteTakesOver,
  AlmostMonochromatic,
  AlmostBalanced,
  BlackWins,
  WhiteWins,
  Mixed,
};
inline constexpr std::size_t kOutcomeLabelCount = 7;

const char* to_string(OutcomeLabel label);

/// Every label that holds for a final colouring, plus a primary label.
///
/// Labels overlap (a 98% black colouring both wins and is almost
/// monochromatic), so membership is reported per label. The primary label
/// takes the first that holds in the order: takes over, almost
/// monochromatic, almost balanced, wins, mixed. Mixed means both colours
/// survive.
struct Outcome {
  OutcomeLabel primary = OutcomeLabel::Mixed;
  std::uint32_t labels = 0;
  double black_fraction = 0.0;

  bool has(OutcomeLabel label) const noexcept { return (labels >> static_cast<unsigned>(label)) & 1u; }
};

inline constexpr double kDefaultMonoTolerance = 0.05;
inline constexpr double kDefaultBalanceTolerance = 0.05;

Outcome classify_coloring(const Coloring& coloring, double mono_tol = kDefaultMonoTolerance,
                          double balance_tol = kDefaultBalanceTolerance);

// Classifies the first colouring of the final cycle.
Outcome classify_outcome(const RunResult& result, std::size_t n, double mono_tol = kDefaultMonoTolerance,
                         double balance_tol = kDefaultBalanceTolerance);

}  // namespace opdyn
