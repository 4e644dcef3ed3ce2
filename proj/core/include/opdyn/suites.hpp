#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "opdyn/rational.hpp"

namespace opdyn {

/// Outcome of one property suite: pass/fail, how many instances were
/// checked, the first few failures, and summary statistics as key/value
/// pairs for reporting.
struct SuiteReport {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::vector<std::string> failures;  // first kMaxFailures only
  std::size_t failure_count = 0;
  std::vector<std::pair<std::string, std::string>> stats;

  static constexpr std::size_t kMaxFailures = 20;
  void fail(std::string message);
  void stat(std::string key, std::string value) { stats.emplace_back(std::move(key), std::move(value)); }
};

// Random graphs (ER, RRG, PA, cycle) with 2..max_n nodes, random colourings,
// and a rotating choice of majority, (psi1, psi2) and per-node stubbornness,
// half of them with random influence factors. Every run must end in a cycle
// of length 1 or 2.
struct PeriodSuiteSpec {
  std::size_t instances = 10000;
  std::size_t max_n = 200;
  std::uint64_t seed = 1;
};
SuiteReport period_suite(const PeriodSuiteSpec& spec);

// Descent certificates on random graphs with n nodes for every psi, over all
// 2^n colourings (exhaustive) or `colorings` random ones.
struct PotentialSuiteSpec {
  std::size_t n = 8;
  std::size_t graphs = 20;
  std::vector<Rational> psis{Rational(51, 100), Rational(3, 5), Rational(3, 4), Rational(1)};
  bool exhaustive = true;
  std::size_t colorings = 256;
  std::uint64_t seed = 1;
};
SuiteReport potential_suite(const PotentialSuiteSpec& spec);

// Mixing bound on a random d-regular graph plus sigma <= 2/sqrt(d) + slack.
struct MixingSuiteSpec {
  std::size_t n = 2000;
  std::size_t d = 16;
  std::size_t samples = 100;
  double sigma_slack = 0.05;
  std::uint64_t seed = 1;
};
SuiteReport mixing_suite(const MixingSuiteSpec& spec);

// Majority model on the cycle C_n from random colourings: stabilization
// within log2 n in at least `required` trials, and never above the
// alternating-path bound.
struct CycleSuiteSpec {
  std::size_t n = 100000;
  std::size_t trials = 8;
  std::size_t required = 7;
  double p_black = 0.5;
  std::uint64_t seed = 1;
};
SuiteReport cycle_suite(const CycleSuiteSpec& spec);

// Random (G, Z, r) with f < 1: starting from B_0 = Z with uniform
// stubbornness just above gamma_min, no node outside Z ever turns black.
struct StubbornnessSuiteSpec {
  std::size_t instances = 50;
  std::size_t max_n = 100;
  std::uint32_t max_r = 10;
  std::uint64_t seed = 1;
};
SuiteReport stubbornness_suite(const StubbornnessSuiteSpec& spec);

}  // namespace opdyn
