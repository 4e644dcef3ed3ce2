#include "opdyn/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "opdyn/analysis.hpp"
#include "opdyn/dynamics.hpp"
#include "opdyn/error.hpp"
#include "opdyn/generators.hpp"
#include "opdyn/potential.hpp"
#include "opdyn/random.hpp"
#include "opdyn/report.hpp"
#include "opdyn/spectral.hpp"

namespace opdyn {

void SuiteReport::fail(std::string message) {
  passed = false;
  ++failure_count;
  if (failures.size() < kMaxFailures) failures.push_back(std::move(message));
}

namespace {

// p/q with q in [2, max_den] and p/q in (lo, 1] (or (0, 1) when open_top).
Rational random_fraction(Rng& rng, bool above_half, bool open_top) {
  const auto q = static_cast<std::int64_t>(2 + uniform_below(rng, 19));
  const std::int64_t lo = above_half ? q / 2 + 1 : 1;
  const std::int64_t hi = open_top ? q - 1 : q;
  return Rational(lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1))), q);
}

Graph random_small_graph(std::size_t n, std::size_t kind, Rng& rng) {
  const std::uint64_t seed = rng();
  switch (kind) {
    case 1: {
      if (n < 3) break;
      std::size_t d = 1 + uniform_below(rng, std::min<std::size_t>(n - 1, 10));
      if ((n * d) % 2 == 1) d = d > 1 ? d - 1 : 2;
      if (d >= n) break;
      return gen_rrg(n, d, seed);
    }
    case 2: {
      if (n < 3) break;
      const std::size_t m_out = 1 + uniform_below(rng, std::min<std::size_t>(n - 1, 5));
      return gen_pa(n, m_out, seed);
    }
    case 3:
      if (n >= 3) return gen_cycle(n);
      break;
    default:
      break;
  }
  const double c = 0.5 + 11.5 * uniform01(rng);
  return gen_er(n, std::min(1.0, c / static_cast<double>(n)), seed);
}

}  // namespace

SuiteReport period_suite(const PeriodSuiteSpec& spec) {
  if (spec.max_n < 2) throw ParameterError("period suite needs max_n >= 2");
  SuiteReport report;
  report.name = "period";
  std::array<std::size_t, 3> periods{};
  std::size_t max_stab = 0;
  for (std::size_t i = 0; i < spec.instances; ++i) {
    Rng rng = derived_rng(spec.seed, i);
    const std::size_t n = 2 + uniform_below(rng, spec.max_n - 1);
    const Graph g = random_small_graph(n, i % 4, rng);
    ModelConfig config;
    const char* variant = "majority";
    switch ((i / 4) % 3) {
      case 1:
        config = ModelConfig::psi(random_fraction(rng, true, false), random_fraction(rng, true, false));
        variant = "psi";
        break;
      case 2:
        for (std::size_t v = 0; v < n; ++v) config.stubbornness.push_back(random_fraction(rng, false, true));
        variant = "stubborn";
        break;
      default:
        break;
    }
    if (bernoulli(rng, 0.5)) {
      for (std::size_t v = 0; v < n; ++v) config.influence.push_back(1 + static_cast<std::uint32_t>(uniform_below(rng, 8)));
    }
    const Coloring initial = random_coloring(n, uniform01(rng), rng());
    ++report.instances;
    try {
      const RunResult result = run(g, initial, config);
      ++periods[std::min<std::size_t>(result.period, 2)];
      max_stab = std::max(max_stab, result.stabilization_time);
      if (result.period != 1 && result.period != 2) {
        report.fail("instance " + std::to_string(i) + " (" + variant + ", n=" + std::to_string(n) + "): period " +
                    std::to_string(result.period));
      }
    } catch (const TimeoutError&) {
      report.fail("instance " + std::to_string(i) + " (" + variant + ", n=" + std::to_string(n) + "): no cycle");
    }
  }
  report.stat("period_1", std::to_string(periods[1]));
  report.stat("period_2", std::to_string(periods[2]));
  report.stat("max_stabilization", std::to_string(max_stab));
  return report;
}

SuiteReport potential_suite(const PotentialSuiteSpec& spec) {
  if (spec.n == 0 || (spec.exhaustive && spec.n > 20)) throw ParameterError("potential suite: exhaustive needs 1 <= n <= 20");
  SuiteReport report;
  report.name = "potential";
  double worst_ratio = 0.0;
  std::size_t max_fixation = 0;
  for (std::size_t gi = 0; gi < spec.graphs; ++gi) {
    Rng rng = derived_rng(spec.seed, gi);
    const double q = 0.25 + 0.5 * uniform01(rng);
    const Graph g = gen_er(spec.n, q, rng());
    const std::uint64_t count = spec.exhaustive ? (std::uint64_t{1} << spec.n) : spec.colorings;
    for (const Rational& psi : spec.psis) {
      for (std::uint64_t k = 0; k < count; ++k) {
        const Coloring c = spec.exhaustive ? Coloring::from_bits(spec.n, k) : random_coloring(spec.n, 0.5, rng());
        const Certificate cert = certify_descent(g, psi, c);
        ++report.instances;
        max_fixation = std::max(max_fixation, cert.fixation_round);
        if (cert.m_star > 0) {
          worst_ratio = std::max(worst_ratio, static_cast<double>(cert.g_stabilization) / (4.0 * static_cast<double>(cert.m_star)));
        }
        if (!cert.passed) {
          report.fail("graph " + std::to_string(gi) + ", psi " + psi.to_string() + ", coloring " + c.to_string() + ": " +
                      (cert.failures.empty() ? std::string("failed") : cert.failures.front()));
        }
      }
    }
  }
  report.stat("max_fixation_round", std::to_string(max_fixation));
  report.stat("max_stab_over_4mstar", format_real(worst_ratio));
  return report;
}

SuiteReport mixing_suite(const MixingSuiteSpec& spec) {
  SuiteReport report;
  report.name = "mixing";
  const Graph g = gen_rrg(spec.n, spec.d, spec.seed);
  const MixingReport mixing = verify_mixing(g, spec.samples, splitmix64(spec.seed));
  report.instances = mixing.checked;
  for (const MixingViolation& v : mixing.violations) {
    report.fail("|S|=" + std::to_string(v.size1) + " |S'|=" + std::to_string(v.size2) + " e=" + std::to_string(v.edges) +
                " bound=" + format_real(v.bound));
  }
  const double limit = 2.0 / std::sqrt(static_cast<double>(spec.d)) + spec.sigma_slack;
  if (mixing.sigma > limit) report.fail("sigma " + format_real(mixing.sigma) + " > " + format_real(limit));
  report.stat("sigma", format_real(mixing.sigma));
  report.stat("sigma_limit", format_real(limit));
  report.stat("max_slack_ratio", format_real(mixing.max_slack_ratio));
  report.stat("sigma_retried", mixing.sigma_retried ? "yes" : "no");
  return report;
}

SuiteReport cycle_suite(const CycleSuiteSpec& spec) {
  SuiteReport report;
  report.name = "cycle";
  const Graph cycle = gen_cycle(spec.n);
  const double log_n = std::log2(static_cast<double>(spec.n));
  std::size_t within_log = 0;
  std::size_t max_stab = 0;
  for (std::size_t t = 0; t < spec.trials; ++t) {
    const Coloring c = random_coloring(spec.n, spec.p_black, spec.seed + t);
    const AlternatingPathReport bound = alternating_path_bound(c);
    const RunResult result = run(cycle, c, ModelConfig::majority());
    ++report.instances;
    max_stab = std::max(max_stab, result.stabilization_time);
    if (static_cast<double>(result.stabilization_time) <= log_n) ++within_log;
    if (!bound.periodic && result.stabilization_time > bound.bound) {
      report.fail("trial " + std::to_string(t) + ": stabilization " + std::to_string(result.stabilization_time) +
                  " > ceil(L/2) = " + std::to_string(bound.bound));
    }
  }
  if (within_log < spec.required) {
    report.fail(std::to_string(within_log) + " of " + std::to_string(spec.trials) + " trials within log2 n, need " +
                std::to_string(spec.required));
  }
  report.stat("log2_n", format_real(log_n));
  report.stat("within_log2_n", std::to_string(within_log) + "/" + std::to_string(spec.trials));
  report.stat("max_stabilization", std::to_string(max_stab));
  return report;
}

SuiteReport stubbornness_suite(const StubbornnessSuiteSpec& spec) {
  if (spec.max_n < 4 || spec.max_r < 1) throw ParameterError("stubbornness suite needs max_n >= 4 and max_r >= 1");
  SuiteReport report;
  report.name = "stubbornness";
  std::size_t skipped = 0;
  for (std::uint64_t i = 0; report.instances < spec.instances; ++i) {
    if (skipped > 100 * spec.instances) throw ParameterError("stubbornness suite: too many infeasible draws");
    Rng rng = derived_rng(spec.seed, i);
    const std::size_t n = 4 + uniform_below(rng, spec.max_n - 3);
    const Graph g = gen_er(n, 0.05 + 0.25 * uniform01(rng), rng());
    std::vector<NodeId> pool(n);
    std::iota(pool.begin(), pool.end(), NodeId{0});
    shuffle(pool.begin(), pool.end(), rng);
    const std::size_t z_size = 1 + uniform_below(rng, (n - 1) / 2);
    const NodeSet z(n, std::vector<NodeId>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(z_size)));
    const auto r = static_cast<std::uint32_t>(1 + uniform_below(rng, spec.max_r));
    const StubbornnessBound bound = stubbornness_bound(g, z, r);
    if (bound.infeasible) {
      ++skipped;
      continue;
    }
    ++report.instances;
    // gamma_min + 1e-9, kept exact.
    const Rational gamma = bound.gamma_min + Rational(1, 1000000000);
    ModelConfig config = ModelConfig::uniform_stubbornness(n, gamma);
    config.influence.assign(n, 1);
    Coloring c(n);
    for (NodeId v : z) {
      c.set(v, Color::Black);
      config.influence[v] = r;
    }
    const std::size_t rounds = default_max_rounds(g);
    for (std::size_t t = 1; t <= rounds; ++t) {
      Coloring next = step(g, c, config);
      const bool settled = next == c;
      c = std::move(next);
      bool escaped = false;
      for (NodeId v = 0; v < n && !escaped; ++v) {
        if (c.is_black(v) && !z.contains(v)) {
          report.fail("instance " + std::to_string(i) + " (n=" + std::to_string(n) + ", |Z|=" + std::to_string(z_size) +
                      ", r=" + std::to_string(r) + ", gamma=" + gamma.to_string() + "): node " + std::to_string(v) +
                      " black at round " + std::to_string(t));
          escaped = true;
        }
      }
      if (escaped || settled) break;
    }
  }
  report.stat("infeasible_skipped", std::to_string(skipped));
  return report;
}

}  // namespace opdyn
