#include "opdyn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "opdyn/error.hpp"
#include "opdyn/generators.hpp"
#include "opdyn/random.hpp"
#include "opdyn/spectral.hpp"
#include "parallel.hpp"

namespace opdyn {

const char* to_string(WinCriterion criterion) {
  return criterion == WinCriterion::Wins ? "WINS" : "TAKES_OVER";
}

// ---------------------------------------------------------------------------
// Elites

namespace {

bool evaluate_elites(const Graph& g, const EliteQuery& query, std::span<const NodeId> order, std::size_t k) {
  const std::size_t n = g.num_nodes();
  Coloring coloring(n, query.background);
  ModelConfig model = query.model;
  if (query.influence != 1) model.influence.assign(n, 1);
  for (std::size_t i = 0; i < k; ++i) {
    coloring.set(order[i], Color::Black);
    if (query.influence != 1) model.influence[order[i]] = query.influence;
  }
  const RunResult result = run(g, coloring, model);
  const Outcome outcome = classify_outcome(result, n);
  return query.criterion == WinCriterion::Wins ? outcome.has(OutcomeLabel::BlackWins)
                                               : outcome.has(OutcomeLabel::BlackTakesOver);
}

}  // namespace

bool elite_set_wins(const Graph& g, const EliteQuery& query, std::size_t k) {
  if (k > g.num_nodes()) throw ParameterError("elite size exceeds n");
  const auto order = nodes_by_degree(g);
  return evaluate_elites(g, query, order, k);
}

std::size_t elite_grid_step(std::size_t n, double resolution) {
  if (!(resolution > 0.0)) throw ParameterError("elite scan resolution must be positive");
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(resolution * static_cast<double>(n))));
}

double default_elite_resolution(std::size_t n) {
  if (n == 0) return 1.0;
  return n <= 1000 ? 1.0 / static_cast<double>(n) : 0.001;
}

EliteScanResult scan_winning_elite(const Graph& g, const EliteQuery& query, double resolution,
                                   ScanStrategy strategy) {
  if (query.influence == 0) throw ParameterError("elite influence factor must be >= 1");
  const std::size_t n = g.num_nodes();
  const std::size_t step = elite_grid_step(n, resolution);
  const auto order = nodes_by_degree(g);
  EliteScanResult result;
  result.fraction = 1.0 + resolution;

  auto wins = [&](std::size_t k) {
    ++result.simulations;
    return evaluate_elites(g, query, order, k);
  };
  auto finish = [&](std::size_t k) {
    result.found = true;
    result.k = k;
    result.fraction = static_cast<double>(k) / static_cast<double>(n);
    return result;
  };

  std::size_t first = step;
  std::size_t last = n;
  if (strategy == ScanStrategy::GallopThenLinear) {
    std::size_t probe = step;
    std::size_t below = 0;
    bool bracketed = false;
    while (probe <= n) {
      if (wins(probe)) {
        bracketed = true;
        break;
      }
      below = probe;
      probe *= 2;
    }
    if (!bracketed) {
      first = below + step;
    } else {
      first = below + step;
      last = probe;
      for (std::size_t k = first; k < last; k += step) {
        if (wins(k)) return finish(k);
      }
      return finish(last);
    }
  }
  for (std::size_t k = first; k <= last; k += step) {
    if (wins(k)) return finish(k);
  }
  return result;
}

std::size_t cm1_degree(const DegreeStats& stats, std::uint32_t r) {
  if (r == 0) throw ParameterError("influence factor r must be >= 1");
  return parity_adjusted_degree(2.0 * static_cast<double>(r) * stats.average(), stats.n);
}

Graph apply_cm1(const Graph& g, std::uint32_t r, std::uint64_t seed) {
  const std::size_t d = cm1_degree(degree_stats(g), r);
  return graph_union(g, gen_rrg(g.num_nodes(), d, seed));
}

ModelConfig apply_cm2(const Graph& g, std::uint32_t r) {
  if (r == 0) throw ParameterError("influence factor r must be >= 1");
  const auto twice = 2 * static_cast<std::int64_t>(r);
  return ModelConfig::uniform_stubbornness(g.num_nodes(), Rational(twice - 1, twice));
}

StubbornnessBound stubbornness_bound(const Graph& g, const NodeSet& z, std::uint32_t r) {
  if (r == 0) throw ParameterError("influence factor r must be >= 1");
  if (2 * z.size() >= g.num_nodes()) throw ParameterError("stubbornness_bound requires |Z| < n/2");
  const auto in_z = to_mask(z, g.num_nodes());
  StubbornnessBound out;
  out.f = Rational(0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (in_z[v] || g.degree(v) == 0) continue;
    const Rational ratio(static_cast<std::int64_t>(degree_into(g, v, in_z)), static_cast<std::int64_t>(g.degree(v)));
    out.f = std::max(out.f, ratio);
  }
  const Rational rf = Rational(r) * out.f;
  out.gamma_min = out.f == Rational(0) ? Rational(0) : rf / (rf + Rational(1) - out.f);
  out.infeasible = out.f == Rational(1);
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

struct TrialOutcome {
  bool timed_out = false;
  Outcome outcome;
  std::size_t stabilization = 0;
};

PhaseRow aggregate(double parameter, const std::vector<TrialOutcome>& trials) {
  PhaseRow row;
  row.parameter = parameter;
  row.trials = trials.size();
  double frac_sum = 0.0;
  double stab_sum = 0.0;
  std::size_t completed = 0;
  for (const TrialOutcome& t : trials) {
    row.outcomes.push_back(t.outcome);
    row.stabilization_times.push_back(t.stabilization);
    if (t.timed_out) {
      ++row.timeouts;
      continue;
    }
    ++completed;
    frac_sum += t.outcome.black_fraction;
    stab_sum += static_cast<double>(t.stabilization);
    for (std::size_t l = 0; l < kOutcomeLabelCount; ++l) {
      if (t.outcome.has(static_cast<OutcomeLabel>(l))) ++row.label_counts[l];
    }
    ++row.primary_counts[static_cast<std::size_t>(t.outcome.primary)];
  }
  if (completed > 0) {
    row.mean_black_fraction = frac_sum / static_cast<double>(completed);
    row.mean_stabilization_time = stab_sum / static_cast<double>(completed);
  }
  return row;
}

TrialOutcome run_trial(const Graph& g, const Coloring& initial, const ModelConfig& config, std::size_t max_rounds,
                       double mono_tol, double balance_tol) {
  TrialOutcome out;
  try {
    RunOptions options;
    options.max_rounds = max_rounds;
    const RunResult result = run(g, initial, config, options);
    out.outcome = classify_outcome(result, g.num_nodes(), mono_tol, balance_tol);
    out.stabilization = result.stabilization_time;
  } catch (const TimeoutError&) {
    out.timed_out = true;
    out.outcome.labels = 0;
  }
  return out;
}

}  // namespace

std::vector<double> linear_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || hi < lo) throw ParameterError("invalid grid");
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) {
    // Round to 1e-12 so 0.1 + 0.2 style drift never shows up in CSV output.
    grid.push_back(std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return grid;
}

PhaseReport density_sweep(const Graph& g, const SweepSpec& spec) {
  spec.config.validate(g.num_nodes());
  if (spec.trials == 0) throw ParameterError("sweep needs at least one trial");
  for (double p : spec.p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p_b grid values must lie in [0, 1]");
  }
  PhaseReport report;
  report.parameter_name = "p_b";
  const std::size_t cells = spec.p_grid.size() * spec.trials;
  std::vector<TrialOutcome> results(cells);
  detail::parallel_for(cells, spec.jobs, [&](std::size_t cell) {
    const std::size_t p_index = cell / spec.trials;
    const std::size_t trial = cell % spec.trials;
    const Coloring initial = random_coloring(g.num_nodes(), spec.p_grid[p_index], spec.base_seed + trial);
    results[cell] = run_trial(g, initial, spec.config, spec.max_rounds, spec.mono_tol, spec.balance_tol);
  });
  for (std::size_t p = 0; p < spec.p_grid.size(); ++p) {
    const auto first = results.begin() + static_cast<std::ptrdiff_t>(p * spec.trials);
    report.rows.push_back(
        aggregate(spec.p_grid[p], std::vector<TrialOutcome>(first, first + static_cast<std::ptrdiff_t>(spec.trials))));
  }
  return report;
}

PhaseReport conjecture_experiment(const ConjectureSpec& spec) {
  if (spec.trials == 0) throw ParameterError("conjecture experiment needs at least one trial");
  PhaseReport report;
  report.parameter_name = "c";
  const std::size_t cells = spec.c_values.size() * spec.trials;
  std::vector<TrialOutcome> results(cells);
  const ModelConfig majority = ModelConfig::majority();
  detail::parallel_for(cells, spec.jobs, [&](std::size_t cell) {
    const std::size_t c_index = cell / spec.trials;
    const std::size_t trial = cell % spec.trials;
    const double c = spec.c_values[c_index];
    if (c < 0.0 || c > static_cast<double>(spec.n)) throw ParameterError("c must lie in [0, n]");
    const double q = spec.n == 0 ? 0.0 : c / static_cast<double>(spec.n);
    const Graph g = gen_er(spec.n, q, splitmix64(spec.seed + 2 * trial));
    const Coloring initial = random_coloring(spec.n, 0.5, splitmix64(spec.seed + 2 * trial + 1));
    results[cell] = run_trial(g, initial, majority, 0, spec.mono_tol, spec.balance_tol);
  });
  for (std::size_t c = 0; c < spec.c_values.size(); ++c) {
    const auto first = results.begin() + static_cast<std::ptrdiff_t>(c * spec.trials);
    report.rows.push_back(aggregate(spec.c_values[c],
                                    std::vector<TrialOutcome>(first, first + static_cast<std::ptrdiff_t>(spec.trials))));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Mixing

double mixing_slack_ratio(const Graph& g, const NodeSet& s1, const NodeSet& s2, double sigma) {
  if (s1.empty() || s2.empty()) return 0.0;
  const double n = static_cast<double>(g.num_nodes());
  const double d = static_cast<double>(g.degree(0));
  const double a = static_cast<double>(s1.size());
  const double b = static_cast<double>(s2.size());
  const double deviation = std::abs(static_cast<double>(edges_between(g, s1, s2)) - a * b * d / n);
  const double bound = sigma * d * std::sqrt(a * b);
  if (bound == 0.0) return deviation == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return deviation / bound;
}

MixingReport verify_mixing(const Graph& g, std::size_t samples, std::uint64_t seed) {
  const DegreeStats stats = degree_stats(g);
  if (stats.n == 0 || stats.min_degree != stats.max_degree) throw ParameterError("verify_mixing needs a regular graph");
  MixingReport report;
  report.degree = stats.min_degree;
  report.sigma = sigma(g);

  Rng rng(seed);
  std::vector<NodeId> pool(stats.n);
  std::iota(pool.begin(), pool.end(), NodeId{0});
  auto random_set = [&] {
    const std::size_t size = 1 + uniform_below(rng, stats.n);
    for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + uniform_below(rng, stats.n - i)]);
    return NodeSet(stats.n, std::vector<NodeId>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size)));
  };

  std::vector<std::pair<NodeSet, NodeSet>> pairs;
  pairs.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    NodeSet a = random_set();
    NodeSet b = random_set();
    pairs.emplace_back(std::move(a), std::move(b));
  }

  auto check_all = [&] {
    report.violations.clear();
    report.max_slack_ratio = 0.0;
    report.checked = 0;
    for (const auto& [a, b] : pairs) {
      const double ratio = mixing_slack_ratio(g, a, b, report.sigma);
      report.max_slack_ratio = std::max(report.max_slack_ratio, ratio);
      ++report.checked;
      if (ratio > 1.0) {
        const double d = static_cast<double>(report.degree);
        report.violations.push_back({a.size(), b.size(), edges_between(g, a, b),
                                     report.sigma * d * std::sqrt(static_cast<double>(a.size() * b.size()))});
      }
    }
  };
  check_all();
  if (!report.violations.empty()) {
    // The lemma is exact, so a violation points at an underestimated sigma.
    SigmaOptions tight;
    tight.tolerance = 1e-13;
    tight.max_iterations = 1000000;
    report.sigma = estimate_sigma(g, tight).sigma;
    report.sigma_retried = true;
    check_all();
  }
  return report;
}

AlternatingPathReport alternating_path_bound(const Coloring& coloring) {
  const std::size_t n = coloring.size();
  AlternatingPathReport out;
  if (n == 0) return out;
  auto black = [&](std::size_t v) { return coloring.is_black(static_cast<NodeId>(v % n)); };
  std::size_t start = n;  // first node after a monochromatic edge
  for (std::size_t v = 0; v < n; ++v) {
    if (black(v) == black(v + 1)) {
      start = v + 1;
      break;
    }
  }
  if (start == n) {
    out.longest = n;
    out.interior = n;
    out.periodic = true;
    return out;
  }
  std::size_t run = 1;
  std::size_t inner = 0;
  out.longest = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = start + i;
    if (i + 1 < n) {
      run = black(v) != black(v + 1) ? run + 1 : 1;
      out.longest = std::max(out.longest, run);
    }
    inner = black(v + n - 1) != black(v) && black(v + 1) != black(v) ? inner + 1 : 0;
    out.interior = std::max(out.interior, inner);
  }
  out.bound = out.longest >= 2 ? (out.longest + 1) / 2 : 0;
  return out;
}

}  // namespace opdyn
