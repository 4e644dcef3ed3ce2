// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "opdyn/analysis.hpp"
#include "opdyn/dynamics.hpp"
#include "opdyn/generators.hpp"
#include "opdyn/ingest.hpp"
#include "opdyn/random.hpp"
#include "opdyn/report.hpp"
#include "opdyn/suites.hpp"
#include "oracles.hpp"

using namespace opdyn;

namespace {

struct Verdict {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::string suite_detail(const SuiteReport& r) {
  std::string s = fmt("%zu instances", r.instances);
  for (const auto& [k, v] : r.stats) s += ", " + k + "=" + v;
  for (const auto& f : r.failures) s += "; " + f;
  return s;
}

// 1: every run ends in a cycle of length 1 or 2.
Verdict period_bound() {
  const SuiteReport r = period_suite({.instances = 10000, .max_n = 200, .seed = 1});
  return {r.passed && r.instances == 10000, suite_detail(r)};
}

// 2: descent certificates over every colouring of 20 graphs on 8 nodes.
Verdict potential_exhaustive() {
  const SuiteReport r = potential_suite({.n = 8, .graphs = 20, .exhaustive = true, .seed = 1});
  return {r.passed && r.instances == 256 * 20 * 4, suite_detail(r)};
}

// 3: cycle stabilization within log2 n.
Verdict cycle_stabilization() {
  const SuiteReport r = cycle_suite({.n = 100000, .trials = 8, .required = 7, .p_black = 0.5, .seed = 1});
  return {r.passed, suite_detail(r)};
}

// 4: sparse ER at p_b = 1/2, c = 12 vs c = 8.
Verdict conjecture() {
  ConjectureSpec spec;
  spec.n = 100000;
  spec.c_values = {8.0, 12.0};
  spec.trials = 8;
  spec.seed = 1;
  const PhaseReport report = conjecture_experiment(spec);
  const std::size_t balanced = report.rows[0].count(OutcomeLabel::AlmostBalanced);
  const std::size_t mono = report.rows[1].count(OutcomeLabel::AlmostMonochromatic);
  std::string detail = fmt("c=8 almost balanced %zu/8, c=12 almost monochromatic %zu/8; c=8 final black fractions:",
                           balanced, mono);
  for (const Outcome& o : report.rows[0].outcomes) detail += fmt(" %.4f", o.black_fraction);
  // Same experiment at n = 1e6 for reference; it does not affect the verdict.
  spec.n = 1000000;
  const PhaseReport large = conjecture_experiment(spec);
  detail += fmt("; at n=1e6: c=8 almost balanced %zu/8, c=12 almost monochromatic %zu/8",
                large.rows[0].count(OutcomeLabel::AlmostBalanced), large.rows[1].count(OutcomeLabel::AlmostMonochromatic));
  return {balanced >= 6 && mono >= 6, detail};
}

// 5: dense ER under the (0.7, 0.8) rule.
Verdict dense_psi() {
  const Graph g = gen_er(10000, 0.05, 1);
  SweepSpec spec;
  spec.config = ModelConfig::psi(Rational(7, 10), Rational(4, 5));
  spec.p_grid = {0.15, 0.5, 0.85};
  spec.trials = 8;
  spec.base_seed = 1;
  const PhaseReport report = density_sweep(g, spec);
  const std::size_t white = report.rows[0].count(OutcomeLabel::WhiteTakesOver);
  const std::size_t mixed = report.rows[1].count(OutcomeLabel::Mixed);
  const std::size_t black = report.rows[2].count(OutcomeLabel::BlackTakesOver);
  return {white >= 7 && mixed >= 7 && black >= 7,
          fmt("p_b=0.15 white takes over %zu/8, p_b=0.5 mixed %zu/8 (mean black %.4f), p_b=0.85 black takes over %zu/8",
              white, mixed, report.rows[1].mean_black_fraction, black)};
}

// 6: stubbornness above gamma_min keeps Z contained.
Verdict stubbornness() {
  const SuiteReport r = stubbornness_suite({.instances = 50, .max_n = 100, .max_r = 10, .seed = 1});
  return {r.passed && r.instances == 50, suite_detail(r)};
}

// 7: expander mixing on RRG(2000, 16).
Verdict mixing() {
  const SuiteReport r = mixing_suite({.n = 2000, .d = 16, .samples = 100, .sigma_slack = 0.05, .seed = 1});
  return {r.passed, suite_detail(r)};
}

double elite_fraction(const Graph& g, std::uint32_t r, const ModelConfig& model = {}) {
  EliteQuery q;
  q.influence = r;
  q.model = model;
  const double resolution = 1.0 / static_cast<double>(g.num_nodes());
  return scan_winning_elite(g, q, resolution, ScanStrategy::GallopThenLinear).fraction;
}

// Optional check against a real network: OPDYN_FB_EDGES points at the
// Facebook edge list.
void facebook_check() {
  const char* path = std::getenv("OPDYN_FB_EDGES");
  if (path == nullptr) {
    std::printf("    facebook elites: SKIP (OPDYN_FB_EDGES not set)\n");
    return;
  }
  const Graph g = load_edge_list(path, known_dataset("FB", path)).graph;
  const DegreeStats stats = degree_stats(g);
  const double plain = elite_fraction(g, 16);
  const double cm1 = elite_fraction(apply_cm1(g, 16, 1), 16);
  const double cm2 = elite_fraction(g, 16, apply_cm2(g, 16));
  auto within = [](double got, double want) { return std::abs(got - want) <= 0.25 * want; };
  const bool ok = within(plain, 0.004) && within(cm1, 0.10) && within(cm2, 0.33);
  std::printf("    facebook elites: %s (n=%zu avg %.2f: plain %.4f, cm1 %.4f, cm2 %.4f)\n", ok ? "PASS" : "FAIL",
              g.num_nodes(), stats.average(), plain, cm1, cm2);
}

// 8: elites on HRG need far fewer nodes than on PA at a matched degree.
Verdict elite_asymmetry() {
  constexpr std::size_t n = 20000;
  double hrg_sum = 0.0, pa_sum = 0.0;
  std::size_t below = 0;
  std::string per_seed;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph pa = gen_pa(n, 13, seed);
    const double target = degree_stats(pa).average();
    const Graph hrg = gen_hrg(n, target, 2.5, 0.6, seed);
    const double fh = elite_fraction(hrg, 16);
    const double fp = elite_fraction(pa, 16);
    hrg_sum += fh;
    pa_sum += fp;
    below += fh < 0.5 * fp ? 1 : 0;
    per_seed += fmt(" %.4f/%.4f", fh, fp);
  }
  facebook_check();
  const double hrg_mean = hrg_sum / 8.0, pa_mean = pa_sum / 8.0;
  return {hrg_mean < 0.5 * pa_mean,
          fmt("mean hrg %.5f vs pa %.5f, ratio %.3f, per seed hrg/pa:", hrg_mean, pa_mean, hrg_mean / pa_mean) +
              per_seed + fmt(" (%zu/8 below half)", below)};
}

// 9: engine vs naive per-node rule, every colouring, every round.
Verdict brute_force() {
  Rng rng = derived_rng(9, 0);
  std::size_t colorings = 0, rounds = 0, mismatches = 0;
  std::string first;
  for (std::size_t gi = 0; gi < 20; ++gi) {
    const std::size_t n = 3 + gi % 8;
    const Graph g = gen_er(n, 0.3 + 0.4 * uniform01(rng), splitmix64(gi));
    const oracle::Matrix a = oracle::adjacency(g);
    oracle::Rule rule;
    switch (gi % 3) {
      case 0: break;
      case 1:
        rule.psi = true;
        rule.psi1 = {static_cast<std::int64_t>(51 + uniform_below(rng, 50)), 100};
        rule.psi2 = {static_cast<std::int64_t>(51 + uniform_below(rng, 50)), 100};
        break;
      default:
        for (std::size_t v = 0; v < n; ++v) rule.gamma.push_back({static_cast<std::int64_t>(1 + uniform_below(rng, 9)), 10});
    }
    if (gi % 2 == 1) {
      for (std::size_t v = 0; v < n; ++v) rule.r.push_back(static_cast<std::int64_t>(1 + uniform_below(rng, 8)));
    }
    const ModelConfig config = oracle::to_config(rule);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ++colorings;
      Coloring c(n);
      for (NodeId v = 0; v < n; ++v) c.set(v, (mask >> v) & 1 ? Color::Black : Color::White);
      const oracle::Trajectory t = oracle::run(a, oracle::to_vector(c), rule);
      for (std::size_t k = 0; k + 1 < t.states.size() + t.period; ++k) {
        ++rounds;
        c = step(g, c, config);
        const std::size_t idx = k + 1 < t.states.size() ? k + 1 : t.stabilization + (k + 1 - t.states.size());
        if (oracle::to_vector(c) != t.states[idx]) {
          if (mismatches++ == 0) first = fmt("; first mismatch graph %zu mask %llu round %zu", gi, static_cast<unsigned long long>(mask), k + 1);
          break;
        }
      }
    }
  }
  return {mismatches == 0, fmt("%zu colourings, %zu rounds compared, %zu mismatches", colorings, rounds, mismatches) + first};
}

std::string sweep_csv(const Graph& g, std::size_t jobs) {
  SweepSpec spec;
  spec.p_grid = linear_grid(0.0, 1.0, 0.1);
  spec.trials = 8;
  spec.base_seed = 7;
  spec.jobs = jobs;
  std::ostringstream out;
  write_phase_csv(out, {{"seed", "7"}}, density_sweep(g, spec));
  return out.str();
}

std::string conjecture_csv(std::size_t jobs) {
  ConjectureSpec spec;
  spec.n = 20000;
  spec.trials = 4;
  spec.seed = 7;
  spec.jobs = jobs;
  std::ostringstream out;
  write_phase_csv(out, {}, conjecture_experiment(spec));
  return out.str();
}

std::string elite_csv(std::uint64_t seed) {
  const Graph g = gen_hrg(3000, 12.0, 2.5, 0.6, seed);
  std::vector<EliteRow> rows;
  for (std::uint32_t r : {1u, 4u, 16u}) rows.push_back({r, elite_fraction(g, r), WinCriterion::Wins});
  std::ostringstream out;
  write_elite_csv(out, {}, rows);
  return out.str();
}

// 10: same seed, same bytes, regardless of the worker count.
Verdict determinism() {
  const Graph er = gen_er(5000, 0.002, 7);
  const bool same_graph = gen_er(5000, 0.002, 7).edges() == er.edges() &&
                          gen_rrg(2000, 16, 7).edges() == gen_rrg(2000, 16, 7).edges() &&
                          gen_pa(5000, 3, 7).edges() == gen_pa(5000, 3, 7).edges();
  const std::string sweep = sweep_csv(er, 1);
  const bool sweep_ok = sweep == sweep_csv(er, 1) && sweep == sweep_csv(er, 4);
  const std::string conj = conjecture_csv(1);
  const bool conj_ok = conj == conjecture_csv(1) && conj == conjecture_csv(3);
  const bool elite_ok = elite_csv(7) == elite_csv(7);
  return {same_graph && sweep_ok && conj_ok && elite_ok,
          fmt("graphs %s, sweep csv %s (%zu bytes), conjecture csv %s, elite csv %s", same_graph ? "identical" : "differ",
              sweep_ok ? "identical" : "differ", sweep.size(), conj_ok ? "identical" : "differ",
              elite_ok ? "identical" : "differ")};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0: no runtime requirement
  std::function<Verdict()> check;
};

}  // namespace

// Usage: opdyn_acceptance [--known-failure ID]...
// A known failure still prints FAIL but does not change the exit status.
int main(int argc, char** argv) {
  std::vector<int> known;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::string(argv[i]) != "--known-failure") {
      std::fprintf(stderr, "unknown argument %s\n", argv[i]);
      return 2;
    }
    known.push_back(std::atoi(argv[i + 1]));
  }
  const std::vector<Criterion> criteria{
      {1, "period bound", 120, period_bound},
      {2, "potential descent, exhaustive n=8", 300, potential_exhaustive},
      {3, "cycle stabilization n=1e5", 60, cycle_stabilization},
      {4, "sparse ER conjecture n=1e5", 600, conjecture},
      {5, "dense ER (0.7,0.8) phases", 300, dense_psi},
      {6, "stubbornness containment", 60, stubbornness},
      {7, "expander mixing RRG(2000,16)", 120, mixing},
      {8, "elite asymmetry HRG vs PA", 1800, elite_asymmetry},
      {9, "brute-force dynamics equivalence", 120, brute_force},
      {10, "determinism", 0, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      v.passed = false;
      v.detail += fmt("; over the %.0f s budget", c.budget_seconds);
    }
    std::printf("criterion %2d %s  %s (%.1f s): %s\n", c.id, v.passed ? "PASS" : "FAIL", c.name, seconds,
                v.detail.c_str());
    std::fflush(stdout);
    const bool excused = std::find(known.begin(), known.end(), c.id) != known.end();
    if (!v.passed && excused) std::printf("             (known failure, not counted)\n");
    failed += v.passed || excused ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
