#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "opdyn/analysis.hpp"
#include "opdyn/dynamics.hpp"
#include "opdyn/error.hpp"
#include "opdyn/ingest.hpp"
#include "opdyn/random.hpp"
#include "opdyn/report.hpp"
#include "opdyn/suites.hpp"

namespace opdyn::cli {

namespace {

// Shortest round-trip decimal, used to echo configuration values.
std::string real(double x) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, result.ptr);
}

template <class T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (const T& v : values) {
    if (!out.empty()) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += real(v);
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

// Colouring seeds are derived from the base seed so that they never share a
// stream with the graph generator, which consumes `seed` directly.
std::uint64_t coloring_seed(const ExperimentConfig& c) { return splitmix64(c.seed); }
std::uint64_t overlay_seed(const ExperimentConfig& c) { return splitmix64(c.seed + 1); }

RrgStrategy parse_rrg_strategy(const std::string& text) {
  if (text == "steger-wormald") return RrgStrategy::StegerWormald;
  if (text == "restart") return RrgStrategy::RestartPairing;
  throw ParameterError("unknown RRG strategy '" + text + "' (expected steger-wormald or restart)");
}

GenSpec generator_spec(const ExperimentConfig& c) {
  GenSpec spec;
  spec.family = parse_family(c.family);
  spec.n = c.n;
  spec.q = c.q;
  spec.d = c.d;
  spec.m_out = c.m_out;
  spec.target_avg_deg = c.avg_deg;
  spec.beta = c.beta;
  spec.temperature = c.temperature;
  spec.seed = c.seed;
  spec.rrg_strategy = parse_rrg_strategy(c.rrg_strategy);
  spec.validate();
  return spec;
}

void describe_spec(CsvHeader& h, const GenSpec& spec) {
  h.emplace_back("family", to_string(spec.family));
  h.emplace_back("n", std::to_string(spec.n));
  switch (spec.family) {
    case Family::ER:
      h.emplace_back("q", real(spec.q));
      break;
    case Family::RRG:
      h.emplace_back("d", std::to_string(spec.d));
      h.emplace_back("rrg_strategy", spec.rrg_strategy == RrgStrategy::StegerWormald ? "steger-wormald" : "restart");
      break;
    case Family::PA:
      h.emplace_back("m_out", std::to_string(spec.m_out));
      break;
    case Family::HRG:
      h.emplace_back("avg_deg", real(spec.target_avg_deg));
      h.emplace_back("beta", real(spec.beta));
      h.emplace_back("temperature", real(spec.temperature));
      break;
    case Family::Cycle:
      break;
  }
  h.emplace_back("graph_seed", std::to_string(spec.seed));
}

struct LoadedSource {
  Graph graph;
  CsvHeader header;
  GenerationInfo info;
};

LoadedSource load_source(const ExperimentConfig& c, bool allow_none = false) {
  const bool from_file = !c.graph_path.empty();
  const bool from_family = !c.family.empty();
  if (from_file && from_family) throw ParameterError("give either --graph or --family, not both");
  if (!from_file && !from_family) {
    if (allow_none) return {};
    throw ParameterError("no graph source: give --graph FILE or --family NAME");
  }
  if (!c.match.empty() && !from_file) throw ParameterError("--match needs --graph");

  LoadedSource src;
  if (from_file) {
    DatasetManifest manifest = c.dataset == "custom" ? DatasetManifest{} : known_dataset(c.dataset, c.graph_path);
    manifest.path = c.graph_path;
    LoadedGraph loaded = load_edge_list(c.graph_path, manifest);
    src.graph = std::move(loaded.graph);
    src.header.emplace_back("graph", c.graph_path);
    src.header.emplace_back("dataset", c.dataset);
    if (!c.match.empty()) {
      GenSpec spec = match_params(degree_stats(src.graph), parse_family(c.match), c.seed);
      spec.rrg_strategy = parse_rrg_strategy(c.rrg_strategy);
      src.header.emplace_back("match", c.match);
      describe_spec(src.header, spec);
      src.graph = generate(spec, &src.info);
    }
  } else {
    const GenSpec spec = generator_spec(c);
    describe_spec(src.header, spec);
    src.graph = generate(spec, &src.info);
  }
  return src;
}

ModelConfig build_model(const ExperimentConfig& c) {
  if (c.model == "majority") return ModelConfig::majority();
  if (c.model == "psi") return ModelConfig::psi(Rational::parse(c.psi1), Rational::parse(c.psi2));
  throw ParameterError("unknown model '" + c.model + "' (expected majority or psi)");
}

void describe_model(CsvHeader& h, const ExperimentConfig& c) {
  h.emplace_back("model", c.model);
  if (c.model == "psi") {
    h.emplace_back("psi1", Rational::parse(c.psi1).to_string());
    h.emplace_back("psi2", Rational::parse(c.psi2).to_string());
  }
}

CsvHeader base_header(const ExperimentConfig& c) {
  return {{"opdyn", OPDYN_VERSION_STRING}, {"command", c.command}, {"seed", std::to_string(c.seed)}};
}

void append(CsvHeader& h, const CsvHeader& more) { h.insert(h.end(), more.begin(), more.end()); }

void describe_stats(CsvHeader& h, const Graph& g) {
  const DegreeStats s = degree_stats(g);
  h.emplace_back("nodes", std::to_string(s.n));
  h.emplace_back("edges", std::to_string(s.m));
  h.emplace_back("avg_degree", format_real(s.average()));
  h.emplace_back("min_degree", std::to_string(s.min_degree));
  h.emplace_back("max_degree", std::to_string(s.max_degree));
}

std::string max_rounds_text(std::size_t max_rounds) { return max_rounds == 0 ? "4m+10" : std::to_string(max_rounds); }

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const auto second = text.find(':', colon + 1);
    if (second == std::string::npos) throw ParameterError("grid must be lo:hi:step or a comma list");
    try {
      return linear_grid(std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1, second - colon - 1)),
                         std::stod(text.substr(second + 1)));
    } catch (const std::logic_error&) {
      throw ParameterError("bad grid '" + text + "'");
    }
  }
  std::vector<double> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParameterError("bad grid value '" + item + "'");
    }
  }
  if (out.empty()) throw ParameterError("empty grid");
  return out;
}

int cmd_generate(const ExperimentConfig& c, std::ostream& out) {
  LoadedSource src = load_source(c);
  CsvHeader h = base_header(c);
  append(h, src.header);
  describe_stats(h, src.graph);
  const bool hrg = src.info.hrg.radius > 0.0;
  if (hrg) {
    h.emplace_back("hrg_alpha", format_real(src.info.hrg.alpha));
    h.emplace_back("hrg_radius", format_real(src.info.hrg.radius));
    h.emplace_back("hrg_calibration_steps", std::to_string(src.info.hrg.calibration_steps));
  }
  write_header(out, h);
  write_edge_list(out, src.graph);
  return kExitOk;
}

int cmd_elites(const ExperimentConfig& c, std::ostream& out) {
  if (c.r_values.empty()) throw ParameterError("--r needs at least one value");
  LoadedSource src = load_source(c);
  const ModelConfig model = build_model(c);
  WinCriterion criterion;
  if (c.criterion == "wins") {
    criterion = WinCriterion::Wins;
  } else if (c.criterion == "takes-over") {
    criterion = WinCriterion::TakesOver;
  } else {
    throw ParameterError("unknown criterion '" + c.criterion + "' (expected wins or takes-over)");
  }
  ScanStrategy strategy;
  if (c.strategy == "ascending") {
    strategy = ScanStrategy::Ascending;
  } else if (c.strategy == "gallop") {
    strategy = ScanStrategy::GallopThenLinear;
  } else {
    throw ParameterError("unknown scan strategy '" + c.strategy + "' (expected ascending or gallop)");
  }
  const std::size_t n = src.graph.num_nodes();
  const double resolution = c.resolution > 0.0 ? c.resolution : default_elite_resolution(n);

  CsvHeader h = base_header(c);
  append(h, src.header);
  describe_stats(h, src.graph);
  describe_model(h, c);
  h.emplace_back("r", join(c.r_values));
  h.emplace_back("criterion", to_string(criterion));
  h.emplace_back("countermeasure", c.cm1 && c.cm2 ? "cm1+cm2" : c.cm1 ? "cm1" : c.cm2 ? "cm2" : "none");
  if (c.cm1) h.emplace_back("cm1_seed", std::to_string(overlay_seed(c)));
  h.emplace_back("resolution", real(resolution));
  h.emplace_back("strategy", c.strategy);
  h.emplace_back("max_rounds", "4m+10");

  std::vector<EliteRow> rows;
  for (std::uint32_t r : c.r_values) {
    EliteQuery query;
    query.influence = r;
    query.criterion = criterion;
    const Graph boosted = c.cm1 ? apply_cm1(src.graph, r, overlay_seed(c)) : Graph{};
    const Graph& g = c.cm1 ? boosted : src.graph;
    query.model = model;
    if (c.cm2) {
      if (c.model != "majority") throw ParameterError("--cm2 cannot be combined with --model psi");
      query.model = apply_cm2(g, r);
    }
    rows.push_back({r, scan_winning_elite(g, query, resolution, strategy).fraction, criterion});
  }
  write_elite_csv(out, h, rows);
  return kExitOk;
}

int cmd_sweep(const ExperimentConfig& c, std::ostream& out) {
  LoadedSource src = load_source(c);
  SweepSpec spec;
  spec.config = build_model(c);
  spec.p_grid = parse_grid(c.p_grid);
  spec.trials = c.trials;
  spec.base_seed = coloring_seed(c);
  spec.jobs = c.jobs;
  spec.mono_tol = c.mono_tol;
  spec.balance_tol = c.balance_tol;
  spec.max_rounds = c.max_rounds;

  CsvHeader h = base_header(c);
  append(h, src.header);
  describe_stats(h, src.graph);
  describe_model(h, c);
  h.emplace_back("p_grid", join(spec.p_grid));
  h.emplace_back("trials", std::to_string(spec.trials));
  h.emplace_back("coloring_seed", std::to_string(spec.base_seed) + "+trial");
  h.emplace_back("mono_tol", real(spec.mono_tol));
  h.emplace_back("balance_tol", real(spec.balance_tol));
  h.emplace_back("max_rounds", max_rounds_text(spec.max_rounds));

  const PhaseReport report = density_sweep(src.graph, spec);
  write_phase_csv(out, h, report);
  std::size_t timeouts = 0;
  for (const PhaseRow& row : report.rows) timeouts += row.timeouts;
  return timeouts == report.rows.size() * spec.trials ? kExitVerificationFailed : kExitOk;
}

int cmd_run(const ExperimentConfig& c, std::ostream& out) {
  LoadedSource src = load_source(c);
  const ModelConfig model = build_model(c);
  const Coloring initial = random_coloring(src.graph.num_nodes(), c.p_black, coloring_seed(c));
  RunOptions options;
  options.max_rounds = c.max_rounds;
  options.record_bichromatic = true;
  const RunResult result = run(src.graph, initial, model, options);
  const Outcome outcome = classify_outcome(result, src.graph.num_nodes(), c.mono_tol, c.balance_tol);

  CsvHeader h = base_header(c);
  append(h, src.header);
  describe_stats(h, src.graph);
  describe_model(h, c);
  h.emplace_back("p_b", real(c.p_black));
  h.emplace_back("coloring_seed", std::to_string(coloring_seed(c)));
  h.emplace_back("max_rounds", max_rounds_text(c.max_rounds));
  h.emplace_back("m_star", std::to_string(result.m_star));
  h.emplace_back("stabilization_time", std::to_string(result.stabilization_time));
  h.emplace_back("period", std::to_string(result.period));
  h.emplace_back("outcome", to_string(outcome.primary));
  h.emplace_back("final_black_fraction", format_real(outcome.black_fraction));
  write_trajectory_csv(out, h, result);
  return kExitOk;
}

int cmd_conjecture(const ExperimentConfig& c, std::ostream& out) {
  ConjectureSpec spec;
  spec.n = c.n != 0 ? c.n : c.conjecture_n;
  spec.c_values = c.c_values;
  spec.trials = c.trials;
  spec.seed = c.seed;
  spec.jobs = c.jobs;
  spec.mono_tol = c.mono_tol;
  spec.balance_tol = c.balance_tol;

  CsvHeader h = base_header(c);
  h.emplace_back("family", "er");
  h.emplace_back("n", std::to_string(spec.n));
  h.emplace_back("c", join(spec.c_values));
  h.emplace_back("p_b", "0.5");
  h.emplace_back("model", "majority");
  h.emplace_back("trials", std::to_string(spec.trials));
  h.emplace_back("mono_tol", real(spec.mono_tol));
  h.emplace_back("balance_tol", real(spec.balance_tol));
  h.emplace_back("max_rounds", "4m+10");
  write_phase_csv(out, h, conjecture_experiment(spec));
  return kExitOk;
}

int cmd_verify(const ExperimentConfig& c, std::ostream& out) {
  SuiteReport report;
  CsvHeader h = base_header(c);
  h.emplace_back("suite", c.suite);
  if (c.suite == "period") {
    PeriodSuiteSpec spec;
    if (c.instances) spec.instances = c.instances;
    if (c.max_n) spec.max_n = c.max_n;
    spec.seed = c.seed;
    h.emplace_back("instances", std::to_string(spec.instances));
    h.emplace_back("max_n", std::to_string(spec.max_n));
    report = period_suite(spec);
  } else if (c.suite == "potential") {
    PotentialSuiteSpec spec;
    if (c.n) spec.n = c.n;
    spec.graphs = c.graphs;
    spec.exhaustive = c.exhaustive;
    if (c.instances) spec.colorings = c.instances;
    spec.seed = c.seed;
    spec.psis.clear();
    std::stringstream in(c.psi_list);
    for (std::string item; std::getline(in, item, ',');) spec.psis.push_back(Rational::parse(item));
    std::string psis;
    for (const Rational& p : spec.psis) psis += (psis.empty() ? "" : ",") + p.to_string();
    h.emplace_back("n", std::to_string(spec.n));
    h.emplace_back("graphs", std::to_string(spec.graphs));
    h.emplace_back("psi", psis);
    h.emplace_back("colorings", spec.exhaustive ? "all" : std::to_string(spec.colorings));
    report = potential_suite(spec);
  } else if (c.suite == "mixing") {
    MixingSuiteSpec spec;
    if (c.n) spec.n = c.n;
    spec.d = c.degree;
    spec.samples = c.samples;
    spec.seed = c.seed;
    h.emplace_back("n", std::to_string(spec.n));
    h.emplace_back("d", std::to_string(spec.d));
    h.emplace_back("samples", std::to_string(spec.samples));
    report = mixing_suite(spec);
  } else if (c.suite == "cycle") {
    CycleSuiteSpec spec;
    if (c.n) spec.n = c.n;
    spec.trials = c.trials;
    spec.required = c.trials - c.trials / 8;
    spec.seed = coloring_seed(c);
    h.emplace_back("n", std::to_string(spec.n));
    h.emplace_back("trials", std::to_string(spec.trials));
    h.emplace_back("required_within_log2_n", std::to_string(spec.required));
    report = cycle_suite(spec);
  } else if (c.suite == "stubbornness") {
    StubbornnessSuiteSpec spec;
    if (c.instances) spec.instances = c.instances;
    if (c.max_n) spec.max_n = c.max_n;
    spec.seed = c.seed;
    h.emplace_back("instances", std::to_string(spec.instances));
    h.emplace_back("max_n", std::to_string(spec.max_n));
    report = stubbornness_suite(spec);
  } else {
    throw ParameterError("unknown suite '" + c.suite + "' (expected period, potential, mixing, cycle or stubbornness)");
  }
  append(h, report.stats);
  write_header(out, h);
  out << "suite,status,instances,failures\n";
  out << report.name << ',' << (report.passed ? "PASS" : "FAIL") << ',' << report.instances << ','
      << report.failure_count << '\n';
  for (const std::string& f : report.failures) out << "# failure: " << f << '\n';
  return report.passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace opdyn::cli
