#include "opdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "opdyn/error.hpp"
#include "opdyn/random.hpp"

namespace opdyn {

Coloring Coloring::from_string(std::string_view text) {
  Coloring c(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'b':
      case 'B': c.set(static_cast<NodeId>(i), Color::Black); break;
      case 'w':
      case 'W': break;
      default: throw ParameterError("coloring string may contain only 'b' and 'w'");
    }
  }
  return c;
}

std::string Coloring::to_string() const {
  std::string out(n_, 'w');
  for (NodeId v = 0; v < n_; ++v) {
    if (is_black(v)) out[v] = 'b';
  }
  return out;
}

Coloring Coloring::from_bits(std::size_t n, std::uint64_t bits) {
  Coloring c(n);
  if (n > 0) c.words_[0] = bits;
  c.clear_tail();
  return c;
}

ModelConfig ModelConfig::psi(Rational psi1, Rational psi2) {
  ModelConfig c;
  c.variant = Variant::Psi;
  c.psi_black = psi1;
  c.psi_white = psi2;
  return c;
}

ModelConfig ModelConfig::uniform_stubbornness(std::size_t n, Rational gamma) {
  ModelConfig c;
  c.stubbornness.assign(n, gamma);
  return c;
}

void ModelConfig::validate(std::size_t n) const {
  const Rational half(1, 2);
  const Rational one(1);
  if (variant == Variant::Psi) {
    for (const Rational& psi : {psi_black, psi_white}) {
      if (!(psi > half && psi <= one)) {
        throw ParameterError("psi must lie in (1/2, 1], got " + psi.to_string());
      }
    }
    if (!stubbornness.empty()) {
      throw ParameterError("stubbornness cannot be combined with the (psi1, psi2) variant");
    }
  }
  if (!influence.empty()) {
    if (influence.size() != n) throw ParameterError("influence vector length differs from n");
    if (std::find(influence.begin(), influence.end(), 0u) != influence.end()) {
      throw ParameterError("influence factors must be positive");
    }
  }
  if (!stubbornness.empty()) {
    if (stubbornness.size() != n) throw ParameterError("stubbornness vector length differs from n");
    for (const Rational& gamma : stubbornness) {
      if (!(gamma > Rational(0) && gamma < one)) {
        throw ParameterError("stubbornness must lie in (0, 1), got " + gamma.to_string());
      }
    }
  }
}

Tally weighted_tally(const Graph& g, const Coloring& coloring, const ModelConfig& config, NodeId v) {
  Tally t;
  const bool black = coloring.is_black(v);
  for (NodeId u : g.neighbors(v)) {
    const std::int64_t w = config.influence_of(u);
    t.total += w;
    if (coloring.is_black(u) != black) t.opposite += w;
  }
  return t;
}

bool flips(const ModelConfig& config, NodeId v, Color current, const Tally& tally) {
  if (tally.total == 0) return false;
  if (!config.stubbornness.empty()) return at_least_fraction(tally.opposite, config.stubbornness[v], tally.total);
  if (config.variant == Variant::Majority) return 2 * tally.opposite > tally.total;
  const Rational& ratio = current == Color::Black ? config.psi_black : config.psi_white;
  return at_least_fraction(tally.opposite, ratio, tally.total);
}

std::size_t step_into(const Graph& g, const Coloring& in, const ModelConfig& config, Coloring& out) {
  const std::size_t n = g.num_nodes();
  if (in.size() != n) throw ParameterError("coloring length differs from graph size");
  out = in;
  std::size_t changed = 0;
  const bool unit_influence = config.influence.empty();
  for (NodeId v = 0; v < n; ++v) {
    const bool black = in.is_black(v);
    Tally t;
    if (unit_influence) {
      const auto row = g.neighbors(v);
      t.total = static_cast<std::int64_t>(row.size());
      for (NodeId u : row) t.opposite += in.is_black(u) != black ? 1 : 0;
    } else {
      t = weighted_tally(g, in, config, v);
    }
    if (flips(config, v, black ? Color::Black : Color::White, t)) {
      out.flip(v);
      ++changed;
    }
  }
  return changed;
}

Coloring step(const Graph& g, const Coloring& coloring, const ModelConfig& config) {
  Coloring out;
  step_into(g, coloring, config, out);
  return out;
}

std::size_t default_max_rounds(const Graph& g) { return 4 * g.num_edges() + 10; }

RunResult run(const Graph& g, const Coloring& initial, const ModelConfig& config, const RunOptions& options) {
  config.validate(g.num_nodes());
  if (initial.size() != g.num_nodes()) throw ParameterError("coloring length differs from graph size");
  const std::size_t max_rounds = options.max_rounds == 0 ? default_max_rounds(g) : options.max_rounds;

  RunResult result;
  result.m_star = count_bichromatic(g, initial);
  result.black_count_per_round.push_back(initial.count_black());
  if (options.record_bichromatic) result.bichromatic_per_round.push_back(result.m_star);

  Coloring older;              // C_{t-2}
  Coloring previous = initial;  // C_{t-1}
  Coloring current;
  for (std::size_t t = 1; t <= max_rounds; ++t) {
    const std::size_t changed = step_into(g, previous, config, current);
    result.rounds_executed = t;
    result.black_count_per_round.push_back(current.count_black());
    if (options.record_bichromatic) result.bichromatic_per_round.push_back(count_bichromatic(g, current));

    if (changed == 0) {
      result.period = 1;
      result.stabilization_time = t - 1;
      result.final_colorings.push_back(std::move(previous));
      return result;
    }
    if (t >= 2 && current == older) {
      result.period = 2;
      result.stabilization_time = t - 2;
      result.final_colorings.push_back(std::move(older));
      result.final_colorings.push_back(std::move(previous));
      return result;
    }
    std::swap(older, previous);
    std::swap(previous, current);
  }

  const auto& series = result.black_count_per_round;
  const std::size_t keep = std::min<std::size_t>(series.size(), 16);
  throw TimeoutError("no cycle reached within " + std::to_string(max_rounds) + " rounds",
                     std::vector<std::size_t>(series.end() - static_cast<std::ptrdiff_t>(keep), series.end()));
}

Coloring random_coloring(std::size_t n, double p_black, std::uint64_t seed) {
  if (!(p_black >= 0.0 && p_black <= 1.0)) throw ParameterError("p_b must lie in [0, 1]");
  Rng rng(seed);
  Coloring c(n);
  for (NodeId v = 0; v < n; ++v) {
    if (bernoulli(rng, p_black)) c.set(v, Color::Black);
  }
  return c;
}

std::size_t count_bichromatic(const Graph& g, const Coloring& coloring) {
  std::size_t count = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const bool black = coloring.is_black(u);
    for (NodeId v : g.neighbors(u)) {
      if (u < v && coloring.is_black(v) != black) ++count;
    }
  }
  return count;
}

const char* to_string(OutcomeLabel label) {
  switch (label) {
    case OutcomeLabel::BlackTakesOver: return "BLACK_TAKES_OVER";
    case OutcomeLabel::WhiteTakesOver: return "WHITE_TAKES_OVER";
    case OutcomeLabel::AlmostMonochromatic: return "ALMOST_MONOCHROMATIC";
    case OutcomeLabel::AlmostBalanced: return "ALMOST_BALANCED";
    case OutcomeLabel::BlackWins: return "BLACK_WINS";
    case OutcomeLabel::WhiteWins: return "WHITE_WINS";
    case OutcomeLabel::Mixed: return "MIXED";
  }
  return "?";
}

Outcome classify_coloring(const Coloring& coloring, double mono_tol, double balance_tol) {
  const std::size_t n = coloring.size();
  const std::size_t black = coloring.count_black();
  const std::size_t white = n - black;
  Outcome out;
  out.black_fraction = n == 0 ? 0.0 : static_cast<double>(black) / static_cast<double>(n);

  auto mark = [&](OutcomeLabel label) { out.labels |= 1u << static_cast<unsigned>(label); };
  if (black == n) mark(OutcomeLabel::BlackTakesOver);
  if (white == n) mark(OutcomeLabel::WhiteTakesOver);
  if (static_cast<double>(std::min(black, white)) <= mono_tol * static_cast<double>(n)) {
    mark(OutcomeLabel::AlmostMonochromatic);
  }
  if (std::abs(out.black_fraction - 0.5) <= balance_tol) mark(OutcomeLabel::AlmostBalanced);
  if (2 * black > n) mark(OutcomeLabel::BlackWins);
  if (2 * white > n) mark(OutcomeLabel::WhiteWins);
  if (black > 0 && white > 0) mark(OutcomeLabel::Mixed);

  for (OutcomeLabel label : {OutcomeLabel::BlackTakesOver, OutcomeLabel::WhiteTakesOver,
                             OutcomeLabel::AlmostMonochromatic, OutcomeLabel::AlmostBalanced,
                             OutcomeLabel::BlackWins, OutcomeLabel::WhiteWins, OutcomeLabel::Mixed}) {
    if (out.has(label)) {
      out.primary = label;
      break;
    }
  }
  return out;
}

Outcome classify_outcome(const RunResult& result, std::size_t n, double mono_tol, double balance_tol) {
  if (result.final_colorings.empty() || result.final_colorings.front().size() != n) {
    throw ParameterError("classify_outcome: run result has no final coloring of size n");
  }
  return classify_coloring(result.final_colorings.front(), mono_tol, balance_tol);
}

}  // namespace opdyn
