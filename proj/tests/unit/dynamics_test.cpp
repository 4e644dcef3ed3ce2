#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "opdyn/dynamics.hpp"
#include "opdyn/error.hpp"
#include "opdyn/generators.hpp"
#include "opdyn/random.hpp"
#include "oracles.hpp"

using namespace opdyn;

namespace {

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return build_graph(leaves + 1, e);
}

// Random rule drawn from all three variants.
oracle::Rule random_rule(std::size_t n, Rng& rng) {
  oracle::Rule rule;
  const auto kind = uniform_below(rng, 3);
  auto frac_above_half = [&] {
    const std::int64_t q = 2 + static_cast<std::int64_t>(uniform_below(rng, 9));
    const std::int64_t p = q / 2 + 1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(q - q / 2)));
    return oracle::Frac{p, q};
  };
  if (kind == 1) {
    rule.psi = true;
    rule.psi1 = frac_above_half();
    rule.psi2 = frac_above_half();
  } else if (kind == 2) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::int64_t q = 2 + static_cast<std::int64_t>(uniform_below(rng, 9));
      rule.gamma.push_back({1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(q - 1))), q});
    }
  }
  if (bernoulli(rng, 0.5)) {
    for (std::size_t v = 0; v < n; ++v) rule.r.push_back(1 + static_cast<std::int64_t>(uniform_below(rng, 5)));
  }
  return rule;
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("weighted tally counts neighbour influence") {
  const Graph path = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}});
  ModelConfig config;
  config.influence = {3, 1, 1};
  const Coloring c = Coloring::from_string("bww");
  CHECK(weighted_tally(path, c, config, 1) == Tally{3, 4});
  const Graph lonely = build_graph(2, std::vector<Edge>{});
  CHECK(weighted_tally(lonely, Coloring(2), ModelConfig::majority(), 0) == Tally{0, 0});
}

TEST_CASE("tally matches a neighbour-loop oracle") {
  Rng rng(5);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Graph g = gen_er(10, 0.4, seed);
    const auto rule = random_rule(10, rng);
    const auto config = oracle::to_config(rule);
    const Coloring c = random_coloring(10, 0.5, seed);
    for (NodeId v = 0; v < 10; ++v) {
      std::int64_t opp = 0, total = 0;
      for (NodeId u = 0; u < 10; ++u) {
        if (!g.has_edge(v, u)) continue;
        const std::int64_t w = rule.r.empty() ? 1 : rule.r[u];
        total += w;
        if (c.is_black(u) != c.is_black(v)) opp += w;
      }
      CHECK(weighted_tally(g, c, config, v) == Tally{opp, total});
    }
  }
}

TEST_CASE("hand-worked steps") {
  CHECK(step(gen_cycle(4), Coloring::from_string("bwbw"), ModelConfig::majority()).to_string() == "wbwb");
  CHECK(step(star(4), Coloring::from_string("wbbbb"), ModelConfig::majority()).to_string() == "bwwww");
  // Ties keep the current colour.
  const Graph path = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(step(path, Coloring::from_string("bwb"), ModelConfig::majority()).to_string() == "wbw");
  CHECK(step(path, Coloring::from_string("bww"), ModelConfig::majority()).to_string() == "www");
  CHECK(step(path, Coloring::from_string("bbw"), ModelConfig::majority()).to_string() == "bbb");
}

TEST_CASE("psi thresholds are non-strict") {
  const Graph s = star(10);
  const ModelConfig psi = ModelConfig::psi(Rational(7, 10), Rational(8, 10));
  // White centre, 7 of 10 leaves black: 0.7 < 0.8, stays white.
  Coloring white_centre = Coloring::from_string("wbbbbbbbwww");
  CHECK_FALSE(step(s, white_centre, psi).is_black(0));
  // Black centre, 7 of 10 leaves white: 0.7 >= 0.7, flips.
  Coloring black_centre = Coloring::from_string("bwwwwwwwbbb");
  CHECK_FALSE(step(s, black_centre, psi).is_black(0));
  Coloring six = Coloring::from_string("bwwwwwwbbbb");
  CHECK(step(s, six, psi).is_black(0));
}

TEST_CASE("stubbornness threshold") {
  const Graph s = star(4);
  // Centre sees 3 of 4 opposite.
  const Coloring c = Coloring::from_string("wbbbw");
  CHECK(step(s, c, ModelConfig::uniform_stubbornness(5, Rational(3, 4))).is_black(0));
  CHECK_FALSE(step(s, c, ModelConfig::uniform_stubbornness(5, Rational(4, 5))).is_black(0));
  CHECK(step(s, c, ModelConfig::majority()).is_black(0));
}

TEST_CASE("degree-0 nodes never change") {
  const Graph g = build_graph(3, std::vector<Edge>{{0, 1}});
  for (const char* c : {"bbw", "bwb", "wbw"}) {
    CHECK(step(g, Coloring::from_string(c), ModelConfig::majority()).is_black(2) == (c[2] == 'b'));
  }
}

TEST_CASE("monochromatic colourings are fixed points") {
  const Graph g = gen_er(40, 0.2, 3);
  for (Color fill : {Color::White, Color::Black}) {
    const Coloring c(40, fill);
    CHECK(step(g, c, ModelConfig::majority()) == c);
    CHECK(step(g, c, ModelConfig::psi(Rational(51, 100), Rational(1))) == c);
    CHECK(step(g, c, ModelConfig::uniform_stubbornness(40, Rational(3, 5))) == c);
  }
}

TEST_CASE("step agrees with the oracle on random instances") {
  Rng rng(11);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::size_t n = 2 + seed % 60;
    const Graph g = gen_er(n, 0.05 + 0.3 * uniform01(rng), seed);
    const auto rule = random_rule(n, rng);
    const Coloring c = random_coloring(n, uniform01(rng), seed);
    const auto expected = oracle::step(oracle::adjacency(g), oracle::to_vector(c), rule);
    CHECK(oracle::to_vector(step(g, c, oracle::to_config(rule))) == expected);
  }
}

TEST_CASE("relabelling commutes with step") {
  Rng rng(23);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 50;
    const Graph g = gen_er(n, 0.1, seed);
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> moved;
    for (auto [u, v] : g.edges()) moved.emplace_back(perm[u], perm[v]);
    const Graph h = build_graph(n, moved);
    const Coloring c = random_coloring(n, 0.5, seed);
    Coloring pc(n);
    for (NodeId v = 0; v < n; ++v) pc.set(perm[v], c[v]);
    ModelConfig cfg, pcfg;
    cfg.influence.resize(n);
    pcfg.influence.resize(n);
    for (NodeId v = 0; v < n; ++v) {
      cfg.influence[v] = 1 + static_cast<std::uint32_t>(uniform_below(rng, 4));
      pcfg.influence[perm[v]] = cfg.influence[v];
    }
    const Coloring next = step(g, c, cfg);
    const Coloring pnext = step(h, pc, pcfg);
    for (NodeId v = 0; v < n; ++v) CHECK(next[v] == pnext[perm[v]]);
  }
}

TEST_CASE("run detects fixed points and blinkers") {
  const auto fixed = run(gen_cycle(6), Coloring(6, Color::Black), ModelConfig::majority());
  CHECK(fixed.stabilization_time == 0);
  CHECK(fixed.period == 1);
  CHECK(fixed.m_star == 0);
  const auto blink = run(gen_cycle(4), Coloring::from_string("bwbw"), ModelConfig::majority());
  CHECK(blink.stabilization_time == 0);
  CHECK(blink.period == 2);
  CHECK(blink.m_star == 4);
  CHECK(blink.final_colorings.size() == 2);
  CHECK(blink.final_colorings[1].to_string() == "wbwb");
}

TEST_CASE("run agrees with an exhaustive trajectory oracle") {
  Rng rng(29);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 3 + seed % 12;
    const Graph g = gen_er(n, 0.2 + 0.5 * uniform01(rng), seed);
    const auto rule = random_rule(n, rng);
    const Coloring c = random_coloring(n, 0.5, seed + 1000);
    const auto expected = oracle::run(oracle::adjacency(g), oracle::to_vector(c), rule);
    const auto got = run(g, c, oracle::to_config(rule));
    CHECK(got.stabilization_time == expected.stabilization);
    CHECK(got.period == expected.period);
    CHECK(oracle::to_vector(got.final_colorings[0]) == expected.states[expected.stabilization]);
    REQUIRE(got.black_count_per_round.size() == got.rounds_executed + 1);
    for (std::size_t t = 0; t < got.black_count_per_round.size() && t < expected.states.size(); ++t) {
      const auto& s = expected.states[t];
      CHECK(got.black_count_per_round[t] == static_cast<std::size_t>(std::count(s.begin(), s.end(), 1)));
    }
  }
}

TEST_CASE("timeouts carry the trajectory tail") {
  // A path needs several rounds to settle; one round is not enough.
  std::vector<Edge> e;
  for (NodeId v = 0; v + 1 < 12; ++v) e.emplace_back(v, v + 1);
  const Graph path = build_graph(12, e);
  RunOptions options;
  options.max_rounds = 1;
  try {
    run(path, Coloring::from_string("bbwbwbwbwbww"), ModelConfig::majority(), options);
    FAIL("expected TimeoutError");
  } catch (const TimeoutError& err) {
    CHECK_FALSE(err.trajectory_tail().empty());
  }
}

TEST_CASE("psi-psi stabilizes within 4 m*") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph g = gen_er(30, 0.15, seed);
    const Rational psi = std::vector<Rational>{{51, 100}, {3, 5}, {3, 4}, {1}}[seed % 4];
    const auto result = run(g, random_coloring(30, 0.5, seed), ModelConfig::psi(psi, psi));
    CHECK(result.stabilization_time <= 4 * result.m_star);
  }
}

TEST_CASE("random colouring") {
  CHECK(random_coloring(100, 0.0, 1).count_black() == 0);
  CHECK(random_coloring(100, 1.0, 1).count_black() == 100);
  const double frac = static_cast<double>(random_coloring(1000000, 0.5, 42).count_black()) / 1e6;
  CHECK(frac >= 0.498);
  CHECK(frac <= 0.502);
  CHECK(random_coloring(500, 0.3, 9) == random_coloring(500, 0.3, 9));
  CHECK_THROWS_AS(random_coloring(5, 1.5, 1), ParameterError);
}

TEST_CASE("bichromatic edge count") {
  CHECK(count_bichromatic(gen_cycle(4), Coloring::from_string("bwbw")) == 4);
  CHECK(count_bichromatic(gen_cycle(4), Coloring::from_string("bbbb")) == 0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = gen_er(15, 0.3, seed);
    const Coloring c = random_coloring(15, 0.5, seed);
    std::size_t expected = 0;
    for (auto [u, v] : g.edges()) expected += c[u] != c[v] ? 1 : 0;
    CHECK(count_bichromatic(g, c) == expected);
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(ModelConfig::psi(Rational(1, 2), Rational(1)).validate(3), ParameterError);
  CHECK_THROWS_AS(ModelConfig::psi(Rational(3, 4), Rational(11, 10)).validate(3), ParameterError);
  CHECK_THROWS_AS(ModelConfig::uniform_stubbornness(3, Rational(1)).validate(3), ParameterError);
  ModelConfig both = ModelConfig::psi(Rational(3, 4), Rational(3, 4));
  both.stubbornness.assign(3, Rational(1, 2));
  CHECK_THROWS_AS(both.validate(3), ParameterError);
  ModelConfig zero;
  zero.influence = {1, 0, 1};
  CHECK_THROWS_AS(zero.validate(3), ParameterError);
  CHECK_THROWS_AS(zero.validate(4), ParameterError);
}

TEST_CASE("outcome labels") {
  auto classify = [](std::size_t black, std::size_t n) {
    Coloring c(n);
    for (NodeId v = 0; v < black; ++v) c.set(v, Color::Black);
    return classify_coloring(c);
  };
  const auto all = classify(10, 10);
  CHECK(all.primary == OutcomeLabel::BlackTakesOver);
  CHECK(all.has(OutcomeLabel::BlackWins));
  CHECK(all.has(OutcomeLabel::AlmostMonochromatic));
  CHECK(classify(0, 10).primary == OutcomeLabel::WhiteTakesOver);
  const auto wins = classify(51, 100);
  CHECK(wins.primary == OutcomeLabel::AlmostBalanced);
  CHECK(wins.has(OutcomeLabel::BlackWins));
  CHECK(classify(60, 100).primary == OutcomeLabel::BlackWins);
  const auto mono = classify(98000, 100000);
  CHECK(mono.primary == OutcomeLabel::AlmostMonochromatic);
  CHECK(mono.has(OutcomeLabel::Mixed));
  CHECK(classify(30, 100).primary == OutcomeLabel::WhiteWins);
  CHECK(std::string(to_string(OutcomeLabel::BlackTakesOver)) == "BLACK_TAKES_OVER");
}

TEST_CASE("colouring strings and bits") {
  CHECK(Coloring::from_string("bwwb").to_string() == "bwwb");
  CHECK(Coloring::from_bits(4, 0b1001).to_string() == "bwwb");
  CHECK_THROWS_AS(Coloring::from_string("bx"), ParameterError);
  Coloring c(70, Color::Black);
  CHECK(c.count_black() == 70);
  c.flip(69);
  CHECK(c.count_black() == 69);
}

}
