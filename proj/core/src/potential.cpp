#include "opdyn/potential.hpp"

#include <ostream>

#include "opdyn/dynamics.hpp"
#include "opdyn/error.hpp"

namespace opdyn {
namespace {

struct SideTally {
  std::int64_t black = 0;
  std::int64_t total = 0;
};

// Weighted tally of active node i; its neighbours live on the other side.
SideTally tally_side(const WeightedBipartiteGraph& h, const Coloring& c, NodeId i, Parity parity) {
  const auto other = [&](NodeId j) { return parity == Parity::Odd ? h.y(j) : h.x(j); };
  SideTally t;
  const std::int64_t unit = h.scale();
  for (NodeId j : h.base().neighbors(i)) {
    t.total += unit;
    if (c.is_black(other(j))) t.black += unit;
  }
  const std::int64_t spine = h.spine_weight_scaled(i);
  t.total += spine;
  if (c.is_black(other(i))) t.black += spine;
  return t;
}

}  // namespace

WeightedBipartiteGraph build_h(const Graph& g, const Rational& psi) {
  if (!(psi > Rational(1, 2) && psi <= Rational(1))) {
    throw ParameterError("build_h: psi must lie in (1/2, 1], got " + psi.to_string());
  }
  const std::size_t n = g.num_nodes();
  WeightedBipartiteGraph h;
  h.base_ = g;
  h.psi_ = psi;
  h.scale_ = 4 * static_cast<std::int64_t>(n);
  h.spine_scaled_.resize(n);
  const std::int64_t scale = h.scale_;
  for (NodeId i = 0; i < n; ++i) {
    const auto d = static_cast<std::int64_t>(g.degree(i));
    if (d == 0) throw ParameterError("build_h: node " + std::to_string(i) + " has degree 0");
    const std::int64_t floor_psi_d = psi.floor_times(d);
    if (psi.times_is_integer(d)) {
      // scale * (2 psi d - d - 1/2)
      h.spine_scaled_[i] = scale * (2 * floor_psi_d - d) - scale / 2;
    } else {
      // scale * (2 floor(psi d) - d + 1 - 1/(4n))
      h.spine_scaled_[i] = scale * (2 * floor_psi_d - d + 1) - 1;
    }
  }
  return h;
}

StrippedGraph strip_isolated(const Graph& g) {
  StrippedGraph out;
  std::vector<NodeId> new_id(g.num_nodes(), 0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (g.degree(v) > 0) {
      new_id[v] = static_cast<NodeId>(out.kept.size());
      out.kept.push_back(v);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(new_id[u], new_id[v]);
  out.graph = build_graph(out.kept.size(), edges);
  return out;
}

Coloring lift_coloring(const WeightedBipartiteGraph& h, const Coloring& coloring) {
  const std::size_t n = h.side_size();
  if (coloring.size() != n) throw ParameterError("lift_coloring: coloring length differs from n");
  Coloring lifted(2 * n);
  for (NodeId i = 0; i < n; ++i) {
    lifted.set(h.x(i), coloring[i]);
    lifted.set(h.y(i), coloring[i]);
  }
  return lifted;
}

Coloring periodic_step(const WeightedBipartiteGraph& h, const Coloring& coloring, Parity parity) {
  const std::size_t n = h.side_size();
  if (coloring.size() != 2 * n) throw ParameterError("periodic_step: coloring length must be 2n");
  Coloring next = coloring;
  for (NodeId i = 0; i < n; ++i) {
    const SideTally t = tally_side(h, coloring, i, parity);
    if (2 * t.black == t.total) {
      throw InvariantViolation("periodic majority tie at " + std::string(parity == Parity::Odd ? "x_" : "y_") +
                               std::to_string(i) + " (black " + std::to_string(t.black) + " of " +
                               std::to_string(t.total) + ", scale " + std::to_string(h.scale()) + ")");
    }
    const NodeId self = parity == Parity::Odd ? h.x(i) : h.y(i);
    next.set(self, 2 * t.black > t.total ? Color::Black : Color::White);
  }
  return next;
}

PotentialValue potential(const WeightedBipartiteGraph& h, const Coloring& coloring) {
  const std::size_t n = h.side_size();
  if (coloring.size() != 2 * n) throw ParameterError("potential: coloring length must be 2n");
  PotentialValue p;
  p.scale = h.scale();
  for (NodeId i = 0; i < n; ++i) {
    const bool xi = coloring.is_black(h.x(i));
    for (NodeId j : h.base().neighbors(i)) {
      if (xi != coloring.is_black(h.y(j))) p.phi1_scaled += h.scale();
    }
    if (xi != coloring.is_black(h.y(i))) {
      p.phi1_scaled += h.spine_weight_scaled(i);
      ++p.phi2;
    }
  }
  return p;
}

Certificate certify_descent(const Graph& g, const Rational& psi, const Coloring& initial, std::size_t max_rounds) {
  if (initial.size() != g.num_nodes()) throw ParameterError("certify_descent: coloring length differs from n");
  Certificate cert;
  auto fail = [&](std::string message) {
    cert.passed = false;
    cert.failures.push_back(std::move(message));
  };

  const StrippedGraph stripped = strip_isolated(g);
  const Graph& base = stripped.graph;
  const std::size_t n = base.num_nodes();
  Coloring g_coloring(n);
  for (NodeId i = 0; i < n; ++i) g_coloring.set(i, initial[stripped.kept[i]]);

  cert.m_star = count_bichromatic(base, g_coloring);
  if (n == 0) {
    cert.rows.push_back({0, Rational(0), 0, 0});
    cert.g_period = 1;
    return cert;
  }
  const WeightedBipartiteGraph h = build_h(base, psi);
  const ModelConfig model = ModelConfig::psi(psi, psi);
  const std::size_t limit = max_rounds == 0 ? 4 * cert.m_star + 4 : max_rounds;

  Coloring h_coloring = lift_coloring(h, g_coloring);
  std::vector<PotentialValue> phis{potential(h, h_coloring)};
  cert.rows.push_back({0, phis[0].phi1(), phis[0].phi2, 0});

  const std::int64_t scale = h.scale();
  if (phis[0].phi_scaled() != 2 * static_cast<std::int64_t>(cert.m_star) * scale) {
    fail("t=0: phi_0 = " + phis[0].phi().to_string() + " != 2m* = " + std::to_string(2 * cert.m_star));
  }

  std::vector<std::size_t> flips{0};
  bool fixed = false;
  for (std::size_t t = 1; t <= limit && cert.passed; ++t) {
    const Parity parity = t % 2 == 1 ? Parity::Odd : Parity::Even;
    Coloring next;
    try {
      next = periodic_step(h, h_coloring, parity);
    } catch (const InvariantViolation& e) {
      fail("t=" + std::to_string(t) + ": " + e.what());
      break;
    }
    std::size_t flipped = 0;
    for (NodeId v = 0; v < 2 * n; ++v) flipped += next.is_black(v) != h_coloring.is_black(v) ? 1 : 0;
    h_coloring = std::move(next);
    flips.push_back(flipped);
    if (flipped > 0) cert.fixation_round = t;

    // G <-> H correspondence.
    Coloring g_next = step(base, g_coloring, model);
    for (NodeId i = 0; i < n; ++i) {
      const NodeId mirror = parity == Parity::Odd ? h.x(i) : h.y(i);
      if (g_next.is_black(i) != h_coloring.is_black(mirror)) {
        const Tally tally = weighted_tally(base, g_coloring, model, i);
        fail("t=" + std::to_string(t) + ": node " + std::to_string(stripped.kept[i]) +
             " disagrees with its lift (opposite " + std::to_string(tally.opposite) + " of " +
             std::to_string(tally.total) + ")");
      }
    }
    g_coloring = std::move(g_next);

    phis.push_back(potential(h, h_coloring));
    const PotentialValue& phi = phis.back();
    cert.rows.push_back({t, phi.phi1(), phi.phi2, flipped});
    if (4 * phi.phi_scaled() < -scale) {
      fail("t=" + std::to_string(t) + ": phi = " + phi.phi().to_string() + " < -1/4");
    }
    if (t >= 2 && flips[t - 1] > 0 && flips[t] > 0 && 2 * phis[t].phi_scaled() > 2 * phis[t - 2].phi_scaled() - scale) {
      fail("t=" + std::to_string(t) + ": phi_t = " + phis[t].phi().to_string() + " > phi_{t-2} - 1/2 = " +
           (phis[t - 2].phi() - Rational(1, 2)).to_string());
    }
    if (t >= 2 && flips[t - 1] == 0 && flips[t] == 0) {
      fixed = true;
      break;
    }
  }
  if (cert.passed && !fixed) fail("periodic model not fixed within " + std::to_string(limit) + " rounds");
  if (cert.fixation_round > 4 * cert.m_star) {
    fail("fixation round " + std::to_string(cert.fixation_round) + " exceeds 4m* = " + std::to_string(4 * cert.m_star));
  }

  Coloring start(n);
  for (NodeId i = 0; i < n; ++i) start.set(i, initial[stripped.kept[i]]);
  const RunResult run_result = run(base, start, model);
  cert.g_stabilization = run_result.stabilization_time;
  cert.g_period = run_result.period;
  if (cert.passed && run_result.stabilization_time > cert.fixation_round) {
    fail("G stabilizes at " + std::to_string(run_result.stabilization_time) + " after H fixed at " +
         std::to_string(cert.fixation_round));
  }
  return cert;
}

void write_certificate_csv(std::ostream& out, const Certificate& certificate) {
  out << "t,phi1_num,phi1_den,phi2,flips\n";
  for (const CertificateRow& row : certificate.rows) {
    out << row.t << ',' << row.phi1.num() << ',' << row.phi1.den() << ',' << row.phi2 << ',' << row.flips << '\n';
  }
}

}  // namespace opdyn
