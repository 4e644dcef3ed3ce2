#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "opdyn/coloring.hpp"
#include "opdyn/graph.hpp"
#include "opdyn/rational.hpp"

namespace opdyn {

/// Weighted bipartite lift H of a graph G for the (psi, psi) model.
///
/// Sides X = {x_i} and Y = {y_i}; x_i ~ y_j for every edge {v_i, v_j} of G
/// (weight 1) plus the spine edge x_i ~ y_i whose weight is
///   2 psi d - d - 1/2               if psi d is an integer,
///   2 floor(psi d) - d + 1 - 1/(4n) otherwise.
/// All weights are stored as integers scaled by 4n, so every comparison and
/// potential value is exact.
class WeightedBipartiteGraph {
 public:
  std::size_t side_size() const noexcept { return base_.num_nodes(); }
  const Graph& base() const noexcept { return base_; }
  const Rational& psi() const noexcept { return psi_; }

  // Common denominator 4n of all weights.
  std::int64_t scale() const noexcept { return scale_; }
  std::int64_t spine_weight_scaled(NodeId i) const noexcept { return spine_scaled_[i]; }
  Rational spine_weight(NodeId i) const { return Rational(spine_scaled_[i], scale_); }

  // Node index of x_i and y_i in a colouring of length 2n.
  NodeId x(NodeId i) const noexcept { return i; }
  NodeId y(NodeId i) const noexcept { return static_cast<NodeId>(side_size() + i); }

 private:
  friend WeightedBipartiteGraph build_h(const Graph& g, const Rational& psi);
  Graph base_;
  Rational psi_;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> spine_scaled_;
};

// Throws ParameterError for psi outside (1/2, 1] or a node of degree 0.
WeightedBipartiteGraph build_h(const Graph& g, const Rational& psi);

// G without its isolated nodes; kept[i] is the original id of new node i.
struct StrippedGraph {
  Graph graph;
  std::vector<NodeId> kept;
};
StrippedGraph strip_isolated(const Graph& g);

// Colouring of H with x_i = y_i = colour of v_i.
Coloring lift_coloring(const WeightedBipartiteGraph& h, const Coloring& coloring);

enum class Parity { Odd, Even };

// One round of the periodic majority model: on odd rounds every x_i adopts
// the weighted majority of its neighbours, on even rounds every y_i does.
// Throws InvariantViolation if a tie occurs.
Coloring periodic_step(const WeightedBipartiteGraph& h, const Coloring& coloring, Parity parity);

struct PotentialValue {
  std::int64_t phi1_scaled = 0;  // sum of weights of bichromatic edges, times 4n
  std::int64_t phi2 = 0;         // bichromatic spine edges
  std::int64_t scale = 1;

  Rational phi1() const { return Rational(phi1_scaled, scale); }
  // phi1 + phi2 / 2, times 4n.
  std::int64_t phi_scaled() const noexcept { return phi1_scaled + phi2 * (scale / 2); }
  Rational phi() const { return Rational(phi_scaled(), scale); }
};

PotentialValue potential(const WeightedBipartiteGraph& h, const Coloring& coloring);

struct CertificateRow {
  std::size_t t = 0;
  Rational phi1;
  std::int64_t phi2 = 0;
  std::size_t flips = 0;
};

/// Replayable record of one descent certification.
struct Certificate {
  bool passed = true;
  std::vector<std::string> failures;
  std::size_t m_star = 0;
  // Last round of the periodic model in which any node flipped.
  std::size_t fixation_round = 0;
  std::size_t g_stabilization = 0;
  std::size_t g_period = 0;
  std::vector<CertificateRow> rows;
};

// Runs the periodic model on H from the lifted colouring and checks
//   phi_0 = 2 m*, phi_t >= -1/4, phi_{t+1} <= phi_{t-1} - 1/2 whenever
//   rounds t and t+1 both contain a flip, fixation within 4 m* rounds, no ties,
//   and round-by-round agreement with the (psi, psi) model on G.
// Isolated nodes are stripped first. max_rounds = 0 selects 4 m* + 4.
Certificate certify_descent(const Graph& g, const Rational& psi, const Coloring& initial,
                            std::size_t max_rounds = 0);

// CSV columns t, phi1_num, phi1_den, phi2, flips.
void write_certificate_csv(std::ostream& out, const Certificate& certificate);

}  // namespace opdyn
