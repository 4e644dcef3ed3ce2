#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "opdyn/graph.hpp"

namespace opdyn {

enum class Family { ER, RRG, PA, HRG, Cycle };

std::string to_string(Family family);
Family parse_family(const std::string& text);

enum class RrgStrategy {
  // Batched pairing that keeps non-colliding pairs and re-pairs the rest.
  StegerWormald,
  // Plain configuration model, restarting from scratch on any collision.
  // Only viable for small d.
  RestartPairing,
};

/// Parameters of one random-graph draw. All randomness flows from `seed`.
struct GenSpec {
  Family family = Family::ER;
  std::size_t n = 0;
  double q = 0.0;                 // ER edge probability
  std::size_t d = 0;              // RRG degree
  std::size_t m_out = 1;          // PA edges per new node
  double target_avg_deg = 0.0;    // HRG calibration target
  double beta = 2.5;              // HRG power-law exponent
  double temperature = 0.6;       // HRG temperature
  std::uint64_t seed = 1;
  RrgStrategy rrg_strategy = RrgStrategy::StegerWormald;

  // Throws ParameterError when the family's parameters are out of range.
  void validate() const;
};

struct HrgInfo {
  double alpha = 0.0;
  double radius = 0.0;
  double realized_avg_deg = 0.0;
  std::size_t calibration_steps = 0;
};

struct GenerationInfo {
  HrgInfo hrg;
  std::size_t rrg_attempts = 0;
};

Graph generate(const GenSpec& spec, GenerationInfo* info = nullptr);

// Erdos-Renyi G(n, q) with geometric skipping, O(n + m) expected time.
Graph gen_er(std::size_t n, double q, std::uint64_t seed);

// Uniform-ish random d-regular graph. Throws ParameterError if n*d is odd
// or d >= n.
Graph gen_rrg(std::size_t n, std::size_t d, std::uint64_t seed,
              RrgStrategy strategy = RrgStrategy::StegerWormald, std::size_t* attempts = nullptr);

// Preferential attachment seeded with a clique on m_out + 1 nodes.
Graph gen_pa(std::size_t n, std::size_t m_out, std::uint64_t seed);

// Hyperbolic random graph with temperature, radius calibrated to hit
// target_avg_deg within 10%. Throws CalibrationError after 40 bisection
// steps without success.
Graph gen_hrg(std::size_t n, double target_avg_deg, double beta, double temperature, std::uint64_t seed,
              HrgInfo* info = nullptr);

// Hyperbolic random graph at a fixed disk radius (no calibration).
Graph gen_hrg_fixed_radius(std::size_t n, double radius, double beta, double temperature, std::uint64_t seed);

// Connection probability of the temperature model for hyperbolic distance
// `distance` in a disk of radius `radius`.
double hrg_connection_probability(double distance, double radius, double temperature);

Graph gen_cycle(std::size_t n);

// Parameters for a random graph comparable to a reference graph: same n and
// the same number of edges in expectation.
GenSpec match_params(const DegreeStats& reference, Family family, std::uint64_t seed = 1);

// Nearest degree to `target` that is < n and makes n*d even.
std::size_t parity_adjusted_degree(double target, std::size_t n);

}  // namespace opdyn
