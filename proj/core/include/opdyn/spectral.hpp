#pragma once

#include <cstddef>
#include <cstdint>

#include "opdyn/graph.hpp"

namespace opdyn {

struct SigmaOptions {
  // Stop when successive estimates differ by less than this.
  double tolerance = 1e-9;
  std::size_t max_iterations = 100000;
  std::uint64_t seed = 0x5EED;
};

struct SigmaResult {
  double sigma = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Second-largest absolute eigenvalue of the symmetric normalized adjacency
// D^{-1/2} A D^{-1/2}. For a d-regular graph this is the usual sigma(G) of
// A/d. Power iteration on the squared operator with the top eigenvector
// D^{1/2} 1 deflated, so +sigma and -sigma are handled alike.
// Throws DisconnectedGraphError for disconnected graphs or n < 2.
SigmaResult estimate_sigma(const Graph& g, const SigmaOptions& options = {});

inline double sigma(const Graph& g, const SigmaOptions& options = {}) {
  return estimate_sigma(g, options).sigma;
}

}  // namespace opdyn
