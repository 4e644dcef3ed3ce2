#include "opdyn/spectral.hpp"

#include <cmath>
#include <vector>

#include "opdyn/error.hpp"
#include "opdyn/random.hpp"

namespace opdyn {
namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void normalize(std::vector<double>& x) {
  const double norm = std::sqrt(dot(x, x));
  for (double& v : x) v /= norm;
}

// y = D^{-1/2} A D^{-1/2} x
void apply_normalized(const Graph& g, const std::vector<double>& inv_sqrt_deg,
                      const std::vector<double>& x, std::vector<double>& y) {
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    double s = 0.0;
    for (NodeId u : g.neighbors(v)) s += inv_sqrt_deg[u] * x[u];
    y[v] = inv_sqrt_deg[v] * s;
  }
}

void deflate(std::vector<double>& x, const std::vector<double>& top) {
  const double c = dot(x, top);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * top[i];
}

}  // namespace

SigmaResult estimate_sigma(const Graph& g, const SigmaOptions& options) {
  const std::size_t n = g.num_nodes();
  if (n < 2) throw DisconnectedGraphError("sigma: graph needs at least two nodes");
  if (!is_connected(g)) throw DisconnectedGraphError("sigma: graph is disconnected");

  std::vector<double> inv_sqrt_deg(n);
  std::vector<double> top(n);
  for (NodeId v = 0; v < n; ++v) {
    const double d = static_cast<double>(g.degree(v));
    inv_sqrt_deg[v] = 1.0 / std::sqrt(d);
    top[v] = std::sqrt(d);
  }
  normalize(top);

  Rng rng(options.seed);
  std::vector<double> x(n);
  for (double& v : x) v = uniform01(rng) - 0.5;
  deflate(x, top);
  normalize(x);

  std::vector<double> y(n);
  std::vector<double> z(n);
  SigmaResult result;
  double previous = -1.0;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    apply_normalized(g, inv_sqrt_deg, x, y);
    // Rayleigh quotient of N^2 at unit x is |N x|^2.
    const double estimate = std::sqrt(dot(y, y));
    apply_normalized(g, inv_sqrt_deg, y, z);
    deflate(z, top);
    const double norm = std::sqrt(dot(z, z));
    result.iterations = it;
    result.sigma = estimate;
    if (norm == 0.0) {
      result.converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = z[i] / norm;
    if (std::abs(estimate - previous) < options.tolerance) {
      result.converged = true;
      break;
    }
    previous = estimate;
  }
  return result;
}

}  // namespace opdyn
