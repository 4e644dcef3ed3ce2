#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "opdyn/error.hpp"
#include "opdyn/generators.hpp"
#include "opdyn/spectral.hpp"

using namespace opdyn;

namespace {

// Second-largest absolute eigenvalue of D^{-1/2} A D^{-1/2} by dense
// symmetric eigendecomposition.
double dense_sigma(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    for (NodeId u : g.neighbors(v))
      m(v, u) = 1.0 / std::sqrt(static_cast<double>(g.degree(v)) * static_cast<double>(g.degree(u)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(values.begin(), values.end());
  // Largest is exactly 1 for a connected graph; drop it.
  values.pop_back();
  double best = 0.0;
  for (double x : values) best = std::max(best, std::abs(x));
  return best;
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, e);
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("closed forms") {
  CHECK(sigma(complete(4)) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(sigma(gen_cycle(4)) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sigma(gen_cycle(5)) == doctest::Approx(std::cos(M_PI / 5.0)).epsilon(1e-6));
  const Graph petersen = build_graph(10, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6},
                                                           {2, 7}, {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8},
                                                           {8, 5}});
  CHECK(sigma(petersen) == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("matches a dense eigensolver") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = gen_rrg(60, 2 + seed, seed);
    if (!is_connected(g)) continue;
    const auto result = estimate_sigma(g);
    CHECK(result.converged);
    CHECK(result.sigma == doctest::Approx(dense_sigma(g)).epsilon(1e-5));
  }
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = gen_er(50, 0.2, seed);
    if (!is_connected(g)) continue;
    CHECK(sigma(g) == doctest::Approx(dense_sigma(g)).epsilon(1e-5));
  }
}

TEST_CASE("disconnected and tiny graphs are rejected") {
  CHECK_THROWS_AS(sigma(build_graph(4, std::vector<Edge>{{0, 1}, {2, 3}})), DisconnectedGraphError);
  CHECK_THROWS_AS(sigma(build_graph(1, std::vector<Edge>{})), DisconnectedGraphError);
}

}
