#pragma once

#include <random>
#include <stdexcept>

#include "kspp/graph.hpp"

namespace kspp {

// Deterministic (seeded-rng) graph samplers shared by the CLI sweeps and
// the test suites.

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p, int max_tries = 10000) {
  for (int i = 0; i < max_tries; ++i) {
    Graph g = random_graph(rng, n, p);
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("failed to sample a connected graph; raise p");
}

// Uniform graph with exactly m edges (m <= C(n,2)).
inline Graph random_graph_with_edges(std::mt19937_64& rng, int n, std::int64_t m) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  if (m < 0 || m > static_cast<std::int64_t>(all.size()))
    throw std::invalid_argument("edge count out of range");
  for (std::int64_t i = 0; i < m; ++i) {  // partial Fisher-Yates
    std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  all.resize(static_cast<std::size_t>(m));
  return Graph(n, all);
}

}  // namespace kspp
