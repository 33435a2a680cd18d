#pragma once

#include "kspp/graph.hpp"
#include "kspp/rational.hpp"

namespace kspp {

struct PowerOptions {
  double tol = 1e-10;
  long max_iter = 100000;
};

struct SpectralEstimate {
  double value = 0.0;
  double residual = 0.0;
  long iterations = 0;
  bool converged = false;
  bool disconnected = false;  // estimate still valid, flagged for reports
};

// Largest signless-Laplacian eigenvalue q(G) = lambda_max(D + A) by power
// iteration from the normalized all-ones vector. converged implies
// residual <= tol * max(1, value).
SpectralEstimate q_spectral_radius(const Graph& g, const PowerOptions& opts = {});

// Adjacency spectral radius rho(G). Internally iterates on A + I so the
// bipartite +/-rho eigenvalue pair cannot stall the iteration, and reports
// the unshifted value; the residual identity (A+I)x - (r+1)x = Ax - rx
// makes the stopping rule exact for A itself.
SpectralEstimate a_spectral_radius(const Graph& g, const PowerOptions& opts = {});

// Exact upper bound 2e/(n-1) + n - 2 for q(G); needs n >= 2.
Rat q_edge_bound(const Graph& g);

}  // namespace kspp
