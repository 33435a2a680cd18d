#include "kspp/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kspp/kernels.hpp"

namespace kspp {

namespace {

SpectralEstimate power_iterate(std::vector<double>& mat, int n, double shift,
                               const PowerOptions& opts) {
  if (opts.tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (opts.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  const auto& k = kernels::active_kernels();

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n, 0.0);
  SpectralEstimate est;
  while (est.iterations < opts.max_iter) {
    k.matvec(mat.data(), x.data(), y.data(), n);
    ++est.iterations;
    double ray = k.dot(x.data(), y.data(), n);
    est.value = ray - shift;
    est.residual = k.resid_inf(y.data(), x.data(), ray, n);
    if (est.residual <= opts.tol * std::max(1.0, std::fabs(est.value))) {
      est.converged = true;
      break;
    }
    double norm = std::sqrt(k.dot(y.data(), y.data(), n));
    if (norm == 0.0) break;  // unreachable after the residual test; defensive
    k.scale(y.data(), 1.0 / norm, n);
    x.swap(y);
  }
  return est;
}

std::vector<double> dense_matrix(const Graph& g, double diag_from_degree, double diag_const) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("spectral estimate needs n >= 1");
  if (n > 2048) throw std::invalid_argument("dense spectral path limited to n <= 2048");
  std::vector<double> mat(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u).bits()) mat[static_cast<std::size_t>(u) * n + v] = 1.0;
    mat[static_cast<std::size_t>(u) * n + u] = diag_from_degree * g.degree(u) + diag_const;
  }
  return mat;
}

}  // namespace

SpectralEstimate q_spectral_radius(const Graph& g, const PowerOptions& opts) {
  auto mat = dense_matrix(g, 1.0, 0.0);  // D + A
  auto est = power_iterate(mat, g.vertex_count(), 0.0, opts);
  est.disconnected = !g.is_connected();
  return est;
}

SpectralEstimate a_spectral_radius(const Graph& g, const PowerOptions& opts) {
  auto mat = dense_matrix(g, 0.0, 1.0);  // A + I
  auto est = power_iterate(mat, g.vertex_count(), 1.0, opts);
  est.disconnected = !g.is_connected();
  return est;
}

Rat q_edge_bound(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("edge bound for q needs n >= 2");
  return Rat(2 * g.edge_count(), n - 1) + Rat(n - 2);
}

}  // namespace kspp
