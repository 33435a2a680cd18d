#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kspp/graph.hpp"
#include "kspp/rational.hpp"
#include "kspp/spectral.hpp"

namespace kspp {

// Exact evaluation of the polynomials and inequality chains behind the two
// sufficient conditions. Everything here is integer/rational arithmetic;
// the only float is the measured eigenvalue in verify_q_upper_bound.

// Cubic controlling the edge gap between the extremal configuration and
// the padded family (clique parts of size delta+1-s):
//   (d-k)^2 s^3 - (d-k)(d^2+(2-k)d-2k-1) s^2 + (d-k)(2n-2d-k-4) s
//     - 2(d-k-1)n + d^3 + (2-2k)d^2 + (k^2-2k+1)d - 3k - 2.
// Requires delta > k.
std::int64_t gap_cubic_value(std::int64_t s, std::int64_t n, std::int64_t delta, std::int64_t k);

// Derivative of the cubic at a rational point (sign analysis needs the
// vertex of the derivative parabola, which is rarely integral).
Rat gap_cubic_derivative(const Rat& x, std::int64_t n, std::int64_t delta, std::int64_t k);

// Closed form of the cubic at s = 1: 2n - delta^2 + (k-2)delta - 2.
// Must equal gap_cubic_value(1, ...) identically.
std::int64_t gap_cubic_at_one(std::int64_t n, std::int64_t delta, std::int64_t k);

// Linear-in-s expression controlling the gap against the singleton family:
//   2(d-k)n - (d-k)(d-k+2)s - d^3 + (2k-2)d^2 - (k^2-2k+3)d + 3k - 2.
std::int64_t gap_linear_value(std::int64_t s, std::int64_t n, std::int64_t delta, std::int64_t k);

// Twice the maximum edge count of a graph violating the component-count
// criterion with |S| = s and c(G-S) = t, in three algebraic forms:
//   direct: (n-s-t)(n-s-t+1) + 2t + 2ks - 4
//   in_n:   n^2 - (2s+2t-1)n + s^2 + (2t+2k-1)s + t^2 + t - 4
//   in_s:   s^2 - (2n-2t-2k+1)s + (n-t)(n-t+1) + 2t - 4
// The three agree identically; in_regime flags n >= s+t.
struct EdgeBudgetForms {
  std::int64_t direct = 0;
  std::int64_t in_n = 0;
  std::int64_t in_s = 0;
  bool in_regime = false;
};
EdgeBudgetForms violation_edge_budget(std::int64_t n, std::int64_t s, std::int64_t t,
                                      std::int64_t k);

// Proof families compared against the extremal configuration.
// Padded family (1 <= s <= delta): K_s v (K_big u ((d-k)s+1) K_{d+1-s}).
// Singleton family (s >= 1):       K_s v (K_big u ((d-k)s+1) K_1).
Graph build_padded_family(int n, int delta, int k, int s);
Graph build_singleton_family(int n, int delta, int k, int s);

struct IdentityReport {
  bool applicable = false;
  std::string reason;  // when not applicable
  Rat lhs;             // edge-count difference from constructed graphs
  Rat rhs;             // polynomial side
  bool holds = false;  // exact equality
  std::string context;
};

// e(extremal) - e(padded family) == (delta - s) * cubic(s) / 2
IdentityReport verify_padded_gap_identity(int n, int delta, int k, int s);

// e(extremal) - e(singleton family) == (s - delta) * linear(s) / 2
IdentityReport verify_singleton_gap_identity(int n, int delta, int k, int s);

struct CheckCounts {
  std::int64_t holds = 0;
  std::int64_t fails = 0;
  std::int64_t not_applicable = 0;
  std::vector<std::string> failures;
};

// Union-of-cliques maximization: among K_s v (K_{n1} u ... u K_{nt}) with
// n1 >= ... >= nt >= p and sum n_i = n - s, concentrating everything but
// (t-1) parts of size p into one clique is the strict maximum. Enumerates
// every partition; rows record the exact comparison.
struct PartitionCheck {
  std::vector<int> parts;
  std::int64_t lhs = 0;  // e with this partition
  std::int64_t rhs = 0;  // e of the concentrated partition
  bool applicable = false;
  bool holds = false;
};
struct CliqueUnionReport {
  CheckCounts counts;
  std::vector<PartitionCheck> rows;
};
CliqueUnionReport verify_clique_union_maximum(int s, int p, int t, int n);

// Instance check of q(G) <= 2e/(n-1) + n - 2 (within 10*tol slack for the
// power-iteration estimate).
struct QBoundReport {
  bool determined = false;  // estimate converged
  bool holds = false;
  double q = 0.0;
  Rat bound;
};
QBoundReport verify_q_upper_bound(const Graph& g, double tol = 1e-10);

// The post-violation inequality chains of the spectral proof, swept
// exactly over integer grids (s, t >= 1) up to n_max:
//   all-removed case: (kn-2)/(n-1) + n - 2 < threshold, strictly;
//   shallow case (s+t <= n <= s+t+k-1): M <= 2kn + k(k-3) - 2;
//   deep case (n >= s+t+k):             M <= n^2 - 3n + 2k;
// and in both cases M/(n-1) + n - 2 <= threshold, all under the spectral
// order premise.
struct ChainReport {
  CheckCounts counts;
  std::int64_t shallow_tuples = 0;
  std::int64_t deep_tuples = 0;
  std::int64_t all_removed_orders = 0;
};
ChainReport verify_violation_budget_chain(int k, int n_max);

// Monotonicity of the gap cubic on [1, delta]: exact sign of its
// derivative at the parabola vertex when the vertex lies in the interval
// (else at both endpoints), plus positivity of the value at s = 1.
// Applicable gate: n >= (d^2+(2-k)d-2k-1)^2/(6(d-k)) + d + k + 1, exact.
struct MonotonicityReport {
  bool applicable = false;
  std::string reason;
  Rat derivative_min;
  std::int64_t at_one = 0;
  bool holds = false;
};
MonotonicityReport verify_gap_cubic_monotone(int n, int delta, int k);

}  // namespace kspp
