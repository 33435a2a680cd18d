#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kspp/graph.hpp"
#include "kspp/parity.hpp"
#include "kspp/rational.hpp"
#include "kspp/spectral.hpp"

namespace kspp {

// Edge count of the extremal configuration built by build_extremal_graph:
// C(n - (delta-k)delta - 1, 2) + delta((delta-k)delta + 1). Same parameter
// domain as the builder.
std::int64_t extremal_edge_count(int n, int delta, int k);

// Order premise of the edge-count sufficient condition:
//   n >= max{ (d^2+(2-k)d-2k-1)^2 / (6(d-k)) + d + k + 1,  d^2+4d-k^2+6 }
// evaluated exactly. Requires k even >= 2 and delta >= k+1.
bool size_theorem_order_premise(int n, int delta, int k);

// Order premise of the spectral sufficient condition:
//   n >= (2k + 3 + sqrt(8k^2 - 8k + 1)) / 2,
// checked in integers as 2n-2k-3 >= 0 and (2n-2k-3)^2 >= 8k^2-8k+1.
bool spectral_theorem_order_premise(int n, int k);

// Signless-Laplacian threshold 2(n-2) + (2k-2)/(n-1), exact.
Rat q_threshold(int n, int k);

// Structural recognizer for the extremal configuration (with delta taken
// as the graph's own minimum degree): delta universal vertices, exactly
// (delta-k)delta+1 independent vertices of degree delta whose neighborhood
// is precisely the universal set, and the rest a nonempty clique.
bool is_extremal_graph(const Graph& g, int k);

enum class AuditOutcome {
  consistent,        // sufficient condition fired and the property holds
  premise_unmet,     // theorem does not speak about this graph
  not_triggered,     // premises hold but the measured quantity is below threshold
  exception_clause,  // graph is the named extremal exception; verdict recorded, not judged
  counterexample,    // condition fired, property fails: would falsify the theorem
  undetermined,      // oracle over budget or eigenvalue estimate unconverged
};
const char* to_string(AuditOutcome o);

struct TheoremReport {
  const char* theorem = "";  // "size" or "spectral"
  bool premise_met = false;
  std::string failed_premise;      // set when premise_met is false
  std::optional<Rat> threshold;    // edge count (size) or q bound (spectral)
  std::int64_t measured_edges = 0; // size theorem
  double measured_q = 0.0;         // spectral theorem
  bool triggered = false;
  bool borderline = false;   // spectral only: |q - threshold| <= eps, float not trusted
  bool extremal_match = false;  // size only: recognizer accepted g
  std::optional<ConditionVerdict> property;  // present when the oracle ran
  std::optional<SpectralEstimate> q_estimate;
  AuditOutcome outcome = AuditOutcome::undetermined;
};

TheoremReport audit_size_theorem(const Graph& g, int k, const OracleBudget& budget = {});

TheoremReport audit_spectral_theorem(const Graph& g, int k, double eps_borderline = 1e-9,
                                     const PowerOptions& popts = {},
                                     const OracleBudget& budget = {});

}  // namespace kspp
