#include "kspp/theorems.hpp"

#include <cmath>
#include <stdexcept>

namespace kspp {

namespace {

void check_k(int k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("k must be even and >= 2, got " + std::to_string(k));
}

void check_delta(int delta, int k) {
  check_k(k);
  if (delta < k + 1)
    throw std::invalid_argument("minimum degree parameter must be >= k+1");
}

}  // namespace

std::int64_t extremal_edge_count(int n, int delta, int k) {
  check_delta(delta, k);
  std::int64_t q = static_cast<std::int64_t>(delta - k) * delta + 1;
  std::int64_t big = static_cast<std::int64_t>(n) - (static_cast<std::int64_t>(delta - k + 1)) * delta - 1;
  if (big < 1) throw std::invalid_argument("order too small for the extremal configuration");
  // big-clique block has n - (delta-k)delta - 1 vertices once the universal
  // set is folded back in; its clique plus delta joins to the q singletons
  return binom2(static_cast<std::int64_t>(n) - (static_cast<std::int64_t>(delta - k)) * delta - 1) +
         checked_mul(delta, q);
}

bool size_theorem_order_premise(int n, int delta, int k) {
  check_delta(delta, k);
  std::int64_t d = delta;
  std::int64_t inner = d * d + (2 - k) * d - 2 * k - 1;
  Rat first = Rat(checked_mul(inner, inner), 6 * (d - k)) + Rat(d + k + 1);
  Rat second = Rat(d * d + 4 * d - static_cast<std::int64_t>(k) * k + 6);
  return Rat(n) >= first && Rat(n) >= second;
}

bool spectral_theorem_order_premise(int n, int k) {
  check_k(k);
  std::int64_t t = 2 * static_cast<std::int64_t>(n) - 2 * k - 3;
  return t >= 0 && t * t >= 8 * static_cast<std::int64_t>(k) * k - 8 * k + 1;
}

Rat q_threshold(int n, int k) {
  check_k(k);
  if (n < 2) throw std::invalid_argument("q threshold needs n >= 2");
  return Rat(2 * (static_cast<std::int64_t>(n) - 2)) + Rat(2 * static_cast<std::int64_t>(k) - 2, n - 1);
}

bool is_extremal_graph(const Graph& g, int k) {
  check_k(k);
  int n = g.vertex_count();
  if (n < 2) return false;
  int delta = g.min_degree();
  if (delta < k + 1) return false;
  std::int64_t q64 = static_cast<std::int64_t>(delta - k) * delta + 1;
  if (q64 > n) return false;
  int q = static_cast<int>(q64);
  int big = n - delta - q;
  if (big < 1) return false;  // the clique block must be nonempty

  DynBitset universal(n);
  int n_universal = 0;
  std::vector<int> low;  // degree-delta vertices outside the universal set
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == n - 1) {
      universal.set(v);
      ++n_universal;
    } else if (d == delta) {
      low.push_back(v);
    }
  }
  if (n_universal != delta) return false;
  // A one-vertex clique block is itself a degree-delta vertex whose
  // neighborhood is exactly the universal set, so it lands in `low`.
  int expected_low = (big == 1) ? q + 1 : q;
  if (static_cast<int>(low.size()) != expected_low) return false;

  for (int v : low)
    if (!(g.neighbors(v) == universal)) return false;  // exactly the universal set

  DynBitset rest(n);
  for (int v = 0; v < n; ++v) rest.set(v);
  rest.and_not(universal);
  for (int v : low) rest.reset(v);
  auto rv = rest.bits();
  for (std::size_t i = 0; i < rv.size(); ++i)
    for (std::size_t j = i + 1; j < rv.size(); ++j)
      if (!g.has_edge(rv[i], rv[j])) return false;
  return true;
}

const char* to_string(AuditOutcome o) {
  switch (o) {
    case AuditOutcome::consistent: return "consistent";
    case AuditOutcome::premise_unmet: return "premise-unmet";
    case AuditOutcome::not_triggered: return "not-triggered";
    case AuditOutcome::exception_clause: return "exception-clause";
    case AuditOutcome::counterexample: return "COUNTEREXAMPLE";
    case AuditOutcome::undetermined: return "undetermined";
  }
  return "?";
}

TheoremReport audit_size_theorem(const Graph& g, int k, const OracleBudget& budget) {
  check_k(k);
  TheoremReport r;
  r.theorem = "size";
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("audit needs n >= 1");

  if (!g.is_connected()) {
    r.failed_premise = "graph not connected";
    r.outcome = AuditOutcome::premise_unmet;
    return r;
  }
  int delta = g.min_degree();
  if (delta < k + 1) {
    r.failed_premise = "minimum degree below k+1";
    r.outcome = AuditOutcome::premise_unmet;
    return r;
  }
  std::int64_t big = static_cast<std::int64_t>(n) - (static_cast<std::int64_t>(delta - k + 1)) * delta - 1;
  if (big < 1 || !size_theorem_order_premise(n, delta, k)) {
    r.failed_premise = "order below the size-threshold bound";
    r.outcome = AuditOutcome::premise_unmet;
    return r;
  }
  r.premise_met = true;
  std::int64_t threshold = extremal_edge_count(n, delta, k);
  r.threshold = Rat(threshold);
  r.measured_edges = g.edge_count();
  r.triggered = r.measured_edges >= threshold;
  if (!r.triggered) {
    r.outcome = AuditOutcome::not_triggered;
    return r;
  }
  r.extremal_match = is_extremal_graph(g, k);
  try {
    r.property = kspp_condition(g, k, budget);
  } catch (const BudgetError&) {
    r.outcome = AuditOutcome::undetermined;
    return r;
  }
  if (r.extremal_match) {
    // the guarantee explicitly excludes this graph; record, don't judge
    r.outcome = AuditOutcome::exception_clause;
  } else {
    r.outcome = r.property->satisfied ? AuditOutcome::consistent : AuditOutcome::counterexample;
  }
  return r;
}

TheoremReport audit_spectral_theorem(const Graph& g, int k, double eps_borderline,
                                     const PowerOptions& popts, const OracleBudget& budget) {
  check_k(k);
  if (eps_borderline < 0) throw std::invalid_argument("borderline band must be >= 0");
  TheoremReport r;
  r.theorem = "spectral";
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("audit needs n >= 1");

  if (!g.is_connected()) {
    r.failed_premise = "graph not connected";
    r.outcome = AuditOutcome::premise_unmet;
    return r;
  }
  if (!spectral_theorem_order_premise(n, k)) {
    r.failed_premise = "order below the spectral-threshold bound";
    r.outcome = AuditOutcome::premise_unmet;
    return r;
  }
  r.premise_met = true;
  Rat thr = q_threshold(n, k);
  r.threshold = thr;
  r.q_estimate = q_spectral_radius(g, popts);
  r.measured_q = r.q_estimate->value;
  if (!r.q_estimate->converged) {
    r.outcome = AuditOutcome::undetermined;
    return r;
  }
  double gap = r.measured_q - thr.to_double();
  if (std::fabs(gap) <= eps_borderline) {
    // too close to call with a float estimate; never judged a counterexample
    r.borderline = true;
    r.outcome = AuditOutcome::not_triggered;
    return r;
  }
  r.triggered = gap > 0;
  if (!r.triggered) {
    r.outcome = AuditOutcome::not_triggered;
    return r;
  }
  try {
    r.property = kspp_condition(g, k, budget);
  } catch (const BudgetError&) {
    r.outcome = AuditOutcome::undetermined;
    return r;
  }
  r.outcome = r.property->satisfied ? AuditOutcome::consistent : AuditOutcome::counterexample;
  return r;
}

}  // namespace kspp
