#include "kspp/parity.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace kspp {

namespace {

void check_k(int k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("k must be even and >= 2, got " + std::to_string(k));
}

// Component count of the subgraph induced on `alive` (bitmask, n <= 64).
int mask_components(const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
  int comps = 0;
  while (alive) {
    ++comps;
    std::uint64_t frontier = alive & (~alive + 1);  // lowest alive vertex
    alive ^= frontier;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t fresh = adj[v] & alive;
      frontier |= fresh;
      alive &= ~fresh;
    }
  }
  return comps;
}

// Colex odometer over j-subsets of {0..n-1}; visits masks in ascending
// numeric order within the size class. Returns false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
  int j = static_cast<int>(c.size());
  for (int i = 0; i < j; ++i) {
    int ceiling = (i + 1 < j) ? c[i + 1] - 1 : n - 1;
    if (c[i] < ceiling) {
      ++c[i];
      for (int t = 0; t < i; ++t) c[t] = t;
      return true;
    }
  }
  return false;
}

}  // namespace

ConditionVerdict kspp_condition(const Graph& g, int k, const OracleBudget& budget) {
  check_k(k);
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("condition oracle needs n >= 1");
  if (n > budget.max_condition_vertices || n > 64)
    throw BudgetError("condition oracle over budget: n = " + std::to_string(n) + " > " +
                      std::to_string(std::min(budget.max_condition_vertices, 64)));

  std::vector<std::uint64_t> adj(n);
  std::vector<std::int64_t> deg(n);
  for (int v = 0; v < n; ++v) {
    adj[v] = g.neighbors(v).low_word();
    deg[v] = g.degree(v);
  }
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  auto report = [&](std::uint64_t smask, std::int64_t sum, int j) {
    ConditionVerdict v;
    v.satisfied = false;
    v.witness_s = VertexSet::from_mask(smask, n);
    v.components = mask_components(adj, full & ~smask);
    v.bound = sum - static_cast<std::int64_t>(k) * j + 1;
    return v;
  };

  for (int j = 0; j <= n; ++j) {
    std::vector<int> c(j);
    std::uint64_t smask = 0;
    std::int64_t sum = 0;
    for (int i = 0; i < j; ++i) {
      c[i] = i;
      smask |= std::uint64_t{1} << i;
      sum += deg[i];
    }
    while (true) {
      std::int64_t bound = sum - static_cast<std::int64_t>(k) * j + 1;
      // c(G-S) never exceeds n-|S|, so only short bounds need a real count.
      if (bound < n - j && mask_components(adj, full & ~smask) > bound)
        return report(smask, sum, j);
      if (j == 0) break;
      // advance the odometer, patching mask and degree sum incrementally
      int i = 0, jj = j;
      for (; i < jj; ++i) {
        int ceiling = (i + 1 < jj) ? c[i + 1] - 1 : n - 1;
        if (c[i] < ceiling) break;
      }
      if (i == jj) break;
      for (int t = 0; t <= i; ++t) {
        smask &= ~(std::uint64_t{1} << c[t]);
        sum -= deg[c[t]];
      }
      ++c[i];
      for (int t = 0; t < i; ++t) c[t] = t;
      for (int t = 0; t <= i; ++t) {
        smask |= std::uint64_t{1} << c[t];
        sum += deg[c[t]];
      }
    }
  }
  ConditionVerdict ok;
  ok.satisfied = true;
  ok.witness_s = VertexSet(n);
  return ok;
}

DefinitionVerdict kspp_definition(const Graph& g, int k, const OracleBudget& budget) {
  check_k(k);
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("definition oracle needs n >= 1");
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  DefinitionVerdict verdict;
  if (m > budget.max_definition_edges || n > budget.max_definition_vertices || n > 32 || m > 62) {
    verdict.outcome = DefinitionOutcome::budget_exceeded;
    return verdict;
  }

  std::vector<int> deg(n, 0);
  std::uint32_t parity = 0;
  int bad = n;  // vertices currently failing: degree even and < k (all start at 0)

  auto bump = [&](int w, int delta) {
    int d0 = deg[w];
    int d1 = d0 + delta;
    bool ok0 = (d0 & 1) || d0 >= k;
    bool ok1 = (d1 & 1) || d1 >= k;
    bad += static_cast<int>(ok0) - static_cast<int>(ok1);
    deg[w] = d1;
    parity ^= std::uint32_t{1} << w;
  };

  std::vector<std::uint64_t> served((std::size_t{1} << n) / 64 + 1, 0);
  auto mark = [&]() {
    if (bad == 0) served[parity >> 6] |= std::uint64_t{1} << (parity & 63);
  };

  std::uint64_t fmask = 0;
  mark();  // F = {} (never valid for k >= 2, but keep the sweep uniform)
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t t = 1; t < total; ++t) {
    int e = std::countr_zero(t);  // Gray code: bit flipped between t-1 and t
    auto [u, v] = edges[e];
    std::uint64_t bit = std::uint64_t{1} << e;
    int delta = (fmask & bit) ? -1 : 1;
    fmask ^= bit;
    bump(u, delta);
    bump(v, delta);
    mark();
  }

  for (std::uint64_t w : served) verdict.served_count += std::popcount(w);
  const std::int64_t want = std::int64_t{1} << (n - 1);
  if (verdict.served_count == want) {
    verdict.outcome = DefinitionOutcome::satisfied;
    verdict.witness_x = VertexSet(n);
    return verdict;
  }

  verdict.outcome = DefinitionOutcome::violated;
  for (int j = 0; j <= n; j += 2) {
    std::vector<int> c(j);
    for (int i = 0; i < j; ++i) c[i] = i;
    do {
      std::uint32_t xmask = 0;
      for (int i = 0; i < j; ++i) xmask |= std::uint32_t{1} << c[i];
      if (!(served[xmask >> 6] >> (xmask & 63) & 1)) {
        verdict.witness_x = VertexSet::from_mask(xmask, n);
        return verdict;
      }
    } while (j > 0 && next_combination(c, n));
  }
  // served_count < 2^(n-1) guarantees the loop above found a witness
  throw std::logic_error("definition oracle: coverage count disagrees with witness scan");
}

std::optional<FactorWitness> odd_even_factor(const Graph& g, const VertexSet& x, int k,
                                             const OracleBudget& budget) {
  check_k(k);
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("factor search needs n >= 1");
  if (x.size_bits() != n) throw std::invalid_argument("target set sized for wrong graph");
  if (x.count() % 2 != 0) throw std::invalid_argument("target set must have even size");
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  if (m > budget.max_definition_edges || n > budget.max_definition_vertices)
    throw BudgetError("factor search over budget: m = " + std::to_string(m) +
                      ", n = " + std::to_string(n));

  std::vector<int> cur(n, 0), rem(n, 0), min_deg(n), want_odd(n);
  for (auto [u, v] : edges) {
    ++rem[u];
    ++rem[v];
  }
  for (int v = 0; v < n; ++v) {
    want_odd[v] = x.test(v) ? 1 : 0;
    min_deg[v] = want_odd[v] ? 1 : k;
  }

  auto feasible = [&](int v) {
    if (cur[v] + rem[v] < min_deg[v]) return false;
    if (rem[v] == 0) return (cur[v] & 1) == want_odd[v] && cur[v] >= min_deg[v];
    return true;
  };

  // isolated vertices never appear as endpoints below, so vet everyone once
  for (int v = 0; v < n; ++v)
    if (!feasible(v)) return std::nullopt;

  std::vector<Edge> chosen;
  // Decide edges from the highest bitmask index down, exclusion first:
  // the first complete assignment found is the numerically smallest mask.
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i < 0) return true;
    auto [u, v] = edges[i];
    --rem[u];
    --rem[v];
    if (feasible(u) && feasible(v) && self(self, i - 1)) return true;
    cur[u] += 1;
    cur[v] += 1;
    bool ok = feasible(u) && feasible(v);
    if (ok) chosen.push_back(edges[i]);
    if (ok && self(self, i - 1)) return true;
    if (ok) chosen.pop_back();
    cur[u] -= 1;
    cur[v] -= 1;
    ++rem[u];
    ++rem[v];
    return false;
  };

  if (!dfs(dfs, m - 1)) return std::nullopt;
  FactorWitness w;
  w.edges = chosen;
  std::sort(w.edges.begin(), w.edges.end());
  return w;
}

CrossValidation kspp_cross_validate(const Graph& g, int k, const OracleBudget& budget) {
  CrossValidation cv;
  cv.in_theorem_scope = g.is_connected();
  try {
    cv.condition = kspp_condition(g, k, budget);
  } catch (const BudgetError&) {
    cv.condition = std::nullopt;
  }
  cv.definition = kspp_definition(g, k, budget);
  cv.comparable = cv.in_theorem_scope && cv.condition.has_value() &&
                  cv.definition.outcome != DefinitionOutcome::budget_exceeded;
  cv.agree = cv.comparable && (cv.condition->satisfied ==
                               (cv.definition.outcome == DefinitionOutcome::satisfied));
  return cv;
}

}  // namespace kspp
