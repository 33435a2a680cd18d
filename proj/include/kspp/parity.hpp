#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kspp/graph.hpp"

namespace kspp {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  int max_condition_vertices = 24;  // 2^n subset sweep
  int max_definition_edges = 26;    // 2^m spanning-subgraph sweep
  int max_definition_vertices = 24; // 2^n coverage table
};

// Exhaustive check of the component-counting criterion
//   c(G - S) <= sum_{v in S} deg_G(v) - k|S| + 1  for every S subseteq V
// (S = {} doubles as the connectivity test). Subsets are enumerated in
// size-ascending order, ties broken by ascending bitmask value (bit v is
// vertex v), so a reported witness is the first violating set in that
// order. Requires k even, k >= 2, n >= 1; n beyond the budget throws
// BudgetError.
struct ConditionVerdict {
  bool satisfied = false;
  VertexSet witness_s;        // first violating S; empty bitset when satisfied
  int components = 0;         // c(G - witness_s), when violated
  std::int64_t bound = 0;     // sum deg - k|S| + 1 at the witness, when violated
};

ConditionVerdict kspp_condition(const Graph& g, int k, const OracleBudget& budget = {});

// Exhaustive check of the property itself: every even-size X needs a
// spanning subgraph whose degrees are odd exactly on X and in
// {k, k+2, ...} elsewhere. Sweeps all 2^m edge subsets once (Gray code)
// and records which parity patterns were served; an over-budget input is
// itself a verdict here, not an error.
enum class DefinitionOutcome { satisfied, violated, budget_exceeded };

struct DefinitionVerdict {
  DefinitionOutcome outcome = DefinitionOutcome::budget_exceeded;
  VertexSet witness_x;            // first unserved even-size X, when violated
  std::int64_t served_count = 0;  // distinct even-size sets served (of 2^(n-1))
};

DefinitionVerdict kspp_definition(const Graph& g, int k, const OracleBudget& budget = {});

// A concrete witness subgraph for one target set X (|X| even): degrees odd
// on X, in {k, k+2, ...} off X. Edge subsets are searched in ascending
// bitmask order over the lexicographically sorted edge list, so the first
// witness is deterministic. nullopt means no such subgraph exists.
struct FactorWitness {
  std::vector<Edge> edges;
};

std::optional<FactorWitness> odd_even_factor(const Graph& g, const VertexSet& x, int k,
                                             const OracleBudget& budget = {});

// Runs both oracles and compares them. The component-counting criterion is
// equivalent to the property only for connected graphs, so disconnected
// inputs are flagged out of scope for the comparison (the definition
// verdict is still authoritative there).
struct CrossValidation {
  bool in_theorem_scope = false;  // g connected
  std::optional<ConditionVerdict> condition;  // empty if its budget was exceeded
  DefinitionVerdict definition;
  bool comparable = false;  // both decided and in scope
  bool agree = false;
};

CrossValidation kspp_cross_validate(const Graph& g, int k, const OracleBudget& budget = {});

}  // namespace kspp
