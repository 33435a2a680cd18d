#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kspp/bitset.hpp"

namespace kspp {

using VertexSet = DynBitset;
using Edge = std::pair<int, int>;  // always stored with first < second

// Simple undirected graph, adjacency kept as one bitset row per vertex.
// Instances are immutable after construction; "mutations" return copies.
class Graph {
 public:
  Graph() = default;
  // Self-loops are rejected, duplicate edges collapse to one.
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }
  const DynBitset& neighbors(int v) const { return adj_[v]; }

  int min_degree() const;  // requires n >= 1
  bool is_connected() const;
  std::vector<Edge> edges() const;  // sorted lexicographically, u < v

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<DynBitset> adj_;
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

// Components of G - removed. assignment[v] is the component index of a
// surviving vertex (indices assigned in order of lowest contained vertex),
// or -1 for removed vertices. count == 0 iff everything was removed.
struct ComponentPartition {
  int count = 0;
  std::vector<int> assignment;
};

ComponentPartition components_after_removal(const Graph& g, const VertexSet& removed);

// Number of edges with one endpoint in a and the other in b; a and b must
// be disjoint subsets of the vertex range.
std::int64_t cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b);

// Number of edges with both endpoints inside s.
std::int64_t induced_edge_count(const Graph& g, const VertexSet& s);

// Join of a clique on s vertices with a disjoint union of cliques whose
// sizes are given by parts (every part >= 1). Vertices are numbered with
// the clique first, then the parts in the given order.
struct PartitionSpec {
  int clique_size = 0;          // s >= 0
  std::vector<int> parts;       // each >= 1; may be empty only if s >= 1
};

Graph build_join_clique_union(const PartitionSpec& spec);

// The edge-extremal candidate K_delta v (K_{n-(delta-k+1)delta-1} u
// ((delta-k)delta+1) K_1): delta universal vertices joined to one large
// clique plus (delta-k)delta+1 isolated-in-the-union vertices.
// Requires k >= 2 even, delta >= k+1, and n large enough that the large
// clique is nonempty.
Graph build_extremal_graph(int n, int delta, int k);

}  // namespace kspp
