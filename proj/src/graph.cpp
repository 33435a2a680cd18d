#include "kspp/graph.hpp"

#include <stdexcept>
#include <string>

#include "kspp/rational.hpp"

namespace kspp {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  adj_.assign(n, DynBitset(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
    if (!adj_[u].test(v)) {
      adj_[u].set(v);
      adj_[v].set(u);
      ++m_;
    }
  }
}

int Graph::min_degree() const {
  if (n_ == 0) throw std::invalid_argument("min_degree of empty graph");
  int d = degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return components_after_removal(*this, VertexSet(n_)).count == 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u].bits())
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  auto es = edges();
  es.emplace_back(std::min(u, v), std::max(u, v));
  return Graph(n_, es);
}

Graph Graph::without_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(m_));
  for (auto e : edges())
    if (e != Edge{u, v}) es.push_back(e);
  return Graph(n_, es);
}

ComponentPartition components_after_removal(const Graph& g, const VertexSet& removed) {
  int n = g.vertex_count();
  if (removed.size_bits() != n) throw std::invalid_argument("removed set sized for wrong graph");
  ComponentPartition part;
  part.assignment.assign(n, -1);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    if (removed.test(v) || part.assignment[v] != -1) continue;
    int comp = part.count++;
    part.assignment[v] = comp;
    stack.push_back(v);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u).bits()) {
        if (removed.test(w) || part.assignment[w] != -1) continue;
        part.assignment[w] = comp;
        stack.push_back(w);
      }
    }
  }
  return part;
}

std::int64_t cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
  int n = g.vertex_count();
  if (a.size_bits() != n || b.size_bits() != n)
    throw std::invalid_argument("vertex set sized for wrong graph");
  if (a.intersects(b)) throw std::invalid_argument("cross_edges requires disjoint sets");
  std::int64_t total = 0;
  for (int u : a.bits()) total += g.neighbors(u).count_and(b);
  return total;
}

std::int64_t induced_edge_count(const Graph& g, const VertexSet& s) {
  if (s.size_bits() != g.vertex_count())
    throw std::invalid_argument("vertex set sized for wrong graph");
  std::int64_t twice = 0;
  for (int u : s.bits()) twice += g.neighbors(u).count_and(s);
  return twice / 2;
}

Graph build_join_clique_union(const PartitionSpec& spec) {
  int s = spec.clique_size;
  if (s < 0) throw std::invalid_argument("join clique size must be >= 0");
  std::int64_t n64 = s;
  for (int p : spec.parts) {
    if (p < 1) throw std::invalid_argument("union part sizes must be >= 1");
    n64 += p;
  }
  if (n64 < 1) throw std::invalid_argument("join construction needs at least one vertex");
  if (n64 > 1 << 20) throw std::invalid_argument("join construction too large");
  int n = static_cast<int>(n64);

  std::vector<Edge> es;
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);  // clique + join edges
  int base = s;
  for (int p : spec.parts) {
    for (int u = 0; u < p; ++u)
      for (int v = u + 1; v < p; ++v) es.emplace_back(base + u, base + v);
    base += p;
  }
  return Graph(n, es);
}

Graph build_extremal_graph(int n, int delta, int k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be even and >= 2");
  if (delta < k + 1) throw std::invalid_argument("minimum degree must be >= k+1");
  std::int64_t singles = static_cast<std::int64_t>(delta - k) * delta + 1;
  std::int64_t big = static_cast<std::int64_t>(n) - (static_cast<std::int64_t>(delta - k + 1)) * delta - 1;
  if (big < 1)
    throw std::invalid_argument("order too small for the extremal construction: need n >= " +
                                std::to_string((static_cast<std::int64_t>(delta - k + 1)) * delta + 2));
  PartitionSpec spec;
  spec.clique_size = delta;
  spec.parts.push_back(static_cast<int>(big));
  for (std::int64_t i = 0; i < singles; ++i) spec.parts.push_back(1);
  return build_join_clique_union(spec);
}

}  // namespace kspp
