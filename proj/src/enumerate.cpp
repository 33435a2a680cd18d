#include "kspp/enumerate.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kspp {

std::int64_t enumerate_connected_labeled(int n, const std::function<void(const Graph&)>& sink,
                                         int cap) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > cap)
    throw std::invalid_argument("enumeration capped at n <= " + std::to_string(cap) +
                                " (2^C(n,2) sweep)");
  if (n > 11) throw std::invalid_argument("enumeration edge mask limited to 64 bits");

  int mbits = n * (n - 1) / 2;
  std::vector<Edge> bit_edge(mbits);
  {
    int t = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) bit_edge[t++] = {u, v};
  }

  std::int64_t count = 0;
  std::vector<Edge> es;
  std::vector<std::uint32_t> nbr(n);
  for (std::uint64_t mask = 0;; ++mask) {
    // small-word connectivity check before building anything
    for (int v = 0; v < n; ++v) nbr[v] = 0;
    for (std::uint64_t m = mask; m;) {
      int b = std::countr_zero(m);
      m &= m - 1;
      auto [u, v] = bit_edge[b];
      nbr[u] |= 1u << v;
      nbr[v] |= 1u << u;
    }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t fresh = nbr[v] & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
    if (seen == (n >= 32 ? ~0u : (1u << n) - 1)) {
      es.clear();
      for (std::uint64_t m = mask; m;) {
        int b = std::countr_zero(m);
        m &= m - 1;
        es.push_back(bit_edge[b]);
      }
      sink(Graph(n, es));
      ++count;
    }
    if (mbits == 0 || mask == (std::uint64_t{1} << mbits) - 1) break;
  }
  return count;
}

}  // namespace kspp
