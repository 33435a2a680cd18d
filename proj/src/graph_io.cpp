#include "kspp/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace kspp {

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

[[noreturn]] void fail_at(std::size_t byte, const std::string& what) {
  throw ParseError("graph6: " + what + " at byte " + std::to_string(byte));
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("graph6: empty line");
  unsigned char head = static_cast<unsigned char>(line[0]);
  if (head == kG6Hi) fail_at(0, "multi-byte order header unsupported (order > 62)");
  if (head < kG6Lo || head > kG6Hi) fail_at(0, "header byte out of range");
  int n = head - kG6Lo;

  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() < 1 + nbytes) throw ParseError("graph6: truncated, expected " +
                                                 std::to_string(1 + nbytes) + " bytes, got " +
                                                 std::to_string(line.size()));
  if (line.size() > 1 + nbytes) fail_at(1 + nbytes, "trailing data");

  std::vector<Edge> es;
  std::size_t t = 0;  // bit cursor
  auto next_bit = [&]() -> int {
    std::size_t byte = 1 + t / 6;
    unsigned char c = static_cast<unsigned char>(line[byte]);
    if (c < kG6Lo || c > kG6Hi) fail_at(byte, "data byte out of range");
    int bit = (c - kG6Lo) >> (5 - t % 6) & 1;
    ++t;
    return bit;
  };
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (next_bit()) es.emplace_back(u, v);
  while (t < nbytes * 6) {
    std::size_t byte = 1 + t / 6;
    if (next_bit()) fail_at(byte, "nonzero padding bit");
  }
  return Graph(n, es);
}

std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("graph6 writer limited to order <= 62");
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (nbits + 5) / 6, static_cast<char>(kG6Lo));
  out[0] = static_cast<char>(kG6Lo + n);
  std::size_t t = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v)) out[1 + t / 6] += static_cast<char>(1 << (5 - t % 6));
      ++t;
    }
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  auto bad = [&](const std::string& what) -> ParseError {
    return ParseError("edge list: " + what + " at line " + std::to_string(lineno));
  };

  if (!next_line()) throw ParseError("edge list: missing header line");
  long long n, m;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) throw bad("header must be \"n m\"");
  }
  if (n < 0 || m < 0) throw bad("negative counts in header");
  if (n > 100000) throw bad("order too large");

  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw ParseError("edge list: expected " + std::to_string(m) +
                                       " edges, got " + std::to_string(i));
    std::istringstream ls(line);
    long long u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw bad("edge line must be \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n) throw bad("endpoint out of range");
    if (u == v) throw bad("self-loop");
    es.emplace_back(static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v)));
  }
  if (next_line()) throw bad("trailing content");
  return Graph(static_cast<int>(n), es);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace kspp
