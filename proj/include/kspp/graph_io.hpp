#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kspp/graph.hpp"

namespace kspp {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph6 text form, single-byte header only (n <= 62). Parsing is strict:
// bad header, bytes outside '?'..'~', wrong length, and nonzero padding
// bits are all errors with the byte offset named in the message.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Plain edge list: a header line "n m" followed by m lines "u v" with
// 0-based endpoints. Errors carry line numbers.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace kspp
