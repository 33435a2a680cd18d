#pragma once

#include <cstdint>
#include <functional>

#include "kspp/graph.hpp"

namespace kspp {

// Visits every connected labeled graph on vertices 0..n-1 exactly once, in
// ascending order of the edge bitmask (bit index of edge (u,v), u < v, is
// v*(v-1)/2 + u, matching the graph6 bit layout). Returns the number of
// graphs visited. The guard cap (default 7) bounds the 2^C(n,2) sweep;
// asking for n above the cap is an error.
std::int64_t enumerate_connected_labeled(int n, const std::function<void(const Graph&)>& sink,
                                         int cap = 7);

}  // namespace kspp
