#ifndef WMP_ENUMERATE_HPP
#define WMP_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "wmp/graph.hpp"

namespace wmp {

// Canonical code of a graph on n <= 8 vertices: the minimum over all
// vertex permutations of the upper-triangle adjacency bit string, with n
// in the high bits.  Equal codes <=> isomorphic graphs.
std::uint64_t canonical_code(const Graph& g);

// All graphs on exactly n vertices up to isomorphism (n <= 7), one
// representative per class, sorted by canonical code.  Built by attaching
// a fresh vertex to every subset of every (n-1)-vertex class and
// deduplicating by code; results are cached.
const std::vector<Graph>& graphs_up_to_isomorphism(int n);

}  // namespace wmp

#endif
