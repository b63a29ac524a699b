#ifndef WMP_GRAPH6_HPP
#define WMP_GRAPH6_HPP

#include <string>
#include <string_view>

#include "wmp/graph.hpp"

namespace wmp {

// Strict, bit-exact graph6 codec.  Upper-triangle bits in column-major
// order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed into 6-bit groups,
// most significant bit first, each group offset by 63.  Sizes above 62
// use the '~' three-byte header.  Parsing rejects out-of-range bytes,
// truncated or trailing input, and nonzero padding bits.
Graph parse_graph6(std::string_view s);
std::string encode_graph6(const Graph& g);

}  // namespace wmp

#endif
