#ifndef WMP_EXPR_HPP
#define WMP_EXPR_HPP

#include <string_view>

#include "wmp/graph.hpp"

namespace wmp {

// Builds a graph from a family expression.  Grammar (whitespace ignored):
//
//   expr  := term ('+' term)*            '+' is disjoint union
//   term  := [count '*'] atom            count repeats the atom
//   atom  := 'K' int | 'K' int ',' int   complete / complete bipartite
//          | 'E' int | 'P' int | 'C' int empty / path / cycle
//          | paw | Y | diamond | cricket | dart | hourglass
//
// Integer parameters and counts must be at least 1; cycles need length 3;
// the result must fit in 64 vertices.  Examples: "C5", "K3,3", "2*K2+E1".
Graph parse_expr(std::string_view s);

}  // namespace wmp

#endif
