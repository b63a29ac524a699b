#ifndef WMP_PATTERNS_HPP
#define WMP_PATTERNS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wmp/graph.hpp"

namespace wmp {

// Small named graphs used as forbidden induced subgraphs.  Each name is
// itself a valid family expression.
struct Pattern {
    std::string name;
    Graph graph;
};

// The fixed pattern table, in a stable order.
const std::vector<Pattern>& pattern_catalog();

// Catalog lookup by name; throws ParseError on unknown names.
const Graph& pattern(std::string_view name);

// First induced copy of `pat` inside `g` (the vertex set of the copy),
// or absent.  Backtracking over injective assignments, candidates tried
// in ascending vertex order, so the result is deterministic.
std::optional<VertexSet> find_induced(const Graph& g, const Graph& pat);

// Structural class recognizers.  All are polynomial and defined directly
// from the class, not via forbidden subgraphs, except where noted.
bool is_empty_graph(const Graph& g);
bool is_clique(const Graph& g);
bool is_star(const Graph& g);  // K1 counts as a (degenerate) star
bool is_complete_bipartite(const Graph& g);  // both sides nonempty
bool is_triangle_free(const Graph& g);
bool is_disjoint_union_of_cliques(const Graph& g);
bool is_complete_multipartite(const Graph& g);  // complement of the above
bool is_disjoint_union_of_stars_and_cliques(const Graph& g);
bool is_paw_free(const Graph& g);
// Every component bipartite or complete multipartite; equivalently no
// odd hole and no paw.
bool is_odd_hole_paw_free(const Graph& g);
// Complement dual of the above: no odd antihole and no co-paw (P3+E1).
bool is_odd_antihole_copaw_free(const Graph& g);
// Connected with no induced P4, cricket, dart, or hourglass.
bool is_connected_p4_cricket_dart_hourglass_free(const Graph& g);

// Labels a graph can carry; classify_shape returns all that apply.
enum class ClassLabel {
    Empty,
    Clique,
    Star,
    CompleteBipartite,
    CompleteMultipartite,
    DisjointCliques,
    DisjointStarsAndCliques,
    Bipartite,
    TriangleFree,
    PawFree,
    OddHolePawFree,
    OddAntiholeCoPawFree,
    ConnectedP4CricketDartHourglassFree,
};

std::string_view to_string(ClassLabel label);
std::vector<ClassLabel> classify_shape(const Graph& g);

}  // namespace wmp

#endif
