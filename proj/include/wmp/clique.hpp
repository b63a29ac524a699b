#ifndef WMP_CLIQUE_HPP
#define WMP_CLIQUE_HPP

#include <optional>
#include <vector>

#include "wmp/graph.hpp"

namespace wmp {

struct CliqueResult {
    int size;
    VertexSet members;
};

// Exact maximum clique by branch and bound with a greedy-coloring upper
// bound.  Candidates are colored in ascending vertex order and expanded
// from the highest color down, so ties resolve deterministically to the
// first optimum encountered.
CliqueResult max_clique(const Graph& g);

// Vertex bijection g -> h together with a self-check.
struct IsoWitness {
    std::vector<int> mapping;
    bool verify(const Graph& g, const Graph& h) const;
};

// Isomorphism via the weak modular product: the product of two n-vertex
// graphs has clique number at most n, with equality exactly when the
// factors are isomorphic; a maximum clique of size n reads out as the
// bijection x -> y over its members (x, y).  Needs equal sizes and
// n * n <= 64.
std::optional<IsoWitness> iso_via_product(const Graph& g, const Graph& h);

}  // namespace wmp

#endif
