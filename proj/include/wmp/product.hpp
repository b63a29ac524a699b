#ifndef WMP_PRODUCT_HPP
#define WMP_PRODUCT_HPP

#include "wmp/graph.hpp"

namespace wmp {

// A product of two factors, with the row-major vertex numbering kept
// alongside: product vertex v = x * n_right + y stands for the pair (x, y).
struct ProductGraph {
    Graph graph;
    int n_left;
    int n_right;

    int index_of(int x, int y) const { return x * n_right + y; }
    std::pair<int, int> coords(int v) const {
        return {v / n_right, v % n_right};
    }
};

// Tensor product: (x,y) ~ (x',y') iff x ~ x' and y ~ y'.
ProductGraph tensor_product(const Graph& g, const Graph& h);

// Weak modular product: (x,y) ~ (x',y') iff either both coordinates are
// adjacent, or both are distinct and non-adjacent.  Equals the union of
// the tensor product of the factors and that of their complements, and
// is invariant under complementing both factors.
ProductGraph weak_modular_product(const Graph& g, const Graph& h);

}  // namespace wmp

#endif
