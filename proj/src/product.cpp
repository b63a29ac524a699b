#include "wmp/product.hpp"

namespace wmp {

namespace {

// Both products only ever join pairs with x != x' and y != y', so a row
// of the result is assembled by scattering a mask over y' across the
// blocks of compatible x'.
template <typename Rule>
ProductGraph build_product(const Graph& g, const Graph& h, Rule joined) {
    long n = long{g.size()} * h.size();
    if (n > Graph::max_vertices)
        throw SizeOutOfRange("product exceeds 64 vertices");
    std::vector<std::uint64_t> rows(n, 0);
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < h.size(); ++y) {
            std::uint64_t row = 0;
            for (int x2 = 0; x2 < g.size(); ++x2) {
                if (x2 == x) continue;
                std::uint64_t ys = 0;
                for (int y2 = 0; y2 < h.size(); ++y2)
                    if (y2 != y && joined(g.adjacent(x, x2), h.adjacent(y, y2)))
                        ys |= std::uint64_t{1} << y2;
                row |= ys << (x2 * h.size());
            }
            rows[x * h.size() + y] = row;
        }
    return ProductGraph{Graph::from_rows(std::move(rows)), g.size(), h.size()};
}

}  // namespace

ProductGraph tensor_product(const Graph& g, const Graph& h) {
    return build_product(g, h, [](bool a, bool b) { return a && b; });
}

ProductGraph weak_modular_product(const Graph& g, const Graph& h) {
    return build_product(g, h, [](bool a, bool b) { return a == b; });
}

}  // namespace wmp
