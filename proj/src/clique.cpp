#include "wmp/clique.hpp"

#include "wmp/product.hpp"

namespace wmp {

namespace {

struct CliqueSearch {
    const Graph& g;
    std::uint64_t best_members = 0;
    int best = 0;

    void expand(std::uint64_t clique, int size, std::uint64_t cands) {
        if (cands == 0) {
            if (size > best) {
                best = size;
                best_members = clique;
            }
            return;
        }
        // Greedy coloring into independent classes: a clique takes at most
        // one vertex per class, so the class index bounds what any clique
        // through that vertex and earlier ones can still reach.
        int count = std::popcount(cands);
        std::vector<int> order(count), bound(count);
        int filled = 0, color = 0;
        std::uint64_t left = cands;
        while (left) {
            ++color;
            std::uint64_t avail = left;
            while (avail) {
                int v = std::countr_zero(avail);
                order[filled] = v;
                bound[filled++] = color;
                left &= ~(std::uint64_t{1} << v);
                avail &= ~(std::uint64_t{1} << v | g.neighbors(v));
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (size + bound[i] <= best) return;  // bounds shrink leftward
            int v = order[i];
            std::uint64_t bit = std::uint64_t{1} << v;
            expand(clique | bit, size + 1, cands & g.neighbors(v));
            cands &= ~bit;
        }
    }
};

}  // namespace

CliqueResult max_clique(const Graph& g) {
    CliqueSearch search{g};
    search.expand(0, 0, g.vertex_mask());
    return CliqueResult{search.best, VertexSet(search.best_members)};
}

bool IsoWitness::verify(const Graph& g, const Graph& h) const {
    if (g.size() != h.size() ||
        static_cast<int>(mapping.size()) != g.size())
        return false;
    std::uint64_t hit = 0;
    for (int y : mapping) {
        if (y < 0 || y >= h.size() || (hit >> y & 1)) return false;
        hit |= std::uint64_t{1} << y;
    }
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v) != h.adjacent(mapping[u], mapping[v]))
                return false;
    return true;
}

std::optional<IsoWitness> iso_via_product(const Graph& g, const Graph& h) {
    if (g.size() != h.size())
        throw SizeMismatch("factors must have equal vertex counts");
    int n = g.size();
    if (n * n > Graph::max_vertices)
        throw SizeOutOfRange("product of the factors exceeds 64 vertices");
    ProductGraph p = weak_modular_product(g, h);
    CliqueResult c = max_clique(p.graph);
    if (c.size < n) return std::nullopt;
    // A clique never repeats a row or column, so n members define a bijection.
    IsoWitness w{std::vector<int>(n, -1)};
    for (int v : c.members.members()) {
        auto [x, y] = p.coords(v);
        w.mapping[x] = y;
    }
    return w;
}

}  // namespace wmp
