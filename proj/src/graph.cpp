#include "wmp/graph.hpp"

#include <algorithm>
#include <numeric>

namespace wmp {

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
    Graph g(static_cast<int>(rows.size()));
    std::uint64_t full = g.vertex_mask();
    for (int u = 0; u < g.n_; ++u) {
        if (rows[u] & ~full)
            throw InvalidEdge("adjacency row has bits beyond vertex count");
        if (rows[u] >> u & 1) throw InvalidEdge("loops are not allowed");
        for (std::uint64_t m = rows[u]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (!(rows[v] >> u & 1))
                throw InvalidEdge("adjacency rows are not symmetric");
        }
    }
    g.rows_ = std::move(rows);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        // bits strictly above u; (2 << 63) wraps to 0, making the mask ~0
        std::uint64_t above = rows_[u] & ~((std::uint64_t{2} << u) - 1);
        for (std::uint64_t m = above; m; m &= m - 1)
            out.emplace_back(u, std::countr_zero(m));
    }
    return out;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw SizeOutOfRange("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1)
        throw SizeOutOfRange("both sides of a complete bipartite graph "
                             "need at least one vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
    return Graph(m + n, e);
}

Graph paw_graph() {
    return Graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
}

Graph diamond_graph() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Graph cricket_graph() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}});
}

Graph dart_graph() {
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}});
}

Graph hourglass_graph() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

Graph complement(const Graph& g) {
    int n = g.size();
    std::uint64_t full = g.vertex_mask();
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v)
        rows[v] = (~g.neighbors(v) & full) & ~(std::uint64_t{1} << v);
    return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.size() + h.size();
    if (n > Graph::max_vertices)
        throw SizeOutOfRange("disjoint union exceeds 64 vertices");
    std::vector<std::uint64_t> rows(n, 0);
    for (int v = 0; v < g.size(); ++v) rows[v] = g.neighbors(v);
    for (int v = 0; v < h.size(); ++v)
        rows[g.size() + v] = h.neighbors(v) << g.size();
    return Graph::from_rows(std::move(rows));
}

Graph induced_subgraph(const Graph& g, VertexSet vs) {
    if (vs.empty()) throw EmptySelection("induced subgraph of empty set");
    if (vs.bits & ~g.vertex_mask())
        throw SizeOutOfRange("vertex set has members beyond host size");
    std::vector<int> keep = vs.members();  // increasing, so labels keep order
    int k = static_cast<int>(keep.size());
    std::vector<std::uint64_t> rows(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (g.adjacent(keep[a], keep[b]))
                rows[a] |= std::uint64_t{1} << b;
    return Graph::from_rows(std::move(rows));
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    std::uint64_t unseen = g.vertex_mask();
    while (unseen) {
        std::uint64_t comp = std::uint64_t{1} << std::countr_zero(unseen);
        for (;;) {  // grow by neighborhood until stable
            std::uint64_t grown = comp;
            for (std::uint64_t m = comp; m; m &= m - 1)
                grown |= g.neighbors(std::countr_zero(m));
            grown &= g.vertex_mask();
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(VertexSet(comp));
        unseen &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    VertexSet side[2];
    for (VertexSet comp : connected_components(g)) {
        std::uint64_t color[2] = {0, 0};
        int start = std::countr_zero(comp.bits);
        color[0] = std::uint64_t{1} << start;
        std::uint64_t frontier = color[0];
        int parity = 0;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                next |= g.neighbors(std::countr_zero(m));
            next &= comp.bits & ~(color[0] | color[1]);
            parity ^= 1;
            color[parity] |= next;
            frontier = next;
        }
        for (int s : {0, 1})
            for (std::uint64_t m = color[s]; m; m &= m - 1)
                if (g.neighbors(std::countr_zero(m)) & color[s])
                    return std::nullopt;  // odd cycle
        side[0].bits |= color[0];
        side[1].bits |= color[1];
    }
    return std::make_pair(side[0], side[1]);
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

LineGraph line_graph(const Graph& g) {
    auto es = g.edges();
    if (es.empty()) throw EmptySelection("line graph of an edgeless graph");
    if (static_cast<int>(es.size()) > Graph::max_vertices)
        throw SizeOutOfRange("line graph exceeds 64 vertices");
    int k = static_cast<int>(es.size());
    std::vector<std::uint64_t> rows(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            auto [u1, v1] = es[a];
            auto [u2, v2] = es[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) {
                rows[a] |= std::uint64_t{1} << b;
                rows[b] |= std::uint64_t{1} << a;
            }
        }
    return LineGraph{Graph::from_rows(std::move(rows)), std::move(es)};
}

std::optional<std::vector<int>> are_isomorphic_bruteforce(const Graph& g,
                                                          const Graph& h) {
    if (g.size() > 8 || h.size() > 8)
        throw SizeOutOfRange("brute-force isomorphism is capped at 8 vertices");
    if (g.size() != h.size()) return std::nullopt;
    int n = g.size();

    std::vector<int> dg(n), dh(n);
    for (int v = 0; v < n; ++v) dg[v] = g.degree(v), dh[v] = h.degree(v);
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) ok = dg[v] == dh[perm[v]];
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = g.adjacent(u, v) == h.adjacent(perm[u], perm[v]);
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace wmp
