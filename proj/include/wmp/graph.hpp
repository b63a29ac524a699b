#ifndef WMP_GRAPH_HPP
#define WMP_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "wmp/errors.hpp"

namespace wmp {

// A set of vertices of some host graph, stored as a bitmask.  Bit v set
// means vertex v is in the set; bits at or above the host's n stay clear.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return bits >> v & 1; }
    void add(int v) { bits |= std::uint64_t{1} << v; }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint64_t m = bits; m; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

    bool operator==(const VertexSet&) const = default;
};

// Immutable simple undirected graph on vertices 0..n-1, n in 1..64.
// Adjacency is kept as one 64-bit row mask per vertex: row(u) bit v set
// iff {u,v} is an edge.  Rows are symmetric and the diagonal is empty.
class Graph {
public:
    static constexpr int max_vertices = 64;

    // Edgeless graph on n vertices.
    explicit Graph(int n) : n_(checked_size(n)), rows_(n, 0) {}

    // Graph from an edge list; duplicates collapse, loops are rejected.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list)
        : n_(checked_size(n)), rows_(n, 0) {
        for (auto [u, v] : edge_list) {
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw InvalidEdge("edge endpoint out of range");
            if (u == v) throw InvalidEdge("loops are not allowed");
            rows_[u] |= std::uint64_t{1} << v;
            rows_[v] |= std::uint64_t{1} << u;
        }
    }

    // Graph from prebuilt row masks; validates symmetry, empty diagonal,
    // and absence of stray bits.  Used by transforms and codecs.
    static Graph from_rows(std::vector<std::uint64_t> rows);

    int size() const { return n_; }
    bool adjacent(int u, int v) const { return rows_[u] >> v & 1; }
    std::uint64_t neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return std::popcount(rows_[v]); }
    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // lexicographic

    bool operator==(const Graph&) const = default;

private:
    static int checked_size(int n) {
        if (n < 1 || n > max_vertices)
            throw SizeOutOfRange("vertex count must be in 1..64, got " +
                                 std::to_string(n));
        return n;
    }

    int n_;
    std::vector<std::uint64_t> rows_;
};

// Named builders.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph complete_bipartite_graph(int m, int n);
Graph paw_graph();        // triangle with a pendant vertex
Graph diamond_graph();    // K4 minus an edge
Graph cricket_graph();    // triangle with two pendants on one corner
Graph dart_graph();       // diamond with a pendant on a degree-3 vertex
Graph hourglass_graph();  // two triangles sharing a vertex

// Transforms.  All return fresh values; inputs are never modified.
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph induced_subgraph(const Graph& g, VertexSet vs);

// Components as vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Two-coloring: per component the side of its smallest vertex is `first`.
// Absent when some component has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Line graph plus the map from line-graph vertex index to host edge,
// in lexicographic edge order.
struct LineGraph {
    Graph graph;
    std::vector<std::pair<int, int>> edge_of_vertex;
};
LineGraph line_graph(const Graph& g);

// Exhaustive isomorphism test, n <= 8.  Tries vertex bijections in
// lexicographic order with pointwise degree pruning and returns the first
// one that preserves adjacency both ways (mapping[u] in h corresponds to
// u in g), or absent if none exists.
std::optional<std::vector<int>> are_isomorphic_bruteforce(const Graph& g,
                                                          const Graph& h);

}  // namespace wmp

#endif
