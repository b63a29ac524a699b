#include "wmp/patterns.hpp"

#include <algorithm>

#include "wmp/expr.hpp"

namespace wmp {

const std::vector<Pattern>& pattern_catalog() {
    static const std::vector<Pattern> table = [] {
        std::vector<Pattern> t;
        for (const char* name :
             {"P3", "P4", "P5", "C4", "C5", "K3", "2*K2", "3*K2", "K2+E1",
              "K2+E2", "P3+E1", "P4+E1", "K2,2+E1", "K1,3", "diamond", "paw",
              "cricket", "dart", "hourglass", "diamond+E1", "paw+E1",
              "C4+E1"})
            t.push_back(Pattern{name, parse_expr(name)});
        return t;
    }();
    return table;
}

const Graph& pattern(std::string_view name) {
    for (const Pattern& p : pattern_catalog())
        if (p.name == name) return p.graph;
    throw ParseError("unknown pattern '" + std::string(name) + "'", 0);
}

std::optional<VertexSet> find_induced(const Graph& g, const Graph& pat) {
    int k = pat.size(), n = g.size();
    if (k > n) return std::nullopt;

    // hosts that have room for pattern vertex i's neighbors and non-neighbors
    std::vector<std::uint64_t> viable(k, 0);
    for (int i = 0; i < k; ++i)
        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= pat.degree(i) &&
                n - 1 - g.degree(v) >= k - 1 - pat.degree(i))
                viable[i] |= std::uint64_t{1} << v;

    std::vector<int> image(k);
    std::uint64_t used = 0;
    auto assign = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        std::uint64_t cand = viable[i] & ~used;
        for (int j = 0; j < i; ++j)
            cand &= pat.adjacent(j, i) ? g.neighbors(image[j])
                                       : ~g.neighbors(image[j]);
        for (std::uint64_t m = cand; m; m &= m - 1) {
            int v = std::countr_zero(m);
            image[i] = v;
            used |= std::uint64_t{1} << v;
            if (self(self, i + 1)) return true;
            used &= ~(std::uint64_t{1} << v);
        }
        return false;
    };
    if (!assign(assign, 0)) return std::nullopt;
    VertexSet out;
    for (int v : image) out.add(v);
    return out;
}

bool is_empty_graph(const Graph& g) { return g.edge_count() == 0; }

bool is_clique(const Graph& g) {
    return g.edge_count() == g.size() * (g.size() - 1) / 2;
}

bool is_star(const Graph& g) {
    if (g.size() == 1) return true;
    if (!is_complete_bipartite(g)) return false;
    auto parts = *bipartition(g);
    return parts.first.count() == 1 || parts.second.count() == 1;
}

bool is_complete_bipartite(const Graph& g) {
    if (g.size() < 2 || !is_connected(g)) return false;
    auto parts = bipartition(g);
    if (!parts) return false;
    return g.edge_count() == parts->first.count() * parts->second.count();
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u) & g.neighbors(v)) return false;
    return true;
}

bool is_disjoint_union_of_cliques(const Graph& g) {
    // each vertex must dominate its whole component
    for (VertexSet comp : connected_components(g))
        for (int v : comp.members())
            if ((g.neighbors(v) | std::uint64_t{1} << v) != comp.bits)
                return false;
    return true;
}

bool is_complete_multipartite(const Graph& g) {
    return is_disjoint_union_of_cliques(complement(g));
}

bool is_disjoint_union_of_stars_and_cliques(const Graph& g) {
    for (VertexSet comp : connected_components(g)) {
        Graph sub = induced_subgraph(g, comp);
        if (!is_clique(sub) && !is_star(sub)) return false;
    }
    return true;
}

bool is_paw_free(const Graph& g) {
    return !find_induced(g, pattern("paw")).has_value();
}

bool is_odd_hole_paw_free(const Graph& g) {
    for (VertexSet comp : connected_components(g)) {
        Graph sub = induced_subgraph(g, comp);
        if (!is_bipartite(sub) && !is_complete_multipartite(sub)) return false;
    }
    return true;
}

bool is_odd_antihole_copaw_free(const Graph& g) {
    return is_odd_hole_paw_free(complement(g));
}

bool is_connected_p4_cricket_dart_hourglass_free(const Graph& g) {
    if (!is_connected(g)) return false;
    for (const char* name : {"P4", "cricket", "dart", "hourglass"})
        if (find_induced(g, pattern(name))) return false;
    return true;
}

std::string_view to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::Empty: return "Empty";
        case ClassLabel::Clique: return "Clique";
        case ClassLabel::Star: return "Star";
        case ClassLabel::CompleteBipartite: return "CompleteBipartite";
        case ClassLabel::CompleteMultipartite: return "CompleteMultipartite";
        case ClassLabel::DisjointCliques: return "DisjointCliques";
        case ClassLabel::DisjointStarsAndCliques:
            return "DisjointStarsAndCliques";
        case ClassLabel::Bipartite: return "Bipartite";
        case ClassLabel::TriangleFree: return "TriangleFree";
        case ClassLabel::PawFree: return "PawFree";
        case ClassLabel::OddHolePawFree: return "OddHolePawFree";
        case ClassLabel::OddAntiholeCoPawFree: return "OddAntiholeCoPawFree";
        case ClassLabel::ConnectedP4CricketDartHourglassFree:
            return "ConnectedP4CricketDartHourglassFree";
    }
    return "?";
}

std::vector<ClassLabel> classify_shape(const Graph& g) {
    std::vector<ClassLabel> out;
    auto tag = [&](bool hit, ClassLabel l) {
        if (hit) out.push_back(l);
    };
    tag(is_empty_graph(g), ClassLabel::Empty);
    tag(is_clique(g), ClassLabel::Clique);
    tag(is_star(g), ClassLabel::Star);
    tag(is_complete_bipartite(g), ClassLabel::CompleteBipartite);
    tag(is_complete_multipartite(g), ClassLabel::CompleteMultipartite);
    tag(is_disjoint_union_of_cliques(g), ClassLabel::DisjointCliques);
    tag(is_disjoint_union_of_stars_and_cliques(g),
        ClassLabel::DisjointStarsAndCliques);
    tag(is_bipartite(g), ClassLabel::Bipartite);
    tag(is_triangle_free(g), ClassLabel::TriangleFree);
    tag(is_paw_free(g), ClassLabel::PawFree);
    tag(is_odd_hole_paw_free(g), ClassLabel::OddHolePawFree);
    tag(is_odd_antihole_copaw_free(g), ClassLabel::OddAntiholeCoPawFree);
    tag(is_connected_p4_cricket_dart_hourglass_free(g),
        ClassLabel::ConnectedP4CricketDartHourglassFree);
    return out;
}

}  // namespace wmp
