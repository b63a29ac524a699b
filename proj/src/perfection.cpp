#include "wmp/perfection.hpp"

namespace wmp {

bool HoleWitness::verify(const Graph& host) const {
    int len = static_cast<int>(cycle.size());
    if (len < 5 || len % 2 == 0) return false;
    std::uint64_t seen = 0;
    for (int v : cycle) {
        if (v < 0 || v >= host.size() || (seen >> v & 1)) return false;
        seen |= std::uint64_t{1} << v;
    }
    for (int a = 0; a < len; ++a)
        for (int b = a + 1; b < len; ++b) {
            bool consecutive = b - a == 1 || (a == 0 && b == len - 1);
            bool adj = host.adjacent(cycle[a], cycle[b]);
            if (kind == antihole) adj = !adj;
            if (adj != consecutive) return false;
        }
    return true;
}

namespace {

struct HoleSearch {
    const Graph& g;
    std::vector<int> path;

    // `avoid` = vertices <= path[0], the path itself, and all neighbors
    // of the path interior path[1..k-2].  Candidates are then vertices
    // adjacent to the endpoint and outside `avoid`; those adjacent to
    // path[0] can only close a cycle, the rest may extend the path.
    bool grow(std::uint64_t avoid) {
        int k = static_cast<int>(path.size());
        std::uint64_t start_nbrs = g.neighbors(path[0]);
        std::uint64_t cand = g.neighbors(path[k - 1]) & ~avoid;
        std::uint64_t closing = cand & start_nbrs;
        if ((k + 1) % 2 == 1 && k + 1 >= 5 && closing) {
            path.push_back(std::countr_zero(closing));
            return true;
        }
        for (std::uint64_t m = cand & ~start_nbrs; m; m &= m - 1) {
            int w = std::countr_zero(m);
            path.push_back(w);
            // w joins the "interior"; future vertices must avoid path[k-1]'s
            // neighborhood as well (it stops being the endpoint)
            if (grow(avoid | std::uint64_t{1} << w | g.neighbors(path[k - 1])))
                return true;
            path.pop_back();
        }
        return false;
    }

    std::optional<std::vector<int>> run() {
        for (int s = 0; s + 4 < g.size(); ++s) {
            std::uint64_t below = (std::uint64_t{1} << s) - 1 | std::uint64_t{1} << s;
            for (std::uint64_t m = g.neighbors(s) & ~below; m; m &= m - 1) {
                int v1 = std::countr_zero(m);
                path = {s, v1};
                // avoid = vertices <= start, path members, and neighbors of
                // the path interior; the start's own neighbors stay eligible
                // because they are the closure candidates
                if (grow(below | std::uint64_t{1} << v1)) return path;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<HoleWitness> find_odd_hole(const Graph& g) {
    HoleSearch search{g};
    if (auto cycle = search.run())
        return HoleWitness{HoleWitness::hole, std::move(*cycle)};
    return std::nullopt;
}

PerfectionVerdict is_perfect_oracle(const Graph& g) {
    if (auto w = find_odd_hole(g)) return {false, std::move(w)};
    if (auto w = find_odd_hole(complement(g))) {
        w->kind = HoleWitness::antihole;
        return {false, std::move(w)};
    }
    return {true, std::nullopt};
}

}  // namespace wmp
