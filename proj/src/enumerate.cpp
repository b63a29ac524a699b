#include "wmp/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace wmp {

std::uint64_t canonical_code(const Graph& g) {
    int n = g.size();
    if (n > 8)
        throw SizeOutOfRange("canonical codes are capped at 8 vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t bits = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                bits = bits << 1 | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::uint64_t(n) << 32 | best;
}

const std::vector<Graph>& graphs_up_to_isomorphism(int n) {
    if (n < 1 || n > 7)
        throw SizeOutOfRange("class enumeration is supported for 1..7 "
                             "vertices");
    static std::mutex lock;
    static std::map<int, std::vector<Graph>> cache;
    std::scoped_lock guard(lock);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    if (cache.find(1) == cache.end()) cache[1] = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        if (cache.find(k) != cache.end()) continue;
        std::set<std::uint64_t> seen;
        std::vector<std::pair<std::uint64_t, Graph>> found;
        for (const Graph& base : cache[k - 1])
            for (std::uint64_t attach = 0; attach >> (k - 1) == 0; ++attach) {
                std::vector<std::uint64_t> rows(k);
                for (int v = 0; v < k - 1; ++v)
                    rows[v] = base.neighbors(v) |
                              (attach >> v & 1) << (k - 1);
                rows[k - 1] = attach;
                Graph cand = Graph::from_rows(std::move(rows));
                std::uint64_t code = canonical_code(cand);
                if (seen.insert(code).second)
                    found.emplace_back(code, std::move(cand));
            }
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Graph> classes;
        classes.reserve(found.size());
        for (auto& [code, graph] : found) classes.push_back(std::move(graph));
        cache[k] = std::move(classes);
    }
    return cache[n];
}

}  // namespace wmp
