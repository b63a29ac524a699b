#include "wmp/sweep.hpp"

#include <atomic>
#include <thread>

#include "wmp/classify.hpp"
#include "wmp/enumerate.hpp"
#include "wmp/graph6.hpp"
#include "wmp/perfection.hpp"
#include "wmp/product.hpp"

namespace wmp {

namespace {

struct PairResult {
    bool oracle_perfect;
    Classification fwd, rev;
};

}  // namespace

SweepReport run_sweep(int max_n, int jobs) {
    if (max_n < 1 || max_n > 6)
        throw SizeOutOfRange("sweep supports max_n in 1..6");

    std::vector<Graph> classes;
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : graphs_up_to_isomorphism(n))
            classes.push_back(g);
    int c = static_cast<int>(classes.size());

    // one work item per unordered pair; the oracle result is shared by
    // both orientations since the products are isomorphic
    std::vector<std::pair<int, int>> todo;
    for (int i = 0; i < c; ++i)
        for (int j = i; j < c; ++j) todo.emplace_back(i, j);
    std::vector<PairResult> results(todo.size());

    auto work = [&](std::atomic<std::size_t>& next) {
        for (;;) {
            std::size_t t = next.fetch_add(1);
            if (t >= todo.size()) return;
            auto [i, j] = todo[t];
            const Graph &a = classes[i], &b = classes[j];
            PairResult r;
            r.oracle_perfect =
                is_perfect_oracle(weak_modular_product(a, b).graph).perfect;
            r.fwd = classify(a, b);
            r.rev = i == j ? r.fwd : classify(b, a);
            results[t] = r;
        }
    };

    if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 1; w < jobs; ++w) pool.emplace_back(work, std::ref(next));
    work(next);
    for (auto& t : pool) t.join();

    SweepReport report;
    report.max_n = max_n;
    report.classes = c;
    for (std::size_t t = 0; t < todo.size(); ++t) {
        auto [i, j] = todo[t];
        const PairResult& r = results[t];
        auto tally = [&](int left, int right, const Classification& cl) {
            report.pairs += 1;
            if (cl.perfect)
                report.perfect_by_case[*cl.case_id] += 1;
            else
                report.imperfect += 1;
            if (cl.perfect != r.oracle_perfect)
                report.mismatches.push_back(
                    SweepMismatch{encode_graph6(classes[left]),
                                  encode_graph6(classes[right]), cl.perfect,
                                  r.oracle_perfect});
        };
        tally(i, j, r.fwd);
        if (i != j) tally(j, i, r.rev);
    }
    return report;
}

}  // namespace wmp
