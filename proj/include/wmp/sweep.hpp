#ifndef WMP_SWEEP_HPP
#define WMP_SWEEP_HPP

#include <array>
#include <string>
#include <vector>

#include "wmp/graph.hpp"

namespace wmp {

// One ordered factor pair where the polynomial classifier and the
// exhaustive oracle disagree; factors are reported in graph6 form.
struct SweepMismatch {
    std::string left, right;
    bool classifier_perfect;
    bool oracle_perfect;
};

struct SweepReport {
    int max_n = 0;
    int classes = 0;                      // isomorphism classes considered
    long pairs = 0;                       // ordered factor pairs checked
    std::array<long, 11> perfect_by_case{};  // ordered pairs per case 1..10
    long imperfect = 0;                   // ordered pairs with no case
    std::vector<SweepMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

// Runs classifier against oracle over every ordered pair of isomorphism
// classes with 1..max_n vertices each (max_n <= 6; products stay within
// the 64-vertex graph bound but cost grows steeply).  Pairs fan out to
// `jobs` worker threads (0 = hardware concurrency); aggregation order is
// fixed, so reports are deterministic.
SweepReport run_sweep(int max_n, int jobs = 0);

}  // namespace wmp

#endif
