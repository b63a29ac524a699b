#ifndef WMP_PERFECTION_HPP
#define WMP_PERFECTION_HPP

#include <optional>
#include <vector>

#include "wmp/graph.hpp"

namespace wmp {

// A chordless odd cycle of length >= 5, either in the graph itself (hole)
// or in its complement (antihole).  `cycle` lists the vertices in cyclic
// order, starting at the smallest.
struct HoleWitness {
    enum Kind { hole, antihole };
    Kind kind;
    std::vector<int> cycle;

    // Re-checks the witness against a host graph: odd length >= 5,
    // consecutive vertices adjacent and non-consecutive ones not, in the
    // host for a hole and in its complement for an antihole.
    bool verify(const Graph& host) const;
};

// First odd hole found by depth-first extension of chordless paths.
// A path grows only by vertices adjacent to its endpoint and non-adjacent
// to every earlier path vertex; a candidate adjacent to the start closes
// a cycle instead, reported when its length is odd and at least 5.  Only
// the smallest cycle vertex is tried as a start, so each hole is visited
// a bounded number of times and the result is deterministic.
std::optional<HoleWitness> find_odd_hole(const Graph& g);

// Exhaustive perfection test: perfect iff the graph has no odd hole and
// no odd antihole (the hole search run on the complement).  No vertex
// budget beyond the graph type's own 64; practical up to the mid-thirties
// to low forties on product graphs.
struct PerfectionVerdict {
    bool perfect;
    std::optional<HoleWitness> witness;  // present iff imperfect
};
PerfectionVerdict is_perfect_oracle(const Graph& g);

}  // namespace wmp

#endif
