#ifndef WMP_CLASSIFY_HPP
#define WMP_CLASSIFY_HPP

#include <optional>
#include <string>

#include "wmp/graph.hpp"

namespace wmp {

// Verdict of the polynomial classifier for perfection of the weak modular
// product of two factors.  When perfect, `case_id` names the first
// matching case (1..10) and `orientation` tells which factor played the
// distinguished role: 0 for (g, h) as given, 1 for the swapped order.
struct Classification {
    bool perfect;
    std::optional<int> case_id;
    std::optional<int> orientation;
};

// Decides perfection of weak_modular_product(g, h) by matching the factor
// pair against ten structural cases, tried in order with orientation 0
// before 1; no case matching means the product is imperfect.  The cases:
//
//    1. one factor is K1, K2, or E2 (the other is arbitrary)
//    2. one factor is P4, the other a star, a clique plus an isolated
//       vertex, or P4
//    3. one factor is C5, the other one of P3, K2+E1, P4, C5
//    4. one factor is a union of two cliques, the other a disjoint union
//       of stars and cliques
//    5. one factor is complete bipartite, the other connected with no
//       induced P4, cricket, dart, or hourglass
//    6. one factor is complete, the other odd-hole- and paw-free
//    7. one factor is empty, the other odd-antihole- and co-paw-free
//    8. both factors complete multipartite
//    9. both factors disjoint unions of cliques
//   10. one factor a union of two cliques, the other complete bipartite
Classification classify(const Graph& g, const Graph& h);

// One-line human-readable description of a classification.
std::string explain(const Classification& c);

}  // namespace wmp

#endif
