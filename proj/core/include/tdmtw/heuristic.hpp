#pragma once

#include "tdmtw/decomposition.hpp"
#include "tdmtw/signed_graph.hpp"

namespace tdm {

struct HeuristicResult {
    TDMDecomposition decomposition;
    bool budget_exhausted = false;
};

/// Best-effort TDM decomposition of (g, gamma, roots). Always valid; width is
/// not guaranteed optimal.
///
/// Elimination-order tree decomposition (degree-<=2 reduction first, then
/// min-fill), subset bags contracted away, J grown as the minimal subtree
/// whose bags cover the roots. Protectors per bag: the bag's roots, adhesion
/// vertices (all of them on J, all but one per adhesion elsewhere), then a
/// greedy hitting set over enumerated odd cycles of the remaining bag
/// subgraph. `budget` caps the total number of enumerated cycles plus greedy
/// steps; when it runs out the result is still valid but carries the flag.
HeuristicResult decompose_heuristic(const RootedSignedGraph& g, int budget = 10000);

}  // namespace tdm
