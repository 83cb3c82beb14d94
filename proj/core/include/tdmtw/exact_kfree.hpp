#pragma once

#include "tdmtw/signed_graph.hpp"

#include <set>

namespace tdm {

/// Exact minimum K-free width over all K-free decompositions of (g, roots).
/// Exhaustive: enumerates every free set L, reduces the rest to an exact
/// treewidth computation (subset dynamic program) on the graph outside L with
/// each free component's neighborhood turned into a clique. Deterministic.
/// Guarded to |V| <= 16.
int exact_kfree_tw(const RootedSignedGraph& g, const std::set<int>& roots);

/// Exact treewidth of the simple graph on `vertices` whose adjacency is given
/// by `adj` (index-based bitmasks). Returns -1 for the empty graph. Exposed
/// for reuse and testing.
int exact_treewidth_masks(int n, const std::vector<unsigned>& adj);

}  // namespace tdm
