#pragma once

#include "tdmtw/signed_graph.hpp"

#include <vector>

namespace tdm {

/// A simple cycle, stored as the edge-id sequence and the visited vertex set.
struct Cycle {
    std::vector<int> edge_ids;
    std::set<int> vertices;
    int parity;
};

/// Enumerate all simple cycles of the multigraph: parallel-edge pairs as
/// 2-cycles plus DFS-enumerated cycles of length >= 3. Each cycle is reported
/// once. Intended for desk-scale graphs.
std::vector<Cycle> enumerate_cycles(const RootedSignedGraph& g);

/// Odd cycles only, deduplicated by vertex set (one representative each).
std::vector<Cycle> enumerate_odd_cycles(const RootedSignedGraph& g);

/// Exact odd cycle packing number: the maximum number of pairwise
/// vertex-disjoint odd cycles. Exhaustive cycle enumeration followed by
/// branch-and-bound set packing; deterministic. A parallel pair of edges with
/// differing parities counts as an odd cycle of length 2.
int ocp_exact(const RootedSignedGraph& g);

}  // namespace tdm
