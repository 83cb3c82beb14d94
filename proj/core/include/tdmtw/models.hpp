#pragma once

#include "tdmtw/signed_graph.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tdm {

/// Outcome of a model check: ok, or a failure with the violated condition.
struct VerifyResult {
    bool ok;
    std::string reason;

    static VerifyResult pass() { return {true, ""}; }
    static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

/// A subtree of the host graph: vertex set plus the tree's edge ids.
struct HostTree {
    std::set<int> vertices;
    std::set<int> edges;
};

/// Minor model of a guest in a host: vertex-disjoint host trees (one per
/// guest vertex), an injective guest-edge -> host-edge map, and the host
/// shift set under which tree edges are even and mapped edges match the
/// guest parities.
struct MinorModel {
    std::map<int, HostTree> trees;   // guest vertex -> host subtree
    std::map<int, int> edge_map;     // guest edge id -> host edge id
    std::set<int> shift_set;         // host vertices shifted at
};

/// Subdivision model: injective guest-vertex -> host-vertex map, guest-edge
/// -> internally disjoint host path (edge id sequence), and a guest shift set
/// so that each path's host parity equals the shifted guest parity.
struct SubdivisionModel {
    std::map<int, int> vertex_map;            // guest vertex -> host vertex
    std::map<int, std::vector<int>> paths;    // guest edge id -> host edge ids
    std::set<int> guest_shift_set;            // guest vertices shifted at
};

/// Check all minor-model conditions. With rooted=true additionally checks
/// that the tree of every guest root contains a host root.
VerifyResult verify_minor_model(const RootedSignedGraph& host, const RootedSignedGraph& guest,
                                const MinorModel& m, bool rooted);

/// Check all subdivision-model conditions.
VerifyResult verify_subdivision_model(const RootedSignedGraph& host,
                                      const RootedSignedGraph& guest,
                                      const SubdivisionModel& s);

/// Translate an odd-minor certificate (a 2-coloring proper on every model
/// tree) into the host shift set of the corresponding signed-graph model of
/// an all-odd guest inside an all-odd host: the shift set is the color-2
/// class of the model's tree vertices. Throws if the coloring is not proper
/// on some tree.
std::set<int> odd_minor_coloring_to_shift(const MinorModel& skeleton,
                                          const RootedSignedGraph& host,
                                          const std::map<int, int>& coloring);

/// Inverse direction: read the 2-coloring off a shift set (color 2 on
/// shifted vertices, color 1 elsewhere).
std::map<int, int> shift_to_odd_minor_coloring(const RootedSignedGraph& host,
                                               const std::set<int>& shift_set);

/// Host vertex sequence of a path given as consecutive edge ids, starting at
/// `from`. Throws if the ids do not chain from that endpoint.
std::vector<int> path_vertices(const RootedSignedGraph& host, const std::vector<int>& edge_ids,
                               int from);

}  // namespace tdm
