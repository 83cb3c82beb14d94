#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace tdm {

/// One edge of a rooted signed multigraph. Parity 0 = even, 1 = odd.
struct Edge {
    int id;
    int u;
    int v;
    int parity;

    int other(int w) const { return w == u ? v : u; }
    bool incident(int w) const { return w == u || w == v; }
    bool operator==(const Edge&) const = default;
};

/// A rooted signed multigraph: vertices carry opaque integer ids, edges carry
/// a parity bit, and a subset of vertices is distinguished as roots. Parallel
/// edges are allowed, loops are not. All iteration is in sorted id order so
/// every operation built on top is reproducible.
class RootedSignedGraph {
public:
    RootedSignedGraph() = default;

    void add_vertex(int v);
    void add_edge(int id, int u, int v, int parity);
    void set_root(int v);

    bool has_vertex(int v) const { return vertices_.count(v) > 0; }
    bool has_edge(int id) const { return edges_.count(id) > 0; }
    bool is_root(int v) const { return roots_.count(v) > 0; }

    const std::set<int>& vertices() const { return vertices_; }
    const std::map<int, Edge>& edges() const { return edges_; }
    const std::set<int>& roots() const { return roots_; }
    const Edge& edge(int id) const;

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Ids of edges incident to v, sorted.
    const std::set<int>& incident_edges(int v) const;
    int degree(int v) const { return static_cast<int>(incident_edges(v).size()); }

    int max_vertex_id() const;
    int max_edge_id() const;

    bool operator==(const RootedSignedGraph& o) const = default;

private:
    std::set<int> vertices_;
    std::map<int, Edge> edges_;
    std::set<int> roots_;
    std::map<int, std::set<int>> incidence_;
};

/// Flip the parity of every edge incident to v. Cycle parities are invariant
/// under this operation; shifting twice at the same vertex is the identity.
RootedSignedGraph shift_at(const RootedSignedGraph& g, int v);

/// Shift at every vertex of the set, in order.
RootedSignedGraph shift_at_set(const RootedSignedGraph& g, const std::set<int>& vs);

/// Parity of a cycle given as a sequence of edge ids. The sequence must form
/// a closed walk through distinct vertices (a simple cycle; length 2 means a
/// pair of parallel edges). Throws if it does not.
int cycle_parity(const RootedSignedGraph& g, const std::vector<int>& cycle_edges);

/// Decide whether two signings of the same underlying multigraph are related
/// by shifting; on success returns the witnessing shift set. Throws when the
/// underlying graphs differ (vertices, edge ids, endpoints).
std::optional<std::set<int>> shifting_equivalent(const RootedSignedGraph& g1,
                                                 const RootedSignedGraph& g2);

/// Result of subdivide_even_edges: the transformed graph plus the map from
/// each new path-interior vertex to the edge it came from.
struct EvenSubdivision {
    RootedSignedGraph graph;
    std::map<int, int> interior_to_edge;
};

/// Replace every even edge uv by a path u-x-v whose two edges are both odd.
/// The result has every edge parity 1. Interior vertices get fresh ids above
/// max_vertex_id(), assigned in increasing edge-id order.
EvenSubdivision subdivide_even_edges(const RootedSignedGraph& g);

/// Subgraph induced on S: vertices S, edges with both ends in S, roots ∩ S.
/// Ids are preserved.
RootedSignedGraph induced_subgraph(const RootedSignedGraph& g, const std::set<int>& s);

}  // namespace tdm
