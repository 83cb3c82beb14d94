#include "tdmtw/signed_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdm {

void RootedSignedGraph::add_vertex(int v) {
    if (vertices_.count(v)) throw std::invalid_argument("duplicate vertex id " + std::to_string(v));
    vertices_.insert(v);
    incidence_[v];
}

void RootedSignedGraph::add_edge(int id, int u, int v, int parity) {
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    if (!vertices_.count(u) || !vertices_.count(v))
        throw std::invalid_argument("edge " + std::to_string(id) + " references unknown vertex");
    if (edges_.count(id)) throw std::invalid_argument("duplicate edge id " + std::to_string(id));
    if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
    edges_[id] = Edge{id, u, v, parity};
    incidence_[u].insert(id);
    incidence_[v].insert(id);
}

void RootedSignedGraph::set_root(int v) {
    if (!vertices_.count(v)) throw std::invalid_argument("root vertex " + std::to_string(v) + " not in graph");
    roots_.insert(v);
}

const Edge& RootedSignedGraph::edge(int id) const {
    auto it = edges_.find(id);
    if (it == edges_.end()) throw std::invalid_argument("unknown edge id " + std::to_string(id));
    return it->second;
}

const std::set<int>& RootedSignedGraph::incident_edges(int v) const {
    auto it = incidence_.find(v);
    if (it == incidence_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
}

int RootedSignedGraph::max_vertex_id() const {
    return vertices_.empty() ? -1 : *vertices_.rbegin();
}

int RootedSignedGraph::max_edge_id() const {
    return edges_.empty() ? -1 : edges_.rbegin()->first;
}

RootedSignedGraph shift_at(const RootedSignedGraph& g, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("shift_at: unknown vertex " + std::to_string(v));
    RootedSignedGraph res;
    for (int w : g.vertices()) res.add_vertex(w);
    for (const auto& [id, e] : g.edges()) {
        int parity = e.parity;
        if (e.incident(v)) parity ^= 1;
        res.add_edge(id, e.u, e.v, parity);
    }
    for (int r : g.roots()) res.set_root(r);
    return res;
}

RootedSignedGraph shift_at_set(const RootedSignedGraph& g, const std::set<int>& vs) {
    RootedSignedGraph res;
    for (int w : g.vertices()) res.add_vertex(w);
    for (const auto& [id, e] : g.edges()) {
        int parity = e.parity;
        if (vs.count(e.u)) parity ^= 1;
        if (vs.count(e.v)) parity ^= 1;
        res.add_edge(id, e.u, e.v, parity);
    }
    for (int r : g.roots()) res.set_root(r);
    return res;
}

int cycle_parity(const RootedSignedGraph& g, const std::vector<int>& cycle_edges) {
    const std::size_t k = cycle_edges.size();
    if (k < 2) throw std::invalid_argument("cycle_parity: a cycle has at least 2 edges");
    std::set<int> seen_ids(cycle_edges.begin(), cycle_edges.end());
    if (seen_ids.size() != k) throw std::invalid_argument("cycle_parity: repeated edge id");
    for (int id : cycle_edges) g.edge(id);  // existence check

    // Trace the walk; try both orientations of the first edge.
    auto trace = [&](int start) -> bool {
        std::vector<int> verts;
        verts.push_back(start);
        int cur = start;
        for (int id : cycle_edges) {
            const Edge& e = g.edge(id);
            if (!e.incident(cur)) return false;
            cur = e.other(cur);
            verts.push_back(cur);
        }
        if (cur != start) return false;
        std::set<int> distinct(verts.begin(), verts.end() - 1);
        return distinct.size() == k;
    };
    const Edge& first = g.edge(cycle_edges.front());
    if (!trace(first.u) && !trace(first.v))
        throw std::invalid_argument("cycle_parity: edge sequence is not a simple cycle");

    int parity = 0;
    for (int id : cycle_edges) parity ^= g.edge(id).parity;
    return parity;
}

std::optional<std::set<int>> shifting_equivalent(const RootedSignedGraph& g1,
                                                 const RootedSignedGraph& g2) {
    if (g1.vertices() != g2.vertices())
        throw std::invalid_argument("shifting_equivalent: vertex sets differ");
    for (const auto& [id, e1] : g1.edges()) {
        if (!g2.has_edge(id)) throw std::invalid_argument("shifting_equivalent: edge sets differ");
        const Edge& e2 = g2.edge(id);
        if (std::minmax(e1.u, e1.v) != std::minmax(e2.u, e2.v))
            throw std::invalid_argument("shifting_equivalent: edge endpoints differ");
    }
    if (g1.edge_count() != g2.edge_count())
        throw std::invalid_argument("shifting_equivalent: edge sets differ");

    // Per component: force tree-edge parities to match via a BFS spanning
    // tree, then verify every edge. Complementing the shift set within a
    // component changes nothing, so shift[root]=0 is general.
    std::map<int, int> shift;
    for (int v : g1.vertices()) shift[v] = -1;
    for (int root : g1.vertices()) {
        if (shift[root] != -1) continue;
        shift[root] = 0;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int id : g1.incident_edges(v)) {
                const Edge& e = g1.edge(id);
                int w = e.other(v);
                if (shift[w] != -1) continue;
                int diff = e.parity ^ g2.edge(id).parity;
                shift[w] = shift[v] ^ diff;
                queue.push_back(w);
            }
        }
    }
    for (const auto& [id, e] : g1.edges()) {
        int shifted = e.parity ^ shift[e.u] ^ shift[e.v];
        if (shifted != g2.edge(id).parity) return std::nullopt;
    }
    std::set<int> witness;
    for (const auto& [v, s] : shift)
        if (s == 1) witness.insert(v);
    return witness;
}

EvenSubdivision subdivide_even_edges(const RootedSignedGraph& g) {
    EvenSubdivision out;
    RootedSignedGraph& res = out.graph;
    for (int v : g.vertices()) res.add_vertex(v);
    int next_vertex = g.max_vertex_id() + 1;
    int next_edge = g.max_edge_id() + 1;
    for (const auto& [id, e] : g.edges()) {
        if (e.parity == 1) {
            res.add_edge(id, e.u, e.v, 1);
        } else {
            int x = next_vertex++;
            res.add_vertex(x);
            res.add_edge(id, e.u, x, 1);
            res.add_edge(next_edge++, x, e.v, 1);
            out.interior_to_edge[x] = id;
        }
    }
    for (int r : g.roots()) res.set_root(r);
    return out;
}

RootedSignedGraph induced_subgraph(const RootedSignedGraph& g, const std::set<int>& s) {
    RootedSignedGraph res;
    for (int v : s) {
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_subgraph: unknown vertex");
        res.add_vertex(v);
    }
    for (const auto& [id, e] : g.edges())
        if (s.count(e.u) && s.count(e.v)) res.add_edge(id, e.u, e.v, e.parity);
    for (int r : g.roots())
        if (s.count(r)) res.set_root(r);
    return res;
}

}  // namespace tdm
