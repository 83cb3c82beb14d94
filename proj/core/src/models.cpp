#include "tdmtw/models.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdm {

namespace {

std::string vstr(int v) { return std::to_string(v); }

// Is (vertices, edges) a tree inside host? Edges must join tree vertices,
// |E| = |V| - 1, and the edge set must connect the vertex set.
bool is_host_tree(const RootedSignedGraph& host, const HostTree& t, std::string& why) {
    if (t.vertices.empty()) {
        why = "empty vertex set";
        return false;
    }
    for (int v : t.vertices)
        if (!host.has_vertex(v)) {
            why = "unknown host vertex " + vstr(v);
            return false;
        }
    for (int id : t.edges) {
        if (!host.has_edge(id)) {
            why = "unknown host edge " + vstr(id);
            return false;
        }
        const Edge& e = host.edge(id);
        if (!t.vertices.count(e.u) || !t.vertices.count(e.v)) {
            why = "tree edge " + vstr(id) + " leaves the tree's vertex set";
            return false;
        }
    }
    if (t.edges.size() + 1 != t.vertices.size()) {
        why = "edge count does not match a tree";
        return false;
    }
    std::set<int> seen;
    std::vector<int> stack{*t.vertices.begin()};
    seen.insert(stack.back());
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int id : t.edges) {
            const Edge& e = host.edge(id);
            if (!e.incident(v)) continue;
            int w = e.other(v);
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    if (seen != t.vertices) {
        why = "tree is disconnected";
        return false;
    }
    return true;
}

}  // namespace

std::vector<int> path_vertices(const RootedSignedGraph& host, const std::vector<int>& edge_ids,
                               int from) {
    std::vector<int> verts{from};
    int cur = from;
    for (int id : edge_ids) {
        const Edge& e = host.edge(id);
        if (!e.incident(cur))
            throw std::invalid_argument("path edge " + vstr(id) + " not incident to vertex " + vstr(cur));
        cur = e.other(cur);
        verts.push_back(cur);
    }
    return verts;
}

VerifyResult verify_minor_model(const RootedSignedGraph& host, const RootedSignedGraph& guest,
                                const MinorModel& m, bool rooted) {
    // Condition 1: one tree per guest vertex, trees pairwise vertex-disjoint.
    std::set<int> all_tree_vertices;
    for (int v : guest.vertices()) {
        auto it = m.trees.find(v);
        if (it == m.trees.end())
            return VerifyResult::fail("tree-map: guest vertex " + vstr(v) + " has no tree");
        std::string why;
        if (!is_host_tree(host, it->second, why))
            return VerifyResult::fail("tree-map: tree of guest vertex " + vstr(v) + ": " + why);
        for (int w : it->second.vertices)
            if (!all_tree_vertices.insert(w).second)
                return VerifyResult::fail("tree-disjointness: host vertex " + vstr(w) +
                                          " lies in two trees");
    }
    for (const auto& [v, t] : m.trees)
        if (!guest.has_vertex(v))
            return VerifyResult::fail("tree-map: unknown guest vertex " + vstr(v));

    // Condition 2: injective edge map with the right endpoints.
    std::set<int> used_host_edges;
    for (const auto& [gid, ge] : guest.edges()) {
        auto it = m.edge_map.find(gid);
        if (it == m.edge_map.end())
            return VerifyResult::fail("edge-map: guest edge " + vstr(gid) + " unmapped");
        if (!host.has_edge(it->second))
            return VerifyResult::fail("edge-map: unknown host edge " + vstr(it->second));
        if (!used_host_edges.insert(it->second).second)
            return VerifyResult::fail("edge-map: host edge " + vstr(it->second) + " used twice");
        const Edge& he = host.edge(it->second);
        const HostTree& tu = m.trees.at(ge.u);
        const HostTree& tv = m.trees.at(ge.v);
        bool straddles = (tu.vertices.count(he.u) && tv.vertices.count(he.v)) ||
                         (tu.vertices.count(he.v) && tv.vertices.count(he.u));
        if (!straddles)
            return VerifyResult::fail("edge-map: host edge " + vstr(it->second) +
                                      " does not join the trees of guest edge " + vstr(gid));
    }

    // Condition 3: after shifting the host at shift_set, tree edges are even
    // and mapped edges carry the guest parities.
    for (int v : m.shift_set)
        if (!host.has_vertex(v))
            return VerifyResult::fail("shift-set: unknown host vertex " + vstr(v));
    auto shifted_parity = [&](const Edge& e) {
        int p = e.parity;
        if (m.shift_set.count(e.u)) p ^= 1;
        if (m.shift_set.count(e.v)) p ^= 1;
        return p;
    };
    for (const auto& [v, t] : m.trees)
        for (int id : t.edges)
            if (shifted_parity(host.edge(id)) != 0)
                return VerifyResult::fail("tree-parity: edge " + vstr(id) + " of tree " + vstr(v) +
                                          " is odd after shifting");
    for (const auto& [gid, hid] : m.edge_map) {
        if (!guest.has_edge(gid)) return VerifyResult::fail("edge-map: unknown guest edge " + vstr(gid));
        if (shifted_parity(host.edge(hid)) != guest.edge(gid).parity)
            return VerifyResult::fail("edge-parity: host edge " + vstr(hid) +
                                      " does not match guest edge " + vstr(gid));
    }

    // Rooted condition: every guest root's tree contains a host root.
    if (rooted) {
        for (int r : guest.roots()) {
            const HostTree& t = m.trees.at(r);
            bool has_root = std::any_of(t.vertices.begin(), t.vertices.end(),
                                        [&](int w) { return host.is_root(w); });
            if (!has_root)
                return VerifyResult::fail("rooted: tree of guest root " + vstr(r) +
                                          " contains no host root");
        }
    }
    return VerifyResult::pass();
}

VerifyResult verify_subdivision_model(const RootedSignedGraph& host,
                                      const RootedSignedGraph& guest,
                                      const SubdivisionModel& s) {
    // Injective vertex map covering the guest.
    std::set<int> images;
    for (int v : guest.vertices()) {
        auto it = s.vertex_map.find(v);
        if (it == s.vertex_map.end())
            return VerifyResult::fail("vertex-map: guest vertex " + vstr(v) + " unmapped");
        if (!host.has_vertex(it->second))
            return VerifyResult::fail("vertex-map: unknown host vertex " + vstr(it->second));
        if (!images.insert(it->second).second)
            return VerifyResult::fail("vertex-map: not injective at host vertex " + vstr(it->second));
    }

    for (int v : s.guest_shift_set)
        if (!guest.has_vertex(v))
            return VerifyResult::fail("guest-shift: unknown guest vertex " + vstr(v));
    auto shifted_guest_parity = [&](const Edge& e) {
        int p = e.parity;
        if (s.guest_shift_set.count(e.u)) p ^= 1;
        if (s.guest_shift_set.count(e.v)) p ^= 1;
        return p;
    };

    // Paths: correct ends, simple, internally disjoint, right parity.
    std::set<int> interior_seen;
    for (const auto& [gid, ge] : guest.edges()) {
        auto it = s.paths.find(gid);
        if (it == s.paths.end())
            return VerifyResult::fail("path-map: guest edge " + vstr(gid) + " unmapped");
        const std::vector<int>& ids = it->second;
        if (ids.empty()) return VerifyResult::fail("path-map: empty path for edge " + vstr(gid));
        for (int id : ids)
            if (!host.has_edge(id))
                return VerifyResult::fail("path-map: unknown host edge " + vstr(id));
        int a = s.vertex_map.at(ge.u);
        int b = s.vertex_map.at(ge.v);
        std::vector<int> verts;
        try {
            verts = path_vertices(host, ids, a);
        } catch (const std::invalid_argument&) {
            return VerifyResult::fail("path-map: edges of guest edge " + vstr(gid) +
                                      " do not chain from its endpoint");
        }
        if (verts.back() != b)
            return VerifyResult::fail("path-ends: path of guest edge " + vstr(gid) +
                                      " does not end at the mapped endpoint");
        std::set<int> distinct(verts.begin(), verts.end());
        if (distinct.size() != verts.size())
            return VerifyResult::fail("path-simple: path of guest edge " + vstr(gid) +
                                      " repeats a vertex");
        int parity = 0;
        for (int id : ids) parity ^= host.edge(id).parity;
        if (parity != shifted_guest_parity(ge))
            return VerifyResult::fail("path-parity: path of guest edge " + vstr(gid) +
                                      " has the wrong parity");
        for (std::size_t i = 1; i + 1 < verts.size(); ++i) {
            int w = verts[i];
            if (images.count(w))
                return VerifyResult::fail("internal-disjointness: host vertex " + vstr(w) +
                                          " is both a branch vertex and path-internal");
            if (!interior_seen.insert(w).second)
                return VerifyResult::fail("internal-disjointness: host vertex " + vstr(w) +
                                          " internal to two paths");
        }
    }
    for (const auto& [gid, ids] : s.paths)
        if (!guest.has_edge(gid))
            return VerifyResult::fail("path-map: unknown guest edge " + vstr(gid));
    return VerifyResult::pass();
}

std::set<int> odd_minor_coloring_to_shift(const MinorModel& skeleton,
                                          const RootedSignedGraph& host,
                                          const std::map<int, int>& coloring) {
    auto color = [&](int v) {
        auto it = coloring.find(v);
        if (it == coloring.end())
            throw std::invalid_argument("coloring missing host vertex " + vstr(v));
        if (it->second != 1 && it->second != 2)
            throw std::invalid_argument("coloring must use colors 1 and 2");
        return it->second;
    };
    std::set<int> shift;
    for (const auto& [gv, tree] : skeleton.trees) {
        for (int id : tree.edges) {
            const Edge& e = host.edge(id);
            if (color(e.u) == color(e.v))
                throw std::invalid_argument("coloring not proper on tree of guest vertex " +
                                            vstr(gv) + " (edge " + vstr(id) + ")");
        }
        for (int v : tree.vertices)
            if (color(v) == 2) shift.insert(v);
    }
    return shift;
}

std::map<int, int> shift_to_odd_minor_coloring(const RootedSignedGraph& host,
                                               const std::set<int>& shift_set) {
    std::map<int, int> coloring;
    for (int v : host.vertices()) coloring[v] = shift_set.count(v) ? 2 : 1;
    return coloring;
}

}  // namespace tdm
