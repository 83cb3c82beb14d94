#include "tdmtw/decomposition.hpp"

#include "tdmtw/ocp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdm {

namespace {

std::string vstr(int v) { return std::to_string(v); }

void check_or_throw(const std::vector<std::string>& violations, const char* what) {
    if (!violations.empty())
        throw std::invalid_argument(std::string(what) + ": " + violations.front());
}

}  // namespace

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
    std::vector<std::vector<int>> adj(node_count);
    for (const auto& [a, b] : tree_edges) {
        adj.at(a).push_back(b);
        adj.at(b).push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    return adj;
}

bool TreeDecomposition::is_leaf(int t) const {
    int deg = 0;
    for (const auto& [a, b] : tree_edges)
        if (a == t || b == t) ++deg;
    return deg <= 1;
}

std::set<int> TreeDecomposition::adhesion(int t1, int t2) const {
    std::set<int> out;
    const std::set<int>& b1 = bags.at(t1);
    const std::set<int>& b2 = bags.at(t2);
    std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(),
                          std::inserter(out, out.begin()));
    return out;
}

std::vector<std::string> validate(const TreeDecomposition& d, const RootedSignedGraph& g) {
    std::vector<std::string> out;
    if (d.node_count < 1) {
        out.push_back("tree-structure: decomposition has no nodes");
        return out;
    }
    if (static_cast<int>(d.bags.size()) != d.node_count) {
        out.push_back("tree-structure: bag list does not match node count");
        return out;
    }
    for (const auto& [a, b] : d.tree_edges) {
        if (a < 0 || a >= d.node_count || b < 0 || b >= d.node_count) {
            out.push_back("tree-structure: tree edge references unknown node");
            return out;
        }
        if (a == b) {
            out.push_back("tree-structure: tree edge is a loop at node " + vstr(a));
            return out;
        }
    }
    if (static_cast<int>(d.tree_edges.size()) != d.node_count - 1) {
        out.push_back("tree-structure: edge count does not match a tree");
        return out;
    }
    {
        std::vector<char> seen(d.node_count, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        auto adj = d.adjacency();
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int u : adj[t])
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
            out.push_back("tree-structure: tree is disconnected");
            return out;
        }
    }

    for (int t = 0; t < d.node_count; ++t)
        for (int v : d.bags[t])
            if (!g.has_vertex(v))
                out.push_back("bag-content: node " + vstr(t) + " contains unknown vertex " + vstr(v));

    for (int v : g.vertices()) {
        bool covered = false;
        for (int t = 0; t < d.node_count && !covered; ++t) covered = d.bags[t].count(v) > 0;
        if (!covered) out.push_back("vertex-coverage: vertex " + vstr(v) + " in no bag");
    }

    for (const auto& [id, e] : g.edges()) {
        bool covered = false;
        for (int t = 0; t < d.node_count && !covered; ++t)
            covered = d.bags[t].count(e.u) && d.bags[t].count(e.v);
        if (!covered) out.push_back("edge-coverage: edge " + vstr(id) + " in no bag");
    }

    // Subtree connectivity per vertex.
    auto adj = d.adjacency();
    for (int v : g.vertices()) {
        int first = -1;
        int total = 0;
        for (int t = 0; t < d.node_count; ++t)
            if (d.bags[t].count(v)) {
                if (first < 0) first = t;
                ++total;
            }
        if (first < 0) continue;
        std::vector<char> seen(d.node_count, 0);
        std::vector<int> stack{first};
        seen[first] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int u : adj[t])
                if (!seen[u] && d.bags[u].count(v)) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != total)
            out.push_back("vertex-connectivity: vertex " + vstr(v) +
                          " does not induce a connected subtree");
    }
    return out;
}

std::vector<std::string> validate(const KFreeDecomposition& d, const RootedSignedGraph& g) {
    std::vector<std::string> out = validate(d.base, g);
    for (int v : d.free_set) {
        if (!g.has_vertex(v)) {
            out.push_back("L-content: unknown vertex " + vstr(v));
            continue;
        }
        if (g.is_root(v)) out.push_back("L-disjoint-roots: root " + vstr(v) + " lies in L");
    }
    if (static_cast<int>(d.base.bags.size()) != d.base.node_count) return out;
    for (int v : d.free_set) {
        std::vector<int> holders;
        for (int t = 0; t < d.base.node_count; ++t)
            if (d.base.bags[t].count(v)) holders.push_back(t);
        if (holders.size() != 1) {
            out.push_back("L-unique-bag: vertex " + vstr(v) + " lies in " +
                          vstr(static_cast<int>(holders.size())) + " bags");
        } else if (!d.base.is_leaf(holders.front())) {
            out.push_back("L-leaf-bag: vertex " + vstr(v) + " lies in non-leaf node " +
                          vstr(holders.front()));
        }
    }
    return out;
}

namespace {

std::vector<std::string> validate_protectors(const TreeDecomposition& base,
                                             const std::vector<std::set<int>>& protectors) {
    std::vector<std::string> out;
    if (static_cast<int>(protectors.size()) != base.node_count) {
        out.push_back("protector-subset: protector list does not match node count");
        return out;
    }
    for (int t = 0; t < base.node_count; ++t)
        for (int v : protectors[t])
            if (!base.bags[t].count(v)) {
                out.push_back("protector-subset: node " + vstr(t) + " protector leaves the bag at " +
                              vstr(v));
                break;
            }
    for (const auto& [a, b] : base.tree_edges) {
        std::set<int> adh = base.adhesion(a, b);
        for (int side : {a, b}) {
            int outside = 0;
            for (int v : adh)
                if (!protectors[side].count(v)) ++outside;
            if (outside > 1)
                out.push_back("protector-adhesion: adhesion " + vstr(a) + "-" + vstr(b) + " minus " +
                              "protector of node " + vstr(side) + " has size " + vstr(outside));
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> validate(const TameOCPDecomposition& d, const RootedSignedGraph& g) {
    std::vector<std::string> out = validate(d.base, g);
    auto more = validate_protectors(d.base, d.protectors);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

std::vector<std::string> validate(const TDMDecomposition& d, const RootedSignedGraph& g) {
    std::vector<std::string> out = validate(d.base, g);
    auto more = validate_protectors(d.base, d.protectors);
    out.insert(out.end(), more.begin(), more.end());
    if (static_cast<int>(d.protectors.size()) != d.base.node_count) return out;

    // Protectors contain each bag's roots.
    for (int t = 0; t < d.base.node_count; ++t)
        for (int v : d.base.bags[t])
            if (g.is_root(v) && !d.protectors[t].count(v))
                out.push_back("root-in-protector: node " + vstr(t) + " leaves root " + vstr(v) +
                              " unprotected");

    // J is a subtree.
    for (int t : d.strong_subtree)
        if (t < 0 || t >= d.base.node_count) {
            out.push_back("J-subtree: unknown node " + vstr(t));
            return out;
        }
    if (!d.strong_subtree.empty()) {
        auto adj = d.base.adjacency();
        std::set<int> seen;
        std::vector<int> stack{*d.strong_subtree.begin()};
        seen.insert(stack.back());
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int u : adj[t])
                if (d.strong_subtree.count(u) && seen.insert(u).second) stack.push_back(u);
        }
        if (seen != d.strong_subtree) out.push_back("J-subtree: J is not connected");
    }

    // Strong protectors on J.
    for (const auto& [a, b] : d.base.tree_edges) {
        std::set<int> adh = d.base.adhesion(a, b);
        for (int side : {a, b}) {
            if (!d.strong_subtree.count(side)) continue;
            for (int v : adh)
                if (!d.protectors[side].count(v)) {
                    out.push_back("strong-protector: node " + vstr(side) + " leaves adhesion vertex " +
                                  vstr(v) + " unprotected");
                    break;
                }
        }
    }

    // J's bags cover the roots.
    for (int r : g.roots()) {
        bool covered = false;
        for (int t : d.strong_subtree)
            if (d.base.bags[t].count(r)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back("J-covers-roots: root " + vstr(r) + " in no J bag");
    }
    return out;
}

int width(const TreeDecomposition& d, const RootedSignedGraph& g) {
    check_or_throw(validate(d, g), "width of invalid tree decomposition");
    int best = -1;
    for (const auto& bag : d.bags) best = std::max(best, static_cast<int>(bag.size()) - 1);
    return best;
}

int width(const KFreeDecomposition& d, const RootedSignedGraph& g) {
    check_or_throw(validate(d, g), "width of invalid K-free decomposition");
    int best = 0;
    for (const auto& bag : d.base.bags) {
        int non_free = 0;
        for (int v : bag)
            if (!d.free_set.count(v)) ++non_free;
        best = std::max(best, non_free - 1);
    }
    return best;
}

namespace {

int protector_width(const TreeDecomposition& base, const std::vector<std::set<int>>& protectors,
                    const RootedSignedGraph& g) {
    int best = 0;
    for (int t = 0; t < base.node_count; ++t) {
        std::set<int> rest;
        std::set_difference(base.bags[t].begin(), base.bags[t].end(), protectors[t].begin(),
                            protectors[t].end(), std::inserter(rest, rest.begin()));
        int term = static_cast<int>(protectors[t].size()) + ocp_exact(induced_subgraph(g, rest));
        best = std::max(best, term);
    }
    return best;
}

}  // namespace

int width(const TameOCPDecomposition& d, const RootedSignedGraph& g) {
    check_or_throw(validate(d, g), "width of invalid tame OCP decomposition");
    return protector_width(d.base, d.protectors, g);
}

int width(const TDMDecomposition& d, const RootedSignedGraph& g) {
    check_or_throw(validate(d, g), "width of invalid TDM decomposition");
    return protector_width(d.base, d.protectors, g);
}

TameOCPDecomposition tame_part(const TDMDecomposition& d) {
    return TameOCPDecomposition{d.base, d.protectors};
}

}  // namespace tdm
