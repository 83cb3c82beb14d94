#include "tdmtw/transform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdm {

namespace {

void require_valid(const std::vector<std::string>& violations, const char* what) {
    if (!violations.empty())
        throw std::invalid_argument(std::string(what) + ": " + violations.front());
}

std::set<int> set_minus(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
    return out;
}

std::set<int> set_union(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> out = a;
    out.insert(b.begin(), b.end());
    return out;
}

}  // namespace

TDMDecomposition compose_tdm(const RootedSignedGraph& g, const KFreeDecomposition& kfree,
                             const std::map<int, TameOCPDecomposition>& leaf_ocp) {
    require_valid(validate(kfree, g), "compose_tdm: invalid K-free decomposition");
    const std::set<int>& free = kfree.free_set;

    // Each per-leaf decomposition must cover exactly the leaf's free part.
    for (const auto& [j, tocp] : leaf_ocp) {
        if (j < 0 || j >= kfree.base.node_count || !kfree.base.is_leaf(j))
            throw std::invalid_argument("compose_tdm: node " + std::to_string(j) +
                                        " is not a leaf of the K-free tree");
        std::set<int> part;
        for (int v : kfree.base.bags[j])
            if (free.count(v)) part.insert(v);
        RootedSignedGraph sub = induced_subgraph(g, part);
        require_valid(validate(tocp, sub), "compose_tdm: invalid leaf decomposition");
    }
    for (int j = 0; j < kfree.base.node_count; ++j) {
        if (!kfree.base.is_leaf(j)) continue;
        bool has_free = std::any_of(kfree.base.bags[j].begin(), kfree.base.bags[j].end(),
                                    [&](int v) { return free.count(v) > 0; });
        if (has_free && !leaf_ocp.count(j))
            throw std::invalid_argument("compose_tdm: leaf " + std::to_string(j) +
                                        " has free vertices but no leaf decomposition");
    }

    TDMDecomposition out;
    // J nodes first, in K-free node order; bag = protector = old bag minus L.
    out.base.node_count = kfree.base.node_count;
    for (int j = 0; j < kfree.base.node_count; ++j) {
        std::set<int> core = set_minus(kfree.base.bags[j], free);
        out.base.bags.push_back(core);
        out.protectors.push_back(core);
        out.strong_subtree.insert(j);
    }
    out.base.tree_edges = kfree.base.tree_edges;

    // Hang each leaf tree off its leaf; merge the leaf core into every bag
    // and protector of the hung tree.
    for (const auto& [j, tocp] : leaf_ocp) {
        std::set<int> core = set_minus(kfree.base.bags[j], free);
        int offset = out.base.node_count;
        out.base.node_count += tocp.base.node_count;
        for (int t = 0; t < tocp.base.node_count; ++t) {
            out.base.bags.push_back(set_union(tocp.base.bags[t], core));
            out.protectors.push_back(set_union(tocp.protectors[t], core));
        }
        for (const auto& [a, b] : tocp.base.tree_edges)
            out.base.tree_edges.emplace_back(a + offset, b + offset);
        out.base.tree_edges.emplace_back(j, offset);  // anchor at the hung tree's node 0
    }
    return out;
}

std::pair<KFreeDecomposition, TameOCPDecomposition> extract_from_tdm(const RootedSignedGraph& g,
                                                                     const TDMDecomposition& tdm) {
    require_valid(validate(tdm, g), "extract_from_tdm: invalid TDM decomposition");
    TameOCPDecomposition tame{tdm.base, tdm.protectors};

    KFreeDecomposition kfree;
    if (tdm.strong_subtree.empty()) {
        // Empty J forces K = empty; everything collapses into one leaf bag.
        kfree.base.node_count = 1;
        kfree.base.bags.push_back(g.vertices());
        kfree.free_set = set_minus(g.vertices(), g.roots());
        return {kfree, tame};
    }

    TDMDecomposition work = tdm;
    auto j_degree = [&](int t) {
        int deg = 0;
        for (const auto& [a, b] : work.base.tree_edges)
            if ((a == t && work.strong_subtree.count(b)) ||
                (b == t && work.strong_subtree.count(a)))
                ++deg;
        return deg;
    };

    // Split internal J nodes: move protector-exceeding bag content and any
    // subtree hanging outside J into a fresh J leaf copy, then shrink the
    // node's bag to its protector.
    std::set<int> original_j = work.strong_subtree;
    for (int j : original_j) {
        if (j_degree(j) < 2) continue;
        std::vector<std::pair<int, int>*> off_j_edges;
        for (auto& e : work.base.tree_edges) {
            if (e.first == j && !work.strong_subtree.count(e.second)) off_j_edges.push_back(&e);
            if (e.second == j && !work.strong_subtree.count(e.first)) off_j_edges.push_back(&e);
        }
        bool needs_copy = work.base.bags[j] != work.protectors[j] || !off_j_edges.empty();
        if (!needs_copy) continue;
        int copy = work.base.node_count++;
        work.base.bags.push_back(work.base.bags[j]);
        work.protectors.push_back(work.protectors[j]);
        work.strong_subtree.insert(copy);
        for (auto* e : off_j_edges) {
            if (e->first == j)
                e->first = copy;
            else
                e->second = copy;
        }
        work.base.tree_edges.emplace_back(j, copy);
        work.base.bags[j] = work.protectors[j];
    }

    // Free set: everything outside the union of J protectors.
    std::set<int> protected_union;
    for (int j : work.strong_subtree)
        protected_union.insert(work.protectors[j].begin(), work.protectors[j].end());
    std::set<int> free = set_minus(g.vertices(), protected_union);

    // Collapse: each J leaf absorbs the bags of its component of T - (J \ {j}).
    auto adj = work.base.adjacency();
    std::map<int, std::set<int>> collapsed;  // J node -> collapsed bag
    for (int j : work.strong_subtree) {
        if (j_degree(j) >= 2) {
            collapsed[j] = work.base.bags[j];
            continue;
        }
        std::set<int> seen{j};
        std::vector<int> stack{j};
        std::set<int> bag = work.base.bags[j];
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int u : adj[t]) {
                if (u != j && work.strong_subtree.count(u)) continue;
                if (seen.insert(u).second) {
                    bag.insert(work.base.bags[u].begin(), work.base.bags[u].end());
                    stack.push_back(u);
                }
            }
        }
        collapsed[j] = bag;
    }

    // Renumber J nodes 0..|J|-1 in sorted order.
    std::map<int, int> renum;
    for (int j : work.strong_subtree) {
        int id = static_cast<int>(renum.size());
        renum[j] = id;
    }
    kfree.base.node_count = static_cast<int>(renum.size());
    kfree.base.bags.resize(kfree.base.node_count);
    for (const auto& [j, bag] : collapsed) kfree.base.bags[renum[j]] = bag;
    for (const auto& [a, b] : work.base.tree_edges)
        if (work.strong_subtree.count(a) && work.strong_subtree.count(b))
            kfree.base.tree_edges.emplace_back(renum[a], renum[b]);
    kfree.free_set = free;
    return {kfree, tame};
}

namespace {

// Shared contraction loop. strong == nullptr means no J constraints.
void compress_impl(TreeDecomposition& base, std::vector<std::set<int>>& protectors,
                   std::set<int>* strong) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, b] : base.tree_edges) {
            for (auto [t1, t2] : {std::pair{a, b}, std::pair{b, a}}) {
                bool subset = std::includes(base.bags[t2].begin(), base.bags[t2].end(),
                                            base.bags[t1].begin(), base.bags[t1].end());
                if (!subset) continue;
                // Keep J intact: never absorb a J node into a non-J node.
                if (strong && strong->count(t1) && !strong->count(t2)) continue;

                // Contract t1 into t2: t2 keeps its bag and protector.
                std::vector<std::pair<int, int>> edges;
                for (const auto& [x, y] : base.tree_edges) {
                    int nx = x == t1 ? t2 : x;
                    int ny = y == t1 ? t2 : y;
                    if (nx == ny) continue;
                    edges.emplace_back(nx, ny);
                }
                // Renumber to drop t1.
                auto renum = [&](int t) { return t > t1 ? t - 1 : t; };
                base.node_count -= 1;
                base.bags.erase(base.bags.begin() + t1);
                protectors.erase(protectors.begin() + t1);
                for (auto& [x, y] : edges) {
                    x = renum(x);
                    y = renum(y);
                }
                base.tree_edges = std::move(edges);
                if (strong) {
                    std::set<int> ns;
                    for (int t : *strong)
                        if (t != t1) ns.insert(renum(t));
                    *strong = std::move(ns);
                }
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
}

}  // namespace

TameOCPDecomposition compress_bags(const TameOCPDecomposition& d, const RootedSignedGraph& g) {
    require_valid(validate(d, g), "compress_bags: invalid decomposition");
    TameOCPDecomposition out = d;
    compress_impl(out.base, out.protectors, nullptr);
    return out;
}

TDMDecomposition compress_bags(const TDMDecomposition& d, const RootedSignedGraph& g) {
    require_valid(validate(d, g), "compress_bags: invalid decomposition");
    TDMDecomposition out = d;
    compress_impl(out.base, out.protectors, &out.strong_subtree);
    return out;
}

namespace {

// Merge map: interior vertex -> lexicographically smaller endpoint of its
// original edge. Everything else maps to itself.
std::map<int, int> merge_map(const RootedSignedGraph& g, const std::map<int, int>& interior_to_edge) {
    std::map<int, int> to;
    for (const auto& [x, eid] : interior_to_edge) {
        if (g.has_vertex(x))
            throw std::invalid_argument("uncontract_subdivision: interior vertex " +
                                        std::to_string(x) + " already in the base graph");
        const Edge& e = g.edge(eid);
        to[x] = std::min(e.u, e.v);
    }
    return to;
}

std::set<int> merge_set(const std::set<int>& s, const std::map<int, int>& to,
                        const RootedSignedGraph& g) {
    std::set<int> out;
    for (int v : s) {
        auto it = to.find(v);
        if (it != to.end()) {
            out.insert(it->second);
        } else {
            if (!g.has_vertex(v))
                throw std::invalid_argument("uncontract_subdivision: bag vertex " +
                                            std::to_string(v) +
                                            " neither in the base graph nor in the path map");
            out.insert(v);
        }
    }
    return out;
}

}  // namespace

TameOCPDecomposition uncontract_subdivision(const TameOCPDecomposition& d,
                                            const RootedSignedGraph& g,
                                            const std::map<int, int>& interior_to_edge) {
    std::map<int, int> to = merge_map(g, interior_to_edge);
    TameOCPDecomposition out;
    out.base.node_count = d.base.node_count;
    out.base.tree_edges = d.base.tree_edges;
    for (int t = 0; t < d.base.node_count; ++t) {
        out.base.bags.push_back(merge_set(d.base.bags[t], to, g));
        out.protectors.push_back(merge_set(d.protectors[t], to, g));
    }
    return out;
}

TDMDecomposition uncontract_subdivision(const TDMDecomposition& d, const RootedSignedGraph& g,
                                        const std::map<int, int>& interior_to_edge) {
    std::map<int, int> to = merge_map(g, interior_to_edge);
    TDMDecomposition out;
    out.base.node_count = d.base.node_count;
    out.base.tree_edges = d.base.tree_edges;
    out.strong_subtree = d.strong_subtree;
    for (int t = 0; t < d.base.node_count; ++t) {
        out.base.bags.push_back(merge_set(d.base.bags[t], to, g));
        out.protectors.push_back(merge_set(d.protectors[t], to, g));
    }
    return out;
}

}  // namespace tdm
