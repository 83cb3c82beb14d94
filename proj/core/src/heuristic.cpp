#include "tdmtw/heuristic.hpp"

#include "tdmtw/ocp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace tdm {

namespace {

// Elimination-order tree decomposition on the simple skeleton of g.
// Degree-<=2 vertices go first (largest id breaking ties), then min-fill
// (fewest fill edges, then lowest degree, then smallest id).
TreeDecomposition elimination_decomposition(const RootedSignedGraph& g) {
    TreeDecomposition td;
    std::map<int, std::set<int>> nb;
    for (int v : g.vertices()) nb[v];
    for (const auto& [id, e] : g.edges()) {
        nb[e.u].insert(e.v);
        nb[e.v].insert(e.u);
    }

    std::vector<int> order;
    std::vector<std::set<int>> elim_bags;
    while (!nb.empty()) {
        int pick = -1;
        // Reduction rule: while the minimum degree is <= 2, eliminate a
        // minimum-degree vertex, largest id on ties.
        std::size_t min_deg = nb.begin()->second.size();
        for (const auto& [v, ns] : nb) min_deg = std::min(min_deg, ns.size());
        if (min_deg <= 2) {
            for (auto it = nb.rbegin(); it != nb.rend(); ++it)
                if (it->second.size() == min_deg) {
                    pick = it->first;
                    break;
                }
        }
        if (pick < 0) {
            // Min-fill.
            long best_fill = -1;
            std::size_t best_deg = 0;
            for (const auto& [v, ns] : nb) {
                long fill = 0;
                for (auto i = ns.begin(); i != ns.end(); ++i)
                    for (auto j = std::next(i); j != ns.end(); ++j)
                        if (!nb[*i].count(*j)) ++fill;
                if (best_fill < 0 || fill < best_fill ||
                    (fill == best_fill && ns.size() < best_deg)) {
                    best_fill = fill;
                    best_deg = ns.size();
                    pick = v;
                }
            }
        }
        std::set<int> neighbors = nb[pick];
        std::set<int> bag = neighbors;
        bag.insert(pick);
        order.push_back(pick);
        elim_bags.push_back(bag);
        for (int a : neighbors) {
            nb[a].erase(pick);
            for (int b : neighbors)
                if (a != b) nb[a].insert(b);
        }
        nb.erase(pick);
    }

    const int n = static_cast<int>(order.size());
    if (n == 0) {
        td.node_count = 1;
        td.bags.push_back({});
        return td;
    }
    td.node_count = n;
    td.bags = elim_bags;
    std::map<int, int> node_of;
    for (int i = 0; i < n; ++i) node_of[order[i]] = i;
    for (int i = 0; i < n - 1; ++i) {
        // Parent: node of the earliest-eliminated remaining neighbor, or the
        // next node when the bag is a singleton.
        int parent = i + 1;
        int best_pos = n;
        for (int v : elim_bags[i])
            if (v != order[i] && node_of[v] < best_pos) best_pos = node_of[v];
        if (best_pos < n) parent = best_pos;
        td.tree_edges.emplace_back(i, parent);
    }
    return td;
}

// Contract tree edges whose one bag contains the other (no protectors yet).
void compress_plain(TreeDecomposition& td) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, b] : td.tree_edges) {
            for (auto [t1, t2] : {std::pair{a, b}, std::pair{b, a}}) {
                bool subset = std::includes(td.bags[t2].begin(), td.bags[t2].end(),
                                            td.bags[t1].begin(), td.bags[t1].end());
                if (!subset) continue;
                std::vector<std::pair<int, int>> edges;
                for (const auto& [x, y] : td.tree_edges) {
                    int nx = x == t1 ? t2 : x;
                    int ny = y == t1 ? t2 : y;
                    if (nx != ny) edges.emplace_back(nx, ny);
                }
                auto renum = [&](int t) { return t > t1 ? t - 1 : t; };
                td.node_count -= 1;
                td.bags.erase(td.bags.begin() + t1);
                for (auto& [x, y] : edges) {
                    x = renum(x);
                    y = renum(y);
                }
                td.tree_edges = std::move(edges);
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
}

}  // namespace

HeuristicResult decompose_heuristic(const RootedSignedGraph& g, int budget) {
    HeuristicResult res;
    TreeDecomposition td = elimination_decomposition(g);
    compress_plain(td);

    TDMDecomposition& d = res.decomposition;
    d.base = td;
    d.protectors.assign(td.node_count, {});

    // J: minimal subtree whose bags cover the roots. Pick the lowest node per
    // root, then close under tree paths from the first terminal.
    std::vector<int> terminals;
    for (int r : g.roots()) {
        for (int t = 0; t < td.node_count; ++t)
            if (td.bags[t].count(r)) {
                terminals.push_back(t);
                break;
            }
    }
    if (!terminals.empty()) {
        auto adj = td.adjacency();
        int src = terminals.front();
        std::vector<int> parent(td.node_count, -1);
        std::vector<int> queue{src};
        parent[src] = src;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int u : adj[queue[qi]])
                if (parent[u] < 0) {
                    parent[u] = queue[qi];
                    queue.push_back(u);
                }
        for (int t : terminals) {
            int cur = t;
            while (!d.strong_subtree.count(cur)) {
                d.strong_subtree.insert(cur);
                if (cur == src) break;
                cur = parent[cur];
            }
        }
    }

    // Protectors.
    int budget_left = budget;
    auto adj = td.adjacency();
    for (int t = 0; t < td.node_count; ++t) {
        std::set<int>& alpha = d.protectors[t];
        for (int v : td.bags[t])
            if (g.is_root(v)) alpha.insert(v);
        for (int u : adj[t]) {
            std::set<int> adh = td.adhesion(t, u);
            if (d.strong_subtree.count(t)) {
                alpha.insert(adh.begin(), adh.end());
            } else {
                // All but the largest id; the residual then has size <= 1.
                if (!adh.empty()) adh.erase(std::prev(adh.end()));
                alpha.insert(adh.begin(), adh.end());
            }
        }

        // Greedy odd-cycle hitting over what is left of the bag.
        while (budget_left > 0) {
            std::set<int> rest;
            std::set_difference(td.bags[t].begin(), td.bags[t].end(), alpha.begin(), alpha.end(),
                                std::inserter(rest, rest.begin()));
            std::vector<Cycle> odd = enumerate_odd_cycles(induced_subgraph(g, rest));
            budget_left -= static_cast<int>(odd.size());
            if (odd.empty()) break;
            if (budget_left <= 0) {
                res.budget_exhausted = true;
                break;
            }
            // Max coverage, smallest id on ties.
            std::map<int, int> coverage;
            for (const Cycle& c : odd)
                for (int v : c.vertices) ++coverage[v];
            int pick = -1;
            int best_cov = 0;
            for (const auto& [v, cov] : coverage)
                if (cov > best_cov) {
                    best_cov = cov;
                    pick = v;
                }
            alpha.insert(pick);
            --budget_left;
        }
        if (budget_left <= 0 && t + 1 < td.node_count) res.budget_exhausted = true;
    }
    return res;
}

}  // namespace tdm
