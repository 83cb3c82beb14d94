#include "tdmtw/exact_kfree.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <vector>

namespace tdm {

int exact_treewidth_masks(int n, const std::vector<unsigned>& adj) {
    if (n == 0) return -1;
    const unsigned full = (n == 32) ? ~0u : ((1u << n) - 1);

    // q(X, v): vertices outside X∪{v} seeing the component of v within X∪{v}.
    auto q = [&](unsigned x, int v) {
        unsigned comp = 1u << v;
        unsigned frontier = comp;
        while (frontier) {
            unsigned reach = 0;
            unsigned f = frontier;
            while (f) {
                int w = std::countr_zero(f);
                f &= f - 1;
                reach |= adj[w];
            }
            frontier = reach & x & ~comp;
            comp |= frontier;
        }
        unsigned boundary = 0;
        unsigned c = comp;
        while (c) {
            int w = std::countr_zero(c);
            c &= c - 1;
            boundary |= adj[w];
        }
        boundary &= full & ~x & ~(1u << v) & ~comp;
        return std::popcount(boundary);
    };

    std::vector<signed char> memo(1u << n, -2);  // -2 = unset; widths fit a byte for n <= 16
    memo[0] = -1;
    // Iterate subsets in increasing popcount via plain order: S depends only
    // on subsets of S, and S∖{v} < S numerically, so a single ascending pass
    // works.
    for (unsigned s = 1; s <= full; ++s) {
        int best = n;  // width can never exceed n-1; n acts as +infinity
        unsigned it = s;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            unsigned rest = s & ~(1u << v);
            int sub = memo[rest];
            int cand = std::max<int>(sub, q(rest, v));
            best = std::min(best, cand);
        }
        memo[s] = static_cast<signed char>(best);
    }
    return memo[full];
}

int exact_kfree_tw(const RootedSignedGraph& g, const std::set<int>& roots) {
    const int n = static_cast<int>(g.vertex_count());
    if (n == 0) return 0;
    if (n > 16) throw std::invalid_argument("exact_kfree_tw: more than 16 vertices");
    for (int r : roots)
        if (!g.has_vertex(r)) throw std::invalid_argument("exact_kfree_tw: unknown root");

    std::vector<int> verts(g.vertices().begin(), g.vertices().end());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[verts[i]] = i;
    std::vector<unsigned> adj(n, 0);
    for (const auto& [id, e] : g.edges()) {
        adj[index[e.u]] |= 1u << index[e.v];
        adj[index[e.v]] |= 1u << index[e.u];
    }
    unsigned root_mask = 0;
    for (int r : roots) root_mask |= 1u << index[r];
    std::vector<int> free_positions;
    for (int i = 0; i < n; ++i)
        if (!(root_mask & (1u << i))) free_positions.push_back(i);
    const int f = static_cast<int>(free_positions.size());

    int best = n;  // any single-bag decomposition is at most n-1 wide
    for (unsigned choice = 0; choice < (1u << f); ++choice) {
        unsigned l_mask = 0;
        for (int i = 0; i < f; ++i)
            if (choice & (1u << i)) l_mask |= 1u << free_positions[i];

        // Components of G[L]; each component's outside-neighborhood becomes a
        // leaf-bag requirement.
        std::vector<unsigned> comp_neigh;  // S_i masks
        int max_s = 0;
        {
            unsigned remaining = l_mask;
            while (remaining) {
                int v = std::countr_zero(remaining);
                unsigned comp = 1u << v;
                unsigned frontier = comp;
                while (frontier) {
                    unsigned reach = 0;
                    unsigned fr = frontier;
                    while (fr) {
                        int w = std::countr_zero(fr);
                        fr &= fr - 1;
                        reach |= adj[w];
                    }
                    frontier = reach & l_mask & ~comp;
                    comp |= frontier;
                }
                remaining &= ~comp;
                unsigned neigh = 0;
                unsigned c = comp;
                while (c) {
                    int w = std::countr_zero(c);
                    c &= c - 1;
                    neigh |= adj[w];
                }
                neigh &= ~l_mask;
                comp_neigh.push_back(neigh);
                max_s = std::max(max_s, std::popcount(neigh));
            }
        }
        if (max_s - 1 >= best) continue;  // cannot improve

        // Remaining graph plus one clique per component neighborhood.
        unsigned rest_mask = ~l_mask & ((n == 32) ? ~0u : ((1u << n) - 1));
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
            if (rest_mask & (1u << i)) rest.push_back(i);
        const int h = static_cast<int>(rest.size());
        std::vector<int> pos(n, -1);
        for (int i = 0; i < h; ++i) pos[rest[i]] = i;
        std::vector<unsigned> hadj(h, 0);
        for (int i = 0; i < h; ++i) {
            unsigned nb = adj[rest[i]] & rest_mask;
            unsigned m = nb;
            while (m) {
                int w = std::countr_zero(m);
                m &= m - 1;
                hadj[i] |= 1u << pos[w];
            }
        }
        for (unsigned s_mask : comp_neigh) {
            std::vector<int> members;
            unsigned m = s_mask;
            while (m) {
                int w = std::countr_zero(m);
                m &= m - 1;
                members.push_back(pos[w]);
            }
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    hadj[members[i]] |= 1u << members[j];
                    hadj[members[j]] |= 1u << members[i];
                }
        }
        int tw = exact_treewidth_masks(h, hadj);
        int w_l = std::max({0, tw, max_s - 1});
        best = std::min(best, w_l);
        if (best == 0) return 0;
    }
    return best;
}

}  // namespace tdm
