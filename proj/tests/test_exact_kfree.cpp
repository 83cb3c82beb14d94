#include "tdmtw/exact_kfree.hpp"

#include "tdmtw/grids.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace tdm;
using tdmtest::Rng;

TEST_CASE("exact treewidth of small mask graphs") {
    // Path on 3: tw 1; triangle: tw 2; empty: -1; singleton: 0.
    CHECK(exact_treewidth_masks(0, {}) == -1);
    CHECK(exact_treewidth_masks(1, {0}) == 0);
    CHECK(exact_treewidth_masks(3, {0b010, 0b101, 0b010}) == 1);
    CHECK(exact_treewidth_masks(3, {0b110, 0b101, 0b011}) == 2);
    // 2x2 grid (4-cycle): tw 2.
    CHECK(exact_treewidth_masks(4, {0b0110, 0b1001, 0b1001, 0b0110}) == 2);
}

TEST_CASE("no roots means width zero") {
    Rng rng(8801);
    for (int trial = 0; trial < 10; ++trial) {
        RootedSignedGraph g =
            tdmtest::random_graph(rng, tdmtest::rand_int(rng, 1, 8), tdmtest::rand_int(rng, 0, 12));
        CHECK(exact_kfree_tw(g, {}) == 0);
    }
}

TEST_CASE("fully rooted path needs width 1") {
    // All three vertices rooted: no vertex may be free, so some bag holds
    // two non-free vertices.
    RootedSignedGraph g;
    for (int v : {0, 1, 2}) g.add_vertex(v);
    g.add_edge(0, 0, 1, 0);
    g.add_edge(1, 1, 2, 0);
    CHECK(exact_kfree_tw(g, {0, 1, 2}) == 1);
}

TEST_CASE("rooted 2x2 grid needs width 1") {
    GridGraph w2 = make_rooted_grid(2);
    CHECK(exact_kfree_tw(w2.graph, w2.graph.roots()) == 1);
}

TEST_CASE("roots confined to one clique bag") {
    // Triangle of roots plus pendant free vertices.
    RootedSignedGraph g;
    for (int v = 0; v < 6; ++v) g.add_vertex(v);
    g.add_edge(0, 0, 1, 0);
    g.add_edge(1, 1, 2, 0);
    g.add_edge(2, 0, 2, 0);
    g.add_edge(3, 0, 3, 0);
    g.add_edge(4, 1, 4, 0);
    g.add_edge(5, 2, 5, 0);
    // The root triangle forces a bag with all of {0,1,2}.
    CHECK(exact_kfree_tw(g, {0, 1, 2}) == 2);
}

TEST_CASE("rooted grid of order 4 has K-free treewidth at least 1") {
    GridGraph w4 = make_rooted_grid(4);
    int tw = exact_kfree_tw(w4.graph, w4.graph.roots());
    CHECK(tw >= 1);
}

TEST_CASE("guards") {
    Rng rng(8802);
    RootedSignedGraph g = tdmtest::random_graph(rng, 17, 5);
    CHECK_THROWS(exact_kfree_tw(g, {}));
    RootedSignedGraph small = tdmtest::random_graph(rng, 3, 2);
    CHECK_THROWS(exact_kfree_tw(small, {9}));
}

namespace {

// Independent treewidth oracle: brute force over all elimination orders.
int tw_by_permutations(int n, std::vector<unsigned> adj) {
    if (n == 0) return -1;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    int best = n;
    do {
        std::vector<unsigned> work = adj;
        int cost = 0;
        for (int v : order) {
            std::vector<int> nbrs;
            for (int w = 0; w < n; ++w)
                if (work[v] & (1u << w)) nbrs.push_back(w);
            cost = std::max(cost, static_cast<int>(nbrs.size()));
            for (int a : nbrs) {
                work[a] &= ~(1u << v);
                for (int b : nbrs)
                    if (a != b) work[a] |= 1u << b;
            }
            work[v] = 0;
        }
        best = std::min(best, cost);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// Independent K-free width oracle over the same reduction, with the
// permutation-based treewidth engine.
int kfree_by_reduction(const RootedSignedGraph& g, const std::set<int>& roots) {
    std::vector<int> verts(g.vertices().begin(), g.vertices().end());
    const int n = static_cast<int>(verts.size());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[verts[i]] = i;
    std::vector<unsigned> adj(n, 0);
    for (const auto& [id, e] : g.edges()) {
        adj[index[e.u]] |= 1u << index[e.v];
        adj[index[e.v]] |= 1u << index[e.u];
    }
    std::vector<int> free_pos;
    for (int i = 0; i < n; ++i)
        if (!roots.count(verts[i])) free_pos.push_back(i);
    int best = n;
    for (unsigned choice = 0; choice < (1u << free_pos.size()); ++choice) {
        unsigned l = 0;
        for (std::size_t i = 0; i < free_pos.size(); ++i)
            if (choice & (1u << i)) l |= 1u << free_pos[i];
        // Components of the free part and their outside neighborhoods.
        int max_s = 0;
        std::vector<unsigned> neighborhoods;
        unsigned rest = l;
        while (rest) {
            unsigned comp = rest & (~rest + 1);
            bool grew = true;
            while (grew) {
                grew = false;
                for (int w = 0; w < n; ++w)
                    if ((comp & (1u << w))) {
                        unsigned add = adj[w] & l & ~comp;
                        if (add) {
                            comp |= add;
                            grew = true;
                        }
                    }
            }
            rest &= ~comp;
            unsigned nb = 0;
            for (int w = 0; w < n; ++w)
                if (comp & (1u << w)) nb |= adj[w];
            nb &= ~l;
            neighborhoods.push_back(nb);
            max_s = std::max(max_s, std::popcount(nb));
        }
        // Graph outside L plus one clique per neighborhood, reindexed.
        std::vector<int> keep;
        for (int i = 0; i < n; ++i)
            if (!(l & (1u << i))) keep.push_back(i);
        std::vector<int> pos(n, -1);
        for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
        std::vector<unsigned> hadj(keep.size(), 0);
        for (std::size_t i = 0; i < keep.size(); ++i) {
            for (int w = 0; w < n; ++w)
                if ((adj[keep[i]] & (1u << w)) && pos[w] >= 0) hadj[i] |= 1u << pos[w];
        }
        for (unsigned nb : neighborhoods) {
            std::vector<int> members;
            for (int w = 0; w < n; ++w)
                if (nb & (1u << w)) members.push_back(pos[w]);
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    hadj[members[i]] |= 1u << members[j];
                    hadj[members[j]] |= 1u << members[i];
                }
        }
        int tw = tw_by_permutations(static_cast<int>(keep.size()), hadj);
        best = std::min(best, std::max({0, tw, max_s - 1}));
    }
    return best;
}

}  // namespace

TEST_CASE("exact K-free width matches the permutation-based oracle") {
    Rng rng(8804);
    for (int trial = 0; trial < 25; ++trial) {
        int n = tdmtest::rand_int(rng, 2, 7);
        RootedSignedGraph g = tdmtest::random_graph(rng, n, tdmtest::rand_int(rng, 1, 12),
                                                    tdmtest::rand_int(rng, 0, 3));
        CAPTURE(trial);
        CHECK(exact_kfree_tw(g, g.roots()) == kfree_by_reduction(g, g.roots()));
    }
}

TEST_CASE("exact value is a lower bound for every valid K-free decomposition") {
    Rng rng(8803);
    for (int trial = 0; trial < 15; ++trial) {
        int n = tdmtest::rand_int(rng, 3, 8);
        RootedSignedGraph g = tdmtest::random_graph(rng, n, tdmtest::rand_int(rng, 2, 12),
                                                    tdmtest::rand_int(rng, 1, 3));
        int exact = exact_kfree_tw(g, g.roots());
        // Single-bag decomposition (L = non-roots) gives an upper bound of
        // max(0, |K| - 1); the trivial all-in-one with L empty gives n-1.
        KFreeDecomposition single;
        single.base.node_count = 1;
        single.base.bags.push_back(g.vertices());
        for (int v : g.vertices())
            if (!g.is_root(v)) single.free_set.insert(v);
        REQUIRE(validate(single, g).empty());
        CHECK(exact <= width(single, g));
    }
}
