// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance is exact (integer equality); budgets are
// wall-clock sanity targets printed with each line.

#include "tdmtw/exact_kfree.hpp"
#include "tdmtw/grids.hpp"
#include "tdmtw/heuristic.hpp"
#include "tdmtw/ip_solver.hpp"
#include "tdmtw/matrix.hpp"
#include "tdmtw/ocp.hpp"
#include "tdmtw/transform.hpp"

#include "helpers.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace tdm;
using tdmtest::Rng;

namespace {

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string&)> body;
};

// --- 1: solve_dp equals the brute-force oracle on 500 seeded instances ----

bool oracle_equivalence(std::string& detail) {
    Rng rng(101);
    for (int trial = 0; trial < 500; ++trial) {
        int n = tdmtest::rand_int(rng, 2, 10);
        int m = tdmtest::rand_int(rng, 1, 15);
        IPInstance inst = tdmtest::random_instance(rng, n, m, 3, 3);
        RootedSignedGraph g = to_rooted_signed_graph(inst.a);
        KFreeDecomposition kfree =
            extract_from_tdm(g, decompose_heuristic(g).decomposition).first;
        SolveResult expect = brute_force_oracle(inst);
        SolveResult got = solve_dp(inst, kfree);
        if (got.status != expect.status ||
            (expect.optimal() && got.objective != expect.objective)) {
            detail = "mismatch at trial " + std::to_string(trial);
            return false;
        }
        if (got.optimal() && !check_witness(inst, got.x)) {
            detail = "infeasible witness at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

// --- 2: determinant bounds on 200 seeded matrices --------------------------

bool dmod_bounds(std::string& detail) {
    Rng rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        int m = tdmtest::rand_int(rng, 1, 6);
        int n = tdmtest::rand_int(rng, 2, 6);
        TwoNonzeroMatrix a = tdmtest::random_matrix(rng, m, n, 3);
        DmodReport rep = check_dmod_bounds(a);
        if (!rep.all_pass()) {
            detail = "bound violated at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

// --- 3: even-grid subdivision on 100 seeded signings per k -----------------

bool even_grid(std::string& detail) {
    Rng rng(303);
    for (int k : {2, 3}) {
        GridGraph base = make_grid(k * k);
        GridGraph guest = make_grid(k);
        auto cells = grid_cells(guest.graph, guest.coords, k, k);
        for (int trial = 0; trial < 100; ++trial) {
            RootedSignedGraph host;
            for (int v : base.graph.vertices()) host.add_vertex(v);
            for (const auto& [id, e] : base.graph.edges())
                host.add_edge(id, e.u, e.v, tdmtest::rand_int(rng, 0, 1));
            EvenGridResult r = find_even_grid_subdivision(host, k);
            if (!verify_subdivision_model(host, guest.graph, r.model).ok) {
                detail = "model rejected at k=" + std::to_string(k) + " trial " +
                         std::to_string(trial);
                return false;
            }
            for (const auto& cell : cells) {
                int parity = 0;
                for (int ge : cell)
                    for (int id : r.model.paths.at(ge)) parity ^= host.edge(id).parity;
                if (parity != 0) {
                    detail = "odd image cell at k=" + std::to_string(k) + " trial " +
                             std::to_string(trial);
                    return false;
                }
            }
        }
    }
    return true;
}

// --- 4: decomposition sandwich on 50 seeded rooted graphs ------------------

bool sandwich(std::string& detail) {
    Rng rng(404);
    for (int trial = 0; trial < 50; ++trial) {
        int n = tdmtest::rand_int(rng, 4, 10);
        RootedSignedGraph g = tdmtest::random_graph(rng, n, tdmtest::rand_int(rng, 3, 16),
                                                    tdmtest::rand_int(rng, 1, 3));
        if (g.roots().empty()) continue;
        TDMDecomposition d = decompose_heuristic(g).decomposition;
        if (!validate(d, g).empty()) {
            detail = "invalid heuristic decomposition at trial " + std::to_string(trial);
            return false;
        }
        int w = width(d, g);
        auto [kfree, tame] = extract_from_tdm(g, d);
        if (!validate(kfree, g).empty() || !validate(tame, g).empty()) {
            detail = "invalid extraction at trial " + std::to_string(trial);
            return false;
        }
        if (width(kfree, g) > w - 1 || width(tame, g) > w) {
            detail = "extraction width bound failed at trial " + std::to_string(trial);
            return false;
        }
        // Rebuild per-leaf decompositions and compose.
        std::map<int, TameOCPDecomposition> leaves;
        int max_leaf = 0;
        for (int j = 0; j < kfree.base.node_count; ++j) {
            if (!kfree.base.is_leaf(j)) continue;
            std::set<int> part;
            for (int v : kfree.base.bags[j])
                if (kfree.free_set.count(v)) part.insert(v);
            if (part.empty()) continue;
            RootedSignedGraph sub = induced_subgraph(g, part);
            leaves[j] = tame_part(decompose_heuristic(sub).decomposition);
            max_leaf = std::max(max_leaf, width(leaves[j], sub));
        }
        TDMDecomposition composed = compose_tdm(g, kfree, leaves);
        if (!validate(composed, g).empty()) {
            detail = "invalid composition at trial " + std::to_string(trial);
            return false;
        }
        if (width(composed, g) > width(kfree, g) + 1 + max_leaf) {
            detail = "composition width bound failed at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

// --- 5: rooted-grid lower bound and root-free zero ------------------------

bool rooted_grid_bound(std::string& detail) {
    GridGraph w4 = make_rooted_grid(4);
    int tw = exact_kfree_tw(w4.graph, w4.graph.roots());
    if (tw < 1) {
        detail = "rooted 4x4 grid reported width " + std::to_string(tw);
        return false;
    }
    Rng rng(505);
    for (int trial = 0; trial < 10; ++trial) {
        RootedSignedGraph g = tdmtest::random_graph(rng, tdmtest::rand_int(rng, 2, 9),
                                                    tdmtest::rand_int(rng, 1, 14));
        if (exact_kfree_tw(g, {}) != 0) {
            detail = "root-free graph with nonzero width at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

// --- 6: shifting and subdivision invariance --------------------------------

bool shifting_subdivision(std::string& detail) {
    Rng rng(606);
    for (int trial = 0; trial < 100; ++trial) {
        int n = tdmtest::rand_int(rng, 3, 10);
        RootedSignedGraph g = tdmtest::random_graph(rng, n, tdmtest::rand_int(rng, 2, 16));
        int base = ocp_exact(g);
        for (int v : g.vertices()) {
            if (ocp_exact(shift_at(g, v)) != base) {
                detail = "ocp changed under shifting at trial " + std::to_string(trial);
                return false;
            }
        }
        EvenSubdivision s = subdivide_even_edges(g);
        TameOCPDecomposition d = tame_part(decompose_heuristic(s.graph).decomposition);
        if (!validate(d, s.graph).empty()) {
            detail = "invalid decomposition of the subdivision at trial " + std::to_string(trial);
            return false;
        }
        TameOCPDecomposition u = uncontract_subdivision(d, g, s.interior_to_edge);
        if (!validate(u, g).empty()) {
            detail = "invalid uncontracted decomposition at trial " + std::to_string(trial);
            return false;
        }
        if (width(u, g) != width(d, s.graph)) {
            detail = "t-width changed across the subdivision round trip at trial " +
                     std::to_string(trial);
            return false;
        }
    }
    return true;
}

// --- 7: generator structure -------------------------------------------------

bool generator_structure(std::string& detail) {
    for (int k = 1; k <= 5; ++k) {
        long base_edges = 1L * k * 4 * k + 1L * (k - 1) * 4 * k;
        for (bool handle : {true, false}) {
            GridGraph g = handle ? make_parity_handle(k) : make_parity_vortex(k);
            if (g.graph.vertex_count() != static_cast<std::size_t>(4 * k * k)) {
                detail = "wrong vertex count at k=" + std::to_string(k);
                return false;
            }
            if (g.graph.edge_count() != static_cast<std::size_t>(base_edges + k)) {
                detail = "wrong edge count at k=" + std::to_string(k);
                return false;
            }
            for (const auto& [id, e] : g.graph.edges())
                if (e.parity != 1) {
                    detail = "even edge in a parity grid at k=" + std::to_string(k);
                    return false;
                }
        }
    }
    GridGraph w8 = make_rooted_grid(8);
    if (w8.graph.vertex_count() != 64 || w8.graph.roots().size() != 8) {
        detail = "rooted grid of order 8 has wrong counts";
        return false;
    }
    return true;
}

// --- 8: corrupted decompositions are rejected with a named clause ----------

bool fuzz_rejection(std::string& detail) {
    Rng rng(808);
    const char* kinds[] = {"tree", "kfree", "tocp", "tdm"};
    for (const char* kind : kinds) {
        for (int trial = 0; trial < 100; ++trial) {
            int n = tdmtest::rand_int(rng, 5, 9);
            RootedSignedGraph g = tdmtest::random_graph(rng, n, tdmtest::rand_int(rng, 5, 14), 2);
            while (g.roots().empty()) g = tdmtest::random_graph(rng, n, 8, 2);
            TDMDecomposition d = decompose_heuristic(g).decomposition;

            std::vector<std::string> violations;
            std::string kind_s(kind);
            // One corruption of one field, chosen among always-invalidating
            // edits for the kind.
            int choice = tdmtest::rand_int(rng, 0, kind_s == "tree" ? 1 : (kind_s == "kfree" ? 2 : 2));
            auto corrupt_base = [&](TreeDecomposition& base) {
                if (choice == 0 || base.node_count < 2) {
                    // Unknown vertex in a bag.
                    int t = tdmtest::rand_int(rng, 0, base.node_count - 1);
                    base.bags[t].insert(n + 100);
                } else {
                    // Duplicate tree edge: breaks the edge-count-of-a-tree clause.
                    base.tree_edges.push_back(base.tree_edges.front());
                }
            };
            if (kind_s == "tree") {
                TreeDecomposition base = d.base;
                corrupt_base(base);
                violations = validate(base, g);
            } else if (kind_s == "kfree") {
                KFreeDecomposition kfree = extract_from_tdm(g, d).first;
                if (choice == 2) {
                    kfree.free_set.insert(*g.roots().begin());  // L-disjoint-roots
                } else {
                    corrupt_base(kfree.base);
                }
                violations = validate(kfree, g);
            } else if (kind_s == "tocp") {
                TameOCPDecomposition tame = tame_part(d);
                if (choice == 2) {
                    int t = tdmtest::rand_int(rng, 0, tame.base.node_count - 1);
                    tame.protectors[t].insert(n + 100);  // protector-subset
                } else {
                    corrupt_base(tame.base);
                }
                violations = validate(tame, g);
            } else {
                TDMDecomposition tdm_d = d;
                if (choice == 2) {
                    tdm_d.strong_subtree.clear();  // roots exist: J-covers-roots
                } else {
                    corrupt_base(tdm_d.base);
                }
                violations = validate(tdm_d, g);
            }
            if (violations.empty()) {
                detail = std::string("corruption accepted for kind ") + kind + " at trial " +
                         std::to_string(trial);
                return false;
            }
            if (violations.front().find(':') == std::string::npos) {
                detail = "violation without a named clause";
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "oracle equivalence over 500 random instances", oracle_equivalence},
        {2, "determinant/OCP bounds over 200 random matrices", dmod_bounds},
        {3, "even-grid subdivision over random signings (k=2,3)", even_grid},
        {4, "decomposition sandwich over 50 random rooted graphs", sandwich},
        {5, "rooted-grid K-free lower bound and root-free zero", rooted_grid_bound},
        {6, "shifting and subdivision invariance over 100 graphs", shifting_subdivision},
        {7, "parity handle/vortex and rooted grid structure", generator_structure},
        {8, "fuzzed decompositions rejected with named clauses", fuzz_rejection},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  start);
        std::ostringstream line;
        line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.name << " ("
             << elapsed.count() / 1000.0 << "s)";
        if (!ok) line << " -- " << detail;
        std::cout << line.str() << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
