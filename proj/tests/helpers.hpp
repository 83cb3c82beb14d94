#pragma once

// Shared test utilities: seeded generators and independent oracles. The
// oracles deliberately take different algorithmic routes than the library
// code they check.

#include "tdmtw/ip_solver.hpp"
#include "tdmtw/matrix.hpp"
#include "tdmtw/signed_graph.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

namespace tdmtest {

using tdm::Int;
using tdm::RootedSignedGraph;

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random signed multigraph: n vertices, m edges over random vertex pairs
/// (parallel edges possible), random parities, `n_roots` random roots.
inline RootedSignedGraph random_graph(Rng& rng, int n, int m, int n_roots = 0) {
    RootedSignedGraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int e = 0; e < m && n >= 2; ++e) {
        int u = rand_int(rng, 0, n - 1);
        int v = rand_int(rng, 0, n - 2);
        if (v >= u) ++v;
        g.add_edge(e, u, v, rand_int(rng, 0, 1));
    }
    for (int i = 0; i < n_roots && n > 0; ++i) g.set_root(rand_int(rng, 0, n - 1));
    return g;
}

/// Independent OCP oracle: enumerate all edge subsets in which every
/// component is a cycle of odd parity; the answer is the maximum component
/// count. Exponential in the edge count; keep m small.
inline int ocp_edge_subset_oracle(const RootedSignedGraph& g) {
    std::vector<int> edge_ids;
    for (const auto& [id, e] : g.edges()) edge_ids.push_back(id);
    const int m = static_cast<int>(edge_ids.size());
    int best = 0;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        std::map<int, int> degree;
        std::map<int, std::vector<int>> adj_edges;  // vertex -> chosen incident edges
        for (int i = 0; i < m; ++i) {
            if (!(mask & (1ul << i))) continue;
            const tdm::Edge& e = g.edge(edge_ids[i]);
            degree[e.u]++;
            degree[e.v]++;
            adj_edges[e.u].push_back(edge_ids[i]);
            adj_edges[e.v].push_back(edge_ids[i]);
        }
        bool all_two = true;
        for (const auto& [v, d] : degree)
            if (d != 2) {
                all_two = false;
                break;
            }
        if (!all_two) continue;
        // Components: walk each; each must be an odd cycle.
        std::set<int> seen_vertices;
        int components = 0;
        bool valid = true;
        for (const auto& [start, d] : degree) {
            if (seen_vertices.count(start)) continue;
            ++components;
            int parity = 0;
            std::set<int> used_edges;
            int cur = start;
            while (true) {
                seen_vertices.insert(cur);
                int next_edge = -1;
                for (int id : adj_edges[cur])
                    if (!used_edges.count(id)) {
                        next_edge = id;
                        break;
                    }
                if (next_edge < 0) break;
                used_edges.insert(next_edge);
                parity ^= g.edge(next_edge).parity;
                cur = g.edge(next_edge).other(cur);
            }
            if (cur != start || parity != 1) {
                valid = false;
                break;
            }
        }
        if (valid && components > best) best = components;
    }
    return best;
}

/// Independent determinant: cofactor expansion along the first row.
inline Int cofactor_det(const std::vector<std::vector<Int>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int det = 0;
    for (int j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor;
        for (int i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

/// Random two-nonzero matrix with entries in [-mag, mag] \ {0}.
inline tdm::TwoNonzeroMatrix random_matrix(Rng& rng, int m, int n, int mag) {
    tdm::TwoNonzeroMatrix a(m, n);
    for (int i = 0; i < m; ++i) {
        int ca = rand_int(rng, 0, n - 1);
        int cb = rand_int(rng, 0, n - 2);
        if (cb >= ca) ++cb;
        auto coef = [&] {
            int c = rand_int(rng, 1, mag);
            return rand_int(rng, 0, 1) ? c : -c;
        };
        a.set_row(i, ca, coef(), cb, coef());
    }
    return a;
}

/// Random bounded-box instance; rhs values are sampled around each row's
/// attainable range so feasible and infeasible rows both occur.
inline tdm::IPInstance random_instance(Rng& rng, int n, int m, int mag, int diameter) {
    tdm::TwoNonzeroMatrix a = random_matrix(rng, m, n, mag);
    std::vector<Int> lower, upper, w, b;
    for (int j = 0; j < n; ++j) {
        int lo = rand_int(rng, -3, 3);
        lower.push_back(lo);
        upper.push_back(lo + rand_int(rng, 0, diameter));
        w.push_back(rand_int(rng, -5, 5));
    }
    for (int i = 0; i < m; ++i) {
        const tdm::MatrixRow& r = a.row(i);
        Int combos[4] = {r.coef_a * lower[r.col_a] + r.coef_b * lower[r.col_b],
                         r.coef_a * lower[r.col_a] + r.coef_b * upper[r.col_b],
                         r.coef_a * upper[r.col_a] + r.coef_b * lower[r.col_b],
                         r.coef_a * upper[r.col_a] + r.coef_b * upper[r.col_b]};
        Int lo = combos[0], hi = combos[0];
        for (const Int& c : combos) {
            if (c < lo) lo = c;
            if (c > hi) hi = c;
        }
        long span = Int(hi - lo).get_si();
        b.push_back(lo + rand_int(rng, -2, static_cast<int>(span) + 2));
    }
    return tdm::IPInstance{std::move(a), std::move(b), std::move(w), std::move(lower),
                           std::move(upper)};
}

/// Plain odometer enumeration of the bag's free variables; no propagation.
/// Used as the internal oracle for solve_leaf.
inline tdm::ExtInt leaf_enumeration_oracle(const tdm::IPInstance& inst, const std::set<int>& bag,
                                           const std::set<int>& free_vars,
                                           const tdm::Assignment& fixed) {
    std::vector<int> order(free_vars.begin(), free_vars.end());
    tdm::Assignment current = fixed;
    tdm::ExtInt best = tdm::ExtInt::neg_inf();
    auto objective = [&] {
        Int total = 0;
        for (int v : bag) total += inst.w[v] * current.at(v);
        return total;
    };
    auto feasible = [&] {
        for (int v : bag)
            if (current.at(v) < inst.lower[v] || current.at(v) > inst.upper[v]) return false;
        for (int i = 0; i < inst.a.rows(); ++i) {
            const tdm::MatrixRow& r = inst.a.row(i);
            if (!bag.count(r.col_a) || !bag.count(r.col_b)) continue;
            if (r.coef_a * current.at(r.col_a) + r.coef_b * current.at(r.col_b) > inst.b[i])
                return false;
        }
        return true;
    };
    std::vector<Int> vals(order.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == order.size()) {
            if (feasible()) best = tdm::max(best, tdm::ExtInt::of(objective()));
            return;
        }
        for (Int v = inst.lower[order[i]]; v <= inst.upper[order[i]]; ++v) {
            current[order[i]] = v;
            self(self, i + 1);
        }
        current.erase(order[i]);
    };
    rec(rec, 0);
    return best;
}

}  // namespace tdmtest
