#include "tdmtw/ocp.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <stdexcept>

namespace tdm {

namespace {

constexpr std::size_t kMaxPackingVertices = 256;
using Mask = std::bitset<kMaxPackingVertices>;

void dfs_cycles(const RootedSignedGraph& g, int start, std::vector<int>& path_edges,
                std::vector<int>& path_verts, std::set<int>& on_path, std::set<int>& used_edges,
                int parity, std::vector<Cycle>& out) {
    int v = path_verts.back();
    for (int id : g.incident_edges(v)) {
        if (used_edges.count(id)) continue;
        const Edge& e = g.edge(id);
        int w = e.other(v);
        if (w == start) {
            if (path_edges.size() >= 2 && path_edges.front() < id) {
                Cycle c;
                c.edge_ids = path_edges;
                c.edge_ids.push_back(id);
                c.vertices = on_path;
                c.parity = parity ^ e.parity;
                out.push_back(std::move(c));
            }
            continue;
        }
        if (w < start || on_path.count(w)) continue;
        path_edges.push_back(id);
        path_verts.push_back(w);
        on_path.insert(w);
        used_edges.insert(id);
        dfs_cycles(g, start, path_edges, path_verts, on_path, used_edges, parity ^ e.parity, out);
        used_edges.erase(id);
        on_path.erase(w);
        path_verts.pop_back();
        path_edges.pop_back();
    }
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const RootedSignedGraph& g) {
    std::vector<Cycle> out;
    // 2-cycles from parallel edge pairs.
    std::map<std::pair<int, int>, std::vector<int>> by_ends;
    for (const auto& [id, e] : g.edges())
        by_ends[std::minmax(e.u, e.v)].push_back(id);
    for (const auto& [ends, ids] : by_ends)
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                Cycle c;
                c.edge_ids = {ids[i], ids[j]};
                c.vertices = {ends.first, ends.second};
                c.parity = g.edge(ids[i]).parity ^ g.edge(ids[j]).parity;
                out.push_back(std::move(c));
            }
    // Longer cycles: rooted DFS, each cycle found once (smallest vertex as
    // start, smaller end-edge id first).
    for (int s : g.vertices()) {
        std::vector<int> path_edges;
        std::vector<int> path_verts{s};
        std::set<int> on_path{s};
        std::set<int> used_edges;
        dfs_cycles(g, s, path_edges, path_verts, on_path, used_edges, 0, out);
    }
    return out;
}

std::vector<Cycle> enumerate_odd_cycles(const RootedSignedGraph& g) {
    std::vector<Cycle> odd;
    std::set<std::set<int>> seen;
    for (auto& c : enumerate_cycles(g)) {
        if (c.parity != 1) continue;
        if (seen.insert(c.vertices).second) odd.push_back(std::move(c));
    }
    return odd;
}

namespace {

struct Packer {
    std::vector<Mask> masks;
    std::vector<int> sizes;
    std::size_t n_vertices = 0;
    int best = 0;

    void run(std::size_t i, const Mask& used, int count) {
        if (count > best) best = count;
        if (i >= masks.size()) return;
        // Upper bound: remaining candidate count, tightened by free capacity
        // over the smallest remaining cycle size.
        int compatible = 0;
        std::size_t min_size = kMaxPackingVertices;
        for (std::size_t j = i; j < masks.size(); ++j)
            if ((masks[j] & used).none()) {
                ++compatible;
                min_size = std::min<std::size_t>(min_size, sizes[j]);
            }
        std::size_t free_capacity = n_vertices - used.count();
        int ub = compatible;
        if (min_size != kMaxPackingVertices)
            ub = std::min<int>(ub, static_cast<int>(free_capacity / min_size));
        if (count + ub <= best) return;
        // Branch on the first compatible cycle.
        std::size_t pick = i;
        while (pick < masks.size() && (masks[pick] & used).any()) ++pick;
        if (pick >= masks.size()) return;
        run(pick + 1, used | masks[pick], count + 1);
        run(pick + 1, used, count);
    }
};

}  // namespace

int ocp_exact(const RootedSignedGraph& g) {
    if (g.vertex_count() > kMaxPackingVertices)
        throw std::invalid_argument("ocp_exact: graph too large for exact packing");
    std::vector<Cycle> odd = enumerate_odd_cycles(g);
    if (odd.empty()) return 0;

    std::map<int, std::size_t> index;
    std::size_t next = 0;
    for (int v : g.vertices()) index[v] = next++;

    Packer packer;
    packer.n_vertices = g.vertex_count();
    for (const Cycle& c : odd) {
        Mask m;
        for (int v : c.vertices) m.set(index[v]);
        packer.masks.push_back(m);
        packer.sizes.push_back(static_cast<int>(c.vertices.size()));
    }
    // Small cycles first: stronger pruning and deterministic order.
    std::vector<std::size_t> order(packer.masks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return packer.sizes[a] < packer.sizes[b]; });
    std::vector<Mask> masks;
    std::vector<int> sizes;
    for (std::size_t i : order) {
        masks.push_back(packer.masks[i]);
        sizes.push_back(packer.sizes[i]);
    }
    packer.masks = std::move(masks);
    packer.sizes = std::move(sizes);

    // Greedy lower bound before search.
    Mask used;
    int greedy = 0;
    for (std::size_t i = 0; i < packer.masks.size(); ++i)
        if ((packer.masks[i] & used).none()) {
            used |= packer.masks[i];
            ++greedy;
        }
    packer.best = greedy;
    packer.run(0, Mask(), 0);
    return packer.best;
}

}  // namespace tdm
