#include "tdmtw/grids.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tdm {

void GridCoords::add(int v, int a, int b) {
    if (of_vertex_.count(v) || of_coord_.count({a, b}))
        throw std::invalid_argument("GridCoords: duplicate assignment");
    of_vertex_[v] = {a, b};
    of_coord_[{a, b}] = v;
}

std::pair<int, int> GridCoords::coord(int v) const {
    auto it = of_vertex_.find(v);
    if (it == of_vertex_.end()) throw std::invalid_argument("GridCoords: unknown vertex");
    return it->second;
}

int GridCoords::vertex(int a, int b) const {
    auto it = of_coord_.find({a, b});
    if (it == of_coord_.end()) throw std::invalid_argument("GridCoords: unknown coordinate");
    return it->second;
}

bool GridCoords::has_coord(int a, int b) const { return of_coord_.count({a, b}) > 0; }

GridGraph make_grid(int k) {
    if (k < 1) throw std::invalid_argument("make_grid: k must be at least 1");
    GridGraph out;
    auto vid = [k](int i, int j) { return (i - 1) * k + (j - 1); };
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            out.graph.add_vertex(vid(i, j));
            out.coords.add(vid(i, j), i, j);
        }
    int eid = 0;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            if (j < k) out.graph.add_edge(eid++, vid(i, j), vid(i, j + 1), 0);
            if (i < k) out.graph.add_edge(eid++, vid(i, j), vid(i + 1, j), 0);
        }
    return out;
}

GridGraph make_rooted_grid(int k) {
    GridGraph out = make_grid(k);
    for (int j = 1; j <= k; ++j) out.graph.set_root(out.coords.vertex(1, j));
    return out;
}

GridGraph make_cylindrical_grid(int n, int m) {
    if (n < 1) throw std::invalid_argument("make_cylindrical_grid: n must be at least 1");
    if (m < 3)
        throw std::invalid_argument("make_cylindrical_grid: m must be at least 3 (no loops or "
                                    "parallel ring edges)");
    GridGraph out;
    auto vid = [m](int r, int p) { return (r - 1) * m + p; };
    for (int r = 1; r <= n; ++r)
        for (int p = 0; p < m; ++p) {
            out.graph.add_vertex(vid(r, p));
            out.coords.add(vid(r, p), r, p);
        }
    int eid = 0;
    for (int r = 1; r <= n; ++r)
        for (int p = 0; p < m; ++p) {
            out.graph.add_edge(eid++, vid(r, p), vid(r, (p + 1) % m), 0);
            if (r < n) out.graph.add_edge(eid++, vid(r, p), vid(r + 1, p), 0);
        }
    return out;
}

namespace {

GridGraph parity_grid(int k, bool handle) {
    if (k < 1) throw std::invalid_argument("parity grid: k must be at least 1");
    GridGraph base = make_cylindrical_grid(k, 4 * k);
    GridGraph out;
    out.coords = base.coords;
    for (int v : base.graph.vertices()) out.graph.add_vertex(v);
    for (const auto& [id, e] : base.graph.edges()) out.graph.add_edge(id, e.u, e.v, 1);
    // X = every other outer-ring vertex, clockwise: x_i at angular 2(i-1) on
    // ring 1.
    auto x = [&](int i) { return out.coords.vertex(1, (2 * (i - 1)) % (4 * k)); };
    int eid = base.graph.max_edge_id() + 1;
    for (int i = 1; i <= k; ++i) {
        int a = handle ? x(i) : x(2 * i - 1);
        int b = handle ? x(2 * k - i + 1) : x(2 * i);
        out.graph.add_edge(eid++, a, b, 1);
    }
    return out;
}

}  // namespace

GridGraph make_parity_handle(int k) { return parity_grid(k, true); }
GridGraph make_parity_vortex(int k) { return parity_grid(k, false); }

std::vector<std::vector<int>> grid_cells(const RootedSignedGraph& g, const GridCoords& coords,
                                         int rows, int cols) {
    std::map<std::pair<int, int>, int> eid;
    for (const auto& [id, e] : g.edges()) eid[std::minmax(e.u, e.v)] = id;
    auto edge_between = [&](int v, int w) {
        auto it = eid.find(std::minmax(v, w));
        if (it == eid.end()) throw std::invalid_argument("grid_cells: missing grid edge");
        return it->second;
    };
    std::vector<std::vector<int>> cells;
    for (int i = 1; i < rows; ++i)
        for (int j = 1; j < cols; ++j) {
            int a = coords.vertex(i, j);
            int b = coords.vertex(i, j + 1);
            int c = coords.vertex(i + 1, j + 1);
            int d = coords.vertex(i + 1, j);
            cells.push_back({edge_between(a, b), edge_between(b, c), edge_between(c, d),
                             edge_between(d, a)});
        }
    return cells;
}

namespace {

// Host-side helper bundle for the k^2 x k^2 grid searches.
struct HostGrid {
    int side;  // k^2
    std::map<std::pair<int, int>, int> edge_of;  // (min id, max id) -> edge id

    int vid(int i, int j) const { return (i - 1) * side + (j - 1); }
    int edge(int vi, int vj) const {
        auto it = edge_of.find(std::minmax(vi, vj));
        if (it == edge_of.end()) throw std::logic_error("host grid: missing edge");
        return it->second;
    }
};

HostGrid check_host_grid(const RootedSignedGraph& host, int k) {
    if (k < 1) throw std::invalid_argument("find_even_grid_subdivision: k must be at least 1");
    HostGrid hg;
    hg.side = k * k;
    const long n = static_cast<long>(hg.side) * hg.side;
    if (static_cast<long>(host.vertex_count()) != n)
        throw std::invalid_argument("host is not a k^2 x k^2 grid: wrong vertex count");
    for (int v : host.vertices())
        if (v < 0 || v >= n)
            throw std::invalid_argument("host is not a k^2 x k^2 grid: vertex ids must be 0..n-1");
    const long expect_edges = 2L * hg.side * (hg.side - 1);
    if (static_cast<long>(host.edge_count()) != expect_edges)
        throw std::invalid_argument("host is not a k^2 x k^2 grid: wrong edge count");
    for (const auto& [id, e] : host.edges()) {
        int iu = e.u / hg.side, ju = e.u % hg.side;
        int iv = e.v / hg.side, jv = e.v % hg.side;
        if (std::abs(iu - iv) + std::abs(ju - jv) != 1)
            throw std::invalid_argument("host is not a grid: edge joins non-adjacent cells");
        if (!hg.edge_of.emplace(std::minmax(e.u, e.v), id).second)
            throw std::invalid_argument("host is not a grid: parallel edge");
    }
    return hg;
}

int host_parity(const RootedSignedGraph& host, const HostGrid& hg, int vi, int vj) {
    return host.edge(hg.edge(vi, vj)).parity;
}

// Parity of the host cell whose top-left corner is (i, j).
int cell_parity_at(const RootedSignedGraph& host, const HostGrid& hg, int i, int j) {
    int a = hg.vid(i, j), b = hg.vid(i, j + 1), c = hg.vid(i + 1, j + 1), d = hg.vid(i + 1, j);
    return host_parity(host, hg, a, b) ^ host_parity(host, hg, b, c) ^
           host_parity(host, hg, c, d) ^ host_parity(host, hg, d, a);
}

// Vertex coordinates of a straight horizontal/vertical run, inclusive.
void append_run(std::vector<std::pair<int, int>>& out, int r0, int c0, int r1, int c1) {
    int dr = (r1 > r0) - (r1 < r0);
    int dc = (c1 > c0) - (c1 < c0);
    int r = r0, c = c0;
    if (out.empty() || out.back() != std::make_pair(r, c)) out.emplace_back(r, c);
    while (r != r1 || c != c1) {
        r += dr;
        c += dc;
        out.emplace_back(r, c);
    }
}

std::vector<int> coords_to_edges(const HostGrid& hg, const std::vector<std::pair<int, int>>& vs) {
    std::vector<int> ids;
    for (std::size_t i = 1; i < vs.size(); ++i)
        ids.push_back(hg.edge(hg.vid(vs[i - 1].first, vs[i - 1].second),
                              hg.vid(vs[i].first, vs[i].second)));
    return ids;
}

int path_parity(const RootedSignedGraph& host, const std::vector<int>& edge_ids) {
    int p = 0;
    for (int id : edge_ids) p ^= host.edge(id).parity;
    return p;
}

// Deterministic guest shift set making shift(gamma_0) equal the observed path
// parities. Exists exactly when every guest cell maps to an even cycle.
std::set<int> guest_shift_for(const GridGraph& guest,
                              const std::map<int, int>& parity_of_guest_edge) {
    RootedSignedGraph observed;
    for (int v : guest.graph.vertices()) observed.add_vertex(v);
    for (const auto& [id, e] : guest.graph.edges())
        observed.add_edge(id, e.u, e.v, parity_of_guest_edge.at(id));
    RootedSignedGraph zero;
    for (int v : guest.graph.vertices()) zero.add_vertex(v);
    for (const auto& [id, e] : guest.graph.edges()) zero.add_edge(id, e.u, e.v, 0);
    auto shift = shifting_equivalent(observed, zero);
    if (!shift) throw std::logic_error("even-grid construction produced an odd guest cell");
    return *shift;
}

}  // namespace

EvenGridResult find_even_grid_subdivision(const RootedSignedGraph& host, int k) {
    HostGrid hg = check_host_grid(host, k);
    GridGraph guest = make_grid(k);
    auto f = [k](int x) { return (k + 1) * (x - 1) + 1; };

    EvenGridResult out;
    out.used_subgrid = false;
    out.subgrid_corner = {0, 0};

    // The candidate blocks between consecutive anchor rows a,a+1 and anchor
    // columns b-1,b: k x k subgrids with top-left (f(a)+1, f(b-1)+1).
    struct Block {
        int a, b, top, left;
    };
    std::vector<Block> blocks;
    for (int a = 1; a <= k - 1; ++a)
        for (int b = 2; b <= k; ++b)
            blocks.push_back({a, b, f(a) + 1, f(b - 1) + 1});

    // Branch 1: an all-even block is itself the even grid.
    for (const Block& blk : blocks) {
        bool all_even = true;
        for (int i = blk.top; i < blk.top + k - 1 && all_even; ++i)
            for (int j = blk.left; j < blk.left + k - 1 && all_even; ++j)
                all_even = cell_parity_at(host, hg, i, j) == 0;
        if (!all_even) continue;

        out.used_subgrid = true;
        out.subgrid_corner = {blk.top, blk.left};
        std::map<int, int> guest_edge_parity;
        for (int p = 1; p <= k; ++p)
            for (int q = 1; q <= k; ++q)
                out.model.vertex_map[guest.coords.vertex(p, q)] =
                    hg.vid(blk.top + p - 1, blk.left + q - 1);
        for (const auto& [gid, ge] : guest.graph.edges()) {
            auto [pu, qu] = guest.coords.coord(ge.u);
            auto [pv, qv] = guest.coords.coord(ge.v);
            int hu = hg.vid(blk.top + pu - 1, blk.left + qu - 1);
            int hv = hg.vid(blk.top + pv - 1, blk.left + qv - 1);
            out.model.paths[gid] = {hg.edge(hu, hv)};
            guest_edge_parity[gid] = host.edge(hg.edge(hu, hv)).parity;
        }
        out.model.guest_shift_set = guest_shift_for(guest, guest_edge_parity);
        return out;
    }

    // Branch 2: every block has an odd cell; anchor construction.
    for (int p = 1; p <= k; ++p)
        for (int q = 1; q <= k; ++q)
            out.model.vertex_map[guest.coords.vertex(p, q)] = hg.vid(f(p), f(q));

    std::map<int, int> guest_edge_parity;
    auto guest_edge = [&](int p1, int q1, int p2, int q2) {
        int u = guest.coords.vertex(p1, q1);
        int v = guest.coords.vertex(p2, q2);
        for (int id : guest.graph.incident_edges(u))
            if (guest.graph.edge(id).incident(v)) return id;
        throw std::logic_error("guest grid: missing edge");
    };

    // Row edges: straight along anchor rows.
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k - 1; ++b) {
            std::vector<std::pair<int, int>> vs;
            append_run(vs, f(a), f(b), f(a), f(b + 1));
            int gid = guest_edge(a, b, a, b + 1);
            out.model.paths[gid] = coords_to_edges(hg, vs);
            guest_edge_parity[gid] = path_parity(host, out.model.paths[gid]);
        }
    // First-column edges: straight along column 1.
    for (int a = 1; a <= k - 1; ++a) {
        std::vector<std::pair<int, int>> vs;
        append_run(vs, f(a), 1, f(a + 1), 1);
        int gid = guest_edge(a, 1, a + 1, 1);
        out.model.paths[gid] = coords_to_edges(hg, vs);
        guest_edge_parity[gid] = path_parity(host, out.model.paths[gid]);
    }

    // Remaining column edges, routed through an odd cell of their block so
    // that the guest cell closing at (a,b) becomes even.
    for (const Block& blk : blocks) {
        const int a = blk.a, b = blk.b;
        const int rt = blk.top, rb = blk.top + k - 1;
        const int cr = blk.left + k - 1;  // right boundary column = f(b)-1

        // First odd cell of the block, row-major.
        int cr_r = -1, cr_c = -1;
        for (int i = rt; i < rb && cr_r < 0; ++i)
            for (int j = blk.left; j < blk.left + k - 1; ++j)
                if (cell_parity_at(host, hg, i, j) == 1) {
                    cr_r = i;
                    cr_c = j;
                    break;
                }
        if (cr_r < 0) throw std::logic_error("block without odd cell in construction branch");
        const int r = cr_r, c = cr_c;

        // Required parity: the guest cell (a,b-1),(a,b),(a+1,b),(a+1,b-1)
        // must map to an even cycle; three of its sides are already fixed.
        int fixed = guest_edge_parity.at(guest_edge(a, b - 1, a, b)) ^
                    guest_edge_parity.at(guest_edge(a + 1, b - 1, a + 1, b)) ^
                    guest_edge_parity.at(guest_edge(a, b - 1, a + 1, b - 1));
        const int want = fixed;

        // Approach paths from the block's right corners to two cell corners,
        // then two candidate traversals around the odd cell.
        std::vector<std::pair<int, int>> head;  // anchor -> c1
        append_run(head, f(a), f(b), f(a) + 1, f(b));
        append_run(head, f(a) + 1, f(b), rt, cr);  // single step left onto the corner
        std::vector<std::pair<int, int>> approach_a = head;
        append_run(approach_a, rt, cr, rt, c + 1);
        append_run(approach_a, rt, c + 1, r, c + 1);  // ends at p1 = (r, c+1)

        std::vector<std::pair<int, int>> tail_rev;  // c2 -> anchor, built forward later
        std::vector<std::pair<int, int>> approach_b;  // from c2 toward p2
        std::vector<std::vector<std::pair<int, int>>> ways;
        if (r + 1 < rb) {
            append_run(approach_b, rb, cr, rb, c);
            append_run(approach_b, rb, c, r + 1, c);  // ends at p2 = (r+1, c)
            ways.push_back({{r, c + 1}, {r, c}, {r + 1, c}});
            ways.push_back({{r, c + 1}, {r + 1, c + 1}, {r + 1, c}});
        } else {
            append_run(approach_b, rb, cr, rb, c + 1);  // ends at p2 = (r+1, c+1)
            ways.push_back({{r, c + 1}, {r + 1, c + 1}});
            ways.push_back({{r, c + 1}, {r, c}, {r + 1, c}, {r + 1, c + 1}});
        }

        bool placed = false;
        for (const auto& way : ways) {
            std::vector<std::pair<int, int>> vs = approach_a;
            for (std::size_t i = 1; i < way.size(); ++i) vs.push_back(way[i]);
            for (auto it = approach_b.rbegin(); it != approach_b.rend(); ++it)
                if (vs.back() != *it) vs.push_back(*it);
            append_run(vs, rb, cr, f(a + 1) - 1, f(b));
            append_run(vs, f(a + 1) - 1, f(b), f(a + 1), f(b));

            std::vector<int> ids = coords_to_edges(hg, vs);
            if (path_parity(host, ids) != want) continue;
            std::set<std::pair<int, int>> distinct(vs.begin(), vs.end());
            if (distinct.size() != vs.size())
                throw std::logic_error("routed path repeats a vertex");
            int gid = guest_edge(a, b, a + 1, b);
            out.model.paths[gid] = std::move(ids);
            guest_edge_parity[gid] = want;
            placed = true;
            break;
        }
        if (!placed) throw std::logic_error("no routing parity matched; odd cell expected");
    }

    out.model.guest_shift_set = guest_shift_for(guest, guest_edge_parity);
    return out;
}

MinorModel find_even_rooted_grid_minor(const RootedSignedGraph& host, int k) {
    HostGrid hg = check_host_grid(host, k);
    // Roots must be exactly the host's first row.
    std::set<int> first_row;
    for (int j = 1; j <= hg.side; ++j) first_row.insert(hg.vid(1, j));
    if (host.roots() != first_row)
        throw std::invalid_argument("find_even_rooted_grid_minor: host roots are not the first row");

    EvenGridResult sub = find_even_grid_subdivision(host, k);
    GridGraph guest = make_rooted_grid(k);

    MinorModel m;
    for (const auto& [gv, hv] : sub.model.vertex_map) m.trees[gv] = HostTree{{hv}, {}};

    // Fold each path into the tree of its guest edge's first endpoint; the
    // last path edge becomes the mapped edge.
    for (const auto& [gid, ids] : sub.model.paths) {
        const Edge& ge = guest.graph.edge(gid);
        int from = sub.model.vertex_map.at(ge.u);
        std::vector<int> vs = path_vertices(host, ids, from);
        HostTree& tu = m.trees[ge.u];
        for (std::size_t i = 1; i + 1 < vs.size(); ++i) tu.vertices.insert(vs[i]);
        for (std::size_t i = 0; i + 1 < ids.size(); ++i) tu.edges.insert(ids[i]);
        m.edge_map[gid] = ids.back();
    }

    // If the found grid sits below the first row, extend each first-row tree
    // with a vertical path up to a host root; the anchor construction already
    // lands on row 1.
    if (sub.used_subgrid && sub.subgrid_corner.first > 1) {
        int top = sub.subgrid_corner.first;
        int left = sub.subgrid_corner.second;
        for (int q = 1; q <= k; ++q) {
            int col = left + q - 1;
            HostTree& t = m.trees[guest.coords.vertex(1, q)];
            for (int i = 1; i < top; ++i) t.vertices.insert(hg.vid(i, col));
            for (int i = 1; i < top; ++i) t.edges.insert(hg.edge(hg.vid(i, col), hg.vid(i + 1, col)));
        }
    }

    // Shift set: zero out every tree, then flip whole trees of shifted guest
    // vertices so mapped edges land on the all-even guest parities.
    std::set<int> shift;
    for (auto& [gv, tree] : m.trees) {
        int root = sub.model.vertex_map.at(gv);
        std::map<int, int> offset{{root, 0}};
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int id : tree.edges) {
                const Edge& e = host.edge(id);
                if (!e.incident(v)) continue;
                int w = e.other(v);
                if (offset.count(w)) continue;
                offset[w] = offset[v] ^ e.parity;
                queue.push_back(w);
            }
        }
        bool flip = sub.model.guest_shift_set.count(gv) > 0;
        for (int v : tree.vertices) {
            int s = offset.at(v) ^ (flip ? 1 : 0);
            if (s) shift.insert(v);
        }
    }
    m.shift_set = std::move(shift);
    return m;
}

}  // namespace tdm
