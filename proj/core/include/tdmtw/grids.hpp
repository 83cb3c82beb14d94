#pragma once

#include "tdmtw/models.hpp"
#include "tdmtw/signed_graph.hpp"

#include <map>
#include <utility>

namespace tdm {

/// Bijective map between vertex ids and planar coordinates. Grids use
/// (row, column) with 1-based indices; cylindrical grids use (ring, angular
/// position) with 1-based rings and 0-based positions.
class GridCoords {
public:
    void add(int v, int a, int b);
    std::pair<int, int> coord(int v) const;
    int vertex(int a, int b) const;
    bool has_coord(int a, int b) const;
    const std::map<int, std::pair<int, int>>& all() const { return of_vertex_; }

private:
    std::map<int, std::pair<int, int>> of_vertex_;
    std::map<std::pair<int, int>, int> of_coord_;
};

struct GridGraph {
    RootedSignedGraph graph;
    GridCoords coords;
};

/// k x k grid, all edges even, no roots. Vertex (i,j) has id (i-1)*k+(j-1).
GridGraph make_grid(int k);

/// k x k grid, all even, rooted at the first row.
GridGraph make_rooted_grid(int k);

/// Cylindrical (n x m)-grid: n concentric rings of m vertices, ring edges
/// plus spokes between consecutive rings. All even, no roots. Requires
/// m >= 3 (smaller rings would need loops or parallel edges).
GridGraph make_cylindrical_grid(int n, int m);

/// Parity handle of order k: the cylindrical (k x 4k)-grid plus the k chords
/// x_i x_{2k-i+1} over X = every other outer-ring vertex in clockwise order,
/// with every edge odd and no roots. The outer ring is ring 1; x_i sits at
/// angular position 2(i-1).
GridGraph make_parity_handle(int k);

/// Parity vortex of order k: same base, chords x_{2i-1} x_{2i}.
GridGraph make_parity_vortex(int k);

/// Result of the even-grid search inside an arbitrarily signed k^2 x k^2
/// grid: a subdivision model of the all-even k x k grid. Either some k x k
/// subgrid between anchor rows/columns already has all cells even (taken
/// directly), or the full anchor construction routes each remaining column
/// edge through an odd cell so that every guest cell maps to an even cycle.
struct EvenGridResult {
    SubdivisionModel model;
    bool used_subgrid;               // true when an all-even subgrid was found
    std::pair<int, int> subgrid_corner;  // top-left host coord when used_subgrid
};

/// host must be structurally the k^2 x k^2 grid in make_grid id convention;
/// parities are arbitrary, roots ignored. The returned model verifies against
/// guest make_grid(k) and maps every guest cell to an even host cycle.
EvenGridResult find_even_grid_subdivision(const RootedSignedGraph& host, int k);

/// Rooted variant: host must additionally be rooted at its first row. Returns
/// a rooted minor model of the all-even k x k grid rooted at its first row,
/// extending the subdivision with disjoint vertical paths to the host's first
/// row when the found grid sits lower.
MinorModel find_even_rooted_grid_minor(const RootedSignedGraph& host, int k);

/// All cells (4-cycles) of a grid-shaped graph as edge-id quadruples, used by
/// checkers; coords must describe g.
std::vector<std::vector<int>> grid_cells(const RootedSignedGraph& g, const GridCoords& coords,
                                         int rows, int cols);

}  // namespace tdm
