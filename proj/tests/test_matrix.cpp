#include "tdmtw/matrix.hpp"

#include "tdmtw/ocp.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <array>

using namespace tdm;
using tdmtest::Rng;

namespace {

TwoNonzeroMatrix from_rows(int n, const std::vector<std::array<long, 4>>& rows) {
    TwoNonzeroMatrix a(static_cast<int>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        a.set_row(static_cast<int>(i), static_cast<int>(rows[i][0]), Int(rows[i][1]),
                  static_cast<int>(rows[i][2]), Int(rows[i][3]));
    return a;
}

// Row-by-row reference encoding, independent of to_rooted_signed_graph.
RootedSignedGraph reference_encoding(const TwoNonzeroMatrix& a) {
    RootedSignedGraph g;
    for (int j = 0; j < a.cols(); ++j) g.add_vertex(j);
    for (int i = 0; i < a.rows(); ++i) {
        int cols[2] = {-1, -1};
        int pos = 0;
        for (int j = 0; j < a.cols(); ++j)
            if (a.entry(i, j) != 0) cols[pos++] = j;
        Int x = a.entry(i, cols[0]);
        Int y = a.entry(i, cols[1]);
        g.add_edge(i, cols[0], cols[1], ((x > 0) == (y > 0)) ? 1 : 0);
    }
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Int v = abs(a.entry(i, j));
            if (v >= 2) g.set_root(j);
        }
    return g;
}

}  // namespace

TEST_CASE("matrix invariants") {
    TwoNonzeroMatrix a(1, 3);
    CHECK_THROWS(a.set_row(0, 1, 0, 2, 1));  // zero coefficient
    CHECK_THROWS(a.set_row(0, 1, 2, 1, 1));  // same column twice
    CHECK_THROWS(a.set_row(0, 0, 1, 5, 1));  // out of range
    a.set_row(0, 2, -3, 0, 2);
    CHECK(a.entry(0, 0) == 2);
    CHECK(a.entry(0, 2) == -3);
    CHECK(a.entry(0, 1) == 0);
    CHECK(a.max_abs_entry() == 3);
}

TEST_CASE("encoding single rows") {
    // Different signs give an even edge, equal signs an odd edge.
    RootedSignedGraph even = to_rooted_signed_graph(from_rows(2, {{0, 1, 1, -1}}));
    CHECK(even.edge(0).parity == 0);
    CHECK(even.roots().empty());

    RootedSignedGraph odd = to_rooted_signed_graph(from_rows(2, {{0, 1, 1, 1}}));
    CHECK(odd.edge(0).parity == 1);
    CHECK(odd.roots().empty());
}

TEST_CASE("encoding marks large-entry columns as roots") {
    TwoNonzeroMatrix a = from_rows(2, {{0, 2, 1, 1}, {0, -1, 1, 1}});
    RootedSignedGraph g = to_rooted_signed_graph(a);
    CHECK(g.edge(0).parity == 1);
    CHECK(g.edge(1).parity == 0);
    CHECK(g.roots() == std::set<int>{0});
    CHECK(g == reference_encoding(a));
}

TEST_CASE("encoding matches the reference on random matrices") {
    Rng rng(9001);
    for (int trial = 0; trial < 40; ++trial) {
        TwoNonzeroMatrix a = tdmtest::random_matrix(rng, tdmtest::rand_int(rng, 1, 8),
                                                    tdmtest::rand_int(rng, 2, 7), 3);
        CHECK(to_rooted_signed_graph(a) == reference_encoding(a));
    }
}

TEST_CASE("column negation acts like shifting at the vertex") {
    Rng rng(9002);
    for (int trial = 0; trial < 30; ++trial) {
        int n = tdmtest::rand_int(rng, 2, 6);
        TwoNonzeroMatrix a = tdmtest::random_matrix(rng, tdmtest::rand_int(rng, 1, 8), n, 3);
        int col = tdmtest::rand_int(rng, 0, n - 1);
        TwoNonzeroMatrix negated(a.rows(), n);
        for (int i = 0; i < a.rows(); ++i) {
            const MatrixRow& r = a.row(i);
            negated.set_row(i, r.col_a, r.col_a == col ? Int(-r.coef_a) : r.coef_a, r.col_b,
                            r.col_b == col ? Int(-r.coef_b) : r.coef_b);
        }
        CHECK(to_rooted_signed_graph(negated) == shift_at(to_rooted_signed_graph(a), col));
    }
}

TEST_CASE("max_abs_subdeterminant on pinned examples") {
    CHECK(max_abs_subdeterminant(from_rows(2, {{0, 1, 1, -1}})) == 1);
    CHECK(max_abs_subdeterminant(from_rows(2, {{0, 2, 1, 1}})) == 2);
    // det [[1,1],[-1,1]] = 2, frozen by full enumeration over submatrices.
    CHECK(max_abs_subdeterminant(from_rows(2, {{0, 1, 1, 1}, {0, -1, 1, 1}})) == 2);
}

TEST_CASE("bareiss and cofactor determinants agree over all submatrices") {
    Rng rng(9003);
    for (int trial = 0; trial < 15; ++trial) {
        int m = tdmtest::rand_int(rng, 1, 5);
        int n = tdmtest::rand_int(rng, 2, 5);
        TwoNonzeroMatrix a = tdmtest::random_matrix(rng, m, n, 3);
        // Independent route: enumerate submatrices with cofactor expansion.
        Int best = 0;
        int r = std::min(m, n);
        std::vector<int> rows, cols;
        auto rec_cols = [&](auto&& self, int size, int start) -> void {
            if (static_cast<int>(cols.size()) == size) {
                std::vector<std::vector<Int>> sub;
                for (int i : rows) {
                    std::vector<Int> row;
                    for (int j : cols) row.push_back(a.entry(i, j));
                    sub.push_back(std::move(row));
                }
                Int d = abs(tdmtest::cofactor_det(sub));
                if (d > best) best = d;
                return;
            }
            for (int j = start; j < n; ++j) {
                cols.push_back(j);
                self(self, size, j + 1);
                cols.pop_back();
            }
        };
        auto rec_rows = [&](auto&& self, int size, int start) -> void {
            if (static_cast<int>(rows.size()) == size) {
                rec_cols(rec_cols, size, 0);
                return;
            }
            for (int i = start; i < m; ++i) {
                rows.push_back(i);
                self(self, size, i + 1);
                rows.pop_back();
            }
        };
        for (int size = 1; size <= r; ++size) rec_rows(rec_rows, size, 0);
        CHECK(max_abs_subdeterminant(a) == best);
    }
}

TEST_CASE("size guard on subdeterminant enumeration") {
    Rng rng(9004);
    TwoNonzeroMatrix big = tdmtest::random_matrix(rng, 9, 9, 1);
    CHECK_THROWS(max_abs_subdeterminant(big));
}

TEST_CASE("determinant bounds: totally unimodular network matrix") {
    // Two +-1 entries of opposite signs per row: all-even graph, no roots.
    TwoNonzeroMatrix a = from_rows(3, {{0, 1, 1, -1}, {1, 1, 2, -1}, {0, 1, 2, -1}});
    DmodReport rep = check_dmod_bounds(a);
    CHECK(rep.delta == 1);
    CHECK(rep.root_count == 0);
    CHECK(rep.ocp == 0);
    CHECK(rep.max_entry == 1);
    CHECK(rep.all_pass());
}

TEST_CASE("determinant bounds: single row with an entry of 2") {
    DmodReport rep = check_dmod_bounds(from_rows(2, {{0, 2, 1, 1}}));
    CHECK(rep.delta == 2);
    CHECK(rep.root_count == 1);
    CHECK(rep.ocp == 0);
    CHECK(rep.converse_bound == 2);  // 2^0 * 2^1
    CHECK(rep.all_pass());
}

TEST_CASE("determinant bounds hold on random matrices") {
    Rng rng(9005);
    for (int trial = 0; trial < 30; ++trial) {
        TwoNonzeroMatrix a = tdmtest::random_matrix(rng, 5, 5, 3);
        DmodReport rep = check_dmod_bounds(a);
        CAPTURE(trial);
        CHECK(rep.all_pass());
    }
}
