#pragma once

#include "tdmtw/ints.hpp"
#include "tdmtw/signed_graph.hpp"

#include <vector>

namespace tdm {

/// Sparse row with exactly two nonzero entries.
struct MatrixRow {
    int col_a;
    Int coef_a;
    int col_b;
    Int coef_b;
};

/// Integer matrix with exactly two nonzero entries per row. Zero columns are
/// permitted (isolated variables), zero rows are not.
class TwoNonzeroMatrix {
public:
    TwoNonzeroMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
        data_.reserve(rows);
    }

    /// Append the next row. Both coefficients must be nonzero and the columns
    /// distinct and in range.
    void set_row(int row, int col_a, Int coef_a, int col_b, Int coef_b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const MatrixRow& row(int i) const { return data_.at(i); }
    const std::vector<MatrixRow>& row_data() const { return data_; }
    bool complete() const { return static_cast<int>(data_.size()) == rows_; }

    Int entry(int i, int j) const;
    /// Largest absolute value among all entries (0 for an empty matrix).
    Int max_abs_entry() const;

    bool operator==(const TwoNonzeroMatrix& o) const;

private:
    int rows_;
    int cols_;
    std::vector<MatrixRow> data_;
};

/// Bounded-box integer program max{w^T x : Ax <= b, l <= x <= u, x integer}.
struct IPInstance {
    TwoNonzeroMatrix a;
    std::vector<Int> b;       // size m
    std::vector<Int> w;       // size n
    std::vector<Int> lower;   // size n
    std::vector<Int> upper;   // size n

    /// Throws unless dimensions are consistent, rows are complete and
    /// lower <= upper componentwise.
    void check() const;
    /// max_v (upper_v - lower_v); 0 for n = 0.
    Int domain_diameter() const;
};

/// Rooted signed graph of a matrix: one vertex per column, one edge per row
/// joining its two nonzero columns, parity 1 when the two entries share a
/// sign, and roots at columns holding an entry outside {-1,0,1}.
RootedSignedGraph to_rooted_signed_graph(const TwoNonzeroMatrix& a);

/// Exact maximum |det| over all square submatrices, by enumeration with
/// fraction-free (Bareiss) integer determinants. Guarded to min(m,n) <= 8;
/// honors the TDMTW_THREADS environment variable for the outer enumeration,
/// with a deterministic max-reduction.
Int max_abs_subdeterminant(const TwoNonzeroMatrix& a);

/// The two directions of the determinant/odd-cycle-packing equivalence,
/// evaluated on one matrix with exact integer arithmetic.
struct DmodReport {
    Int delta;             // max |subdeterminant|
    Int max_entry;         // ||A||_inf
    int root_count;        // |K|
    int ocp;               // OCP(G, gamma)
    Int converse_bound;    // 2^ocp * ||A||_inf^|K|
    bool entry_le_delta;       // ||A||_inf <= delta
    bool roots_le_2log;        // 2^|K| <= delta^2
    bool ocp_le_log;           // 2^ocp <= delta
    bool delta_le_converse;    // delta <= converse_bound
    bool all_pass() const {
        return entry_le_delta && roots_le_2log && ocp_le_log && delta_le_converse;
    }
};

DmodReport check_dmod_bounds(const TwoNonzeroMatrix& a);

}  // namespace tdm
