#include "tdmtw/matrix.hpp"

#include "tdmtw/ocp.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace tdm {

void TwoNonzeroMatrix::set_row(int row, int col_a, Int coef_a, int col_b, Int coef_b) {
    if (row != static_cast<int>(data_.size()))
        throw std::invalid_argument("rows must be set in order");
    if (row >= rows_) throw std::invalid_argument("row index out of range");
    if (col_a == col_b) throw std::invalid_argument("row must touch two distinct columns");
    if (col_a < 0 || col_a >= cols_ || col_b < 0 || col_b >= cols_)
        throw std::invalid_argument("column index out of range");
    if (coef_a == 0 || coef_b == 0)
        throw std::invalid_argument("row must have exactly two nonzero entries");
    if (col_a > col_b) {
        std::swap(col_a, col_b);
        std::swap(coef_a, coef_b);
    }
    data_.push_back(MatrixRow{col_a, std::move(coef_a), col_b, std::move(coef_b)});
}

Int TwoNonzeroMatrix::entry(int i, int j) const {
    const MatrixRow& r = data_.at(i);
    if (j == r.col_a) return r.coef_a;
    if (j == r.col_b) return r.coef_b;
    return 0;
}

Int TwoNonzeroMatrix::max_abs_entry() const {
    Int best = 0;
    for (const MatrixRow& r : data_) {
        best = std::max(best, Int(abs(r.coef_a)));
        best = std::max(best, Int(abs(r.coef_b)));
    }
    return best;
}

bool TwoNonzeroMatrix::operator==(const TwoNonzeroMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || data_.size() != o.data_.size()) return false;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        const MatrixRow& x = data_[i];
        const MatrixRow& y = o.data_[i];
        if (x.col_a != y.col_a || x.col_b != y.col_b || x.coef_a != y.coef_a ||
            x.coef_b != y.coef_b)
            return false;
    }
    return true;
}

void IPInstance::check() const {
    if (!a.complete()) throw std::invalid_argument("matrix rows incomplete");
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("b has wrong size");
    if (static_cast<int>(w.size()) != a.cols()) throw std::invalid_argument("w has wrong size");
    if (static_cast<int>(lower.size()) != a.cols() || static_cast<int>(upper.size()) != a.cols())
        throw std::invalid_argument("bound vectors have wrong size");
    for (int j = 0; j < a.cols(); ++j)
        if (lower[j] > upper[j])
            throw std::invalid_argument("empty box: l > u at variable " + std::to_string(j));
}

Int IPInstance::domain_diameter() const {
    Int d = 0;
    for (int j = 0; j < a.cols(); ++j) d = std::max(d, Int(upper[j] - lower[j]));
    return d;
}

RootedSignedGraph to_rooted_signed_graph(const TwoNonzeroMatrix& a) {
    if (!a.complete()) throw std::invalid_argument("matrix rows incomplete");
    RootedSignedGraph g;
    for (int j = 0; j < a.cols(); ++j) g.add_vertex(j);
    for (int i = 0; i < a.rows(); ++i) {
        const MatrixRow& r = a.row(i);
        int same_sign = (sgn(r.coef_a) == sgn(r.coef_b)) ? 1 : 0;
        g.add_edge(i, r.col_a, r.col_b, same_sign);
    }
    for (int i = 0; i < a.rows(); ++i) {
        const MatrixRow& r = a.row(i);
        if (abs(r.coef_a) > 1) g.set_root(r.col_a);
        if (abs(r.coef_b) > 1) g.set_root(r.col_b);
    }
    return g;
}

namespace {

// Exact determinant via fraction-free Gaussian elimination.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] /= prev;  // exact by construction
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Next r-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
    const int r = static_cast<int>(c.size());
    for (int i = r - 1; i >= 0; --i) {
        if (c[i] < n - (r - i)) {
            ++c[i];
            for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

int thread_count_from_env() {
    const char* env = std::getenv("TDMTW_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

}  // namespace

Int max_abs_subdeterminant(const TwoNonzeroMatrix& a) {
    if (!a.complete()) throw std::invalid_argument("matrix rows incomplete");
    const int m = a.rows();
    const int n = a.cols();
    if (std::min(m, n) > 8)
        throw std::invalid_argument(
            "max_abs_subdeterminant: min(m,n) > 8; exact enumeration is infeasible, sample "
            "submatrices instead");

    // Collect all row subsets of each size, split across workers; each worker
    // enumerates all column subsets per row subset. Deterministic: the result
    // is a max, independent of partitioning.
    Int best = 0;
    for (int r = 1; r <= std::min(m, n); ++r) {
        std::vector<std::vector<int>> row_sets;
        std::vector<int> rows(r);
        for (int i = 0; i < r; ++i) rows[i] = i;
        do {
            row_sets.push_back(rows);
        } while (next_combination(rows, m));

        auto scan = [&](std::size_t begin, std::size_t end, Int& local_best) {
            std::vector<int> cols(r);
            for (std::size_t idx = begin; idx < end; ++idx) {
                const std::vector<int>& rs = row_sets[idx];
                for (int i = 0; i < r; ++i) cols[i] = i;
                do {
                    std::vector<std::vector<Int>> sub(r, std::vector<Int>(r));
                    for (int i = 0; i < r; ++i)
                        for (int j = 0; j < r; ++j) sub[i][j] = a.entry(rs[i], cols[j]);
                    Int d = abs(bareiss_det(std::move(sub)));
                    if (d > local_best) local_best = d;
                } while (next_combination(cols, n));
            }
        };

        int workers = std::min<int>(thread_count_from_env(), static_cast<int>(row_sets.size()));
        if (workers <= 1) {
            scan(0, row_sets.size(), best);
        } else {
            std::vector<Int> partial(workers, 0);
            std::vector<std::thread> pool;
            std::size_t chunk = (row_sets.size() + workers - 1) / workers;
            for (int t = 0; t < workers; ++t) {
                std::size_t lo = t * chunk;
                std::size_t hi = std::min(row_sets.size(), lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back([&, lo, hi, t] { scan(lo, hi, partial[t]); });
            }
            for (auto& th : pool) th.join();
            for (const Int& p : partial) best = std::max(best, p);
        }
    }
    return best;
}

DmodReport check_dmod_bounds(const TwoNonzeroMatrix& a) {
    if (a.rows() < 1) throw std::invalid_argument("check_dmod_bounds: matrix has no rows");
    DmodReport rep;
    rep.delta = max_abs_subdeterminant(a);
    rep.max_entry = a.max_abs_entry();
    RootedSignedGraph g = to_rooted_signed_graph(a);
    rep.root_count = static_cast<int>(g.roots().size());
    rep.ocp = ocp_exact(g);

    Int two_pow_roots = 1;
    mpz_mul_2exp(two_pow_roots.get_mpz_t(), Int(1).get_mpz_t(), rep.root_count);
    Int two_pow_ocp = 1;
    mpz_mul_2exp(two_pow_ocp.get_mpz_t(), Int(1).get_mpz_t(), rep.ocp);
    Int entry_pow_roots;
    mpz_pow_ui(entry_pow_roots.get_mpz_t(), rep.max_entry.get_mpz_t(), rep.root_count);
    rep.converse_bound = two_pow_ocp * entry_pow_roots;

    rep.entry_le_delta = rep.max_entry <= rep.delta;
    rep.roots_le_2log = two_pow_roots <= rep.delta * rep.delta;
    rep.ocp_le_log = two_pow_ocp <= rep.delta;
    rep.delta_le_converse = rep.delta <= rep.converse_bound;
    return rep;
}

}  // namespace tdm
