#pragma once

#include "tdmtw/decomposition.hpp"
#include "tdmtw/ints.hpp"
#include "tdmtw/matrix.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace tdm {

/// Variable (= graph vertex = matrix column) to value.
using Assignment = std::map<int, Int>;

enum class SolveStatus { Optimal, Infeasible };

struct SolveResult {
    SolveStatus status;
    Int objective;   // valid when Optimal
    Assignment x;    // feasible witness when Optimal

    bool optimal() const { return status == SolveStatus::Optimal; }
};

/// Dynamic-programming tables, exposed for inspection. Keys are offset
/// vectors (value - lower bound) over the listed variables in sorted order.
/// p[t] ranges over the non-free part of t's bag; s[t'] is keyed by the
/// restriction to the adhesion between t' and its parent.
struct DPTables {
    std::map<int, std::vector<int>> bag_vars;        // node -> sorted vars of bag \ L
    std::map<int, std::map<std::vector<int>, ExtInt>> p;
    std::map<int, std::vector<int>> adhesion_vars;   // child -> sorted adhesion vars
    std::map<int, std::map<std::vector<int>, ExtInt>> s;
    int root = -1;
};

/// Verify bounds and every row of Ax <= b.
bool check_witness(const IPInstance& inst, const Assignment& x);

/// Exact optimum of the instance restricted to the variables of `bag`, with
/// `fixed` pinning the non-free part. Only rows with both endpoints inside
/// the bag are enforced. Depth-first enumeration over free variables with row
/// checks once both endpoints are set and interval pruning when one is.
/// Returns -inf when no extension is feasible. The objective covers all bag
/// variables, fixed ones included.
ExtInt solve_leaf(const IPInstance& inst, const std::set<int>& bag, const std::set<int>& free_vars,
                  const Assignment& fixed);

/// Same, also returning the lexicographically smallest optimal assignment of
/// the free variables (nullopt when infeasible).
std::optional<std::pair<Int, Assignment>> solve_leaf_witness(const IPInstance& inst,
                                                             const std::set<int>& bag,
                                                             const std::set<int>& free_vars,
                                                             const Assignment& fixed);

/// Solve the program by dynamic programming over a valid K-free decomposition
/// of the matrix's rooted signed graph: leaves via solve_leaf, internal nodes
/// by combining child tables keyed on adhesions, maximum over the root table.
/// Witness reconstructed by re-descending with lexicographically smallest
/// argmax choices. The optional tables output captures p and s.
SolveResult solve_dp(const IPInstance& inst, const KFreeDecomposition& kfree,
                     DPTables* tables = nullptr);

/// Exhaustive enumeration over the whole box; exact optimum with the
/// lexicographically smallest witness. Guarded to 10^7 box points.
SolveResult brute_force_oracle(const IPInstance& inst);

/// Line-oriented result record (`status`, `objective`, `x <var> <value>`).
std::string format_result(const SolveResult& r);

}  // namespace tdm
