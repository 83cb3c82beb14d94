#include "tdmtw/ip_solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tdm {

namespace {

constexpr long kBoxGuard = 10'000'000L;

struct RowRef {
    int idx;     // row index in the matrix
    int u, v;    // columns, u < v
    Int cu, cv;  // coefficients of u, v
    Int rhs;
};

std::vector<RowRef> rows_inside(const IPInstance& inst, const std::set<int>& bag) {
    std::vector<RowRef> out;
    for (int i = 0; i < inst.a.rows(); ++i) {
        const MatrixRow& r = inst.a.row(i);
        if (bag.count(r.col_a) && bag.count(r.col_b))
            out.push_back(RowRef{i, r.col_a, r.col_b, r.coef_a, r.coef_b, inst.b[i]});
    }
    return out;
}

// Feasible interval for `b*y <= rhs` intersected with [lo, hi]; empty -> false.
bool clamp_partner(const Int& coef, const Int& rhs, Int& lo, Int& hi) {
    if (coef > 0) {
        // y <= floor(rhs / coef)
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rhs.get_mpz_t(), coef.get_mpz_t());
        hi = std::min(hi, q);
    } else {
        // y >= ceil(rhs / coef), coef < 0
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), rhs.get_mpz_t(), coef.get_mpz_t());
        lo = std::max(lo, q);
    }
    return lo <= hi;
}

struct LeafSearch {
    const IPInstance& inst;
    std::vector<int> free_order;
    std::vector<RowRef> rows;
    Assignment current;
    Int partial_obj = 0;
    bool found = false;
    Int best_obj = 0;
    Assignment best_free;

    // rows_by_var[i]: rows whose later endpoint (in assignment order) is
    // free_order[i] -- checked exactly when that variable gets a value.
    std::vector<std::vector<const RowRef*>> check_at;
    // pruning rows: both endpoints free, indexed by the earlier endpoint.
    std::vector<std::vector<const RowRef*>> prune_at;

    bool assigned(int v) const { return current.count(v) > 0; }

    void dfs(std::size_t depth) {
        if (depth == free_order.size()) {
            if (!found || partial_obj > best_obj) {
                found = true;
                best_obj = partial_obj;
                best_free.clear();
                for (int v : free_order) best_free[v] = current.at(v);
            }
            return;
        }
        int var = free_order[depth];
        Int lo = inst.lower[var];
        Int hi = inst.upper[var];
        // Interval from rows whose other endpoint is already set.
        for (const RowRef* r : check_at[depth]) {
            int other = r->u == var ? r->v : r->u;
            const Int& cv = r->u == var ? r->cu : r->cv;
            const Int& co = r->u == var ? r->cv : r->cu;
            if (!clamp_partner(cv, Int(r->rhs - co * current.at(other)), lo, hi)) return;
        }
        for (Int val = lo; val <= hi; ++val) {
            current[var] = val;
            partial_obj += inst.w[var] * val;
            bool ok = true;
            // One-endpoint-set pruning for rows pointing at later variables.
            for (const RowRef* r : prune_at[depth]) {
                int other = r->u == var ? r->v : r->u;
                const Int& cv = r->u == var ? r->cu : r->cv;
                const Int& co = r->u == var ? r->cv : r->cu;
                Int plo = inst.lower[other], phi = inst.upper[other];
                if (!clamp_partner(co, Int(r->rhs - cv * val), plo, phi)) {
                    ok = false;
                    break;
                }
            }
            if (ok) dfs(depth + 1);
            partial_obj -= inst.w[var] * val;
            current.erase(var);
        }
    }
};

}  // namespace

bool check_witness(const IPInstance& inst, const Assignment& x) {
    inst.check();
    if (static_cast<int>(x.size()) != inst.a.cols()) return false;
    for (int j = 0; j < inst.a.cols(); ++j) {
        auto it = x.find(j);
        if (it == x.end()) return false;
        if (it->second < inst.lower[j] || it->second > inst.upper[j]) return false;
    }
    for (int i = 0; i < inst.a.rows(); ++i) {
        const MatrixRow& r = inst.a.row(i);
        if (r.coef_a * x.at(r.col_a) + r.coef_b * x.at(r.col_b) > inst.b[i]) return false;
    }
    return true;
}

std::optional<std::pair<Int, Assignment>> solve_leaf_witness(const IPInstance& inst,
                                                             const std::set<int>& bag,
                                                             const std::set<int>& free_vars,
                                                             const Assignment& fixed) {
    inst.check();
    for (int v : bag)
        if (v < 0 || v >= inst.a.cols())
            throw std::invalid_argument("solve_leaf: bag variable out of range");
    for (int v : free_vars)
        if (!bag.count(v)) throw std::invalid_argument("solve_leaf: free variable outside the bag");
    Int fixed_obj = 0;
    for (int v : bag) {
        if (free_vars.count(v)) continue;
        auto it = fixed.find(v);
        if (it == fixed.end())
            throw std::invalid_argument("solve_leaf: unfixed non-free bag variable");
        if (it->second < inst.lower[v] || it->second > inst.upper[v]) return std::nullopt;
        fixed_obj += inst.w[v] * it->second;
    }

    LeafSearch search{inst, {}, rows_inside(inst, bag), {}, 0, false, 0, {}, {}, {}};
    for (int v : bag)
        if (free_vars.count(v)) search.free_order.push_back(v);
    std::sort(search.free_order.begin(), search.free_order.end());

    // Rows with both endpoints fixed are checked once, up front.
    std::map<int, std::size_t> depth_of;
    for (std::size_t i = 0; i < search.free_order.size(); ++i) depth_of[search.free_order[i]] = i;
    search.check_at.resize(search.free_order.size());
    search.prune_at.resize(search.free_order.size());
    for (const RowRef& r : search.rows) {
        bool u_free = free_vars.count(r.u) > 0;
        bool v_free = free_vars.count(r.v) > 0;
        if (!u_free && !v_free) {
            if (r.cu * fixed.at(r.u) + r.cv * fixed.at(r.v) > r.rhs) return std::nullopt;
        } else if (u_free && v_free) {
            std::size_t du = depth_of[r.u], dv = depth_of[r.v];
            search.check_at[std::max(du, dv)].push_back(&r);
            search.prune_at[std::min(du, dv)].push_back(&r);
        } else {
            int free_end = u_free ? r.u : r.v;
            search.check_at[depth_of[free_end]].push_back(&r);
            search.current[u_free ? r.v : r.u] = fixed.at(u_free ? r.v : r.u);
        }
    }
    search.dfs(0);
    if (!search.found) return std::nullopt;
    return std::make_pair(Int(fixed_obj + search.best_obj), search.best_free);
}

ExtInt solve_leaf(const IPInstance& inst, const std::set<int>& bag, const std::set<int>& free_vars,
                  const Assignment& fixed) {
    auto r = solve_leaf_witness(inst, bag, free_vars, fixed);
    return r ? ExtInt::of(r->first) : ExtInt::neg_inf();
}

namespace {

// Mixed-radix enumeration state over sorted variables.
struct BagEnum {
    std::vector<int> vars;
    std::vector<long> radix;

    long size() const {
        long total = 1;
        for (long r : radix) {
            if (total > kBoxGuard / std::max(r, 1L))
                throw std::runtime_error("bag enumeration exceeds the search guard");
            total *= r;
        }
        return total;
    }
    std::vector<int> first() const { return std::vector<int>(vars.size(), 0); }
    bool next(std::vector<int>& key) const {
        for (int i = static_cast<int>(key.size()) - 1; i >= 0; --i) {
            if (key[i] + 1 < radix[i]) {
                ++key[i];
                std::fill(key.begin() + i + 1, key.end(), 0);
                return true;
            }
        }
        return false;
    }
};

BagEnum make_enum(const IPInstance& inst, const std::vector<int>& vars) {
    BagEnum e;
    e.vars = vars;
    for (int v : vars) {
        Int span = inst.upper[v] - inst.lower[v] + 1;
        if (span > kBoxGuard) throw std::runtime_error("variable domain exceeds the search guard");
        e.radix.push_back(span.get_si());
    }
    e.size();  // guard
    return e;
}

Assignment to_assignment(const IPInstance& inst, const std::vector<int>& vars,
                         const std::vector<int>& key) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = inst.lower[vars[i]] + key[i];
    return a;
}

}  // namespace

SolveResult solve_dp(const IPInstance& inst, const KFreeDecomposition& kfree, DPTables* tables) {
    inst.check();
    RootedSignedGraph g = to_rooted_signed_graph(inst.a);
    {
        auto violations = validate(kfree, g);
        if (!violations.empty())
            throw std::invalid_argument("solve_dp: invalid K-free decomposition: " +
                                        violations.front());
    }

    // Working copy of the tree; a single-edge tree gets its edge subdivided
    // (new root bag = smaller endpoint's bag minus L), a single node is both
    // root and leaf.
    int node_count = kfree.base.node_count;
    std::vector<std::set<int>> bags = kfree.base.bags;
    std::vector<std::pair<int, int>> tree_edges = kfree.base.tree_edges;
    const std::set<int>& free_set = kfree.free_set;

    int root;
    if (node_count == 1) {
        root = 0;
    } else if (node_count == 2) {
        std::set<int> mid;
        for (int v : bags[0])
            if (!free_set.count(v)) mid.insert(v);
        bags.push_back(mid);
        tree_edges = {{0, 2}, {2, 1}};
        node_count = 3;
        root = 2;
    } else {
        std::vector<int> degree(node_count, 0);
        for (const auto& [a, b] : tree_edges) {
            ++degree[a];
            ++degree[b];
        }
        root = -1;
        for (int t = 0; t < node_count && root < 0; ++t)
            if (degree[t] >= 2) root = t;
    }

    std::vector<std::vector<int>> adj(node_count);
    for (const auto& [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    std::vector<int> parent(node_count, -1);
    std::vector<int> order;  // pre-order; reversed gives post-order
    {
        std::vector<int> stack{root};
        parent[root] = root;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            order.push_back(t);
            for (auto it = adj[t].rbegin(); it != adj[t].rend(); ++it)
                if (parent[*it] < 0) {
                    parent[*it] = t;
                    stack.push_back(*it);
                }
        }
    }
    std::vector<std::vector<int>> children(node_count);
    for (int t : order)
        if (t != root) children[parent[t]].push_back(t);
    for (auto& c : children) std::sort(c.begin(), c.end());

    // Per-node data.
    std::vector<std::vector<int>> node_vars(node_count);   // bag \ L, sorted
    std::vector<std::set<int>> node_free(node_count);      // bag ∩ L
    for (int t = 0; t < node_count; ++t) {
        for (int v : bags[t]) {
            if (free_set.count(v))
                node_free[t].insert(v);
            else
                node_vars[t].push_back(v);
        }
    }

    DPTables local;
    DPTables& tab = tables ? *tables : local;
    tab.root = root;
    for (int t = 0; t < node_count; ++t) tab.bag_vars[t] = node_vars[t];

    // Bottom-up.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int t = *it;
        BagEnum en = make_enum(inst, node_vars[t]);
        auto& pt = tab.p[t];
        bool leaf = children[t].empty();
        std::vector<RowRef> bag_rows = rows_inside(inst, bags[t]);

        // Child adhesion projections.
        struct ChildProj {
            int child;
            std::vector<std::size_t> positions;  // index into t's key per adhesion var
        };
        std::vector<ChildProj> projs;
        for (int c : children[t]) {
            std::vector<int> adh;
            std::set_intersection(bags[t].begin(), bags[t].end(), bags[c].begin(), bags[c].end(),
                                  std::back_inserter(adh));
            // Adhesions never contain free vertices (unique-bag property).
            tab.adhesion_vars[c] = adh;
            ChildProj pr{c, {}};
            for (int v : adh) {
                auto pos = std::find(node_vars[t].begin(), node_vars[t].end(), v);
                pr.positions.push_back(pos - node_vars[t].begin());
            }
            projs.push_back(std::move(pr));

            // Build s[c] from p[c].
            std::vector<std::size_t> child_positions;
            for (int v : adh) {
                auto pos = std::find(node_vars[c].begin(), node_vars[c].end(), v);
                child_positions.push_back(pos - node_vars[c].begin());
            }
            auto& sc = tab.s[c];
            for (const auto& [ckey, cval] : tab.p[c]) {
                if (!cval.finite()) continue;
                std::vector<int> akey;
                Int adh_weight = 0;
                for (std::size_t i = 0; i < adh.size(); ++i) {
                    int off = ckey[child_positions[i]];
                    akey.push_back(off);
                    adh_weight += inst.w[adh[i]] * Int(inst.lower[adh[i]] + off);
                }
                ExtInt cand = cval - adh_weight;
                auto [slot, fresh] = sc.try_emplace(akey, cand);
                if (!fresh && slot->second < cand) slot->second = cand;
            }
        }

        std::vector<int> key = en.first();
        bool more = true;
        while (more) {
            Assignment eta = to_assignment(inst, node_vars[t], key);
            ExtInt val;
            if (leaf) {
                val = solve_leaf(inst, bags[t], node_free[t], eta);
            } else {
                bool violated = false;
                for (const RowRef& r : bag_rows)
                    if (r.cu * eta.at(r.u) + r.cv * eta.at(r.v) > r.rhs) {
                        violated = true;
                        break;
                    }
                if (violated) {
                    val = ExtInt::neg_inf();
                } else {
                    Int base = 0;
                    for (int v : node_vars[t]) base += inst.w[v] * eta.at(v);
                    val = ExtInt::of(base);
                    for (const ChildProj& pr : projs) {
                        std::vector<int> akey;
                        for (std::size_t pos : pr.positions) akey.push_back(key[pos]);
                        auto sit = tab.s[pr.child].find(akey);
                        ExtInt sval = sit == tab.s[pr.child].end() ? ExtInt::neg_inf() : sit->second;
                        val = val + sval;
                        if (!val.finite()) break;
                    }
                }
            }
            pt[key] = val;
            more = en.next(key);
        }
    }

    // Root maximum, lexicographically smallest argmax.
    ExtInt best = ExtInt::neg_inf();
    std::vector<int> best_key;
    for (const auto& [key, val] : tab.p[root])
        if (val > best) {
            best = val;
            best_key = key;
        }
    if (!best.finite()) return SolveResult{SolveStatus::Infeasible, 0, {}};

    // Witness reconstruction.
    Assignment x;
    auto record = [&](const Assignment& part) {
        for (const auto& [v, val] : part) {
            auto [it, fresh] = x.try_emplace(v, val);
            if (!fresh && it->second != val)
                throw std::logic_error("witness reconstruction: inconsistent assignments");
        }
    };
    struct Frame {
        int node;
        std::vector<int> key;
    };
    std::vector<Frame> stack{{root, best_key}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        Assignment eta = to_assignment(inst, node_vars[f.node], f.key);
        record(eta);
        if (children[f.node].empty()) {
            auto leaf_best = solve_leaf_witness(inst, bags[f.node], node_free[f.node], eta);
            if (!leaf_best) throw std::logic_error("finite leaf table without witness");
            record(leaf_best->second);
            continue;
        }
        for (int c : children[f.node]) {
            const std::vector<int>& adh = tab.adhesion_vars[c];
            std::vector<int> akey;
            for (int v : adh) {
                auto pos = std::find(node_vars[f.node].begin(), node_vars[f.node].end(), v);
                akey.push_back(f.key[pos - node_vars[f.node].begin()]);
            }
            ExtInt target = tab.s[c].at(akey);
            std::vector<std::size_t> child_positions;
            for (int v : adh) {
                auto pos = std::find(node_vars[c].begin(), node_vars[c].end(), v);
                child_positions.push_back(pos - node_vars[c].begin());
            }
            bool placed = false;
            for (const auto& [ckey, cval] : tab.p[c]) {
                if (!cval.finite()) continue;
                bool match = true;
                for (std::size_t i = 0; i < adh.size() && match; ++i)
                    match = ckey[child_positions[i]] == akey[i];
                if (!match) continue;
                Int adh_weight = 0;
                for (std::size_t i = 0; i < adh.size(); ++i)
                    adh_weight += inst.w[adh[i]] * Int(inst.lower[adh[i]] + akey[i]);
                if (cval - adh_weight == target) {
                    stack.push_back({c, ckey});
                    placed = true;
                    break;
                }
            }
            if (!placed) throw std::logic_error("witness reconstruction: no child achieves s");
        }
    }
    return SolveResult{SolveStatus::Optimal, best.value(), x};
}

SolveResult brute_force_oracle(const IPInstance& inst) {
    inst.check();
    const int n = inst.a.cols();
    Int space = 1;
    for (int j = 0; j < n; ++j) {
        space *= inst.upper[j] - inst.lower[j] + 1;
        if (space > kBoxGuard)
            throw std::runtime_error("brute_force_oracle: search space exceeds 10^7 points");
    }

    // Rows are checked as soon as their later column gets a value.
    std::vector<std::vector<const MatrixRow*>> check_at(n == 0 ? 1 : n);
    std::map<const MatrixRow*, Int> rhs;
    for (int i = 0; i < inst.a.rows(); ++i) {
        const MatrixRow& r = inst.a.row(i);
        if (n > 0) check_at[std::max(r.col_a, r.col_b)].push_back(&r);
        rhs[&r] = inst.b[i];
    }

    std::vector<Int> val(n);
    bool found = false;
    Int best_obj = 0;
    std::vector<Int> best;

    std::vector<Int> partial(n + 1, 0);  // objective prefix
    // Iterative DFS over variables in index order, values ascending.
    std::vector<Int> cursor(n);
    int depth = 0;
    cursor[0] = inst.lower[0];
    if (n == 0) {
        bool ok = inst.a.rows() == 0;
        if (ok) return SolveResult{SolveStatus::Optimal, 0, {}};
        return SolveResult{SolveStatus::Infeasible, 0, {}};
    }
    while (depth >= 0) {
        if (cursor[depth] > inst.upper[depth]) {
            --depth;
            if (depth >= 0) ++cursor[depth];
            continue;
        }
        val[depth] = cursor[depth];
        bool ok = true;
        for (const MatrixRow* r : check_at[depth]) {
            if (r->coef_a * val[r->col_a] + r->coef_b * val[r->col_b] > rhs[r]) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            ++cursor[depth];
            continue;
        }
        partial[depth + 1] = partial[depth] + inst.w[depth] * val[depth];
        if (depth == n - 1) {
            if (!found || partial[n] > best_obj) {
                found = true;
                best_obj = partial[n];
                best = val;
            }
            ++cursor[depth];
        } else {
            ++depth;
            cursor[depth] = inst.lower[depth];
        }
    }
    if (!found) return SolveResult{SolveStatus::Infeasible, 0, {}};
    SolveResult res{SolveStatus::Optimal, best_obj, {}};
    for (int j = 0; j < n; ++j) res.x[j] = best[j];
    return res;
}

std::string format_result(const SolveResult& r) {
    std::ostringstream out;
    if (r.status == SolveStatus::Infeasible) {
        out << "status Infeasible\n";
        return out.str();
    }
    out << "status Optimal\n";
    out << "objective " << r.objective.get_str() << "\n";
    for (const auto& [v, val] : r.x) out << "x " << v << " " << val.get_str() << "\n";
    return out.str();
}

}  // namespace tdm
