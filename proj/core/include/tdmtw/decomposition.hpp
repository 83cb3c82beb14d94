#pragma once

#include "tdmtw/signed_graph.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tdm {

/// Tree decomposition (T, beta). Nodes are 0..node_count-1.
struct TreeDecomposition {
    int node_count = 0;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<std::set<int>> bags;

    std::vector<std::vector<int>> adjacency() const;
    bool is_leaf(int t) const;
    std::set<int> adhesion(int t1, int t2) const;

    bool operator==(const TreeDecomposition&) const = default;
};

/// K-free decomposition (T, beta, L): every vertex of the free set L lies in
/// exactly one bag, and that bag's node is a leaf. Width ignores L.
struct KFreeDecomposition {
    TreeDecomposition base;
    std::set<int> free_set;

    bool operator==(const KFreeDecomposition&) const = default;
};

/// Tame OCP decomposition (T, beta, alpha): per-bag protectors alpha(t) with
/// every adhesion at t of size at most 1 outside alpha(t).
struct TameOCPDecomposition {
    TreeDecomposition base;
    std::vector<std::set<int>> protectors;

    bool operator==(const TameOCPDecomposition&) const = default;
};

/// TDM decomposition (T, beta, alpha, J): protectors contain each bag's
/// roots, are strong on the subtree J, and J's bags cover all roots.
struct TDMDecomposition {
    TreeDecomposition base;
    std::vector<std::set<int>> protectors;
    std::set<int> strong_subtree;

    bool operator==(const TDMDecomposition&) const = default;
};

/// Validators return one message per violated clause, empty when valid.
/// Messages start with a clause name ("vertex-connectivity", ...) followed by
/// the witnessing node/edge/vertex.
std::vector<std::string> validate(const TreeDecomposition& d, const RootedSignedGraph& g);
std::vector<std::string> validate(const KFreeDecomposition& d, const RootedSignedGraph& g);
std::vector<std::string> validate(const TameOCPDecomposition& d, const RootedSignedGraph& g);
std::vector<std::string> validate(const TDMDecomposition& d, const RootedSignedGraph& g);

/// Width formulas. All throw std::invalid_argument when the decomposition is
/// not valid for g.
int width(const TreeDecomposition& d, const RootedSignedGraph& g);   // max |bag| - 1
int width(const KFreeDecomposition& d, const RootedSignedGraph& g);  // max{0, max |bag\L| - 1}
int width(const TameOCPDecomposition& d, const RootedSignedGraph& g);  // max |a| + OCP(bag\a)
int width(const TDMDecomposition& d, const RootedSignedGraph& g);      // same, signed by g

/// The tame part (T, beta, alpha) of a TDM decomposition.
TameOCPDecomposition tame_part(const TDMDecomposition& d);

}  // namespace tdm
