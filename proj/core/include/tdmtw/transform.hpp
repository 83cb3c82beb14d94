#pragma once

#include "tdmtw/decomposition.hpp"
#include "tdmtw/signed_graph.hpp"

#include <map>

namespace tdm {

/// Build a TDM decomposition from a K-free decomposition of (G, K) and one
/// tame OCP decomposition per leaf j covering G[beta(j) ∩ L]. J becomes the
/// K-free tree; each leaf's tame tree is hung off its leaf with the leaf's
/// non-free bag merged into every bag and protector. Leaves with no free
/// vertices may be omitted from the map. Result width is at most
/// (K-free width + 1) + max leaf t-width.
TDMDecomposition compose_tdm(const RootedSignedGraph& g, const KFreeDecomposition& kfree,
                             const std::map<int, TameOCPDecomposition>& leaf_ocp);

/// Split a TDM decomposition into its two ingredients: a K-free decomposition
/// over the (augmented) strong subtree J, and the tame part (T, beta, alpha)
/// verbatim. Internal J nodes with protector-exceeding bags are split into a
/// leaf copy first; subtrees outside J that anchor at internal J nodes are
/// re-anchored at such copies so each collapses into a J leaf.
std::pair<KFreeDecomposition, TameOCPDecomposition> extract_from_tdm(const RootedSignedGraph& g,
                                                                     const TDMDecomposition& tdm);

/// Contract tree edges whose one bag contains the other, keeping the larger
/// side's bag and protector. For TDM inputs, contractions that would remove a
/// J node into a non-J node are skipped so J stays intact. The result has at
/// most |V(G)| + 1 nodes.
TameOCPDecomposition compress_bags(const TameOCPDecomposition& d, const RootedSignedGraph& g);
TDMDecomposition compress_bags(const TDMDecomposition& d, const RootedSignedGraph& g);

/// Given a tame OCP decomposition of the subdivision g' of g, identify every
/// path-interior vertex with the lexicographically smaller endpoint of its
/// original edge, in every bag and protector. Node count is unchanged;
/// t-width never increases.
TameOCPDecomposition uncontract_subdivision(const TameOCPDecomposition& d,
                                            const RootedSignedGraph& g,
                                            const std::map<int, int>& interior_to_edge);
TDMDecomposition uncontract_subdivision(const TDMDecomposition& d, const RootedSignedGraph& g,
                                        const std::map<int, int>& interior_to_edge);

}  // namespace tdm
