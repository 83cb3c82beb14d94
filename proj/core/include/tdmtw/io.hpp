#pragma once

#include "tdmtw/decomposition.hpp"
#include "tdmtw/grids.hpp"
#include "tdmtw/ip_solver.hpp"
#include "tdmtw/matrix.hpp"
#include "tdmtw/models.hpp"
#include "tdmtw/signed_graph.hpp"

#include <map>
#include <string>

namespace tdm {

// Line-oriented plain-text formats. Integers are decimal and bit-exact.
// Parsers throw std::invalid_argument with the offending line.
//
//   graph:         graph <n>
//                  edge <id> <u> <v> <parity>
//                  roots <v...>
//   coords:        coord <v> <a> <b>
//   ip instance:   ip <m> <n>
//                  row <i> <col_a> <coef_a> <col_b> <coef_b> <b_i>
//                  w <n ints> / l <n ints> / u <n ints>
//   decomposition: kind tree|kfree|tocp|tdm
//                  tree <n_nodes> / tedge <t1> <t2> / bag <t> <v...>
//                  prot <t> <v...> / J <t...> / L <v...>
//   model:         model subdivision <k>
//                  vmap <guest_v> <host_v>
//                  path <guest_edge> <len> <host edge ids...>
//                  gshift <guest v...>
//   path map:      pmap <interior_vertex> <edge_id>
//   result:        status Optimal|Infeasible / objective <val> / x <v> <val>
//
// Graph files require vertex ids 0..n-1; the serializer refuses anything
// else.

std::string serialize(const RootedSignedGraph& g);
RootedSignedGraph parse_graph(const std::string& text);

std::string serialize(const GridCoords& coords);
GridCoords parse_coords(const std::string& text);

std::string serialize(const IPInstance& inst);
IPInstance parse_ip(const std::string& text);

enum class DecompKind { Tree, KFree, TameOCP, TDM };

/// One decomposition file of any kind.
struct DecompFile {
    DecompKind kind;
    TreeDecomposition tree;
    std::set<int> free_set;                 // kfree
    std::vector<std::set<int>> protectors;  // tocp / tdm
    std::set<int> strong_subtree;           // tdm

    KFreeDecomposition as_kfree() const;
    TameOCPDecomposition as_tame() const;
    TDMDecomposition as_tdm() const;

    bool operator==(const DecompFile&) const = default;
};

std::string serialize(const DecompFile& d);
DecompFile parse_decomposition(const std::string& text);

DecompFile wrap(const TreeDecomposition& d);
DecompFile wrap(const KFreeDecomposition& d);
DecompFile wrap(const TameOCPDecomposition& d);
DecompFile wrap(const TDMDecomposition& d);

std::string serialize_model(const SubdivisionModel& m, int k);
SubdivisionModel parse_model(const std::string& text, int* k_out = nullptr);

std::string serialize_pathmap(const std::map<int, int>& interior_to_edge);
std::map<int, int> parse_pathmap(const std::string& text);

SolveResult parse_result(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tdm
