#include "tdmtw/io.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tdm {

namespace {

[[noreturn]] void bad_line(const std::string& line) {
    throw std::invalid_argument("parse error at line: '" + line + "'");
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int to_int(const std::string& s, const std::string& line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) bad_line(line);
        return v;
    } catch (const std::invalid_argument&) {
        bad_line(line);
    } catch (const std::out_of_range&) {
        bad_line(line);
    }
}

Int to_big(const std::string& s, const std::string& line) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        bad_line(line);
    }
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!tokens(line).empty()) out.push_back(line);
    return out;
}

}  // namespace

std::string serialize(const RootedSignedGraph& g) {
    const int n = static_cast<int>(g.vertex_count());
    for (int v : g.vertices())
        if (v < 0 || v >= n)
            throw std::invalid_argument("serialize: graph vertex ids must be 0..n-1");
    std::ostringstream out;
    out << "graph " << n << "\n";
    for (const auto& [id, e] : g.edges())
        out << "edge " << id << " " << e.u << " " << e.v << " " << e.parity << "\n";
    out << "roots";
    for (int r : g.roots()) out << " " << r;
    out << "\n";
    return out.str();
}

RootedSignedGraph parse_graph(const std::string& text) {
    RootedSignedGraph g;
    bool have_header = false;
    for (const std::string& line : lines_of(text)) {
        auto t = tokens(line);
        if (t[0] == "graph") {
            if (have_header || t.size() != 2) bad_line(line);
            have_header = true;
            int n = to_int(t[1], line);
            if (n < 0) bad_line(line);
            for (int v = 0; v < n; ++v) g.add_vertex(v);
        } else if (t[0] == "edge") {
            if (!have_header || t.size() != 5) bad_line(line);
            g.add_edge(to_int(t[1], line), to_int(t[2], line), to_int(t[3], line),
                       to_int(t[4], line));
        } else if (t[0] == "roots") {
            if (!have_header) bad_line(line);
            for (std::size_t i = 1; i < t.size(); ++i) g.set_root(to_int(t[i], line));
        } else {
            bad_line(line);
        }
    }
    if (!have_header) throw std::invalid_argument("graph file without header");
    return g;
}

std::string serialize(const GridCoords& coords) {
    std::ostringstream out;
    for (const auto& [v, ab] : coords.all())
        out << "coord " << v << " " << ab.first << " " << ab.second << "\n";
    return out.str();
}

GridCoords parse_coords(const std::string& text) {
    GridCoords c;
    for (const std::string& line : lines_of(text)) {
        auto t = tokens(line);
        if (t[0] != "coord" || t.size() != 4) bad_line(line);
        c.add(to_int(t[1], line), to_int(t[2], line), to_int(t[3], line));
    }
    return c;
}

std::string serialize(const IPInstance& inst) {
    inst.check();
    std::ostringstream out;
    out << "ip " << inst.a.rows() << " " << inst.a.cols() << "\n";
    for (int i = 0; i < inst.a.rows(); ++i) {
        const MatrixRow& r = inst.a.row(i);
        out << "row " << i << " " << r.col_a << " " << r.coef_a.get_str() << " " << r.col_b << " "
            << r.coef_b.get_str() << " " << inst.b[i].get_str() << "\n";
    }
    auto vec = [&](const char* name, const std::vector<Int>& xs) {
        out << name;
        for (const Int& x : xs) out << " " << x.get_str();
        out << "\n";
    };
    vec("w", inst.w);
    vec("l", inst.lower);
    vec("u", inst.upper);
    return out.str();
}

IPInstance parse_ip(const std::string& text) {
    int m = -1, n = -1;
    std::vector<std::array<std::string, 6>> raw_rows;
    std::vector<Int> w, l, u, b;
    bool have_w = false, have_l = false, have_u = false;
    for (const std::string& line : lines_of(text)) {
        auto t = tokens(line);
        if (t[0] == "ip") {
            if (m >= 0 || t.size() != 3) bad_line(line);
            m = to_int(t[1], line);
            n = to_int(t[2], line);
            if (m < 0 || n < 0) bad_line(line);
        } else if (t[0] == "row") {
            if (m < 0 || t.size() != 7) bad_line(line);
            raw_rows.push_back({t[1], t[2], t[3], t[4], t[5], t[6]});
        } else if (t[0] == "w" || t[0] == "l" || t[0] == "u") {
            if (m < 0 || static_cast<int>(t.size()) != n + 1) bad_line(line);
            std::vector<Int> vals;
            for (int i = 1; i <= n; ++i) vals.push_back(to_big(t[i], line));
            if (t[0] == "w") {
                w = vals;
                have_w = true;
            } else if (t[0] == "l") {
                l = vals;
                have_l = true;
            } else {
                u = vals;
                have_u = true;
            }
        } else {
            bad_line(line);
        }
    }
    if (m < 0 || !have_w || !have_l || !have_u)
        throw std::invalid_argument("ip file missing header or vectors");
    if (static_cast<int>(raw_rows.size()) != m)
        throw std::invalid_argument("ip file has wrong number of rows");
    TwoNonzeroMatrix a(m, n);
    b.resize(m);
    for (int i = 0; i < m; ++i) {
        const auto& t = raw_rows[i];
        const std::string line = "row " + t[0];
        if (to_int(t[0], line) != i) throw std::invalid_argument("ip rows must be in order");
        a.set_row(i, to_int(t[1], line), to_big(t[2], line), to_int(t[3], line), to_big(t[4], line));
        b[i] = to_big(t[5], line);
    }
    IPInstance inst{std::move(a), std::move(b), std::move(w), std::move(l), std::move(u)};
    inst.check();
    return inst;
}

KFreeDecomposition DecompFile::as_kfree() const {
    if (kind != DecompKind::KFree) throw std::invalid_argument("decomposition is not kfree");
    return KFreeDecomposition{tree, free_set};
}

TameOCPDecomposition DecompFile::as_tame() const {
    if (kind != DecompKind::TameOCP) throw std::invalid_argument("decomposition is not tocp");
    return TameOCPDecomposition{tree, protectors};
}

TDMDecomposition DecompFile::as_tdm() const {
    if (kind != DecompKind::TDM) throw std::invalid_argument("decomposition is not tdm");
    return TDMDecomposition{tree, protectors, strong_subtree};
}

DecompFile wrap(const TreeDecomposition& d) { return DecompFile{DecompKind::Tree, d, {}, {}, {}}; }
DecompFile wrap(const KFreeDecomposition& d) {
    return DecompFile{DecompKind::KFree, d.base, d.free_set, {}, {}};
}
DecompFile wrap(const TameOCPDecomposition& d) {
    return DecompFile{DecompKind::TameOCP, d.base, {}, d.protectors, {}};
}
DecompFile wrap(const TDMDecomposition& d) {
    return DecompFile{DecompKind::TDM, d.base, {}, d.protectors, d.strong_subtree};
}

std::string serialize(const DecompFile& d) {
    std::ostringstream out;
    switch (d.kind) {
        case DecompKind::Tree: out << "kind tree\n"; break;
        case DecompKind::KFree: out << "kind kfree\n"; break;
        case DecompKind::TameOCP: out << "kind tocp\n"; break;
        case DecompKind::TDM: out << "kind tdm\n"; break;
    }
    out << "tree " << d.tree.node_count << "\n";
    for (const auto& [a, b] : d.tree.tree_edges) out << "tedge " << a << " " << b << "\n";
    for (int t = 0; t < d.tree.node_count; ++t) {
        out << "bag " << t;
        for (int v : d.tree.bags[t]) out << " " << v;
        out << "\n";
    }
    if (d.kind == DecompKind::TameOCP || d.kind == DecompKind::TDM)
        for (int t = 0; t < d.tree.node_count; ++t) {
            out << "prot " << t;
            for (int v : d.protectors[t]) out << " " << v;
            out << "\n";
        }
    if (d.kind == DecompKind::TDM) {
        out << "J";
        for (int t : d.strong_subtree) out << " " << t;
        out << "\n";
    }
    if (d.kind == DecompKind::KFree) {
        out << "L";
        for (int v : d.free_set) out << " " << v;
        out << "\n";
    }
    return out.str();
}

DecompFile parse_decomposition(const std::string& text) {
    DecompFile d{DecompKind::Tree, {}, {}, {}, {}};
    bool have_kind = false, have_tree = false;
    for (const std::string& line : lines_of(text)) {
        auto t = tokens(line);
        if (t[0] == "kind") {
            if (have_kind || t.size() != 2) bad_line(line);
            have_kind = true;
            if (t[1] == "tree")
                d.kind = DecompKind::Tree;
            else if (t[1] == "kfree")
                d.kind = DecompKind::KFree;
            else if (t[1] == "tocp")
                d.kind = DecompKind::TameOCP;
            else if (t[1] == "tdm")
                d.kind = DecompKind::TDM;
            else
                bad_line(line);
        } else if (t[0] == "tree") {
            if (!have_kind || have_tree || t.size() != 2) bad_line(line);
            have_tree = true;
            d.tree.node_count = to_int(t[1], line);
            if (d.tree.node_count < 1) bad_line(line);
            d.tree.bags.resize(d.tree.node_count);
            if (d.kind == DecompKind::TameOCP || d.kind == DecompKind::TDM)
                d.protectors.resize(d.tree.node_count);
        } else if (t[0] == "tedge") {
            if (!have_tree || t.size() != 3) bad_line(line);
            d.tree.tree_edges.emplace_back(to_int(t[1], line), to_int(t[2], line));
        } else if (t[0] == "bag") {
            if (!have_tree || t.size() < 2) bad_line(line);
            int node = to_int(t[1], line);
            if (node < 0 || node >= d.tree.node_count) bad_line(line);
            for (std::size_t i = 2; i < t.size(); ++i) d.tree.bags[node].insert(to_int(t[i], line));
        } else if (t[0] == "prot") {
            if (!have_tree || t.size() < 2) bad_line(line);
            if (d.kind != DecompKind::TameOCP && d.kind != DecompKind::TDM) bad_line(line);
            int node = to_int(t[1], line);
            if (node < 0 || node >= d.tree.node_count) bad_line(line);
            for (std::size_t i = 2; i < t.size(); ++i) d.protectors[node].insert(to_int(t[i], line));
        } else if (t[0] == "J") {
            if (!have_tree || d.kind != DecompKind::TDM) bad_line(line);
            for (std::size_t i = 1; i < t.size(); ++i) d.strong_subtree.insert(to_int(t[i], line));
        } else if (t[0] == "L") {
            if (!have_tree || d.kind != DecompKind::KFree) bad_line(line);
            for (std::size_t i = 1; i < t.size(); ++i) d.free_set.insert(to_int(t[i], line));
        } else {
            bad_line(line);
        }
    }
    if (!have_kind || !have_tree)
        throw std::invalid_argument("decomposition file missing kind or tree header");
    return d;
}

std::string serialize_model(const SubdivisionModel& m, int k) {
    std::ostringstream out;
    out << "model subdivision " << k << "\n";
    for (const auto& [gv, hv] : m.vertex_map) out << "vmap " << gv << " " << hv << "\n";
    for (const auto& [ge, ids] : m.paths) {
        out << "path " << ge << " " << ids.size();
        for (int id : ids) out << " " << id;
        out << "\n";
    }
    out << "gshift";
    for (int v : m.guest_shift_set) out << " " << v;
    out << "\n";
    return out.str();
}

SubdivisionModel parse_model(const std::string& text, int* k_out) {
    SubdivisionModel m;
    bool have_header = false;
    for (const std::string& line : lines_of(text)) {
        auto t = tokens(line);
        if (t[0] == "model") {
            if (have_header || t.size() != 3 || t[1] != "subdivision") bad_line(line);
            have_header = true;
            if (k_out) *k_out = to_int(t[2], line);
        } else if (t[0] == "vmap") {
            if (!have_header || t.size() != 3) bad_line(line);
            m.vertex_map[to_int(t[1], line)] = to_int(t[2], line);
        } else if (t[0] == "path") {
            if (!have_header || t.size() < 3) bad_line(line);
            int ge = to_int(t[1], line);
            int len = to_int(t[2], line);
            if (static_cast<int>(t.size()) != len + 3) bad_line(line);
            std::vector<int> ids;
            for (int i = 0; i < len; ++i) ids.push_back(to_int(t[3 + i], line));
            m.paths[ge] = std::move(ids);
        } else if (t[0] == "gshift") {
            if (!have_header) bad_line(line);
            for (std::size_t i = 1; i < t.size(); ++i) m.guest_shift_set.insert(to_int(t[i], line));
        } else {
            bad_line(line);
        }
    }
    if (!have_header) throw std::invalid_argument("model file without header");
    return m;
}

std::string serialize_pathmap(const std::map<int, int>& interior_to_edge) {
    std::ostringstream out;
    for (const auto& [x, e] : interior_to_edge) out << "pmap " << x << " " << e << "\n";
    return out.str();
}

std::map<int, int> parse_pathmap(const std::string& text) {
    std::map<int, int> m;
    for (const std::string& line : lines_of(text)) {
        auto t = tokens(line);
        if (t[0] != "pmap" || t.size() != 3) bad_line(line);
        m[to_int(t[1], line)] = to_int(t[2], line);
    }
    return m;
}

SolveResult parse_result(const std::string& text) {
    SolveResult r{SolveStatus::Infeasible, 0, {}};
    bool have_status = false;
    for (const std::string& line : lines_of(text)) {
        auto t = tokens(line);
        if (t[0] == "status") {
            if (t.size() != 2) bad_line(line);
            have_status = true;
            if (t[1] == "Optimal")
                r.status = SolveStatus::Optimal;
            else if (t[1] == "Infeasible")
                r.status = SolveStatus::Infeasible;
            else
                bad_line(line);
        } else if (t[0] == "objective") {
            if (t.size() != 2) bad_line(line);
            r.objective = to_big(t[1], line);
        } else if (t[0] == "x") {
            if (t.size() != 3) bad_line(line);
            r.x[to_int(t[1], line)] = to_big(t[2], line);
        } else {
            bad_line(line);
        }
    }
    if (!have_status) throw std::invalid_argument("result record without status");
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace tdm
