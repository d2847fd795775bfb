#include "locol/decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "locol/errors.hpp"
#include "locol/line_graph.hpp"
#include "locol/oracle.hpp"

namespace locol {

namespace {

void check_node(const DecompositionTree& tree, int node) {
    if (node < 0 || node >= static_cast<int>(tree.nodes.size()))
        throw std::invalid_argument("decomposition: node index out of range");
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

int tree_universe(const DecompositionTree& tree) {
    int n = 0;
    for (const TreeNode& node : tree.nodes) {
        for (int v : node.vmap) n = std::max(n, v + 1);
        for (int v : node.cmap) n = std::max(n, v + 1);
        for (int v : node.v2ids) n = std::max(n, v + 1);
    }
    return n;
}

std::vector<int> tree_vertices(const DecompositionTree& tree, int node) {
    check_node(tree, node);
    const TreeNode& t = tree.nodes[node];
    switch (t.kind) {
        case TreeNode::kLeafLine:
            return sorted_unique(t.vmap);
        case TreeNode::kLeafCirc:
            return sorted_unique(t.cmap);
        case TreeNode::kCut: {
            std::vector<int> a = tree_vertices(tree, t.child_a);
            std::vector<int> b = tree_vertices(tree, t.child_b);
            a.insert(a.end(), b.begin(), b.end());
            return sorted_unique(std::move(a));
        }
        case TreeNode::kJoin: {
            std::vector<int> a = tree_vertices(tree, t.child_g1);
            a.insert(a.end(), t.v2ids.begin(), t.v2ids.end());
            return sorted_unique(std::move(a));
        }
    }
    return {};
}

SimpleGraph tree_graph(const DecompositionTree& tree, int node) {
    check_node(tree, node);
    const TreeNode& t = tree.nodes[node];
    int universe = tree_universe(tree);
    switch (t.kind) {
        case TreeNode::kLeafLine: {
            if (static_cast<int>(t.vmap.size()) != t.mg.edge_count())
                throw std::invalid_argument("decomposition: vmap size mismatch");
            if (sorted_unique(t.vmap).size() != t.vmap.size())
                throw std::invalid_argument("decomposition: vmap repeats a vertex");
            SimpleGraph l = line_graph(t.mg);
            SimpleGraph g(universe);
            for (auto [u, v] : l.edges()) g.add_edge(t.vmap[u], t.vmap[v]);
            return g;
        }
        case TreeNode::kLeafCirc: {
            if (static_cast<int>(t.cmap.size()) != t.circ.vertex_count())
                throw std::invalid_argument("decomposition: circle map size mismatch");
            SimpleGraph g(universe);
            for (int i = 0; i < t.circ.vertex_count(); ++i)
                for (int j = i + 1; j < t.circ.vertex_count(); ++j)
                    if (t.circ.adjacent(i, j)) g.add_edge(t.cmap[i], t.cmap[j]);
            return g;
        }
        case TreeNode::kCut: {
            SimpleGraph ga = tree_graph(tree, t.child_a);
            SimpleGraph gb = tree_graph(tree, t.child_b);
            std::vector<int> va = tree_vertices(tree, t.child_a);
            std::vector<int> vb = tree_vertices(tree, t.child_b);
            std::vector<int> overlap;
            std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                                  std::back_inserter(overlap));
            if (overlap != sorted_unique(t.cut))
                throw std::invalid_argument("decomposition: children overlap differs from the cut");
            for (std::size_t i = 0; i < t.cut.size(); ++i)
                for (std::size_t j = i + 1; j < t.cut.size(); ++j)
                    if (!ga.has_edge(t.cut[i], t.cut[j]) || !gb.has_edge(t.cut[i], t.cut[j]))
                        throw std::invalid_argument("decomposition: cut is not a clique in both children");
            for (auto [u, v] : gb.edges()) ga.add_edge(u, v);
            return ga;
        }
        case TreeNode::kJoin: {
            SimpleGraph g1 = tree_graph(tree, t.child_g1);
            std::vector<int> v1 = tree_vertices(tree, t.child_g1);
            std::vector<int> v2 = t.v2ids;
            if (sorted_unique(v2).size() != v2.size())
                throw std::invalid_argument("decomposition: join side repeats a vertex");
            for (int v : v2)
                if (std::binary_search(v1.begin(), v1.end(), v))
                    throw std::invalid_argument("decomposition: join sides are not disjoint");
            for (const auto* clique : {&t.x1, &t.y1})
                for (int v : *clique)
                    if (!std::binary_search(v1.begin(), v1.end(), v))
                        throw std::invalid_argument("decomposition: attachment clique outside child");
            if (t.v2li.vertex_count() != static_cast<int>(v2.size()))
                throw std::invalid_argument("decomposition: join interval size mismatch");
            if (t.v2li.x_size() < 1 || t.v2li.y_size() < 1 ||
                t.v2li.x_size() + t.v2li.y_size() > t.v2li.vertex_count())
                throw std::invalid_argument("decomposition: join end-cliques must be nonempty and disjoint");
            for (int i = 0; i < t.v2li.vertex_count(); ++i)
                for (int j = i + 1; j <= t.v2li.reach(i); ++j) g1.add_edge(v2[i], v2[j]);
            for (int v : t.x1)
                for (int i = 0; i < t.v2li.x_size(); ++i) g1.add_edge(v, v2[i]);
            for (int v : t.y1)
                for (int i = t.v2li.vertex_count() - t.v2li.y_size(); i < t.v2li.vertex_count(); ++i)
                    g1.add_edge(v, v2[i]);
            return g1;
        }
    }
    return SimpleGraph(universe);
}

std::vector<int> paste_on_clique_cutset(const std::vector<int>& c1, const std::vector<int>& c2,
                                        const std::vector<int>& cut, int l) {
    std::vector<int> mapping(l, -1);
    std::vector<char> target_used(l, 0);
    for (int v : cut) {
        if (c1[v] < 0 || c2[v] < 0)
            throw std::invalid_argument("paste: cutset vertex uncoloured on one side");
        if (mapping[c2[v]] >= 0 && mapping[c2[v]] != c1[v])
            throw std::invalid_argument("paste: cutset colours collide (cut is not a clique?)");
        if (mapping[c2[v]] < 0 && target_used[c1[v]])
            throw std::invalid_argument("paste: cutset colours collide (cut is not a clique?)");
        mapping[c2[v]] = c1[v];
        target_used[c1[v]] = 1;
    }
    int next = 0;
    for (int c = 0; c < l; ++c) {
        if (mapping[c] >= 0) continue;
        while (next < l && target_used[next]) ++next;
        if (next >= l) throw std::invalid_argument("paste: palette too small for a bijection");
        mapping[c] = next;
        target_used[next] = 1;
    }
    std::vector<int> merged = c1;
    for (std::size_t v = 0; v < c2.size(); ++v) {
        if (c2[v] < 0) continue;
        int mapped = mapping[c2[v]];
        if (merged[v] >= 0 && merged[v] != mapped)
            throw std::invalid_argument("paste: children disagree outside the cutset");
        merged[v] = mapped;
    }
    return merged;
}

namespace {

struct TreeColourer {
    const DecompositionTree& tree;
    int palette;
    JoinCaseCounters* counters;

    std::vector<int> colour(int node) const {
        const TreeNode& t = tree.nodes[node];
        int universe = tree_universe(tree);
        switch (t.kind) {
            case TreeNode::kLeafLine: {
                std::vector<int> edge_colours = vertex_colour_line_graph(t.mg);
                std::vector<int> out(universe, -1);
                for (int e = 0; e < t.mg.edge_count(); ++e) out[t.vmap[e]] = edge_colours[e];
                return out;
            }
            case TreeNode::kLeafCirc: {
                std::vector<int> local = colour_circular_interval_exact(t.circ);
                std::vector<int> out(universe, -1);
                for (std::size_t i = 0; i < local.size(); ++i) out[t.cmap[i]] = local[i];
                return out;
            }
            case TreeNode::kCut: {
                std::vector<int> ca = colour(t.child_a);
                std::vector<int> cb = colour(t.child_b);
                return paste_on_clique_cutset(ca, cb, t.cut, palette);
            }
            case TreeNode::kJoin: {
                std::vector<int> c1 = colour(t.child_g1);
                // reindex the join (child graph + interval side) into a
                // compact host for the extension, then map back
                std::vector<int> v1 = tree_vertices(tree, t.child_g1);
                std::vector<int> members = v1;
                members.insert(members.end(), t.v2ids.begin(), t.v2ids.end());
                SimpleGraph whole = tree_graph(tree, node);
                std::vector<int> index(universe, -1);
                for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<int>(i);
                CanonicalJoin join;
                join.host = SimpleGraph(static_cast<int>(members.size()));
                for (auto [u, v] : whole.edges())
                    if (index[u] >= 0 && index[v] >= 0) join.host.add_edge(index[u], index[v]);
                for (int v : v1) join.v1.push_back(index[v]);
                for (int v : t.v2ids) join.v2.push_back(index[v]);
                for (int v : t.x1) join.x1.push_back(index[v]);
                for (int v : t.y1) join.y1.push_back(index[v]);
                std::sort(join.v1.begin(), join.v1.end());
                std::sort(join.x1.begin(), join.x1.end());
                std::sort(join.y1.begin(), join.y1.end());
                join.v2_interval = t.v2li;
                std::vector<int> local_c1(members.size(), -1);
                for (int v : v1) local_c1[index[v]] = c1[v];
                std::vector<int> extended = extend_over_join(join, local_c1, palette, counters);
                std::vector<int> out(universe, -1);
                for (std::size_t i = 0; i < members.size(); ++i) out[members[i]] = extended[i];
                return out;
            }
        }
        return {};
    }
};

int required_palette(const DecompositionTree& tree) {
    int l = 1;
    for (int node = 0; node < static_cast<int>(tree.nodes.size()); ++node) {
        const TreeNode& t = tree.nodes[node];
        if (t.kind == TreeNode::kLeafLine && t.mg.edge_count() > 0) {
            l = std::max(l, local_edge_bound(t.mg).gamma);
        } else if (t.kind == TreeNode::kLeafCirc) {
            SimpleGraph g = t.circ.to_simple_graph();
            OracleGuard guard = OracleGuard::from_env().raised(
                g.vertex_count(), g.vertex_count(), g.vertex_count());
            l = std::max(l, local_vertex_bound_bf(g, guard));
        } else if (t.kind == TreeNode::kJoin) {
            std::vector<int> v1 = tree_vertices(tree, t.child_g1);
            std::vector<int> members = v1;
            members.insert(members.end(), t.v2ids.begin(), t.v2ids.end());
            SimpleGraph whole = tree_graph(tree, node);
            std::vector<int> index(tree_universe(tree), -1);
            for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<int>(i);
            CanonicalJoin join;
            join.host = SimpleGraph(static_cast<int>(members.size()));
            for (auto [u, v] : whole.edges()) join.host.add_edge(index[u], index[v]);
            for (int v : v1) join.v1.push_back(index[v]);
            for (int v : t.v2ids) join.v2.push_back(index[v]);
            for (int v : t.x1) join.x1.push_back(index[v]);
            for (int v : t.y1) join.y1.push_back(index[v]);
            std::sort(join.v1.begin(), join.v1.end());
            std::sort(join.x1.begin(), join.x1.end());
            std::sort(join.y1.begin(), join.y1.end());
            join.v2_interval = t.v2li;
            l = std::max(l, gamma_l_join(join));
        }
    }
    return l;
}

}  // namespace

DecompositionColouring colour_decomposition(const DecompositionTree& tree,
                                            JoinCaseCounters* counters) {
    if (tree.nodes.empty()) throw std::invalid_argument("decomposition: empty tree");
    SimpleGraph root_graph = tree_graph(tree, tree.root());  // validates structure
    DecompositionColouring out;
    out.palette = required_palette(tree);
    TreeColourer colourer{tree, out.palette, counters};
    out.colour = colourer.colour(tree.root());
    if (!proper_vertex_colouring(root_graph, out.colour))
        throw InvariantViolation("decomposition colouring is not proper");
    std::vector<char> used(out.palette, 0);
    for (int v : tree_vertices(tree, tree.root())) {
        if (out.colour[v] < 0 || out.colour[v] >= out.palette)
            throw InvariantViolation("decomposition left a vertex uncoloured");
        used[out.colour[v]] = 1;
    }
    for (char u : used) out.used += u;
    return out;
}

namespace {

std::vector<int> read_id_list(std::istringstream& ss) {
    std::vector<int> out;
    int v;
    while (ss >> v) out.push_back(v);
    return out;
}

}  // namespace

DecompositionTree parse_qltree(std::istream& in, const std::string& base_dir) {
    DecompositionTree tree;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int declared = -1;
    TreeNode* open_circ = nullptr;       // collecting pt/arc lines
    std::vector<Rat> circ_points;
    std::vector<int> circ_ids;
    std::vector<std::pair<Rat, Rat>> circ_arcs;

    auto finish_circ = [&]() {
        if (!open_circ) return;
        for (std::size_t i = 1; i < circ_points.size(); ++i)
            if (!(circ_points[i - 1] < circ_points[i]))
                throw ParseError("circle points must be listed in increasing angle order");
        open_circ->circ = CircularIntervalGraph(circ_points, circ_arcs);
        open_circ->cmap = circ_ids;
        open_circ = nullptr;
        circ_points.clear();
        circ_ids.clear();
        circ_arcs.clear();
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            std::string kind;
            ss >> kind;
            if (kind != "qltree") throw ParseError("expected 'p qltree'", lineno);
            ss >> declared;
            have_header = true;
        } else if (tag == "pt") {
            if (!open_circ) throw ParseError("pt line outside a circular leaf", lineno);
            int id;
            std::string rat;
            if (!(ss >> id >> rat)) throw ParseError("expected 'pt <vertex> <angle>'", lineno);
            circ_ids.push_back(id);
            circ_points.push_back(Rat::parse(rat, lineno));
        } else if (tag == "arc") {
            if (!open_circ) throw ParseError("arc line outside a circular leaf", lineno);
            std::string a, b;
            if (!(ss >> a >> b)) throw ParseError("expected 'arc <from> <to>'", lineno);
            circ_arcs.emplace_back(Rat::parse(a, lineno), Rat::parse(b, lineno));
        } else if (tag == "node") {
            finish_circ();
            if (!have_header) throw ParseError("node before 'p qltree' header", lineno);
            int id;
            std::string kind;
            if (!(ss >> id >> kind)) throw ParseError("expected 'node <id> <kind>'", lineno);
            if (id != static_cast<int>(tree.nodes.size()))
                throw ParseError("node ids must appear in order", lineno);
            TreeNode node;
            if (kind == "leaf") {
                std::string what;
                ss >> what;
                if (what == "line") {
                    node.kind = TreeNode::kLeafLine;
                    std::string path;
                    if (!(ss >> path)) throw ParseError("expected a multigraph path", lineno);
                    node.mg_path = path;
                    std::string full = path;
                    if (!base_dir.empty() && path.front() != '/') full = base_dir + "/" + path;
                    node.mg = Multigraph::load(full);
                    std::string vm;
                    if (ss >> vm) {
                        if (vm != "vmap") throw ParseError("expected 'vmap'", lineno);
                        node.vmap = read_id_list(ss);
                        if (static_cast<int>(node.vmap.size()) != node.mg.edge_count())
                            throw ParseError("vmap must list one vertex per edge", lineno);
                    } else {
                        node.vmap.resize(node.mg.edge_count());
                        for (int e = 0; e < node.mg.edge_count(); ++e) node.vmap[e] = e;
                    }
                    tree.nodes.push_back(std::move(node));
                } else if (what == "circ") {
                    node.kind = TreeNode::kLeafCirc;
                    int n;
                    if (!(ss >> n)) throw ParseError("expected a vertex count", lineno);
                    tree.nodes.push_back(std::move(node));
                    open_circ = &tree.nodes.back();
                } else {
                    throw ParseError("unknown leaf kind '" + what + "'", lineno);
                }
            } else if (kind == "cut") {
                node.kind = TreeNode::kCut;
                if (!(ss >> node.child_a >> node.child_b))
                    throw ParseError("expected two child ids", lineno);
                node.cut = read_id_list(ss);
                tree.nodes.push_back(std::move(node));
            } else if (kind == "join") {
                node.kind = TreeNode::kJoin;
                if (!(ss >> node.child_g1)) throw ParseError("expected a child id", lineno);
                std::string section;
                std::vector<Rat> points;
                std::vector<std::pair<Rat, Rat>> intervals;
                std::vector<int> x2_count, y2_count;
                std::vector<int>* current = nullptr;
                std::vector<int> x2ids, y2ids;
                while (ss >> section) {
                    if (section == "X1:") current = &node.x1;
                    else if (section == "Y1:") current = &node.y1;
                    else if (section == "X2:") current = &x2ids;
                    else if (section == "Y2:") current = &y2ids;
                    else if (section == "V2:") {
                        int n2;
                        if (!(ss >> n2)) throw ParseError("expected the side size", lineno);
                        current = nullptr;
                    } else if (section == "pt") {
                        int id;
                        std::string rat;
                        if (!(ss >> id >> rat)) throw ParseError("expected 'pt <id> <point>'", lineno);
                        node.v2ids.push_back(id);
                        points.push_back(Rat::parse(rat, lineno));
                        current = nullptr;
                    } else if (section == "iv") {
                        std::string a, b;
                        if (!(ss >> a >> b)) throw ParseError("expected 'iv <lo> <hi>'", lineno);
                        intervals.emplace_back(Rat::parse(a, lineno), Rat::parse(b, lineno));
                        current = nullptr;
                    } else if (current) {
                        try {
                            current->push_back(std::stoi(section));
                        } catch (const std::exception&) {
                            throw ParseError("bad vertex id '" + section + "'", lineno);
                        }
                    } else {
                        throw ParseError("unexpected token '" + section + "'", lineno);
                    }
                }
                try {
                    node.v2li = LinearIntervalGraph(points, intervals,
                                                    static_cast<int>(x2ids.size()),
                                                    static_cast<int>(y2ids.size()));
                } catch (const std::exception& e) {
                    throw ParseError(std::string("join interval side: ") + e.what(), lineno);
                }
                for (std::size_t i = 0; i < x2ids.size(); ++i)
                    if (x2ids[i] != node.v2ids[i])
                        throw ParseError("X2 must list the leftmost interval vertices", lineno);
                for (std::size_t i = 0; i < y2ids.size(); ++i)
                    if (y2ids[i] != node.v2ids[node.v2ids.size() - y2ids.size() + i])
                        throw ParseError("Y2 must list the rightmost interval vertices", lineno);
                tree.nodes.push_back(std::move(node));
            } else {
                throw ParseError("unknown node kind '" + kind + "'", lineno);
            }
        } else {
            throw ParseError("unknown record '" + tag + "'", lineno);
        }
    }
    finish_circ();
    if (!have_header) throw ParseError("missing 'p qltree' header");
    if (tree.nodes.empty()) throw ParseError("tree has no nodes");
    if (declared >= 0 && declared != static_cast<int>(tree.nodes.size()))
        throw ParseError("header declares " + std::to_string(declared) + " nodes, found " +
                         std::to_string(tree.nodes.size()));
    return tree;
}

DecompositionTree load_qltree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string dir;
    std::size_t slash = path.find_last_of('/');
    if (slash != std::string::npos) dir = path.substr(0, slash);
    return parse_qltree(in, dir);
}

void write_qltree(const DecompositionTree& tree, std::ostream& out) {
    out << "p qltree " << tree.nodes.size() << '\n';
    for (int id = 0; id < static_cast<int>(tree.nodes.size()); ++id) {
        const TreeNode& t = tree.nodes[id];
        switch (t.kind) {
            case TreeNode::kLeafLine: {
                out << "node " << id << " leaf line " << t.mg_path << " vmap";
                for (int v : t.vmap) out << ' ' << v;
                out << '\n';
                break;
            }
            case TreeNode::kLeafCirc: {
                out << "node " << id << " leaf circ " << t.circ.vertex_count() << '\n';
                for (int i = 0; i < t.circ.vertex_count(); ++i)
                    out << "pt " << t.cmap[i] << ' ' << t.circ.point(i).str() << '\n';
                for (const auto& [a, b] : t.circ.arcs())
                    out << "arc " << a.str() << ' ' << b.str() << '\n';
                break;
            }
            case TreeNode::kCut: {
                out << "node " << id << " cut " << t.child_a << ' ' << t.child_b;
                for (int v : t.cut) out << ' ' << v;
                out << '\n';
                break;
            }
            case TreeNode::kJoin: {
                out << "node " << id << " join " << t.child_g1 << " X1:";
                for (int v : t.x1) out << ' ' << v;
                out << " Y1:";
                for (int v : t.y1) out << ' ' << v;
                out << " V2: " << t.v2li.vertex_count();
                for (int i = 0; i < t.v2li.vertex_count(); ++i)
                    out << " pt " << t.v2ids[i] << ' ' << t.v2li.point(i).str();
                for (const auto& [a, b] : t.v2li.intervals())
                    out << " iv " << a.str() << ' ' << b.str();
                out << " X2:";
                for (int i = 0; i < t.v2li.x_size(); ++i) out << ' ' << t.v2ids[i];
                out << " Y2:";
                for (int i = t.v2li.vertex_count() - t.v2li.y_size(); i < t.v2li.vertex_count(); ++i)
                    out << ' ' << t.v2ids[i];
                out << '\n';
                break;
            }
        }
    }
}

}  // namespace locol
