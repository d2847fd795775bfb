#include "locol/simple_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "locol/errors.hpp"

namespace locol {

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (const auto& list : adj_) total += static_cast<int>(list.size());
    return total / 2;
}

bool SimpleGraph::has_edge(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count())
        throw std::out_of_range("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: loops not permitted");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& keep) const {
    std::vector<int> index(vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
    SimpleGraph out(static_cast<int>(keep.size()));
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        for (int w : adj_[keep[i]])
            if (index[w] > i) out.add_edge(i, index[w]);
    return out;
}

SimpleGraph SimpleGraph::parse(std::istream& in) {
    std::string line;
    int lineno = 0, n = -1, m = -1, read = 0;
    SimpleGraph g;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            std::string kind;
            ss >> kind >> n >> m;
            if (!ss || kind != "graph" || n < 0 || m < 0)
                throw ParseError("expected 'p graph <n> <m>'", lineno);
            g = SimpleGraph(n);
        } else if (tag == "e") {
            if (n < 0) throw ParseError("edge before header", lineno);
            int u, v;
            ss >> u >> v;
            if (!ss) throw ParseError("expected 'e <u> <v>'", lineno);
            if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex out of range", lineno);
            if (u == v) throw ParseError("loop edge not permitted", lineno);
            if (g.has_edge(u, v)) throw ParseError("duplicate edge", lineno);
            g.add_edge(u, v);
            ++read;
        } else {
            throw ParseError("unknown record '" + tag + "'", lineno);
        }
    }
    if (n < 0) throw ParseError("missing 'p graph' header");
    if (read != m) throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                                    std::to_string(read));
    return g;
}

SimpleGraph SimpleGraph::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse(in);
}

void SimpleGraph::write(std::ostream& out) const {
    out << "p graph " << vertex_count() << ' ' << edge_count() << '\n';
    for (auto [u, v] : edges()) out << "e " << u << ' ' << v << '\n';
}

bool proper_vertex_colouring(const SimpleGraph& g, const std::vector<int>& colour) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (colour[u] < 0) continue;
        for (int v : g.neighbours(u))
            if (colour[v] == colour[u]) return false;
    }
    return true;
}

bool neighbourhood_two_clique_coverable(const SimpleGraph& g, int v) {
    const std::vector<int>& nb = g.neighbours(v);
    int s = static_cast<int>(nb.size());
    // two-colour the complement of G[N(v)] by BFS
    std::vector<int> side(s, -1);
    for (int start = 0; start < s; ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        std::vector<int> queue = {start};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int a = queue[qi];
            for (int b = 0; b < s; ++b) {
                if (b == a || g.has_edge(nb[a], nb[b])) continue;  // complement edge iff non-adjacent
                if (side[b] < 0) {
                    side[b] = 1 - side[a];
                    queue.push_back(b);
                } else if (side[b] == side[a]) {
                    return false;
                }
            }
        }
    }
    return true;
}

void write_vertex_colouring(const std::vector<int>& colour, std::ostream& out) {
    for (int v = 0; v < static_cast<int>(colour.size()); ++v)
        if (colour[v] >= 0) out << "v " << v << ' ' << colour[v] + 1 << '\n';
}

}  // namespace locol
