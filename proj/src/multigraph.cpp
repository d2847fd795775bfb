#include "locol/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "locol/errors.hpp"

namespace locol {

Multigraph::Multigraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)), adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        auto [u, v] = edges_[e];
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::out_of_range("edge " + std::to_string(e) + " endpoint out of range");
        if (u == v)
            throw std::invalid_argument("edge " + std::to_string(e) + " is a loop (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        adj_[u].emplace_back(v, e);
        adj_[v].emplace_back(u, e);
    }
}

int Multigraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

void Multigraph::check_vertex(int v, const char* who) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range(std::string(who) + ": vertex " + std::to_string(v) +
                                " out of range");
}

int Multigraph::multiplicity(int u, int v) const {
    check_vertex(u, "multiplicity");
    check_vertex(v, "multiplicity");
    if (u == v) throw std::invalid_argument("multiplicity: requires distinct vertices");
    const auto& shorter = degree(u) <= degree(v) ? adj_[u] : adj_[v];
    int target = degree(u) <= degree(v) ? v : u;
    int count = 0;
    for (const auto& [w, e] : shorter)
        if (w == target) ++count;
    return count;
}

int Multigraph::triangle_weight(int u, int v) const {
    check_vertex(u, "triangle_weight");
    check_vertex(v, "triangle_weight");
    if (u == v) throw std::invalid_argument("triangle_weight: requires distinct vertices");
    std::vector<int> mu_u(n_, 0), mu_v(n_, 0);
    for (const auto& [w, e] : adj_[u]) ++mu_u[w];
    for (const auto& [w, e] : adj_[v]) ++mu_v[w];
    int muv = mu_u[v];
    if (muv == 0) throw std::invalid_argument("triangle_weight: vertices not adjacent");
    int best = 0;
    for (int w = 0; w < n_; ++w) {
        if (w == u || w == v) continue;
        if (mu_u[w] > 0 && mu_v[w] > 0) best = std::max(best, mu_u[w] + mu_v[w]);
    }
    return muv + best;  // best == 0 when no common neighbour
}

Multigraph Multigraph::relabelled(const std::vector<int>& perm) const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edges_.size());
    for (auto [u, v] : edges_) edges.emplace_back(perm[u], perm[v]);
    return Multigraph(n_, std::move(edges));
}

Multigraph Multigraph::parse(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            std::string kind;
            ss >> kind >> n >> m;
            if (!ss || kind != "mgraph" || n < 0 || m < 0)
                throw ParseError("expected 'p mgraph <n> <m>'", lineno);
        } else if (tag == "e") {
            if (n < 0) throw ParseError("edge before header", lineno);
            int u, v;
            ss >> u >> v;
            if (!ss) throw ParseError("expected 'e <u> <v>'", lineno);
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError("vertex out of range", lineno);
            if (u == v) throw ParseError("loop edge not permitted", lineno);
            edges.emplace_back(u, v);
        } else {
            throw ParseError("unknown record '" + tag + "'", lineno);
        }
    }
    if (n < 0) throw ParseError("missing 'p mgraph' header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    return Multigraph(n, std::move(edges));
}

Multigraph Multigraph::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse(in);
}

void Multigraph::write(std::ostream& out) const {
    out << "p mgraph " << n_ << ' ' << edges_.size() << '\n';
    for (auto [u, v] : edges_) out << "e " << u << ' ' << v << '\n';
}

EdgeBoundReport local_edge_bound(const Multigraph& g) {
    EdgeBoundReport report;
    report.terms.resize(g.edge_count());
    std::int64_t best = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        std::int64_t du = g.degree(u), dv = g.degree(v);
        std::int64_t mu = g.multiplicity(u, v);
        std::int64_t t = g.triangle_weight(u, v);
        EdgeTerms& terms = report.terms[e];
        terms.term_u2 = 2 * du + dv - mu;
        terms.term_v2 = 2 * dv + du - mu;
        terms.term_t2 = du + dv - mu + t;
        if (terms.max2() > best) {
            best = terms.max2();
            report.argmax_edge = e;
        }
    }
    report.gamma = best < 0 ? 0 : static_cast<int>((best + 1) / 2);
    return report;
}

}  // namespace locol
