#include "locol/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>

#include "locol/errors.hpp"

namespace locol {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    Clock::time_point start = Clock::now();
    double seconds;
    std::uint64_t ticks = 0;
    explicit Budget(double s) : seconds(s) {}
    void tick() {
        if ((++ticks & 0xfff) == 0) {
            double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
            if (elapsed > seconds) throw GuardExceeded("oracle time budget exhausted");
        }
    }
};

}  // namespace

const OracleGuard& OracleGuard::from_env() {
    static OracleGuard guard = [] {
        OracleGuard g;
        if (const char* env = std::getenv("LC_ORACLE_GUARD")) {
            std::string s(env);
            std::replace(s.begin(), s.end(), ',', ' ');
            std::istringstream ss(s);
            ss >> g.max_vertices >> g.max_edges >> g.max_palette >> g.seconds;
        }
        return g;
    }();
    return guard;
}

OracleGuard OracleGuard::raised(int n, int m, int k) const {
    OracleGuard g = *this;
    g.max_vertices = std::max(g.max_vertices, n);
    g.max_edges = std::max(g.max_edges, m);
    g.max_palette = std::max(g.max_palette, k);
    return g;
}

namespace {

struct EdgeColourSearch {
    const Multigraph& g;
    int k;
    std::vector<int> order;       // edge ids in branch order
    std::vector<int> forced;      // forced colour per edge or -1
    std::vector<std::uint64_t> used;  // per-vertex colour mask
    std::vector<int> assigned;    // per edge
    Budget& budget;

    EdgeColourSearch(const Multigraph& graph, int palette, Budget& b)
        : g(graph), k(palette), budget(b) {
        int m = g.edge_count();
        order.resize(m);
        std::iota(order.begin(), order.end(), 0);
        auto conflict_degree = [&](int e) {
            auto [u, v] = g.endpoints(e);
            return g.degree(u) + g.degree(v) - g.multiplicity(u, v) - 1;
        };
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return conflict_degree(a) > conflict_degree(b);
        });
        // colours at one maximum-degree vertex are fixed outright
        int pivot = 0;
        for (int v = 1; v < g.vertex_count(); ++v)
            if (g.degree(v) > g.degree(pivot)) pivot = v;
        forced.assign(m, -1);
        int next = 0;
        for (int e : order) {
            auto [u, v] = g.endpoints(e);
            if (u == pivot || v == pivot) forced[e] = next++;
        }
        used.assign(g.vertex_count(), 0);
        assigned.assign(m, -1);
    }

    bool has_free_colour(int e) const {
        auto [u, v] = g.endpoints(e);
        std::uint64_t blocked = used[u] | used[v];
        if (forced[e] >= 0) return forced[e] < k && !((blocked >> forced[e]) & 1);
        std::uint64_t full = k == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << k) - 1);
        return (~blocked & full) != 0;
    }

    bool dfs(std::size_t idx, int next_new) {
        budget.tick();
        if (idx == order.size()) return true;
        int e = order[idx];
        auto [u, v] = g.endpoints(e);
        std::uint64_t full = k == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << k) - 1);
        std::uint64_t avail = ~(used[u] | used[v]) & full;
        if (forced[e] >= 0) {
            avail &= std::uint64_t(1) << forced[e];
        } else {
            // colours beyond the fixed block enter in first-use order
            int cap = std::min(next_new + 1, k);
            std::uint64_t below = cap == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << cap) - 1);
            avail &= below;
        }
        while (avail) {
            int c = std::countr_zero(avail);
            avail &= avail - 1;
            used[u] |= std::uint64_t(1) << c;
            used[v] |= std::uint64_t(1) << c;
            assigned[e] = c;
            bool ok = true;
            for (const auto& [w, f] : g.incident(u))
                if (assigned[f] < 0 && !has_free_colour(f)) { ok = false; break; }
            if (ok)
                for (const auto& [w, f] : g.incident(v))
                    if (assigned[f] < 0 && !has_free_colour(f)) { ok = false; break; }
            if (ok && dfs(idx + 1, std::max(next_new, c + 1))) return true;
            assigned[e] = -1;
            used[u] &= ~(std::uint64_t(1) << c);
            used[v] &= ~(std::uint64_t(1) << c);
        }
        return false;
    }
};

}  // namespace

int chromatic_index_bf(const Multigraph& g, const OracleGuard& guard) {
    if (g.vertex_count() > guard.max_vertices || g.edge_count() > guard.max_edges)
        throw GuardExceeded("chromatic_index_bf: instance above the size guard");
    if (g.edge_count() == 0) return 0;
    // lower bounds: max degree; colour classes are matchings; a triangle's
    // edge set needs pairwise distinct colours
    int lower = g.max_degree();
    if (g.vertex_count() >= 2)
        lower = std::max(lower, (g.edge_count() + g.vertex_count() / 2 - 1) / (g.vertex_count() / 2));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        lower = std::max(lower, g.triangle_weight(u, v));
    }
    Budget budget(guard.seconds);
    for (int k = std::max(lower, 1);; ++k) {
        if (k > guard.max_palette || k > 64)
            throw GuardExceeded("chromatic_index_bf: palette above the guard");
        EdgeColourSearch search(g, k, budget);
        int pivot_degree = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            pivot_degree = std::max(pivot_degree, g.degree(v));
        if (search.dfs(0, pivot_degree)) return k;
    }
}

namespace {

struct CliqueSearch {
    const std::vector<std::uint64_t>& adj;
    Budget& budget;
    int best = 0;

    void expand(std::uint64_t candidates, int size) {
        budget.tick();
        if (size + std::popcount(candidates) <= best) return;
        if (!candidates) {
            best = std::max(best, size);
            return;
        }
        int v = std::countr_zero(candidates);
        expand(candidates & adj[v], size + 1);               // take v
        expand(candidates & ~(std::uint64_t(1) << v), size);  // skip v
    }
};

std::vector<std::uint64_t> adjacency_masks(const SimpleGraph& h) {
    std::vector<std::uint64_t> adj(h.vertex_count(), 0);
    for (int v = 0; v < h.vertex_count(); ++v)
        for (int w : h.neighbours(v)) adj[v] |= std::uint64_t(1) << w;
    return adj;
}

void check_simple_guard(const SimpleGraph& h, const OracleGuard& guard, const char* who) {
    if (h.vertex_count() > guard.max_edges || h.vertex_count() > 64)
        throw GuardExceeded(std::string(who) + ": instance above the size guard");
}

struct VertexColourSearch {
    const SimpleGraph& h;
    const std::vector<std::uint64_t>& adj;
    Budget& budget;
    int n;
    std::vector<int> colour;
    std::vector<int> best_colour;
    int best;

    VertexColourSearch(const SimpleGraph& graph, const std::vector<std::uint64_t>& masks,
                       Budget& b)
        : h(graph), adj(masks), budget(b), n(graph.vertex_count()), colour(n, -1), best(n + 1) {}

    int pick_vertex() const {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0) continue;
            std::uint64_t seen = 0;
            for (int w : h.neighbours(v))
                if (colour[w] >= 0) seen |= std::uint64_t(1) << colour[w];
            int sat = std::popcount(seen);
            int deg = h.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        return pick;
    }

    void dfs(int coloured, int used) {
        budget.tick();
        if (used >= best) return;
        if (coloured == n) {
            best = used;
            best_colour = colour;
            return;
        }
        int v = pick_vertex();
        std::uint64_t seen = 0;
        for (int w : h.neighbours(v))
            if (colour[w] >= 0) seen |= std::uint64_t(1) << colour[w];
        int limit = std::min(used + 1, best - 1);  // existing colours plus one canonical new
        for (int c = 0; c < limit; ++c) {
            if ((seen >> c) & 1) continue;
            colour[v] = c;
            dfs(coloured + 1, std::max(used, c + 1));
            colour[v] = -1;
        }
    }
};

}  // namespace

int max_clique_bf(const SimpleGraph& h, const OracleGuard& guard) {
    check_simple_guard(h, guard, "max_clique_bf");
    if (h.vertex_count() == 0) return 0;
    auto adj = adjacency_masks(h);
    Budget budget(guard.seconds);
    CliqueSearch search{adj, budget};
    std::uint64_t all = h.vertex_count() == 64 ? ~std::uint64_t(0)
                                               : (std::uint64_t(1) << h.vertex_count()) - 1;
    search.expand(all, 0);
    return search.best;
}

int max_clique_containing(const SimpleGraph& h, int v, const OracleGuard& guard) {
    check_simple_guard(h, guard, "max_clique_containing");
    auto adj = adjacency_masks(h);
    Budget budget(guard.seconds);
    CliqueSearch search{adj, budget};
    search.expand(adj[v], 0);
    return search.best + 1;
}

VertexColouringResult optimal_vertex_colouring(const SimpleGraph& h, const OracleGuard& guard) {
    check_simple_guard(h, guard, "optimal_vertex_colouring");
    int n = h.vertex_count();
    if (n == 0) return {0, {}};
    auto adj = adjacency_masks(h);
    Budget budget(guard.seconds);
    VertexColourSearch search(h, adj, budget);

    // greedy clique, pre-coloured to break colour symmetry
    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    std::vector<int> clique;
    for (int v : by_degree) {
        bool fits = true;
        for (int w : clique)
            if (!h.has_edge(v, w)) { fits = false; break; }
        if (fits) clique.push_back(v);
    }
    for (int i = 0; i < static_cast<int>(clique.size()); ++i) search.colour[clique[i]] = i;
    search.dfs(static_cast<int>(clique.size()), static_cast<int>(clique.size()));
    if (search.best > n) throw InvariantViolation("vertex colouring search found no colouring");
    return {search.best, search.best_colour};
}

int chromatic_number_bf(const SimpleGraph& h, const OracleGuard& guard) {
    return optimal_vertex_colouring(h, guard).count;
}

int local_vertex_bound_bf(const SimpleGraph& h, const OracleGuard& guard) {
    int bound = 0;
    for (int v = 0; v < h.vertex_count(); ++v) {
        int omega = max_clique_containing(h, v, guard);
        bound = std::max(bound, (h.degree(v) + 1 + omega + 1) / 2);
    }
    return bound;
}

}  // namespace locol
