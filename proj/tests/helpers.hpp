#ifndef LOCOL_TEST_HELPERS_HPP
#define LOCOL_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "locol/colouring.hpp"
#include "locol/generate.hpp"
#include "locol/multigraph.hpp"

namespace locol::testing {

// Independent oracles for the multigraph statistics: straight scans over the
// edge list, no shared code with the library's indexed versions.

inline int bf_multiplicity(const Multigraph& g, int u, int v) {
    int count = 0;
    for (auto [a, b] : g.edges())
        if ((a == u && b == v) || (a == v && b == u)) ++count;
    return count;
}

inline int bf_triangle_weight(const Multigraph& g, int u, int v) {
    int best = 0;
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == u || w == v) continue;
        int uw = bf_multiplicity(g, u, w), vw = bf_multiplicity(g, v, w);
        if (uw > 0 && vw > 0) best = std::max(best, uw + vw);
    }
    return bf_multiplicity(g, u, v) + best;
}

// The local edge bound evaluated directly from its definition in floating
// point, with one final rounding.
inline int bf_local_edge_bound(const Multigraph& g) {
    double best = 0;
    bool any = false;
    for (auto [u, v] : g.edges()) {
        any = true;
        double du = 0, dv = 0;
        for (auto [a, b] : g.edges()) {
            du += (a == u) + (b == u);
            dv += (a == v) + (b == v);
        }
        double mu = bf_multiplicity(g, u, v);
        double t = bf_triangle_weight(g, u, v);
        best = std::max({best, du + (dv - mu) / 2, dv + (du - mu) / 2, (du + dv - mu + t) / 2});
    }
    return any ? static_cast<int>(std::ceil(best - 1e-9)) : 0;
}

// Proper partial colouring with roughly `fill` of the edges coloured, built
// by first-fit over a random edge order; used to seed property tests.
inline PartialEdgeColouring random_partial_colouring(const Multigraph& g, int k, Rng& rng,
                                                     double fill = 0.7) {
    PartialEdgeColouring c(g, k);
    std::vector<int> order(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) order[e] = e;
    for (int i = g.edge_count() - 1; i > 0; --i)
        std::swap(order[i], order[rng.range(0, i)]);
    for (int e : order) {
        if (rng.next(1000) >= static_cast<std::uint64_t>(fill * 1000)) continue;
        auto [u, v] = g.endpoints(e);
        for (int col = 0; col < k; ++col) {
            if (c.missing_at(u, col) && c.missing_at(v, col)) {
                c.assign(e, col);
                break;
            }
        }
    }
    return c;
}

}  // namespace locol::testing

#endif
