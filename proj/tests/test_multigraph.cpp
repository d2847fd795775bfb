#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "locol/generate.hpp"
#include "locol/multigraph.hpp"

using namespace locol;
using namespace locol::testing;

TEST_CASE("construction rejects loops and bad endpoints") {
    CHECK_THROWS_AS(Multigraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), std::out_of_range);
    Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 3);
}

TEST_CASE("degree sum is twice the edge count") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Multigraph g = random_multigraph(rng, 7, 14, 4);
        int total = 0;
        for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("multiplicity") {
    Multigraph fat3 = fat_triangle(3);
    CHECK(fat3.multiplicity(0, 1) == 3);
    CHECK(fat3.multiplicity(1, 2) == 3);

    Multigraph c5 = cycle_multigraph(5, 1);
    CHECK(c5.multiplicity(0, 2) == 0);

    Multigraph g(3, {{0, 1}, {0, 1}, {0, 2}});
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(1, 0) == 2);
    CHECK_THROWS_AS(g.multiplicity(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.multiplicity(0, 5), std::out_of_range);
}

TEST_CASE("triangle weight") {
    Multigraph g(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 2}, {1, 2}});
    CHECK(g.triangle_weight(0, 1) == 6);  // 2 + 1 + 3

    Multigraph c5 = cycle_multigraph(5, 1);
    CHECK(c5.triangle_weight(0, 1) == 1);  // triangle-free: falls back to the multiplicity

    Multigraph fat2 = fat_triangle(2);
    CHECK(fat2.triangle_weight(0, 1) == bf_triangle_weight(fat2, 0, 1));
    CHECK(fat2.triangle_weight(0, 1) == 6);

    CHECK_THROWS_AS(c5.triangle_weight(0, 2), std::invalid_argument);
}

TEST_CASE("triangle weight matches the scan oracle on random graphs") {
    Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = random_multigraph(rng, 6, 12, 3);
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            CHECK(g.triangle_weight(u, v) == bf_triangle_weight(g, u, v));
            CHECK(g.multiplicity(u, v) == bf_multiplicity(g, u, v));
        }
    }
}

TEST_CASE("local edge bound on the named instances") {
    CHECK(local_edge_bound(fat_triangle(1)).gamma == 3);        // K3
    CHECK(local_edge_bound(cycle_multigraph(5, 2)).gamma == 5); // doubled five-cycle
    CHECK(local_edge_bound(star(3)).gamma == 3);
    CHECK(local_edge_bound(fat_triangle(3)).gamma == 9);
    CHECK(local_edge_bound(petersen()).gamma == 4);

    EdgeBoundReport empty = local_edge_bound(Multigraph(4, {}));
    CHECK(empty.gamma == 0);
    CHECK(empty.argmax_edge == -1);
    CHECK(empty.terms.empty());
}

TEST_CASE("term breakdown for K3") {
    EdgeBoundReport report = local_edge_bound(fat_triangle(1));
    REQUIRE(report.terms.size() == 3);
    for (const EdgeTerms& t : report.terms) {
        CHECK(t.term_u2 == 5);   // 2*2 + 2 - 1
        CHECK(t.term_v2 == 5);
        CHECK(t.term_t2 == 6);   // 2 + 2 - 1 + 3
    }
    CHECK(report.argmax_edge == 0);
}

TEST_CASE("bound matches the independent evaluation on random graphs") {
    Rng rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        Multigraph g = random_multigraph(rng, 7, 14, 4);
        CHECK(local_edge_bound(g).gamma == bf_local_edge_bound(g));
    }
}

TEST_CASE("bound sits between the degree and three-halves of it") {
    Rng rng(14);
    for (int trial = 0; trial < 120; ++trial) {
        Multigraph g = random_multigraph(rng, 7, 14, 4);
        int gamma = local_edge_bound(g).gamma;
        int delta = g.max_degree();
        CHECK(gamma >= delta);
        CHECK(gamma <= (3 * delta + 1) / 2);
    }
}

TEST_CASE("bound is invariant under relabelling and edge reordering") {
    Rng rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = random_multigraph(rng, 6, 10, 3);
        int gamma = local_edge_bound(g).gamma;

        std::vector<int> perm(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) perm[v] = v;
        for (int i = g.vertex_count() - 1; i > 0; --i) std::swap(perm[i], perm[rng.range(0, i)]);
        CHECK(local_edge_bound(g.relabelled(perm)).gamma == gamma);

        std::vector<std::pair<int, int>> edges = g.edges();
        std::reverse(edges.begin(), edges.end());
        CHECK(local_edge_bound(Multigraph(g.vertex_count(), edges)).gamma == gamma);
    }
}

TEST_CASE("adding a parallel edge never lowers the bound") {
    Rng rng(16);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = random_multigraph(rng, 6, 10, 3);
        int gamma = local_edge_bound(g).gamma;
        std::vector<std::pair<int, int>> edges = g.edges();
        edges.push_back(edges[rng.range(0, g.edge_count() - 1)]);
        CHECK(local_edge_bound(Multigraph(g.vertex_count(), edges)).gamma >= gamma);
    }
}

TEST_CASE("triangle weight dominates every common triangle") {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = random_multigraph(rng, 6, 12, 3);
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v) {
                if (g.multiplicity(u, v) == 0) continue;
                for (int w = 0; w < g.vertex_count(); ++w) {
                    if (w == u || w == v) continue;
                    if (g.multiplicity(u, w) == 0 || g.multiplicity(v, w) == 0) continue;
                    CHECK(g.multiplicity(u, v) + g.multiplicity(u, w) + g.multiplicity(v, w) <=
                          g.triangle_weight(u, v));
                }
            }
    }
}
