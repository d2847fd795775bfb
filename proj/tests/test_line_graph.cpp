#include <doctest.h>

#include "helpers.hpp"
#include "locol/generate.hpp"
#include "locol/line_graph.hpp"

using namespace locol;
using namespace locol::testing;

TEST_CASE("line graphs of the tiny fixtures") {
    SimpleGraph lk13 = line_graph(star(3));
    CHECK(lk13.vertex_count() == 3);
    CHECK(lk13.edge_count() == 3);  // a triangle

    SimpleGraph lp3 = line_graph(path_graph(3));
    CHECK(lp3.vertex_count() == 2);
    CHECK(lp3.edge_count() == 1);

    SimpleGraph lc5 = line_graph(cycle_multigraph(5, 1));
    CHECK(lc5.vertex_count() == 5);
    CHECK(lc5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(lc5.degree(v) == 2);  // again a five-cycle
}

TEST_CASE("line graph size identities") {
    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        Multigraph g = random_multigraph(rng, 6, 12, 3);
        SimpleGraph l = line_graph(g);
        CHECK(l.vertex_count() == g.edge_count());
        int degree_sum = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            degree_sum += g.degree(u) + g.degree(v) - g.multiplicity(u, v) - 1;
        }
        int actual = 0;
        for (int v = 0; v < l.vertex_count(); ++v) actual += l.degree(v);
        CHECK(actual == degree_sum);
    }
}

TEST_CASE("correspondence report on named instances") {
    CHECK(check_line_correspondence(fat_triangle(1)).ok());
    CHECK(check_line_correspondence(star(3)).ok());
    OracleGuard guard = OracleGuard::from_env().raised(10, 10, 10);
    CHECK(check_line_correspondence(cycle_multigraph(5, 2), guard).ok());
}

TEST_CASE("correspondence holds on random instances") {
    Rng rng(62);
    for (int trial = 0; trial < 25; ++trial) {
        Multigraph g = random_multigraph(rng, 6, 9, 3);
        CHECK(check_line_correspondence(g).ok());
    }
}

TEST_CASE("edge colourings transfer to vertex colourings and back") {
    Rng rng(63);
    for (int trial = 0; trial < 30; ++trial) {
        Multigraph g = random_multigraph(rng, 6, 10, 3);
        SimpleGraph l = line_graph(g);
        int k = local_edge_bound(g).gamma;
        PartialEdgeColouring c = random_partial_colouring(g, k, rng);
        std::vector<int> as_vertices(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) as_vertices[e] = c.colour(e);
        CHECK(proper_vertex_colouring(l, as_vertices));

        // and any improper vertex colouring maps back to an edge conflict
        if (g.edge_count() >= 2 && l.edge_count() > 0) {
            auto [a, b] = l.edges().front();
            std::vector<int> clash(g.edge_count(), -1);
            clash[a] = clash[b] = 0;
            CHECK(!proper_vertex_colouring(l, clash));
            PartialEdgeColouring probe(g, k);
            probe.assign(a, 0);
            auto [u, v] = g.endpoints(b);
            CHECK((!probe.missing_at(u, 0) || !probe.missing_at(v, 0)));
        }
    }
}

TEST_CASE("vertex colouring of line graphs via the engine") {
    std::vector<int> k3 = vertex_colour_line_graph(fat_triangle(1));
    CHECK(*std::max_element(k3.begin(), k3.end()) == 2);  // three colours

    std::vector<int> c5 = vertex_colour_line_graph(cycle_multigraph(5, 1));
    CHECK(proper_vertex_colouring(line_graph(cycle_multigraph(5, 1)), c5));
    CHECK(*std::max_element(c5.begin(), c5.end()) + 1 == 3);

    Multigraph c5x2 = cycle_multigraph(5, 2);
    std::vector<int> doubled = vertex_colour_line_graph(c5x2);
    CHECK(proper_vertex_colouring(line_graph(c5x2), doubled));
    CHECK(*std::max_element(doubled.begin(), doubled.end()) + 1 == 5);
}
