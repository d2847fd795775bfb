#include <doctest.h>

#include "helpers.hpp"
#include "locol/generate.hpp"
#include "locol/strips.hpp"

using namespace locol;
using namespace locol::testing;

namespace {

LinearIntervalGraph single_vertex_strip() { return LinearIntervalGraph({Rat(0, 1)}, {}, 1, 1); }

LinearIntervalGraph two_path_strip() {
    return LinearIntervalGraph({Rat(0, 1), Rat(1, 1)}, {{Rat(0, 1), Rat(1, 1)}}, 1, 1);
}

}  // namespace

TEST_CASE("a triangle pattern with single-vertex strips realises a triangle") {
    StripComposition sc;
    sc.pattern_n = 3;
    sc.pattern_edges = {{0, 1}, {1, 2}, {2, 0}};
    sc.strips = {single_vertex_strip(), single_vertex_strip(), single_vertex_strip()};
    Realization r = realize(sc);
    CHECK(r.graph.vertex_count() == 3);
    CHECK(r.graph.edge_count() == 3);
    CHECK(r.hub_vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("a single two-vertex strip realises one edge") {
    StripComposition sc;
    sc.pattern_n = 2;
    sc.pattern_edges = {{0, 1}};
    sc.strips = {two_path_strip()};
    Realization r = realize(sc);
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.graph.edge_count() == 1);
}

TEST_CASE("parallel pattern edges with single-vertex strips share both hubs") {
    StripComposition sc;
    sc.pattern_n = 2;
    sc.pattern_edges = {{0, 1}, {0, 1}};
    sc.strips = {single_vertex_strip(), single_vertex_strip()};
    Realization r = realize(sc);
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.graph.has_edge(0, 1));
    CHECK(r.graph.edge_count() == 1);
}

TEST_CASE("a loop contributes both end-cliques to one hub") {
    StripComposition sc;
    sc.pattern_n = 1;
    sc.pattern_edges = {{0, 0}};
    // two vertices, no internal edge; the loop's hub makes them adjacent
    sc.strips = {LinearIntervalGraph({Rat(0, 1), Rat(1, 1)}, {}, 1, 1)};
    Realization r = realize(sc);
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.graph.has_edge(0, 1));
}

TEST_CASE("realizations are quasi-line") {
    Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        GeneratedComposition gen = random_strip_composition(rng, 12);
        CHECK(is_quasi_line(gen.realization.graph));
    }
}

TEST_CASE("the two-clique neighbourhood test rejects a claw centre") {
    SimpleGraph claw(4);
    claw.add_edge(0, 1);
    claw.add_edge(0, 2);
    claw.add_edge(0, 3);
    CHECK(neighbourhood_two_clique_coverable(claw, 1));
    // three pairwise non-adjacent neighbours cannot split into two cliques
    CHECK(!neighbourhood_two_clique_coverable(claw, 0));
    CHECK(!is_quasi_line(claw));
}

TEST_CASE("mismatched strip counts are rejected") {
    StripComposition sc;
    sc.pattern_n = 2;
    sc.pattern_edges = {{0, 1}};
    CHECK_THROWS_AS(realize(sc), std::invalid_argument);
    sc.strips = {single_vertex_strip()};
    sc.pattern_edges = {{0, 5}};
    CHECK_THROWS_AS(realize(sc), std::out_of_range);
}
