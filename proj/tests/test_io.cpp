#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "locol/colouring.hpp"
#include "locol/errors.hpp"
#include "locol/generate.hpp"
#include "locol/multigraph.hpp"
#include "locol/simple_graph.hpp"

using namespace locol;
using namespace locol::testing;

namespace {

std::string write_mg(const Multigraph& g) {
    std::ostringstream out;
    g.write(out);
    return out.str();
}

}  // namespace

TEST_CASE("multigraph files round-trip byte for byte") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        Multigraph g = random_multigraph(rng, 7, 14, 4);
        std::string once = write_mg(g);
        std::istringstream in(once);
        std::string twice = write_mg(Multigraph::parse(in));
        CHECK(once == twice);
    }
}

TEST_CASE("comments are accepted and dropped") {
    std::istringstream in("c generated by hand\np mgraph 3 2\nc mid-file note\ne 0 1\ne 1 2\n");
    Multigraph g = Multigraph::parse(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(write_mg(g) == "p mgraph 3 2\ne 0 1\ne 1 2\n");
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream loop("p mgraph 2 1\ne 1 1\n");
    try {
        Multigraph::parse(loop);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line_number == 2);
        CHECK(std::string(e.what()).find("loop") != std::string::npos);
    }

    std::istringstream bad("p mgraph 2 1\nx 0 1\n");
    CHECK_THROWS_AS(Multigraph::parse(bad), ParseError);

    std::istringstream headerless("e 0 1\n");
    CHECK_THROWS_AS(Multigraph::parse(headerless), ParseError);

    std::istringstream miscount("p mgraph 2 2\ne 0 1\n");
    CHECK_THROWS_AS(Multigraph::parse(miscount), ParseError);
}

TEST_CASE("colouring files round-trip") {
    Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        Multigraph g = random_multigraph(rng, 6, 10, 3);
        PartialEdgeColouring c = random_partial_colouring(g, 5, rng);
        std::ostringstream once;
        c.write(once);
        std::istringstream in(once.str());
        PartialEdgeColouring back = PartialEdgeColouring::parse(in, g);
        std::ostringstream twice;
        back.write(twice);
        CHECK(once.str() == twice.str());
        CHECK(!back.validate().has_value());
    }
}

TEST_CASE("colouring parser flags improper files") {
    Multigraph g = path_graph(3);
    std::istringstream in("s colouring 2\nl 0 1\nl 1 1\n");  // both edges meet at vertex 1
    CHECK_THROWS_AS(PartialEdgeColouring::parse(in, g), std::invalid_argument);
}

TEST_CASE("simple graph files round-trip and reject duplicates") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    std::ostringstream once;
    g.write(once);
    std::istringstream in(once.str());
    SimpleGraph back = SimpleGraph::parse(in);
    std::ostringstream twice;
    back.write(twice);
    CHECK(once.str() == twice.str());

    std::istringstream dup("p graph 2 2\ne 0 1\ne 1 0\n");
    CHECK_THROWS_AS(SimpleGraph::parse(dup), ParseError);
}
