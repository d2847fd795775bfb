#ifndef LOCOL_TEST_JOIN_FIXTURES_HPP
#define LOCOL_TEST_JOIN_FIXTURES_HPP

#include <utility>
#include <vector>

#include "locol/join.hpp"

namespace locol::testing {

struct JoinFixture {
    const char* name;
    CanonicalJoin join;
    std::vector<int> c1;  // host-sized, -1 on the interval side
    int l;
    int expected_case;    // dispatch counter expected to fire first
};

inline LinearIntervalGraph fixture_path(int n) {
    std::vector<Rat> pts;
    std::vector<std::pair<Rat, Rat>> ivs;
    for (int i = 0; i < n; ++i) pts.emplace_back(i, 1);
    for (int i = 0; i + 1 < n; ++i) ivs.emplace_back(Rat(i, 1), Rat(i + 1, 1));
    return LinearIntervalGraph(std::move(pts), std::move(ivs), 1, 1);
}

// triangle first side with singleton attachment cliques; the worked example
// with a two-vertex path on the interval side
inline JoinFixture fixture_triangle_edge() {
    CanonicalJoin j;
    j.host = SimpleGraph(5);
    j.host.add_edge(0, 1);
    j.host.add_edge(0, 2);
    j.host.add_edge(1, 2);
    j.host.add_edge(3, 4);
    j.host.add_edge(0, 3);
    j.host.add_edge(1, 4);
    j.v1 = {0, 1, 2};
    j.v2 = {3, 4};
    j.x1 = {0};
    j.y1 = {1};
    j.v2_interval = fixture_path(2);
    return {"triangle-edge", std::move(j), {0, 1, 2, -1, -1}, 3, 2};
}

// nested attachment cliques: the larger one is a clique cutset
inline JoinFixture fixture_nested() {
    CanonicalJoin j;
    j.host = SimpleGraph(5);
    j.host.add_edge(0, 1);
    j.host.add_edge(0, 2);
    j.host.add_edge(1, 2);
    j.host.add_edge(3, 4);
    j.host.add_edge(0, 3);
    j.host.add_edge(1, 3);
    j.host.add_edge(0, 4);
    j.v1 = {0, 1, 2};
    j.v2 = {3, 4};
    j.x1 = {0, 1};
    j.y1 = {0};
    j.v2_interval = fixture_path(2);
    return {"nested", std::move(j), {0, 1, 2, -1, -1}, 4, 1};
}

// no shared colours, palette exactly the sum of the clique sizes, easy
// sub-branch (enough spare colours for the right end-clique)
inline JoinFixture fixture_tight_easy() {
    CanonicalJoin j;
    j.host = SimpleGraph(7);
    for (int i = 0; i < 4; ++i)
        for (int jj = i + 1; jj < 4; ++jj) j.host.add_edge(i, jj);  // K4 on {x1,x2,y1,y2}
    j.host.add_edge(4, 5);
    j.host.add_edge(5, 6);
    j.host.add_edge(0, 4);
    j.host.add_edge(1, 4);
    j.host.add_edge(2, 6);
    j.host.add_edge(3, 6);
    j.v1 = {0, 1, 2, 3};
    j.v2 = {4, 5, 6};
    j.x1 = {0, 1};
    j.y1 = {2, 3};
    j.v2_interval = fixture_path(3);
    return {"tight-easy", std::move(j), {0, 1, 2, 3, -1, -1, -1}, 4, 3};
}

// no shared colours, tight palette, spare count zero: exercises the roll
// back of the modular colouring
inline JoinFixture fixture_tight_rollback() {
    CanonicalJoin j;
    j.host = SimpleGraph(12);
    for (int i = 0; i < 5; ++i)
        for (int jj = i + 1; jj < 5; ++jj) j.host.add_edge(i, jj);  // K5 on V1
    for (int i = 6; i < 11; ++i)
        for (int jj = i + 1; jj < 11; ++jj) j.host.add_edge(i, jj);  // clique a..e
    j.host.add_edge(0, 5);
    j.host.add_edge(1, 5);
    j.host.add_edge(2, 5);   // X1 x {p}
    j.host.add_edge(3, 11);
    j.host.add_edge(4, 11);  // Y1 x {r}
    j.v1 = {0, 1, 2, 3, 4};
    j.v2 = {5, 6, 7, 8, 9, 10, 11};
    j.x1 = {0, 1, 2};
    j.y1 = {3, 4};
    std::vector<Rat> pts;
    for (int i = 0; i < 7; ++i) pts.emplace_back(i, 1);
    std::vector<std::pair<Rat, Rat>> ivs = {{Rat(1, 1), Rat(5, 1)}};
    j.v2_interval = LinearIntervalGraph(std::move(pts), std::move(ivs), 1, 1);
    return {"tight-rollback", std::move(j), {0, 1, 2, 3, 4, -1, -1, -1, -1, -1, -1, -1}, 5, 3};
}

// one shared colour, smaller than the left clique
inline JoinFixture fixture_partial_overlap() {
    CanonicalJoin j;
    j.host = SimpleGraph(5);
    j.host.add_edge(0, 1);   // the left clique
    j.host.add_edge(3, 4);   // the interval path
    j.host.add_edge(0, 3);
    j.host.add_edge(1, 3);
    j.host.add_edge(2, 4);
    j.v1 = {0, 1, 2};
    j.v2 = {3, 4};
    j.x1 = {0, 1};
    j.y1 = {2};
    j.v2_interval = fixture_path(2);
    return {"partial-overlap", std::move(j), {0, 1, 0, -1, -1}, 4, 4};
}

// singleton cliques sharing one colour, connected interval side
inline JoinFixture fixture_single_overlap() {
    CanonicalJoin j;
    j.host = SimpleGraph(4);
    j.host.add_edge(2, 3);
    j.host.add_edge(0, 2);
    j.host.add_edge(1, 3);
    j.v1 = {0, 1};
    j.v2 = {2, 3};
    j.x1 = {0};
    j.y1 = {1};
    j.v2_interval = fixture_path(2);
    return {"single-overlap", std::move(j), {0, 0, -1, -1}, 3, 5};
}

// singleton cliques sharing one colour, disconnected interval side
inline JoinFixture fixture_single_overlap_disconnected() {
    CanonicalJoin j;
    j.host = SimpleGraph(4);
    j.host.add_edge(0, 2);
    j.host.add_edge(1, 3);
    j.v1 = {0, 1};
    j.v2 = {2, 3};
    j.x1 = {0};
    j.y1 = {1};
    std::vector<Rat> pts = {Rat(0, 1), Rat(1, 1)};
    j.v2_interval = LinearIntervalGraph(std::move(pts), {}, 1, 1);
    return {"single-overlap-disconnected", std::move(j), {0, 0, -1, -1}, 2, 5};
}

// both cliques share every colour and no vertex can be recoloured
inline JoinFixture fixture_full_overlap_minimal() {
    CanonicalJoin j;
    j.host = SimpleGraph(10);
    for (int i = 0; i < 4; ++i)
        for (int jj = i + 1; jj < 4; ++jj) j.host.add_edge(i, jj);
    for (int i = 4; i < 8; ++i)
        for (int jj = i + 1; jj < 8; ++jj) j.host.add_edge(i, jj);
    j.host.add_edge(8, 9);
    j.host.add_edge(0, 8);
    j.host.add_edge(1, 8);
    j.host.add_edge(4, 9);
    j.host.add_edge(5, 9);
    j.v1 = {0, 1, 2, 3, 4, 5, 6, 7};
    j.v2 = {8, 9};
    j.x1 = {0, 1};
    j.y1 = {4, 5};
    j.v2_interval = fixture_path(2);
    return {"full-overlap-minimal", std::move(j),
            {0, 1, 2, 3, 0, 1, 2, 3, -1, -1}, 4, 6};
}

// both cliques share every colour but one vertex has a spare colour in its
// closed neighbourhood: drops into the partial-overlap case
inline JoinFixture fixture_full_overlap_recolour() {
    CanonicalJoin j;
    j.host = SimpleGraph(10);
    // near-K4 missing the 0-3 edge
    j.host.add_edge(0, 1);
    j.host.add_edge(0, 2);
    j.host.add_edge(1, 2);
    j.host.add_edge(1, 3);
    j.host.add_edge(2, 3);
    for (int i = 4; i < 8; ++i)
        for (int jj = i + 1; jj < 8; ++jj) j.host.add_edge(i, jj);
    j.host.add_edge(8, 9);
    j.host.add_edge(0, 8);
    j.host.add_edge(1, 8);
    j.host.add_edge(4, 9);
    j.host.add_edge(5, 9);
    j.v1 = {0, 1, 2, 3, 4, 5, 6, 7};
    j.v2 = {8, 9};
    j.x1 = {0, 1};
    j.y1 = {4, 5};
    j.v2_interval = fixture_path(2);
    return {"full-overlap-recolour", std::move(j),
            {0, 1, 2, 0, 0, 1, 2, 3, -1, -1}, 4, 6};
}

inline std::vector<JoinFixture> all_join_fixtures() {
    std::vector<JoinFixture> out;
    out.push_back(fixture_triangle_edge());
    out.push_back(fixture_nested());
    out.push_back(fixture_tight_easy());
    out.push_back(fixture_tight_rollback());
    out.push_back(fixture_partial_overlap());
    out.push_back(fixture_single_overlap());
    out.push_back(fixture_single_overlap_disconnected());
    out.push_back(fixture_full_overlap_minimal());
    out.push_back(fixture_full_overlap_recolour());
    return out;
}

}  // namespace locol::testing

#endif
