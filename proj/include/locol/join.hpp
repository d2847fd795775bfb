#ifndef LOCOL_JOIN_HPP
#define LOCOL_JOIN_HPP

#include <array>
#include <vector>

#include "locol/interval.hpp"
#include "locol/simple_graph.hpp"

namespace locol {

/// A two-sided composition: the host's vertices split into V1 and V2, with
/// cross edges exactly X1 x X2 union Y1 x Y2, where X1, Y1 are cliques in
/// the V1 side and X2, Y2 are the disjoint end-cliques of the interval
/// representation of the V2 side.
struct CanonicalJoin {
    SimpleGraph host;
    std::vector<int> v1;              // ascending
    std::vector<int> v2;              // in interval point order
    std::vector<int> x1, y1;          // ascending subsets of v1
    LinearIntervalGraph v2_interval;  // positional over v2

    std::vector<int> x2() const;      // global ids of the left end-clique
    std::vector<int> y2() const;
};

/// Structural checks: partition, clique-ness, cross-edge pattern, interval
/// consistency, disjoint nonempty end-cliques on the V2 side. Throws
/// std::invalid_argument naming the first failure.
void validate_canonical_join(const CanonicalJoin& j);

/// Join-local bound over H2 = host | (V2 + X1 + Y1): the largest value of
/// ceil((d(v) + 1 + omega'(v)) / 2), where omega'(v) ranges over cliques of
/// H2 through v that avoid meeting both X1\Y1 and Y1\X1.
int gamma_l_join(const CanonicalJoin& j);

struct JoinCaseCounters {
    std::array<int, 7> fired{};  // index 1..6 per dispatch case
    int degenerate = 0;          // residual instances with an empty cross side
    int case3_rollback = 0;
    int case6_recolour = 0;
};

/// Extends a proper colouring of the V1 side (host-sized vector, -1 outside
/// V1, colours in 0..l-1) to the whole host using at most l colours,
/// provided l >= gamma_l_join. Recolours V1 only while aligning the two
/// end-clique colour sets up front and in the one single-vertex step the
/// large-overlap case allows.
std::vector<int> extend_over_join(const CanonicalJoin& j, const std::vector<int>& c1, int l,
                                  JoinCaseCounters* counters = nullptr);

}  // namespace locol

#endif
