#ifndef LOCOL_EXTEND_HPP
#define LOCOL_EXTEND_HPP

#include <utility>
#include <vector>

#include "locol/colouring.hpp"
#include "locol/multigraph.hpp"
#include "locol/trace.hpp"

namespace locol {

/// Completes the colouring of uncoloured edge e0. c0 must be proper; edges
/// other than e0 may be uncoloured, in which case they are simply invisible
/// to the procedure (only coloured edges steer it). Rejects palettes below
/// the local bound of g. Returns the completed colouring.
PartialEdgeColouring extend_one_edge(const Multigraph& g, const PartialEdgeColouring& c0, int e0,
                                     const TraceSink* trace = nullptr);

/// Same procedure without the bound recomputation, for callers that already
/// guarantee k is feasible. Mutates c.
void extend_one_edge_unchecked(const Multigraph& g, PartialEdgeColouring& c, int e0,
                               const TraceSink* trace = nullptr);

/// Colours all edges of g with palette k by inserting them one at a time in
/// the given order (empty = input order) and extending after each insertion.
PartialEdgeColouring edge_colour(const Multigraph& g, int k, const std::vector<int>& order = {},
                                 const TraceSink* trace = nullptr);

/// edge_colour with the smallest palette the local bound allows, plus the
/// bound report it was derived from.
std::pair<PartialEdgeColouring, EdgeBoundReport> edge_colour_optimal_local(
    const Multigraph& g, const TraceSink* trace = nullptr);

/// Deterministic seeded permutation of 0..m-1 for --order random.
std::vector<int> random_edge_order(int m, std::uint64_t seed);

}  // namespace locol

#endif
