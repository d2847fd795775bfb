#ifndef LOCOL_STRIPS_HPP
#define LOCOL_STRIPS_HPP

#include <utility>
#include <vector>

#include "locol/interval.hpp"
#include "locol/simple_graph.hpp"

namespace locol {

/// A pattern digraph (loops allowed) with one linear interval strip per
/// pattern edge. Strip s's end-cliques are its x_size leftmost and y_size
/// rightmost vertices; the composition glues the left clique into the hub of
/// the edge's tail and the right clique into the hub of its head.
struct StripComposition {
    int pattern_n = 0;
    std::vector<std::pair<int, int>> pattern_edges;  // (tail, head)
    std::vector<LinearIntervalGraph> strips;         // one per pattern edge
};

struct Realization {
    SimpleGraph graph;
    std::vector<int> strip_offset;  // global id of each strip's leftmost vertex
    std::vector<int> hub_vertices;  // sorted union of the hub cliques
};

/// Disjoint union of the strips with every hub clique completed.
Realization realize(const StripComposition& sc);

/// Every neighbourhood splits into at most two cliques.
bool is_quasi_line(const SimpleGraph& g);

}  // namespace locol

#endif
