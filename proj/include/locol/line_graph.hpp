#ifndef LOCOL_LINE_GRAPH_HPP
#define LOCOL_LINE_GRAPH_HPP

#include <string>
#include <vector>

#include "locol/colouring.hpp"
#include "locol/multigraph.hpp"
#include "locol/oracle.hpp"
#include "locol/simple_graph.hpp"

namespace locol {

/// Line graph of g: one vertex per edge id, adjacency iff the edges share an
/// endpoint. Materialised explicitly, so desk scale only; the colouring path
/// below never builds it.
SimpleGraph line_graph(const Multigraph& g);

struct LineCorrespondenceReport {
    struct Mismatch {
        int edge;
        std::string what;
    };
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Checks, per edge uv of g: its degree in L(g) equals d(u)+d(v)-mu(uv)-1;
/// the largest clique of L(g) through it equals max{d(u), d(v), t(uv)}; and
/// the local vertex bound of L(g) equals the local edge bound of g. Brute
/// force, guarded.
LineCorrespondenceReport check_line_correspondence(const Multigraph& g,
                                                   const OracleGuard& guard = OracleGuard::from_env());

/// Edge-colours g within its local bound and reads the result as a vertex
/// colouring of L(g) (0-based colours; index = edge id of g).
std::vector<int> vertex_colour_line_graph(const Multigraph& g);

}  // namespace locol

#endif
