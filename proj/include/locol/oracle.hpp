#ifndef LOCOL_ORACLE_HPP
#define LOCOL_ORACLE_HPP

#include <vector>

#include "locol/multigraph.hpp"
#include "locol/simple_graph.hpp"

namespace locol {

/// Size/time limits checked before any exponential search. Multigraph
/// oracles check max_vertices and max_edges; simple-graph oracles cap the
/// vertex count at max_edges (their instances arise from edge sets).
/// Defaults come from the environment variable LC_ORACLE_GUARD=n,m,k,secs
/// when it is set.
struct OracleGuard {
    int max_vertices = 8;
    int max_edges = 16;
    int max_palette = 12;
    double seconds = 10.0;

    static const OracleGuard& from_env();
    OracleGuard raised(int n, int m, int k) const;
};

/// Exact chromatic index by backtracking over edge colourings: edges in
/// descending conflict-degree order, forward checking, the colours of one
/// maximum-degree vertex's edges fixed up front.
int chromatic_index_bf(const Multigraph& g, const OracleGuard& guard = OracleGuard::from_env());

struct VertexColouringResult {
    int count = 0;
    std::vector<int> colour;
};

/// Exact chromatic number plus a witness colouring, by branch-and-bound with
/// a greedy clique pre-colouring and saturation-ordered branching.
VertexColouringResult optimal_vertex_colouring(const SimpleGraph& h,
                                               const OracleGuard& guard = OracleGuard::from_env());

int chromatic_number_bf(const SimpleGraph& h, const OracleGuard& guard = OracleGuard::from_env());

/// Size of the largest clique of h; and largest containing a given vertex.
int max_clique_bf(const SimpleGraph& h, const OracleGuard& guard = OracleGuard::from_env());
int max_clique_containing(const SimpleGraph& h, int v,
                          const OracleGuard& guard = OracleGuard::from_env());

/// Local vertex bound: max over v of ceil((d(v) + 1 + omega(v)) / 2), with
/// omega(v) from the clique oracle.
int local_vertex_bound_bf(const SimpleGraph& h, const OracleGuard& guard = OracleGuard::from_env());

}  // namespace locol

#endif
