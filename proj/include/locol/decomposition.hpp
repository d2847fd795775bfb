#ifndef LOCOL_DECOMPOSITION_HPP
#define LOCOL_DECOMPOSITION_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "locol/interval.hpp"
#include "locol/join.hpp"
#include "locol/multigraph.hpp"
#include "locol/simple_graph.hpp"

namespace locol {

/// Node of a decomposition tree over one global vertex id space. Leaves are
/// either line graphs of multigraphs or circular interval graphs; internal
/// nodes glue children on a clique cutset or attach an interval side through
/// a canonical join.
struct TreeNode {
    enum Kind { kLeafLine, kLeafCirc, kCut, kJoin } kind = kLeafLine;

    // leaf line
    Multigraph mg;
    std::string mg_path;
    std::vector<int> vmap;  // edge id of mg -> global vertex

    // leaf circ
    CircularIntervalGraph circ;
    std::vector<int> cmap;  // position -> global vertex

    // cut
    int child_a = -1, child_b = -1;
    std::vector<int> cut;

    // join
    int child_g1 = -1;
    std::vector<int> x1, y1;   // global ids inside the child
    std::vector<int> v2ids;    // position -> global vertex (fresh ids)
    LinearIntervalGraph v2li;
};

struct DecompositionTree {
    std::vector<TreeNode> nodes;  // children precede parents; last node is the root
    int root() const { return static_cast<int>(nodes.size()) - 1; }
};

/// Global universe size (max mentioned vertex id + 1).
int tree_universe(const DecompositionTree& tree);

/// Sorted global vertex ids of a subtree.
std::vector<int> tree_vertices(const DecompositionTree& tree, int node);

/// Graph of a subtree over the global id space (vertices outside the
/// subtree are isolated). Validates the structural invariants on the way:
/// cut children overlap exactly in the cut, which is a clique in both; join
/// sides are disjoint with a consistent interval representation.
SimpleGraph tree_graph(const DecompositionTree& tree, int node);

/// Permutes c2's colour classes so the two colourings agree on the cutset
/// (a clique coloured in both), then returns their union. Vectors are over
/// the global id space with -1 for absent vertices; palette [0,l).
std::vector<int> paste_on_clique_cutset(const std::vector<int>& c1, const std::vector<int>& c2,
                                        const std::vector<int>& cut, int l);

struct DecompositionColouring {
    std::vector<int> colour;  // global ids; -1 outside the root's vertex set
    int palette = 0;          // l used for the combination steps
    int used = 0;             // distinct colours in the result
};

/// Colours the tree bottom-up: line leaves through the edge-colouring
/// engine, circular leaves exactly, then clique-cutset pastes and join
/// extensions upward. The result is proper on the root graph.
DecompositionColouring colour_decomposition(const DecompositionTree& tree,
                                            JoinCaseCounters* counters = nullptr);

DecompositionTree parse_qltree(std::istream& in, const std::string& base_dir);
DecompositionTree load_qltree(const std::string& path);
void write_qltree(const DecompositionTree& tree, std::ostream& out);

}  // namespace locol

#endif
