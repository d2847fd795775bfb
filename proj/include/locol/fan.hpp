#ifndef LOCOL_FAN_HPP
#define LOCOL_FAN_HPP

#include <cstdint>
#include <vector>

#include "locol/colouring.hpp"
#include "locol/multigraph.hpp"
#include "locol/trace.hpp"

namespace locol {

/// A fan hinged at a vertex: an uncoloured edge e0 to the first fan vertex,
/// then further neighbours of the hinge, each justified by a witness edge
/// whose colour is missing at an earlier fan vertex. Arrays are 1-based over
/// fan vertices (index 0 reserved for the hinge where applicable).
struct Fan {
    int hinge = -1;
    int e0 = -1;
    std::vector<int> seq;    // seq[j] = j-th fan vertex, j = 1..size; seq[0] unused
    std::vector<int> edge;   // edge[j] = witness edge for j >= 2; edge[1] = e0
    std::vector<int> back;   // back[j] = earlier index whose vertex misses colour(edge[j])
    // Missing-colour bitmasks snapshotted at build time: missing[0] is the
    // hinge's, missing[j] the j-th fan vertex's. Patched after Kempe swaps.
    std::vector<std::vector<std::uint64_t>> missing;
    std::uint64_t touched = 0;  // edges scanned + colour words handled while building

    int size() const { return static_cast<int>(seq.size()) - 1; }
    int degree_sum(const Multigraph& g) const;
};

/// Grows the fan starting (e0; hinge; other endpoint of e0) until no
/// neighbour of the hinge can extend it. Deterministic: extensions pick the
/// smallest eligible colour.
Fan build_maximal_fan(const Multigraph& g, const PartialEdgeColouring& c, int e0, int hinge);

/// True iff f's witness structure holds under c.
bool fan_is_valid(const Multigraph& g, const PartialEdgeColouring& c, const Fan& f);

/// Shifts colours down the witness chain of index j: edge[j]'s colour moves
/// to edge[back[j]], that edge's colour moves further down, and the last
/// shift colours e0. Afterwards edge[j] is the unique uncoloured fan edge.
/// j = 1 is the empty shift. All-or-nothing: the chain is materialised and
/// checked before any mutation.
void rotate_from(const Multigraph& g, PartialEdgeColouring& c, const Fan& f, int j,
                 const TraceSink* trace = nullptr);

enum class FanOutcome { kCompleted, kDisjoint };

/// Tries to complete the colouring through f. If the hinge shares a missing
/// colour with a fan vertex, rotates there and assigns it. Otherwise, if two
/// fan vertices share a missing colour, swaps a two-colour component away
/// from the hinge and resolves through the first route. Returns kDisjoint
/// (colouring untouched) when all the missing sets are pairwise disjoint.
FanOutcome resolve_fan(const Multigraph& g, PartialEdgeColouring& c, Fan& f,
                       const TraceSink* trace = nullptr);

/// Maximal fans of size 1 or >= 3 always resolve when the palette meets the
/// local bound; reaching kDisjoint there is an implementation bug.
void assert_resolvable_by_size(const Fan& f, int k, int gamma, FanOutcome outcome);

}  // namespace locol

#endif
