#ifndef LOCOL_COLOURING_HPP
#define LOCOL_COLOURING_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locol/multigraph.hpp"

namespace locol {

constexpr int kUncoloured = -1;

struct ColouringViolation {
    enum Kind { kConflict, kIndexMismatch, kBadColour } kind;
    int vertex = -1;   // vertex at which a conflict was found, if any
    int edge_a = -1;
    int edge_b = -1;
    std::string describe() const;
};

/// Proper partial edge colouring over palette 0..k-1 (1-based in file I/O).
/// Keeps a vertex-by-colour incidence table and per-vertex presence bitmask
/// so missing-colour probes are O(1). Value semantics; the graph is held
/// through a shared immutable snapshot, so clones are cheap and safe.
class PartialEdgeColouring {
  public:
    PartialEdgeColouring() = default;
    PartialEdgeColouring(Multigraph g, int k);

    const Multigraph& graph() const { return *g_; }
    int palette_size() const { return k_; }
    int colour(int e) const { return colour_[e]; }
    bool is_coloured(int e) const { return colour_[e] != kUncoloured; }
    int coloured_count() const { return coloured_count_; }

    /// Edge carrying c at v, or -1.
    int edge_with_colour(int v, int c) const { return incidence_[incidence_index(v, c)]; }
    bool missing_at(int v, int c) const { return edge_with_colour(v, c) < 0; }
    int coloured_degree(int v) const { return coloured_deg_[v]; }

    /// Sorted list of colours on no edge at v.
    std::vector<int> missing_colours(int v) const;
    /// Bitmask form, one bit per colour, words of 64.
    std::vector<std::uint64_t> missing_mask(int v) const;
    std::vector<std::uint64_t> present_mask(int v) const { return present_[v]; }

    /// Gives colour c to uncoloured edge e. The colour must be missing at
    /// both endpoints.
    void assign(int e, int c);
    /// Removes the colour of edge e (error if uncoloured).
    void unassign(int e);

    /// Exchanges colours a and b on the connected component of the subgraph
    /// of {a,b}-coloured edges containing start. Returns the recoloured
    /// edges; an empty component is a no-op.
    std::vector<int> kempe_swap(int a, int b, int start);

    /// Walks the {a,b}-component containing start without modifying anything.
    std::vector<int> kempe_component(int a, int b, int start) const;

    /// Full rescan: properness plus incidence-table consistency.
    std::optional<ColouringViolation> validate() const;

    int used_colour_count() const;

    /// Writes the assignment directly, bypassing every check and the
    /// incidence table. Exists so tests can corrupt state and watch
    /// validate() report it.
    void set_colour_unchecked(int e, int c) { colour_[e] = c; }

    std::uint64_t op_count() const { return ops_; }
    void reset_op_count() { ops_ = 0; }

    void write(std::ostream& out) const;
    static PartialEdgeColouring parse(std::istream& in, const Multigraph& g);

  private:
    std::size_t incidence_index(int v, int c) const {
        return static_cast<std::size_t>(v) * k_ + c;
    }
    void check_edge(int e) const;
    void check_colour(int c) const;
    void put(int e, int c);   // unchecked insert into all indexes
    void drop(int e);         // unchecked removal from all indexes

    std::shared_ptr<const Multigraph> g_;
    int k_ = 0;
    int words_ = 0;
    int coloured_count_ = 0;
    std::vector<int> colour_;
    std::vector<int> incidence_;
    std::vector<std::vector<std::uint64_t>> present_;
    std::vector<int> coloured_deg_;
    std::uint64_t ops_ = 0;
};

}  // namespace locol

#endif
