#ifndef LOCOL_MULTIGRAPH_HPP
#define LOCOL_MULTIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace locol {

/// Loop-free multigraph. Vertices are 0..n-1; edge ids follow input order and
/// are stable. Parallel edges are distinct edge ids with equal endpoint sets.
/// Immutable after construction and safe to share read-only across threads.
class Multigraph {
  public:
    Multigraph() = default;
    Multigraph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::pair<int, int> endpoints(int e) const { return edges_[e]; }
    int other_endpoint(int e, int v) const {
        return edges_[e].first == v ? edges_[e].second : edges_[e].first;
    }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    /// Incident edges of v as (neighbour, edge id), in edge-id order.
    const std::vector<std::pair<int, int>>& incident(int v) const { return adj_[v]; }

    /// Number of parallel edges between distinct vertices u and v.
    int multiplicity(int u, int v) const;

    /// Maximum, over common neighbours w, of the edge count within {u,v,w}.
    /// Requires u and v adjacent. When u and v have no common neighbour the
    /// value degenerates to multiplicity(u,v).
    int triangle_weight(int u, int v) const;

    /// Same graph with vertices renamed by perm (perm[v] = new name).
    Multigraph relabelled(const std::vector<int>& perm) const;

    static Multigraph parse(std::istream& in);
    static Multigraph load(const std::string& path);
    void write(std::ostream& out) const;

  private:
    void check_vertex(int v, const char* who) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

struct EdgeTerms {
    // The three terms of the per-edge bound, stored doubled so all arithmetic
    // stays integral. term_u2 = 2 d(u) + d(v) - mu(uv), term_v2 symmetric,
    // term_t2 = d(u) + d(v) - mu(uv) + t(uv).
    std::int64_t term_u2 = 0;
    std::int64_t term_v2 = 0;
    std::int64_t term_t2 = 0;
    std::int64_t max2() const {
        return term_u2 > term_v2 ? (term_u2 > term_t2 ? term_u2 : term_t2)
                                 : (term_v2 > term_t2 ? term_v2 : term_t2);
    }
};

struct EdgeBoundReport {
    int gamma = 0;          // ceil of half the max doubled term; 0 when edgeless
    int argmax_edge = -1;   // smallest edge id attaining the max
    std::vector<EdgeTerms> terms;
};

/// Local chromatic-index bound: max over edges of the three half-sum terms,
/// rounded up once at the end.
EdgeBoundReport local_edge_bound(const Multigraph& g);

}  // namespace locol

#endif
