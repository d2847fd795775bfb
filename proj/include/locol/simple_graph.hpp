#ifndef LOCOL_SIMPLE_GRAPH_HPP
#define LOCOL_SIMPLE_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace locol {

/// Simple graph: symmetric adjacency, no loops, no parallel edges.
class SimpleGraph {
  public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(n) {}
    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    /// Adds {u,v}; duplicates are ignored, loops rejected.
    void add_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const;

    /// Subgraph induced on keep (result vertices renumbered in keep order).
    SimpleGraph induced(const std::vector<int>& keep) const;

    static SimpleGraph parse(std::istream& in);
    static SimpleGraph load(const std::string& path);
    void write(std::ostream& out) const;

  private:
    std::vector<std::vector<int>> adj_;  // each list kept sorted
};

/// True iff a vertex colouring (-1 = uncoloured, ignored) is proper on g.
bool proper_vertex_colouring(const SimpleGraph& g, const std::vector<int>& colour);

/// True iff N(v) can be covered by at most two cliques, i.e. the complement
/// of the neighbourhood subgraph is bipartite.
bool neighbourhood_two_clique_coverable(const SimpleGraph& g, int v);

void write_vertex_colouring(const std::vector<int>& colour, std::ostream& out);

}  // namespace locol

#endif
