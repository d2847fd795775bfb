#ifndef LOCOL_INTERVAL_HPP
#define LOCOL_INTERVAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "locol/oracle.hpp"
#include "locol/simple_graph.hpp"

namespace locol {

/// Exact rational, reduced, positive denominator.
struct Rat {
    long long num = 0;
    long long den = 1;
    Rat() = default;
    Rat(long long n, long long d);
    std::string str() const;
    static Rat parse(const std::string& text, int lineno = 0);
};

bool operator<(const Rat& a, const Rat& b);
bool operator==(const Rat& a, const Rat& b);
inline bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }

/// Graph of points on a line and closed intervals: two vertices are adjacent
/// iff some interval contains both points. Vertices are positional, sorted by
/// point. The x_size leftmost and y_size rightmost vertices are the declared
/// end-cliques, verified to be cliques on construction.
class LinearIntervalGraph {
  public:
    LinearIntervalGraph() = default;
    LinearIntervalGraph(std::vector<Rat> points, std::vector<std::pair<Rat, Rat>> intervals,
                        int x_size, int y_size);

    int vertex_count() const { return static_cast<int>(points_.size()); }
    const Rat& point(int i) const { return points_[i]; }
    const std::vector<std::pair<Rat, Rat>>& intervals() const { return intervals_; }
    int x_size() const { return x_size_; }
    int y_size() const { return y_size_; }

    /// Largest index adjacent to i on the right (= i when none): adjacency
    /// is i ~ j for i < j <= reach(i).
    int reach(int i) const { return reach_[i]; }
    bool adjacent(int i, int j) const;
    int degree(int i) const;

    /// Clique number; maximum cliques are consecutive runs.
    int omega() const;
    /// Leftmost start of a maximum consecutive clique.
    int leftmost_max_clique_start() const;

    bool connected() const;
    std::vector<std::vector<int>> components() const;  // consecutive blocks

    /// Same representation with the flagged vertices removed; end-clique
    /// sizes shrink by the removed members.
    LinearIntervalGraph removed(const std::vector<char>& drop) const;
    /// Mirror image: reverses the line, swapping the end-cliques.
    LinearIntervalGraph mirrored() const;

    SimpleGraph to_simple_graph() const;

  private:
    std::vector<Rat> points_;
    std::vector<std::pair<Rat, Rat>> intervals_;
    std::vector<int> reach_;
    int x_size_ = 0;
    int y_size_ = 0;
};

/// Leftmost-first greedy stable set: scan vertices in point order, skipping
/// the skip set, and take a vertex whenever the set stays stable.
std::vector<int> greedy_stable_set(const LinearIntervalGraph& li, const std::vector<char>& skip);

/// Proper colouring assigning position mod omega, left to right. Throws when
/// k < omega.
std::vector<int> colour_linear_interval(const LinearIntervalGraph& li, int k);

/// Shifts the colours of every vertex from index `from` onward to the next
/// colour modulo `omega`. The caller re-checks properness.
void roll_back(std::vector<int>& colours, int from, int omega);

/// Points on the unit circle plus arcs; adjacency iff some arc covers both
/// points. Arc (a,b) covers the angles from a to b winding upward, wrapping
/// past 1 when b < a.
class CircularIntervalGraph {
  public:
    CircularIntervalGraph() = default;
    CircularIntervalGraph(std::vector<Rat> points, std::vector<std::pair<Rat, Rat>> arcs);

    int vertex_count() const { return static_cast<int>(points_.size()); }
    const Rat& point(int i) const { return points_[i]; }
    const std::vector<std::pair<Rat, Rat>>& arcs() const { return arcs_; }
    bool adjacent(int i, int j) const;
    SimpleGraph to_simple_graph() const;

  private:
    std::vector<Rat> points_;
    std::vector<std::pair<Rat, Rat>> arcs_;
};

/// Optimal colouring of a circular interval graph by branch and bound, with
/// a hard desk-scale guard (default 24 vertices). The colour count is checked
/// against the local vertex bound.
std::vector<int> colour_circular_interval_exact(const CircularIntervalGraph& ci,
                                                int max_vertices = 24);

}  // namespace locol

#endif
