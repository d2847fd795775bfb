#include "locol/interval.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "locol/errors.hpp"

namespace locol {

Rat::Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rat::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Rat Rat::parse(const std::string& text, int lineno) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(text), 1);
        return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + text + "'", lineno);
    }
}

bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }

LinearIntervalGraph::LinearIntervalGraph(std::vector<Rat> points,
                                         std::vector<std::pair<Rat, Rat>> intervals, int x_size,
                                         int y_size)
    : points_(std::move(points)), intervals_(std::move(intervals)), x_size_(x_size),
      y_size_(y_size) {
    int n = vertex_count();
    for (int i = 1; i < n; ++i)
        if (!(points_[i - 1] < points_[i]))
            throw std::invalid_argument("interval points must strictly increase");
    for (const auto& [lo, hi] : intervals_)
        if (hi < lo) throw std::invalid_argument("interval with reversed endpoints");
    if (x_size_ < 0 || y_size_ < 0 || x_size_ > n || y_size_ > n)
        throw std::invalid_argument("end-clique size out of range");
    reach_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        reach_[i] = i;
        for (const auto& [lo, hi] : intervals_) {
            if (!(lo <= points_[i] && points_[i] <= hi)) continue;
            int r = i;
            while (r + 1 < n && points_[r + 1] <= hi) ++r;
            reach_[i] = std::max(reach_[i], r);
        }
    }
    if (x_size_ >= 2 && reach_[0] < x_size_ - 1)
        throw std::invalid_argument("left end-clique is not a clique");
    if (y_size_ >= 2 && reach_[n - y_size_] < n - 1)
        throw std::invalid_argument("right end-clique is not a clique");
}

bool LinearIntervalGraph::adjacent(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return reach_[i] >= j;
}

int LinearIntervalGraph::degree(int i) const {
    int d = reach_[i] - i;
    for (int j = 0; j < i; ++j)
        if (reach_[j] >= i) ++d;
    return d;
}

int LinearIntervalGraph::omega() const {
    int best = vertex_count() > 0 ? 1 : 0;
    for (int i = 0; i < vertex_count(); ++i) best = std::max(best, reach_[i] - i + 1);
    return best;
}

int LinearIntervalGraph::leftmost_max_clique_start() const {
    int w = omega();
    for (int i = 0; i < vertex_count(); ++i)
        if (reach_[i] - i + 1 == w) return i;
    return -1;
}

bool LinearIntervalGraph::connected() const { return components().size() <= 1; }

std::vector<std::vector<int>> LinearIntervalGraph::components() const {
    std::vector<std::vector<int>> blocks;
    int n = vertex_count();
    int start = 0;
    while (start < n) {
        int end = start;  // block extends while edges cross
        int frontier = reach_[start];
        while (end < frontier) {
            ++end;
            frontier = std::max(frontier, reach_[end]);
        }
        std::vector<int> block(end - start + 1);
        std::iota(block.begin(), block.end(), start);
        blocks.push_back(std::move(block));
        start = end + 1;
    }
    return blocks;
}

LinearIntervalGraph LinearIntervalGraph::removed(const std::vector<char>& drop) const {
    std::vector<Rat> points;
    int new_x = 0, new_y = 0;
    int n = vertex_count();
    for (int i = 0; i < n; ++i) {
        if (drop[i]) continue;
        points.push_back(points_[i]);
        if (i < x_size_) ++new_x;
        if (i >= n - y_size_) ++new_y;
    }
    return LinearIntervalGraph(std::move(points), intervals_, new_x, new_y);
}

LinearIntervalGraph LinearIntervalGraph::mirrored() const {
    std::vector<Rat> points;
    std::vector<std::pair<Rat, Rat>> intervals;
    for (int i = vertex_count() - 1; i >= 0; --i)
        points.push_back(Rat(-points_[i].num, points_[i].den));
    for (const auto& [lo, hi] : intervals_)
        intervals.emplace_back(Rat(-hi.num, hi.den), Rat(-lo.num, lo.den));
    return LinearIntervalGraph(std::move(points), std::move(intervals), y_size_, x_size_);
}

SimpleGraph LinearIntervalGraph::to_simple_graph() const {
    SimpleGraph g(vertex_count());
    for (int i = 0; i < vertex_count(); ++i)
        for (int j = i + 1; j <= reach_[i]; ++j) g.add_edge(i, j);
    return g;
}

std::vector<int> greedy_stable_set(const LinearIntervalGraph& li, const std::vector<char>& skip) {
    std::vector<int> chosen;
    for (int i = 0; i < li.vertex_count(); ++i) {
        if (i < static_cast<int>(skip.size()) && skip[i]) continue;
        bool stable = true;
        for (int c : chosen)
            if (li.adjacent(c, i)) { stable = false; break; }
        if (stable) chosen.push_back(i);
    }
    return chosen;
}

std::vector<int> colour_linear_interval(const LinearIntervalGraph& li, int k) {
    int w = li.omega();
    if (k < w) throw InfeasiblePalette(k, w);
    std::vector<int> colours(li.vertex_count());
    for (int i = 0; i < li.vertex_count(); ++i) colours[i] = i % w;
    return colours;
}

void roll_back(std::vector<int>& colours, int from, int omega) {
    for (int i = from; i < static_cast<int>(colours.size()); ++i)
        colours[i] = (colours[i] + 1) % omega;
}

CircularIntervalGraph::CircularIntervalGraph(std::vector<Rat> points,
                                             std::vector<std::pair<Rat, Rat>> arcs)
    : points_(std::move(points)), arcs_(std::move(arcs)) {
    Rat one(1, 1), zero(0, 1);
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i] < zero || !(points_[i] < one))
            throw std::invalid_argument("circle points must lie in [0,1)");
        if (i > 0 && !(points_[i - 1] < points_[i]))
            throw std::invalid_argument("circle points must strictly increase");
    }
    for (const auto& [a, b] : arcs_)
        if (a < zero || !(a < one) || b < zero || !(b < one))
            throw std::invalid_argument("arc endpoints must lie in [0,1)");
}

namespace {
bool arc_covers(const std::pair<Rat, Rat>& arc, const Rat& p) {
    const auto& [a, b] = arc;
    if (a <= b) return a <= p && p <= b;
    return a <= p || p <= b;  // wraps past 1
}
}  // namespace

bool CircularIntervalGraph::adjacent(int i, int j) const {
    if (i == j) return false;
    for (const auto& arc : arcs_)
        if (arc_covers(arc, points_[i]) && arc_covers(arc, points_[j])) return true;
    return false;
}

SimpleGraph CircularIntervalGraph::to_simple_graph() const {
    SimpleGraph g(vertex_count());
    for (int i = 0; i < vertex_count(); ++i)
        for (int j = i + 1; j < vertex_count(); ++j)
            if (adjacent(i, j)) g.add_edge(i, j);
    return g;
}

std::vector<int> colour_circular_interval_exact(const CircularIntervalGraph& ci,
                                                int max_vertices) {
    int n = ci.vertex_count();
    if (n > max_vertices)
        throw GuardExceeded("circular interval colouring limited to " +
                            std::to_string(max_vertices) + " vertices");
    SimpleGraph g = ci.to_simple_graph();
    OracleGuard guard = OracleGuard::from_env().raised(n, n, n);
    VertexColouringResult result = optimal_vertex_colouring(g, guard);
    if (result.count > local_vertex_bound_bf(g, guard))
        throw InvariantViolation("circular interval graph exceeded its local vertex bound");
    return result.colour;
}

}  // namespace locol
