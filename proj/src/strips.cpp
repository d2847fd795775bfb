#include "locol/strips.hpp"

#include <algorithm>
#include <stdexcept>

namespace locol {

Realization realize(const StripComposition& sc) {
    if (sc.strips.size() != sc.pattern_edges.size())
        throw std::invalid_argument("realize: one strip per pattern edge required");
    for (auto [t, h] : sc.pattern_edges)
        if (t < 0 || t >= sc.pattern_n || h < 0 || h >= sc.pattern_n)
            throw std::out_of_range("realize: pattern vertex out of range");

    int strips = static_cast<int>(sc.strips.size());
    std::vector<int> offset(strips, 0);
    int total = 0;
    for (int s = 0; s < strips; ++s) {
        offset[s] = total;
        total += sc.strips[s].vertex_count();
    }

    Realization out;
    out.graph = SimpleGraph(total);
    out.strip_offset = offset;

    for (int s = 0; s < strips; ++s) {
        const LinearIntervalGraph& li = sc.strips[s];
        for (int i = 0; i < li.vertex_count(); ++i)
            for (int j = i + 1; j <= li.reach(i); ++j)
                out.graph.add_edge(offset[s] + i, offset[s] + j);
    }

    std::vector<std::vector<int>> hub(sc.pattern_n);
    for (int s = 0; s < strips; ++s) {
        auto [tail, head] = sc.pattern_edges[s];
        const LinearIntervalGraph& li = sc.strips[s];
        for (int i = 0; i < li.x_size(); ++i) hub[tail].push_back(offset[s] + i);
        for (int i = li.vertex_count() - li.y_size(); i < li.vertex_count(); ++i)
            hub[head].push_back(offset[s] + i);
    }
    for (auto& clique : hub) {
        std::sort(clique.begin(), clique.end());
        clique.erase(std::unique(clique.begin(), clique.end()), clique.end());
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                out.graph.add_edge(clique[i], clique[j]);
        for (int v : clique) out.hub_vertices.push_back(v);
    }
    std::sort(out.hub_vertices.begin(), out.hub_vertices.end());
    out.hub_vertices.erase(std::unique(out.hub_vertices.begin(), out.hub_vertices.end()),
                           out.hub_vertices.end());
    return out;
}

bool is_quasi_line(const SimpleGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!neighbourhood_two_clique_coverable(g, v)) return false;
    return true;
}

}  // namespace locol
