#include "locol/line_graph.hpp"

#include <algorithm>
#include <string>

#include "locol/extend.hpp"

namespace locol {

SimpleGraph line_graph(const Multigraph& g) {
    SimpleGraph l(g.edge_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (inc[i].second != inc[j].second) l.add_edge(inc[i].second, inc[j].second);
    }
    return l;
}

LineCorrespondenceReport check_line_correspondence(const Multigraph& g, const OracleGuard& guard) {
    LineCorrespondenceReport report;
    SimpleGraph l = line_graph(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        int expected_degree = g.degree(u) + g.degree(v) - g.multiplicity(u, v) - 1;
        if (l.degree(e) != expected_degree)
            report.mismatches.push_back(
                {e, "degree " + std::to_string(l.degree(e)) + " != " +
                        std::to_string(expected_degree)});
        int omega = max_clique_containing(l, e, guard);
        int expected_omega =
            std::max({g.degree(u), g.degree(v), g.triangle_weight(u, v)});
        if (omega != expected_omega)
            report.mismatches.push_back({e, "clique " + std::to_string(omega) + " != " +
                                                std::to_string(expected_omega)});
    }
    if (g.edge_count() > 0) {
        int vertex_bound = local_vertex_bound_bf(l, guard);
        int edge_bound = local_edge_bound(g).gamma;
        if (vertex_bound != edge_bound)
            report.mismatches.push_back({-1, "local bounds disagree: " +
                                                 std::to_string(vertex_bound) + " vs " +
                                                 std::to_string(edge_bound)});
    }
    return report;
}

std::vector<int> vertex_colour_line_graph(const Multigraph& g) {
    auto [colouring, report] = edge_colour_optimal_local(g);
    std::vector<int> out(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) out[e] = colouring.colour(e);
    return out;
}

}  // namespace locol
