#include "locol/generate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace locol {

Multigraph random_multigraph(Rng& rng, int max_n, int max_m, int max_mu) {
    int n = rng.range(2, max_n);
    int m = rng.range(1, max_m);
    std::map<std::pair<int, int>, int> mu;
    std::vector<std::pair<int, int>> edges;
    int attempts = 0;
    while (static_cast<int>(edges.size()) < m && attempts < 20 * max_m) {
        ++attempts;
        int u = rng.range(0, n - 1);
        int v = rng.range(0, n - 1);
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (mu[key] >= max_mu) continue;
        ++mu[key];
        edges.emplace_back(u, v);
    }
    if (edges.empty()) edges.emplace_back(0, 1);
    return Multigraph(n, std::move(edges));
}

Multigraph bench_multigraph(int m, std::uint64_t seed) {
    int n = std::max(2, m / 2);
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    while (static_cast<int>(edges.size()) < m) {
        int u = rng.range(0, n - 1);
        int v = rng.range(0, n - 1);
        if (u == v) continue;
        edges.emplace_back(u, v);
    }
    return Multigraph(n, std::move(edges));
}

Multigraph cycle_multigraph(int n, int multiplicity) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int rep = 0; rep < multiplicity; ++rep) edges.emplace_back(i, (i + 1) % n);
    return Multigraph(n, std::move(edges));
}

Multigraph fat_triangle(int multiplicity) { return cycle_multigraph(3, multiplicity); }

Multigraph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Multigraph(leaves + 1, std::move(edges));
}

Multigraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Multigraph(n, std::move(edges));
}

Multigraph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Multigraph(10, std::move(edges));
}

namespace {

LinearIntervalGraph trivial_strip() {
    return LinearIntervalGraph({Rat(0, 1)}, {}, 1, 1);
}

LinearIntervalGraph random_nontrivial_strip(Rng& rng) {
    int n = rng.range(2, 4);
    int xs = rng.range(1, n - 1);
    int ys = rng.range(1, n - xs);
    std::vector<Rat> points;
    for (int i = 0; i < n; ++i) points.emplace_back(i, 1);
    std::vector<std::pair<Rat, Rat>> intervals;
    intervals.emplace_back(Rat(0, 1), Rat(xs - 1, 1));
    intervals.emplace_back(Rat(n - ys, 1), Rat(n - 1, 1));
    int extras = rng.range(0, 2);
    for (int t = 0; t < extras; ++t) {
        int a = rng.range(0, n - 1);
        int b = rng.range(a, n - 1);
        intervals.emplace_back(Rat(a, 1), Rat(b, 1));
    }
    return LinearIntervalGraph(std::move(points), std::move(intervals), xs, ys);
}

}  // namespace

GeneratedComposition random_strip_composition(Rng& rng, int max_vertices) {
    for (;;) {
        StripComposition sc;
        sc.pattern_n = rng.range(2, 3);
        int edge_count = rng.range(1, 3);
        bool has_trivial = false;
        for (int e = 0; e < edge_count; ++e) {
            int tail = rng.range(0, sc.pattern_n - 1);
            int head = rng.range(0, sc.pattern_n - 1);
            while (head == tail) head = rng.range(0, sc.pattern_n - 1);
            sc.pattern_edges.emplace_back(tail, head);
            bool trivial = (e == edge_count - 1 && !has_trivial) || rng.range(0, 1) == 0;
            if (trivial) {
                sc.strips.push_back(trivial_strip());
                has_trivial = true;
            } else {
                sc.strips.push_back(random_nontrivial_strip(rng));
            }
        }
        Realization full = realize(sc);
        if (full.graph.vertex_count() > max_vertices) continue;

        // tree: line-graph core of the single-vertex strips, then one join
        // per larger strip, peeled in strip order
        std::vector<int> trivial_edges, nontrivial;
        for (std::size_t s = 0; s < sc.strips.size(); ++s) {
            if (sc.strips[s].vertex_count() == 1)
                trivial_edges.push_back(static_cast<int>(s));
            else
                nontrivial.push_back(static_cast<int>(s));
        }

        DecompositionTree tree;
        TreeNode leaf;
        leaf.kind = TreeNode::kLeafLine;
        std::vector<std::pair<int, int>> core_edges;
        for (int s : trivial_edges) {
            core_edges.push_back(sc.pattern_edges[s]);
            leaf.vmap.push_back(full.strip_offset[s]);
        }
        leaf.mg = Multigraph(sc.pattern_n, std::move(core_edges));
        tree.nodes.push_back(std::move(leaf));

        // hub contributions from the strips present below each join
        std::vector<std::vector<int>> hub(sc.pattern_n);
        for (int s : trivial_edges) {
            hub[sc.pattern_edges[s].first].push_back(full.strip_offset[s]);
            hub[sc.pattern_edges[s].second].push_back(full.strip_offset[s]);
        }
        for (int s : nontrivial) {
            const LinearIntervalGraph& li = sc.strips[s];
            auto [tail, head] = sc.pattern_edges[s];
            TreeNode join;
            join.kind = TreeNode::kJoin;
            join.child_g1 = tree.root();
            join.x1 = hub[tail];
            join.y1 = hub[head];
            std::sort(join.x1.begin(), join.x1.end());
            std::sort(join.y1.begin(), join.y1.end());
            for (int i = 0; i < li.vertex_count(); ++i)
                join.v2ids.push_back(full.strip_offset[s] + i);
            join.v2li = li;
            tree.nodes.push_back(std::move(join));
            for (int i = 0; i < li.x_size(); ++i) hub[tail].push_back(full.strip_offset[s] + i);
            for (int i = li.vertex_count() - li.y_size(); i < li.vertex_count(); ++i)
                hub[head].push_back(full.strip_offset[s] + i);
        }
        return {std::move(sc), std::move(full), std::move(tree)};
    }
}

}  // namespace locol
