#ifndef LOCOL_GENERATE_HPP
#define LOCOL_GENERATE_HPP

#include <cstdint>
#include <random>

#include "locol/decomposition.hpp"
#include "locol/multigraph.hpp"
#include "locol/strips.hpp"

namespace locol {

/// Seeded generator with explicit modulo draws, so streams are identical
/// across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t raw() { return engine_(); }
    /// Uniform-ish value in [0, bound).
    std::uint64_t next(std::uint64_t bound) { return engine_() % bound; }
    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::mt19937_64 engine_;
};

/// Random loop-free multigraph: 2..max_n vertices, 1..max_m edges, pairwise
/// multiplicity at most max_mu.
Multigraph random_multigraph(Rng& rng, int max_n, int max_m, int max_mu);

/// The benchmark ladder generator: m edges over n = m/2 vertices, endpoints
/// uniform, loops rejected and redrawn.
Multigraph bench_multigraph(int m, std::uint64_t seed);

Multigraph cycle_multigraph(int n, int multiplicity);  // C_n with each edge repeated
Multigraph fat_triangle(int multiplicity);             // K3 with tripled-style edges
Multigraph star(int leaves);
Multigraph path_graph(int n);
Multigraph petersen();

struct GeneratedComposition {
    StripComposition sc;
    Realization realization;
    DecompositionTree tree;  // joins peeling each nontrivial strip off a line-graph core
};

/// Random strip composition together with a decomposition tree that
/// reassembles exactly its realization. The pattern is loop-free with at
/// least one single-vertex strip (the line-graph core).
GeneratedComposition random_strip_composition(Rng& rng, int max_vertices);

}  // namespace locol

#endif
