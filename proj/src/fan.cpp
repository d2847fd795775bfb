#include "locol/fan.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "locol/errors.hpp"

namespace locol {

namespace {

using Mask = std::vector<std::uint64_t>;

bool mask_empty(const Mask& m) {
    for (auto w : m)
        if (w) return false;
    return true;
}

bool masks_intersect(const Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

int lowest_common_bit(const Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t w = a[i] & b[i];
        if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
    }
    return -1;
}

int lowest_bit(const Mask& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) return static_cast<int>(i * 64 + std::countr_zero(m[i]));
    return -1;
}

void clear_bit(Mask& m, int c) { m[c >> 6] &= ~(std::uint64_t(1) << (c & 63)); }

}  // namespace

int Fan::degree_sum(const Multigraph& g) const {
    int d = g.degree(hinge);
    for (int j = 1; j <= size(); ++j) d += g.degree(seq[j]);
    return d;
}

Fan build_maximal_fan(const Multigraph& g, const PartialEdgeColouring& c, int e0, int hinge) {
    if (c.is_coloured(e0)) throw std::invalid_argument("build_maximal_fan: edge already coloured");
    auto [a, b] = g.endpoints(e0);
    if (hinge != a && hinge != b)
        throw std::invalid_argument("build_maximal_fan: hinge is not an endpoint");
    int v1 = g.other_endpoint(e0, hinge);
    int k = c.palette_size();
    int words = (k + 63) / 64;

    Fan f;
    f.hinge = hinge;
    f.e0 = e0;
    f.seq = {-1, v1};
    f.edge = {-1, e0};
    f.back = {-1, -1};
    f.missing.push_back(c.missing_mask(hinge));
    f.missing.push_back(c.missing_mask(v1));
    f.touched += 2 * words;

    std::vector<char> in_fan(g.vertex_count(), 0);
    in_fan[hinge] = 1;
    in_fan[v1] = 1;

    // cc: colours at the hinge not used between the hinge and a fan vertex.
    // cc_bar: members of cc missing at some fan vertex. The fan is maximal
    // exactly when cc_bar is empty.
    Mask cc = c.present_mask(hinge);
    Mask cc_bar(words, 0);
    Mask recorded(words, 0);
    std::vector<int> first_missing(k, 0);

    auto absorb_vertex = [&](int idx, int w) {
        // drop colours between hinge and w from both sets
        for (const auto& [nb, e] : g.incident(w)) {
            ++f.touched;
            if (nb == hinge && c.is_coloured(e)) {
                clear_bit(cc, c.colour(e));
                clear_bit(cc_bar, c.colour(e));
            }
        }
        // record earliest vertex missing each colour, then widen cc_bar
        const Mask& miss = f.missing[idx];
        for (int i = 0; i < words; ++i) {
            std::uint64_t fresh = miss[i] & ~recorded[i];
            while (fresh) {
                int bit = std::countr_zero(fresh);
                first_missing[i * 64 + bit] = idx;
                fresh &= fresh - 1;
            }
            recorded[i] |= miss[i];
            cc_bar[i] |= cc[i] & miss[i];
            ++f.touched;
        }
    };

    absorb_vertex(1, v1);

    while (!mask_empty(cc_bar)) {
        int colour = lowest_bit(cc_bar);
        int e = c.edge_with_colour(hinge, colour);
        if (e < 0) throw InvariantViolation("fan bookkeeping: colour not at hinge");
        int w = g.other_endpoint(e, hinge);
        if (in_fan[w]) throw InvariantViolation("fan bookkeeping: extension vertex already in fan");
        in_fan[w] = 1;
        f.seq.push_back(w);
        f.edge.push_back(e);
        f.back.push_back(first_missing[colour]);
        f.missing.push_back(c.missing_mask(w));
        f.touched += words;
        absorb_vertex(f.size(), w);
    }
    return f;
}

bool fan_is_valid(const Multigraph& g, const PartialEdgeColouring& c, const Fan& f) {
    if (f.size() < 1) return false;
    if (c.is_coloured(f.e0)) return false;
    auto [a, b] = g.endpoints(f.e0);
    if (f.hinge != a && f.hinge != b) return false;
    if (g.other_endpoint(f.e0, f.hinge) != f.seq[1]) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    seen[f.hinge] = 1;
    for (int j = 1; j <= f.size(); ++j) {
        int v = f.seq[j];
        if (seen[v]) return false;
        seen[v] = 1;
        if (j < 2) continue;
        int e = f.edge[j];
        auto [x, y] = g.endpoints(e);
        if (x != f.hinge && y != f.hinge) return false;
        if (g.other_endpoint(e, f.hinge) != v) return false;
        if (!c.is_coloured(e)) return false;
        int fi = f.back[j];
        if (fi < 1 || fi >= j) return false;
        if (!c.missing_at(f.seq[fi], c.colour(e))) return false;
    }
    return true;
}

void rotate_from(const Multigraph&, PartialEdgeColouring& c, const Fan& f, int j,
                 const TraceSink* trace) {
    if (j < 1 || j > f.size()) throw std::invalid_argument("rotate_from: index out of range");
    std::vector<int> chain;
    for (int t = j; t != 1; t = f.back[t]) chain.push_back(t);
    chain.push_back(1);
    // check the whole chain against the live colouring before touching it
    if (c.is_coloured(f.e0)) throw InvariantViolation("rotate_from: fan edge already coloured");
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
        int t = chain[s];
        if (!c.is_coloured(f.edge[t]))
            throw InvariantViolation("rotate_from: witness edge lost its colour");
        if (!c.missing_at(f.seq[f.back[t]], c.colour(f.edge[t])))
            throw InvariantViolation("rotate_from: witness colour no longer missing");
    }
    if (chain.size() == 1) return;  // j == 1, empty shift
    std::vector<int> cols(chain.size() - 1);
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) cols[s] = c.colour(f.edge[chain[s]]);
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) c.unassign(f.edge[chain[s]]);
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) c.assign(f.edge[chain[s + 1]], cols[s]);
    emit(trace, {TraceEvent::kRotate, f.edge[j], static_cast<int>(chain.size() - 1), -1});
}

namespace {

// Smallest j whose fan vertex shares a missing colour with the hinge.
int first_hinge_overlap(const Fan& f) {
    for (int j = 1; j <= f.size(); ++j)
        if (masks_intersect(f.missing[0], f.missing[j])) return j;
    return -1;
}

void complete_through(const Multigraph& g, PartialEdgeColouring& c, Fan& f, int j,
                      const TraceSink* trace) {
    int colour = lowest_common_bit(f.missing[0], f.missing[j]);
    rotate_from(g, c, f, j, trace);
    c.assign(f.edge[j], colour);
    emit(trace, {TraceEvent::kExtend, f.edge[j], colour + 1, -1});
}

}  // namespace

FanOutcome resolve_fan(const Multigraph& g, PartialEdgeColouring& c, Fan& f,
                       const TraceSink* trace) {
    int j = first_hinge_overlap(f);
    if (j >= 0) {
        complete_through(g, c, f, j, trace);
        return FanOutcome::kCompleted;
    }

    int l = f.size();
    int words = static_cast<int>(f.missing[0].size());
    // pair (i, j), i < j, of fan vertices with overlapping missing sets,
    // minimising i and then j
    std::vector<Mask> suffix(l + 2, Mask(words, 0));
    for (int t = l; t >= 1; --t) {
        suffix[t] = suffix[t + 1];
        for (int w = 0; w < words; ++w) suffix[t][w] |= f.missing[t][w];
    }
    int pi = -1, pj = -1;
    for (int i = 1; i <= l && pi < 0; ++i) {
        if (!masks_intersect(f.missing[i], suffix[i + 1])) continue;
        for (int jj = i + 1; jj <= l; ++jj) {
            if (masks_intersect(f.missing[i], f.missing[jj])) {
                pi = i;
                pj = jj;
                break;
            }
        }
    }
    if (pi < 0) return FanOutcome::kDisjoint;

    int alpha = lowest_bit(f.missing[0]);
    if (alpha < 0)
        throw std::invalid_argument("resolve_fan: hinge has no missing colour (palette too small)");
    int beta = lowest_common_bit(f.missing[pi], f.missing[pj]);

    // hinge's two-colour component; it is a path with the hinge at one end,
    // so it contains at most one of the two fan vertices
    std::vector<char> on_hinge_path(g.vertex_count(), 0);
    on_hinge_path[f.hinge] = 1;
    for (int e : c.kempe_component(alpha, beta, f.hinge)) {
        auto [x, y] = g.endpoints(e);
        on_hinge_path[x] = 1;
        on_hinge_path[y] = 1;
    }
    int widx;
    if (!on_hinge_path[f.seq[pi]]) {
        widx = pi;
    } else if (!on_hinge_path[f.seq[pj]]) {
        widx = pj;
    } else {
        throw InvariantViolation("two fan vertices on the hinge's two-colour path");
    }

    std::vector<int> swapped = c.kempe_swap(alpha, beta, f.seq[widx]);
    emit(trace, {TraceEvent::kKempeSwap, alpha + 1, beta + 1, static_cast<int>(swapped.size())});

    // refresh the snapshots (only the component's endpoints changed, but a
    // full refresh is cheap and simpler)
    f.missing[0] = c.missing_mask(f.hinge);
    for (int t = 1; t <= l; ++t) f.missing[t] = c.missing_mask(f.seq[t]);

    int target = first_hinge_overlap(f);
    if (target != widx)
        throw InvariantViolation("kempe swap did not open the expected fan vertex");
    complete_through(g, c, f, target, trace);
    return FanOutcome::kCompleted;
}

void assert_resolvable_by_size(const Fan& f, int k, int gamma, FanOutcome outcome) {
    if (outcome == FanOutcome::kCompleted) return;
    if (k < gamma)
        throw std::invalid_argument("assert_resolvable_by_size: palette below the local bound");
    if (f.size() == 2) return;  // size-2 fans legitimately stay unresolved
    throw InvariantViolation("maximal fan of size " + std::to_string(f.size()) +
                             " failed to resolve with k >= gamma");
}

}  // namespace locol
