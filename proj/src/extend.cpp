#include "locol/extend.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "locol/errors.hpp"
#include "locol/fan.hpp"

namespace locol {

namespace {

using Mask = std::vector<std::uint64_t>;

void clear_bit(Mask& m, int c) { m[c >> 6] &= ~(std::uint64_t(1) << (c & 63)); }

int lowest_common_bit(const Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t w = a[i] & b[i];
        if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
    }
    return -1;
}

int lowest_missing(const PartialEdgeColouring& c, int v) {
    for (int col = 0; col < c.palette_size(); ++col)
        if (c.missing_at(v, col)) return col;
    return -1;
}

// Walks the chain of overlapping size-2 fans that starts at e0, mutating c
// until the edge is coloured.
class ChainWalk {
  public:
    ChainWalk(const Multigraph& g, PartialEdgeColouring& c, int e0, const TraceSink* trace)
        : g_(g), c_(c), k_(c.palette_size()), trace_(trace) {
        auto [a, b] = g.endpoints(e0);
        int hinge = (g.degree(a) > g.degree(b) || (g.degree(a) == g.degree(b) && a < b)) ? a : b;
        vs_ = {g.other_endpoint(e0, hinge), hinge};
        es_ = {e0};
        pos_.assign(g.vertex_count(), -1);
        pos_[vs_[0]] = 0;
        pos_[vs_[1]] = 1;
    }

    void run() {
        for (;;) {
            Fan fan = build_maximal_fan(g_, c_, es_[i_], vs_[i_ + 1]);
            FanOutcome outcome = resolve_fan(g_, c_, fan, trace_);
            if (outcome == FanOutcome::kCompleted) return;
            if (fan.size() != 2)
                throw InvariantViolation("maximal fan of size " + std::to_string(fan.size()) +
                                         " stayed unresolved in a chain walk");
            if (k_ > fan.degree_sum(g_))
                throw InvariantViolation("small fan failed to resolve despite k > d(F)");

            int next = fan.seq[2];
            int alpha = pick_alpha();
            alphas_.push_back(alpha);
            int e_next = c_.edge_with_colour(vs_[i_ + 1], alpha);
            if (e_next < 0 || g_.other_endpoint(e_next, vs_[i_ + 1]) != next)
                throw InvariantViolation("chain colour does not reach the next fan vertex");

            if (pos_[next] >= 0) {
                es_.push_back(e_next);
                close_cycle(next);
                return;
            }
            vs_.push_back(next);
            es_.push_back(e_next);
            pos_[next] = i_ + 2;
            forward_step();
            emit(trace_, {TraceEvent::kChainStep, i_, es_[i_], alpha + 1});
        }
    }

  private:
    int pick_alpha() {
        if (i_ >= 2) {
            int alpha = alphas_[i_ - 2];
            if (!c_.missing_at(vs_[i_], alpha))
                throw InvariantViolation("alternating chain colour not available");
            return alpha;
        }
        int alpha = lowest_missing(c_, vs_[i_]);
        if (alpha < 0) throw std::invalid_argument("chain walk: no missing colour (palette too small)");
        return alpha;
    }

    // c_i -> c_{i+1}: uncolour the next chain edge, give the current one alpha_i
    void forward_step() {
        c_.unassign(es_[i_ + 1]);
        c_.assign(es_[i_], alphas_[i_]);
        ++i_;
    }
    // c_i -> c_{i-1}
    void backward_step() {
        c_.unassign(es_[i_ - 1]);
        c_.assign(es_[i_], alphas_[i_ - 1]);
        --i_;
    }
    void goto_colouring(int target) {
        while (i_ > target) backward_step();
        while (i_ < target) forward_step();
    }

    void close_cycle(int revisited) {
        int j = i_ + 2;
        if (pos_[revisited] != 0)
            throw InvariantViolation("fan chain revisited a vertex other than the start");
        if (j % 2 == 0) throw InvariantViolation("fan chain closed an even cycle");
        emit(trace_, {TraceEvent::kCycleClose, j, -1, -1});

        // one more ordinary step onto the last cycle edge, so every fan of
        // the cycle has been built maximal before the scans below
        forward_step();  // now i_ == j-1, uncoloured edge es_[j-1]
        Fan last = build_maximal_fan(g_, c_, es_[j - 1], vs_[0]);
        if (resolve_fan(g_, c_, last, trace_) == FanOutcome::kCompleted) return;
        if (last.size() != 2)
            throw InvariantViolation("maximal fan of size " + std::to_string(last.size()) +
                                     " stayed unresolved at cycle closure");
        if (last.seq[2] != vs_[1])
            throw InvariantViolation("closing fan does not wrap onto the chain start");

        // Missing sets restricted to colours other than the two chain
        // colours are the same in every colouring of the walk, so one scan
        // of the current state covers them all.
        int words = (k_ + 63) / 64;
        std::vector<Mask> miss(j, Mask(words, 0));
        for (int t = 0; t < j; ++t) {
            miss[t] = c_.missing_mask(vs_[t]);
            clear_bit(miss[t], alphas_[0]);
            clear_bit(miss[t], alphas_[1]);
        }

        // a colour missing at both endpoints of a cycle edge extends directly
        for (int t = 0; t < j; ++t) {
            int beta = lowest_common_bit(miss[t], miss[(t + 1) % j]);
            if (beta < 0) continue;
            goto_colouring(t);
            c_.assign(es_[t], beta);
            emit(trace_, {TraceEvent::kExtend, es_[t], beta + 1, -1});
            return;
        }

        // otherwise look for a colour missing at v_t and v_{t+3}: swapping it
        // with the chain edge between v_{t+2} and v_{t+3} frees it at two
        // consecutive vertices
        if (j >= 5) {
            for (int t = 0; t < j; ++t) {
                int beta = lowest_common_bit(miss[t], miss[(t + 3) % j]);
                if (beta < 0) continue;
                goto_colouring(t);
                int v1 = vs_[(t + 1) % j], v2 = vs_[(t + 2) % j];
                int e_beta = c_.edge_with_colour(v1, beta);
                if (e_beta < 0 || g_.other_endpoint(e_beta, v1) != v2)
                    throw InvariantViolation("cycle colour not pinned between consecutive vertices");
                int e_shift = es_[(t + 2) % j];
                int alpha_next = alphas_[(t + 1) % 2];
                if (c_.colour(e_shift) != alpha_next)
                    throw InvariantViolation("cycle edge lost its alternating colour");
                c_.unassign(e_beta);
                c_.unassign(e_shift);
                c_.assign(e_shift, beta);
                c_.assign(e_beta, alpha_next);
                c_.assign(es_[t], beta);
                emit(trace_, {TraceEvent::kExtend, es_[t], beta + 1, -1});
                return;
            }
        }
        throw InvariantViolation("fan chain cycle admits no extension branch");
    }

    const Multigraph& g_;
    PartialEdgeColouring& c_;
    int k_;
    const TraceSink* trace_;
    std::vector<int> vs_;      // chain vertices
    std::vector<int> es_;      // chain edges; es_[i] uncoloured in colouring c_i
    std::vector<int> alphas_;  // chain colours, alternating with period two
    std::vector<int> pos_;     // vertex -> chain index
    int i_ = 0;
};

}  // namespace

void extend_one_edge_unchecked(const Multigraph& g, PartialEdgeColouring& c, int e0,
                               const TraceSink* trace) {
    if (c.is_coloured(e0)) throw std::invalid_argument("extend_one_edge: edge already coloured");
    ChainWalk walk(g, c, e0, trace);
    walk.run();
}

PartialEdgeColouring extend_one_edge(const Multigraph& g, const PartialEdgeColouring& c0, int e0,
                                     const TraceSink* trace) {
    int gamma = local_edge_bound(g).gamma;
    if (c0.palette_size() < gamma) throw InfeasiblePalette(c0.palette_size(), gamma);
    PartialEdgeColouring c = c0;
    extend_one_edge_unchecked(g, c, e0, trace);
    return c;
}

PartialEdgeColouring edge_colour(const Multigraph& g, int k, const std::vector<int>& order,
                                 const TraceSink* trace) {
    int gamma = local_edge_bound(g).gamma;
    if (k < gamma) throw InfeasiblePalette(k, gamma);
    std::vector<int> ins = order;
    if (ins.empty()) {
        ins.resize(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) ins[e] = e;
    } else {
        if (static_cast<int>(ins.size()) != g.edge_count())
            throw std::invalid_argument("edge_colour: order must list every edge once");
        std::vector<char> seen(g.edge_count(), 0);
        for (int e : ins) {
            if (e < 0 || e >= g.edge_count() || seen[e])
                throw std::invalid_argument("edge_colour: order is not a permutation");
            seen[e] = 1;
        }
    }
    PartialEdgeColouring c(g, k);
    for (int e : ins) extend_one_edge_unchecked(g, c, e, trace);
    return c;
}

std::pair<PartialEdgeColouring, EdgeBoundReport> edge_colour_optimal_local(const Multigraph& g,
                                                                           const TraceSink* trace) {
    EdgeBoundReport report = local_edge_bound(g);
    PartialEdgeColouring c = edge_colour(g, report.gamma, {}, trace);
    return {std::move(c), std::move(report)};
}

std::vector<int> random_edge_order(int m, std::uint64_t seed) {
    std::vector<int> order(m);
    for (int e = 0; e < m; ++e) order[e] = e;
    std::mt19937_64 rng(seed);
    for (int i = m - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[i], order[j]);
    }
    return order;
}

}  // namespace locol
