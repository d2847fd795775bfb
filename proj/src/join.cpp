#include "locol/join.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "locol/errors.hpp"
#include "locol/oracle.hpp"

namespace locol {

std::vector<int> CanonicalJoin::x2() const {
    return {v2.begin(), v2.begin() + v2_interval.x_size()};
}
std::vector<int> CanonicalJoin::y2() const {
    return {v2.end() - v2_interval.y_size(), v2.end()};
}

namespace {

bool is_clique(const SimpleGraph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    for (int v : a)
        if (!contains(b, v)) return false;
    return true;
}

// Live sub-instance of a join during the removal recursion.
struct Inst {
    const SimpleGraph* host = nullptr;
    std::vector<char> active;  // per host vertex
    std::vector<char> in_v2;   // fixed V2 membership, per host vertex
    std::vector<int> x1, y1;   // active members, ascending
    std::vector<int> v2;       // active V2 in point order
    LinearIntervalGraph li;    // positional over v2
    std::vector<char> avail;   // allowed colours

    int avail_count() const {
        int c = 0;
        for (char a : avail) c += a;
        return c;
    }
    std::vector<int> x2_globals() const {
        return {v2.begin(), v2.begin() + li.x_size()};
    }
    std::vector<int> y2_globals() const {
        return {v2.end() - li.y_size(), v2.end()};
    }
    int active_degree(int v) const {
        int d = 0;
        for (int w : host->neighbours(v)) d += active[w];
        return d;
    }
};

Inst mirrored(Inst inst) {
    std::swap(inst.x1, inst.y1);
    std::reverse(inst.v2.begin(), inst.v2.end());
    inst.li = inst.li.mirrored();
    return inst;
}

// Largest clique of host|h2 through h2[idx] that avoids meeting both xonly
// and yonly, by masked search over the h2 index space.
int omega_prime(const SimpleGraph& host, const std::vector<int>& h2, std::uint64_t xonly,
                std::uint64_t yonly, int idx) {
    int n = static_cast<int>(h2.size());
    std::vector<std::uint64_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && host.has_edge(h2[i], h2[j])) adj[i] |= std::uint64_t(1) << j;
    int best = 0;
    auto expand = [&](auto&& self, std::uint64_t cand, int size, bool hit_x, bool hit_y) -> void {
        if (size + std::popcount(cand) <= best) return;
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        int v = std::countr_zero(cand);
        std::uint64_t bit = std::uint64_t(1) << v;
        bool nx = hit_x || (xonly & bit);
        bool ny = hit_y || (yonly & bit);
        if (!(nx && ny)) self(self, cand & adj[v], size + 1, nx, ny);
        self(self, cand & ~bit, size, hit_x, hit_y);
    };
    std::uint64_t bit = std::uint64_t(1) << idx;
    bool hx = (xonly & bit) != 0, hy = (yonly & bit) != 0;
    if (hx && hy) return 1;  // only the trivial clique qualifies
    expand(expand, adj[idx], 1, hx, hy);
    return std::max(best, 1);
}

int gamma_for(const Inst& inst) {
    std::vector<int> h2 = inst.v2;
    for (int v : inst.x1) h2.push_back(v);
    for (int v : inst.y1)
        if (!std::count(h2.begin(), h2.end(), v)) h2.push_back(v);
    // x1 members may repeat v2? no: x1 is V1-side; dedupe x1/y1 overlap only
    std::sort(h2.begin(), h2.end());
    h2.erase(std::unique(h2.begin(), h2.end()), h2.end());
    if (h2.size() > 64) throw GuardExceeded("join bound limited to 64-vertex attachments");
    std::uint64_t xonly = 0, yonly = 0;
    for (std::size_t i = 0; i < h2.size(); ++i) {
        bool in_x = contains(inst.x1, h2[i]);
        bool in_y = contains(inst.y1, h2[i]);
        if (in_x && !in_y) xonly |= std::uint64_t(1) << i;
        if (in_y && !in_x) yonly |= std::uint64_t(1) << i;
    }
    int gamma = 0;
    for (std::size_t i = 0; i < h2.size(); ++i) {
        int omega = omega_prime(*inst.host, h2, xonly, yonly, static_cast<int>(i));
        int d = inst.active_degree(h2[i]);
        gamma = std::max(gamma, (d + 1 + omega + 1) / 2);
    }
    return gamma;
}

Inst full_instance(const CanonicalJoin& j, int l) {
    Inst inst;
    inst.host = &j.host;
    inst.active.assign(j.host.vertex_count(), 1);
    inst.in_v2.assign(j.host.vertex_count(), 0);
    for (int v : j.v2) inst.in_v2[v] = 1;
    inst.x1 = j.x1;
    inst.y1 = j.y1;
    inst.v2 = j.v2;
    inst.li = j.v2_interval;
    inst.avail.assign(l, 1);
    return inst;
}

struct JoinSolver {
    const SimpleGraph& host;
    std::vector<int>& work;
    JoinCaseCounters& counters;
    std::vector<char> recoloured_v1;

    explicit JoinSolver(const SimpleGraph& h, std::vector<int>& w, JoinCaseCounters& c)
        : host(h), work(w), counters(c), recoloured_v1(h.vertex_count(), 0) {}

    std::vector<int> colour_list(const std::vector<int>& vs) const {
        std::vector<int> cols;
        for (int v : vs)
            if (work[v] >= 0) cols.push_back(work[v]);
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        return cols;
    }

    int shared_count(const Inst& inst) const {
        std::vector<int> cx = colour_list(inst.x1), cy = colour_list(inst.y1);
        std::vector<int> both;
        std::set_intersection(cx.begin(), cx.end(), cy.begin(), cy.end(),
                              std::back_inserter(both));
        return static_cast<int>(both.size());
    }

    // Exactly colours host|sub, permutes its classes so `anchor` (already
    // coloured, a clique) keeps its colours, and writes the rest.
    void exact_colour_and_paste(const Inst& inst, std::vector<int> sub,
                                const std::vector<int>& anchor) {
        std::sort(sub.begin(), sub.end());
        sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
        SimpleGraph induced = host.induced(sub);
        OracleGuard guard = OracleGuard::from_env().raised(
            static_cast<int>(sub.size()), static_cast<int>(sub.size()),
            static_cast<int>(inst.avail.size()));
        VertexColouringResult res = optimal_vertex_colouring(induced, guard);
        int l_eff = inst.avail_count();
        if (res.count > l_eff)
            throw InvariantViolation("attachment needs more colours than the join bound allows");
        std::vector<int> local_to_global(res.count, -1);
        std::vector<char> target_used(inst.avail.size(), 0);
        for (int a : anchor) {
            int pos = static_cast<int>(std::lower_bound(sub.begin(), sub.end(), a) - sub.begin());
            int local = res.colour[pos];
            if (local_to_global[local] >= 0 && local_to_global[local] != work[a])
                throw InvariantViolation("anchor clique colours collide under pasting");
            local_to_global[local] = work[a];
            target_used[work[a]] = 1;
        }
        int next = 0;
        for (int local = 0; local < res.count; ++local) {
            if (local_to_global[local] >= 0) continue;
            while (next < static_cast<int>(inst.avail.size()) &&
                   (!inst.avail[next] || target_used[next]))
                ++next;
            if (next >= static_cast<int>(inst.avail.size()))
                throw InvariantViolation("ran out of colours while pasting an attachment");
            local_to_global[local] = next;
            target_used[next] = 1;
        }
        for (std::size_t i = 0; i < sub.size(); ++i)
            if (work[sub[i]] < 0) work[sub[i]] = local_to_global[res.colour[i]];
    }

    void remove_and_recurse(Inst inst, const std::vector<int>& stable_positions, int q) {
        std::vector<int> removed;
        for (int v = 0; v < host.vertex_count(); ++v)
            if (inst.active[v] && !inst.in_v2[v] && work[v] == q) removed.push_back(v);
        std::vector<char> drop(inst.li.vertex_count(), 0);
        std::vector<int> s_globals;
        for (int pos : stable_positions) {
            drop[pos] = 1;
            s_globals.push_back(inst.v2[pos]);
            removed.push_back(inst.v2[pos]);
        }
        for (std::size_t i = 0; i < removed.size(); ++i)
            for (std::size_t j = i + 1; j < removed.size(); ++j)
                if (host.has_edge(removed[i], removed[j]))
                    throw InvariantViolation("removed colour class is not a stable set");

        Inst child;
        child.host = inst.host;
        child.active = inst.active;
        child.in_v2 = inst.in_v2;
        for (int v : removed) child.active[v] = 0;
        auto keep = [&](const std::vector<int>& vs) {
            std::vector<int> out;
            for (int v : vs)
                if (child.active[v]) out.push_back(v);
            return out;
        };
        child.x1 = keep(inst.x1);
        child.y1 = keep(inst.y1);
        child.v2 = keep(inst.v2);
        child.li = inst.li.removed(drop);
        child.avail = inst.avail;
        child.avail[q] = 0;

        int l_child = inst.avail_count() - 1;
        if (!child.v2.empty() && gamma_for(child) > l_child)
            throw InvariantViolation("join bound failed to drop with the removed stable set");
        solve(std::move(child));
        for (int v : s_globals) work[v] = q;
    }

    // Both end cliques of one side nest: the larger is a clique cutset.
    void case_nested(const Inst& inst) {
        const std::vector<int>& anchor = subset_of(inst.y1, inst.x1) ? inst.x1 : inst.y1;
        std::vector<int> sub = inst.v2;
        for (int v : inst.x1) sub.push_back(v);
        for (int v : inst.y1) sub.push_back(v);
        exact_colour_and_paste(inst, std::move(sub), anchor);
    }

    // A cross side with no attachment clique left (residual instances only).
    void case_degenerate_side(const Inst& inst) {
        std::vector<int> sub = inst.v2;
        std::vector<int> anchor;
        if (inst.li.x_size() > 0) {
            anchor = inst.x1;
        } else if (inst.li.y_size() > 0) {
            anchor = inst.y1;
        }
        for (int v : anchor) sub.push_back(v);
        exact_colour_and_paste(inst, std::move(sub), anchor);
    }

    void case_no_overlap_spare(Inst inst) {
        std::vector<char> skip;
        std::vector<int> s = greedy_stable_set(inst.li, skip);
        bool hits_y2 = false;
        for (int pos : s)
            if (pos >= inst.li.vertex_count() - inst.li.y_size()) hits_y2 = true;
        std::vector<int> cx = colour_list(inst.x1), cy = colour_list(inst.y1);
        int q = -1;
        if (hits_y2) {
            for (int c = 0; c < static_cast<int>(inst.avail.size()); ++c)
                if (inst.avail[c] && !std::count(cx.begin(), cx.end(), c) &&
                    !std::count(cy.begin(), cy.end(), c)) {
                    q = c;
                    break;
                }
        } else {
            q = cy.empty() ? -1 : cy.front();
        }
        if (q < 0) throw InvariantViolation("no removable colour class in the spare case");
        remove_and_recurse(std::move(inst), s, q);
    }

    void case_no_overlap_tight(Inst inst) {
        if (inst.li.y_size() > inst.li.x_size()) inst = mirrored(std::move(inst));
        int l_eff = inst.avail_count();
        int nx1 = static_cast<int>(inst.x1.size()), ny1 = static_cast<int>(inst.y1.size());
        int xs = inst.li.x_size(), ys = inst.li.y_size();
        if (ny1 < 2 * xs || nx1 < 2 * ys)
            throw InvariantViolation("tight case entered with undersized attachment cliques");

        // H3 = host|(V2 + X1): X1 becomes a block prepended to the line,
        // completed with the left end-clique. Positions keep V2's reach
        // structure via one interval per vertex window.
        int n2 = inst.li.vertex_count();
        int n3 = nx1 + n2;
        std::vector<Rat> points;
        for (int i = 0; i < n3; ++i) points.emplace_back(i, 1);
        std::vector<std::pair<Rat, Rat>> ivs;
        ivs.emplace_back(Rat(0, 1), Rat(nx1 + xs - 1, 1));
        for (int i = 0; i < n2; ++i)
            ivs.emplace_back(Rat(nx1 + i, 1), Rat(nx1 + inst.li.reach(i), 1));
        LinearIntervalGraph h3(std::move(points), std::move(ivs), nx1 + xs, ys);
        auto h3_global = [&](int pos) {
            return pos < nx1 ? inst.x1[pos] : inst.v2[pos - nx1];
        };

        int w3 = h3.omega();
        int b = l_eff - w3;
        std::vector<int> cols = colour_linear_interval(h3, l_eff);

        auto x1_colour_set = [&] {
            std::vector<char> set(l_eff + ny1 + 1, 0);
            for (int t = 0; t < nx1; ++t) set[cols[t]] = 1;
            return set;
        };
        auto bad_colours = [&] {
            std::vector<char> on_x1 = x1_colour_set();
            std::vector<int> bad;
            for (int t = n3 - ys; t < n3; ++t)
                if (!on_x1[cols[t]]) bad.push_back(cols[t]);
            std::sort(bad.begin(), bad.end());
            bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
            return bad;
        };

        if (b >= ys) {
            // spare colours cover the right end-clique outright, twinned
            // into X1 (no edges between the two sets)
            for (int t = 0; t < ys; ++t) {
                cols[n3 - ys + t] = w3 + t;
                cols[t] = w3 + t;
            }
        } else {
            counters.case3_rollback += 1;
            int i0 = h3.leftmost_max_clique_start();
            if (i0 < nx1 + xs || i0 >= n3 - ys)
                throw InvariantViolation("maximum window clique touches an end block");
            int rolls = 0;
            while (static_cast<int>(bad_colours().size()) > b) {
                if (rolls > std::max(0, w3 - 2 * b - 1))
                    throw InvariantViolation("rolled past the guaranteed acceptable colouring");
                roll_back(cols, i0, w3);
                ++rolls;
                for (int i = 0; i < n3; ++i)
                    for (int jj = i + 1; jj <= h3.reach(i); ++jj)
                        if (cols[i] == cols[jj])
                            throw InvariantViolation("roll back broke properness");
            }
            std::vector<int> bad = bad_colours();
            // move each stray colour to a spare, twinned into X1 at a
            // position whose colour the right end-clique does not use
            std::vector<char> y2_uses(l_eff + ny1 + 1, 0);
            for (int t = n3 - ys; t < n3; ++t) y2_uses[cols[t]] = 1;
            int spare = w3;
            for (int gamma : bad) {
                for (int t = n3 - ys; t < n3; ++t)
                    if (cols[t] == gamma) cols[t] = spare;
                int twin = -1;
                for (int t = 0; t < nx1; ++t)
                    if (!y2_uses[cols[t]] && cols[t] < w3) {
                        twin = t;
                        break;
                    }
                if (twin < 0) throw InvariantViolation("no twin slot in the left clique");
                cols[twin] = spare;
                ++spare;
            }
            if (spare > l_eff) throw InvariantViolation("spare colours exceeded the palette");
        }

        for (int i = 0; i < n3; ++i)
            for (int jj = i + 1; jj <= h3.reach(i); ++jj)
                if (cols[i] == cols[jj])
                    throw InvariantViolation("tight-case colouring is not proper");

        // permute local colours so X1 keeps its colours, then write V2
        std::vector<int> local_to_global(l_eff + ny1 + 1, -1);
        std::vector<char> target_used(inst.avail.size(), 0);
        for (int t = 0; t < nx1; ++t) {
            int local = cols[t];
            int want = work[inst.x1[t]];
            if (local_to_global[local] >= 0 && local_to_global[local] != want)
                throw InvariantViolation("left clique colours collide under pasting");
            local_to_global[local] = want;
            target_used[want] = 1;
        }
        int next = 0;
        for (int t = nx1; t < n3; ++t) {
            int local = cols[t];
            if (local_to_global[local] >= 0) continue;
            while (next < static_cast<int>(inst.avail.size()) &&
                   (!inst.avail[next] || target_used[next]))
                ++next;
            if (next >= static_cast<int>(inst.avail.size()))
                throw InvariantViolation("palette exhausted in the tight case");
            local_to_global[local] = next;
            target_used[next] = 1;
        }
        for (int t = nx1; t < n3; ++t) work[h3_global(t)] = local_to_global[cols[t]];
    }

    void case_partial_overlap(Inst inst) {
        std::vector<char> skip(inst.li.vertex_count(), 0);
        for (int pos = 0; pos < inst.li.x_size(); ++pos) skip[pos] = 1;
        std::vector<int> s = greedy_stable_set(inst.li, skip);
        bool hits_y2 = false;
        for (int pos : s)
            if (pos >= inst.li.vertex_count() - inst.li.y_size()) hits_y2 = true;
        std::vector<int> cx = colour_list(inst.x1), cy = colour_list(inst.y1);
        int q = -1;
        if (hits_y2) {
            for (int c : cx)
                if (!std::count(cy.begin(), cy.end(), c)) { q = c; break; }
        } else {
            for (int c : cx)
                if (std::count(cy.begin(), cy.end(), c)) { q = c; break; }
        }
        if (q < 0) throw InvariantViolation("no removable colour class in the overlap case");
        remove_and_recurse(std::move(inst), s, q);
    }

    void case_single_overlap(const Inst& inst) {
        int q = work[inst.x1[0]];
        if (work[inst.y1[0]] != q)
            throw InvariantViolation("single-overlap case without a common colour");
        auto blocks = inst.li.components();
        if (blocks.size() > 1) {
            for (const auto& block : blocks) {
                bool has_x2 = block.front() < inst.li.x_size();
                bool has_y2 = block.back() >= inst.li.vertex_count() - inst.li.y_size();
                std::vector<int> sub;
                for (int pos : block) sub.push_back(inst.v2[pos]);
                std::vector<int> anchor;
                if (has_x2) anchor = inst.x1;
                else if (has_y2) anchor = inst.y1;
                for (int v : anchor) sub.push_back(v);
                exact_colour_and_paste(inst, std::move(sub), anchor);
            }
            return;
        }
        int w = inst.li.omega();
        int l_eff = inst.avail_count();
        if (w >= l_eff)
            throw InvariantViolation("connected middle graph as large as the palette");
        std::vector<int> allowed;
        for (int c = 0; c < static_cast<int>(inst.avail.size()); ++c)
            if (inst.avail[c] && c != q) allowed.push_back(c);
        std::vector<int> cols = colour_linear_interval(inst.li, l_eff - 1);
        for (int i = 0; i < inst.li.vertex_count(); ++i) work[inst.v2[i]] = allowed[cols[i]];
    }

    void case_full_overlap(Inst inst) {
        int k = shared_count(inst);
        // a vertex of either clique whose closed neighbourhood misses a
        // colour can be recoloured, lowering the overlap
        std::vector<int> candidates = inst.x1;
        for (int v : inst.y1)
            if (!contains(inst.x1, v)) candidates.push_back(v);
        std::sort(candidates.begin(), candidates.end());
        for (int v : candidates) {
            std::vector<char> seen(inst.avail.size(), 0);
            seen[work[v]] = 1;
            for (int u : host.neighbours(v))
                if (inst.active[u] && !inst.in_v2[u] && work[u] >= 0) seen[work[u]] = 1;
            for (int delta = 0; delta < static_cast<int>(inst.avail.size()); ++delta) {
                if (!inst.avail[delta] || seen[delta]) continue;
                int old = work[v];
                work[v] = delta;
                if (shared_count(inst) < k) {
                    counters.case6_recolour += 1;
                    recoloured_v1[v] = 1;
                    solve(std::move(inst));
                    return;
                }
                work[v] = old;
            }
        }

        int l_eff = inst.avail_count();
        int xs = inst.li.x_size(), ys = inst.li.y_size();
        if (2 * xs > l_eff - k || 2 * ys > l_eff - k)
            throw InvariantViolation("overlap case lacks spare colours for the end cliques");
        std::vector<int> cols = colour_linear_interval(inst.li, l_eff);
        std::vector<int> cx = colour_list(inst.x1), cy = colour_list(inst.y1);
        std::vector<char> blocked(inst.avail.size(), 0);
        for (int c : cx) blocked[c] = 1;
        for (int c : cy) blocked[c] = 1;
        std::vector<int> free_cols;
        for (int c = 0; c < static_cast<int>(inst.avail.size()); ++c)
            if (inst.avail[c] && !blocked[c]) free_cols.push_back(c);

        int n2 = inst.li.vertex_count();
        std::vector<char> on_ends(l_eff, 0);
        for (int pos = 0; pos < xs; ++pos) on_ends[cols[pos]] = 1;
        for (int pos = n2 - ys; pos < n2; ++pos) on_ends[cols[pos]] = 1;
        std::vector<int> mapping(l_eff, -1);
        std::size_t fi = 0;
        for (int c = 0; c < l_eff; ++c)
            if (on_ends[c]) {
                if (fi >= free_cols.size())
                    throw InvariantViolation("end-clique colours exceed the free colours");
                mapping[c] = free_cols[fi++];
            }
        std::vector<char> target_used(inst.avail.size(), 0);
        for (int c = 0; c < l_eff; ++c)
            if (mapping[c] >= 0) target_used[mapping[c]] = 1;
        int next = 0;
        for (int c = 0; c < l_eff; ++c) {
            if (mapping[c] >= 0) continue;
            while (next < static_cast<int>(inst.avail.size()) &&
                   (!inst.avail[next] || target_used[next]))
                ++next;
            mapping[c] = next;
            target_used[next] = 1;
        }
        for (int pos = 0; pos < n2; ++pos) work[inst.v2[pos]] = mapping[cols[pos]];
    }

    void solve(Inst inst) {
        if (inst.v2.empty()) return;
        if (subset_of(inst.y1, inst.x1) || subset_of(inst.x1, inst.y1)) {
            counters.fired[1] += 1;
            case_nested(inst);
            return;
        }
        if (inst.li.x_size() == 0 || inst.li.y_size() == 0) {
            counters.degenerate += 1;
            case_degenerate_side(inst);
            return;
        }
        int k = shared_count(inst);
        int l_eff = inst.avail_count();
        int sum = static_cast<int>(inst.x1.size() + inst.y1.size());
        if (k == 0) {
            if (l_eff > sum) {
                counters.fired[2] += 1;
                case_no_overlap_spare(std::move(inst));
            } else if (l_eff == sum) {
                counters.fired[3] += 1;
                case_no_overlap_tight(std::move(inst));
            } else {
                throw InvariantViolation("palette below the two attachment clique sizes");
            }
            return;
        }
        if (inst.x1.size() < inst.y1.size()) inst = mirrored(std::move(inst));
        if (k < static_cast<int>(inst.x1.size())) {
            counters.fired[4] += 1;
            case_partial_overlap(std::move(inst));
            return;
        }
        if (k != static_cast<int>(inst.x1.size()) || inst.x1.size() != inst.y1.size())
            throw InvariantViolation("join dispatch fell through the case ladder");
        if (k == 1) {
            counters.fired[5] += 1;
            case_single_overlap(inst);
        } else {
            counters.fired[6] += 1;
            case_full_overlap(std::move(inst));
        }
    }
};

}  // namespace

void validate_canonical_join(const CanonicalJoin& j) {
    int n = j.host.vertex_count();
    std::vector<int> owner(n, 0);
    for (int v : j.v1) {
        if (v < 0 || v >= n) throw std::invalid_argument("join: V1 vertex out of range");
        owner[v] += 1;
    }
    for (int v : j.v2) {
        if (v < 0 || v >= n) throw std::invalid_argument("join: V2 vertex out of range");
        owner[v] += 2;
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] != 1 && owner[v] != 2)
            throw std::invalid_argument("join: V1 and V2 must partition the host");
    if (j.v1.empty() || j.v2.empty())
        throw std::invalid_argument("join: both sides must be nonempty");
    if (j.v2_interval.vertex_count() != static_cast<int>(j.v2.size()))
        throw std::invalid_argument("join: interval representation size mismatch");
    int xs = j.v2_interval.x_size(), ys = j.v2_interval.y_size();
    if (xs < 1 || ys < 1)
        throw std::invalid_argument("join: end-cliques of the interval side must be nonempty");
    if (xs + ys > static_cast<int>(j.v2.size()))
        throw std::invalid_argument("join: end-cliques of the interval side must be disjoint");
    for (const auto* clique : {&j.x1, &j.y1}) {
        for (int v : *clique)
            if (!contains(j.v1, v))
                throw std::invalid_argument("join: attachment clique reaches outside V1");
        if (!is_clique(j.host, *clique))
            throw std::invalid_argument("join: attachment set is not a clique");
    }
    // the interval representation must reproduce host|V2
    for (std::size_t i = 0; i < j.v2.size(); ++i)
        for (std::size_t jj = i + 1; jj < j.v2.size(); ++jj) {
            bool host_edge = j.host.has_edge(j.v2[i], j.v2[jj]);
            bool li_edge = j.v2_interval.adjacent(static_cast<int>(i), static_cast<int>(jj));
            if (host_edge != li_edge)
                throw std::invalid_argument("join: interval representation disagrees with host");
        }
    std::vector<int> x2 = j.x2(), y2 = j.y2();
    for (int u : j.v1)
        for (int w : j.v2) {
            bool want = (contains(j.x1, u) && contains(x2, w)) ||
                        (contains(j.y1, u) && contains(y2, w));
            if (j.host.has_edge(u, w) != want)
                throw std::invalid_argument("join: cross edges deviate from the two-clique pattern");
        }
}

int gamma_l_join(const CanonicalJoin& j) {
    Inst inst = full_instance(j, 1);
    return gamma_for(inst);
}

std::vector<int> extend_over_join(const CanonicalJoin& j, const std::vector<int>& c1, int l,
                                  JoinCaseCounters* counters) {
    validate_canonical_join(j);
    int gamma = gamma_l_join(j);
    if (l < gamma) throw InfeasiblePalette(l, gamma);
    if (static_cast<int>(c1.size()) != j.host.vertex_count())
        throw std::invalid_argument("extend_over_join: colouring size mismatch");
    for (int v : j.v2)
        if (c1[v] != -1) throw std::invalid_argument("extend_over_join: V2 already coloured");
    for (int v : j.v1)
        if (c1[v] < 0 || c1[v] >= l)
            throw std::invalid_argument("extend_over_join: V1 colour outside the palette");
    for (int u : j.v1)
        for (int w : j.host.neighbours(u))
            if (!std::binary_search(j.v2.begin(), j.v2.end(), w) && c1[u] == c1[w] && u < w)
                throw std::invalid_argument("extend_over_join: V1 colouring is not proper");

    std::vector<int> work = c1;
    JoinCaseCounters local_counters;
    JoinCaseCounters& ctrs = counters ? *counters : local_counters;
    JoinSolver solver(j.host, work, ctrs);

    // align the colour overlap of the two attachment cliques once, up front:
    // a clique vertex whose colour the other clique lacks is recoloured into
    // that clique's set whenever its closed neighbourhood allows it
    Inst inst = full_instance(j, l);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto* pair : {&j.x1, &j.y1}) {
            const std::vector<int>& mine = *pair;
            const std::vector<int>& other = (pair == &j.x1) ? j.y1 : j.x1;
            std::vector<int> other_cols = solver.colour_list(other);
            for (int v : mine) {
                if (std::count(other_cols.begin(), other_cols.end(), work[v])) continue;
                std::vector<char> seen(l, 0);
                seen[work[v]] = 1;
                for (int u : j.host.neighbours(v))
                    if (!inst.in_v2[u] && work[u] >= 0) seen[work[u]] = 1;
                for (int beta : other_cols) {
                    if (seen[beta]) continue;
                    work[v] = beta;
                    changed = true;
                    break;
                }
                if (changed) break;
            }
            if (changed) break;
        }
    }
    std::vector<int> after_alignment = work;

    solver.solve(std::move(inst));

    for (int v = 0; v < j.host.vertex_count(); ++v) {
        if (work[v] < 0 || work[v] >= l)
            throw InvariantViolation("join extension left a vertex uncoloured");
        for (int w : j.host.neighbours(v))
            if (work[w] == work[v])
                throw InvariantViolation("join extension produced an improper colouring");
    }
    for (int v : j.v1)
        if (work[v] != after_alignment[v] && !solver.recoloured_v1[v])
            throw InvariantViolation("join extension recoloured the first side unexpectedly");
    return work;
}

}  // namespace locol
