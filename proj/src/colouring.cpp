#include "locol/colouring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "locol/errors.hpp"

namespace locol {

std::string ColouringViolation::describe() const {
    switch (kind) {
        case kConflict:
            return "edges " + std::to_string(edge_a) + " and " + std::to_string(edge_b) +
                   " share a colour at vertex " + std::to_string(vertex);
        case kIndexMismatch:
            return "incidence index disagrees with assignment at vertex " +
                   std::to_string(vertex);
        case kBadColour:
            return "edge " + std::to_string(edge_a) + " carries a colour outside the palette";
    }
    return "unknown violation";
}

PartialEdgeColouring::PartialEdgeColouring(Multigraph g, int k)
    : g_(std::make_shared<const Multigraph>(std::move(g))), k_(k), words_((k + 63) / 64) {
    if (k < 0) throw std::invalid_argument("negative palette size");
    colour_.assign(g_->edge_count(), kUncoloured);
    incidence_.assign(static_cast<std::size_t>(g_->vertex_count()) * k_, -1);
    present_.assign(g_->vertex_count(), std::vector<std::uint64_t>(words_, 0));
    coloured_deg_.assign(g_->vertex_count(), 0);
}

void PartialEdgeColouring::check_edge(int e) const {
    if (e < 0 || e >= static_cast<int>(colour_.size()))
        throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
}

void PartialEdgeColouring::check_colour(int c) const {
    if (c < 0 || c >= k_)
        throw std::invalid_argument("colour " + std::to_string(c + 1) + " outside palette 1.." +
                                    std::to_string(k_));
}

std::vector<int> PartialEdgeColouring::missing_colours(int v) const {
    std::vector<int> out;
    for (int c = 0; c < k_; ++c)
        if (missing_at(v, c)) out.push_back(c);
    return out;
}

std::vector<std::uint64_t> PartialEdgeColouring::missing_mask(int v) const {
    std::vector<std::uint64_t> mask(words_);
    for (int w = 0; w < words_; ++w) mask[w] = ~present_[v][w];
    int spare = words_ * 64 - k_;
    if (words_ > 0 && spare > 0) mask[words_ - 1] &= ~std::uint64_t(0) >> spare;
    return mask;
}

void PartialEdgeColouring::put(int e, int c) {
    auto [u, v] = g_->endpoints(e);
    colour_[e] = c;
    incidence_[incidence_index(u, c)] = e;
    incidence_[incidence_index(v, c)] = e;
    present_[u][c >> 6] |= std::uint64_t(1) << (c & 63);
    present_[v][c >> 6] |= std::uint64_t(1) << (c & 63);
    ++coloured_deg_[u];
    ++coloured_deg_[v];
    ++coloured_count_;
    ++ops_;
}

void PartialEdgeColouring::drop(int e) {
    int c = colour_[e];
    auto [u, v] = g_->endpoints(e);
    colour_[e] = kUncoloured;
    incidence_[incidence_index(u, c)] = -1;
    incidence_[incidence_index(v, c)] = -1;
    present_[u][c >> 6] &= ~(std::uint64_t(1) << (c & 63));
    present_[v][c >> 6] &= ~(std::uint64_t(1) << (c & 63));
    --coloured_deg_[u];
    --coloured_deg_[v];
    --coloured_count_;
    ++ops_;
}

void PartialEdgeColouring::assign(int e, int c) {
    check_edge(e);
    check_colour(c);
    if (is_coloured(e))
        throw std::invalid_argument("edge " + std::to_string(e) + " already coloured");
    auto [u, v] = g_->endpoints(e);
    if (!missing_at(u, c))
        throw std::invalid_argument("colour " + std::to_string(c + 1) +
                                    " already present at vertex " + std::to_string(u));
    if (!missing_at(v, c))
        throw std::invalid_argument("colour " + std::to_string(c + 1) +
                                    " already present at vertex " + std::to_string(v));
    put(e, c);
}

void PartialEdgeColouring::unassign(int e) {
    check_edge(e);
    if (!is_coloured(e))
        throw std::invalid_argument("edge " + std::to_string(e) + " is not coloured");
    drop(e);
}

std::vector<int> PartialEdgeColouring::kempe_component(int a, int b, int start) const {
    // In a proper colouring each vertex meets at most one a-edge and one
    // b-edge, so the component is a path or cycle; walk it iteratively from
    // start in both directions.
    std::vector<int> edges;
    for (int first : {edge_with_colour(start, a), edge_with_colour(start, b)}) {
        if (first < 0) continue;
        if (!edges.empty() && first == edges.front()) continue;  // start mid-path, same edge
        int prev = start;
        int e = first;
        while (e >= 0) {
            if (!edges.empty() && e == edges.front()) break;  // closed a cycle
            edges.push_back(e);
            int next = g_->other_endpoint(e, prev);
            int c = colour_[e] == a ? b : a;
            prev = next;
            e = edge_with_colour(next, c);
        }
        if (!edges.empty() && e == edges.front() && edges.size() > 1) break;  // cycle done
    }
    return edges;
}

std::vector<int> PartialEdgeColouring::kempe_swap(int a, int b, int start) {
    check_colour(a);
    check_colour(b);
    if (a == b) throw std::invalid_argument("kempe_swap requires distinct colours");
    if (start < 0 || start >= g_->vertex_count())
        throw std::out_of_range("kempe_swap: start vertex out of range");
    std::vector<int> edges = kempe_component(a, b, start);
    std::vector<int> old(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) old[i] = colour_[edges[i]];
    for (int e : edges) drop(e);
    for (std::size_t i = 0; i < edges.size(); ++i) put(edges[i], old[i] == a ? b : a);
    return edges;
}

std::optional<ColouringViolation> PartialEdgeColouring::validate() const {
    int n = g_->vertex_count();
    for (int e = 0; e < g_->edge_count(); ++e) {
        int c = colour_[e];
        if (c == kUncoloured) continue;
        if (c < 0 || c >= k_) return ColouringViolation{ColouringViolation::kBadColour, -1, e, -1};
    }
    // properness: scan each vertex's incident edges per colour
    for (int v = 0; v < n; ++v) {
        std::vector<int> seen(k_, -1);
        for (const auto& [w, e] : g_->incident(v)) {
            int c = colour_[e];
            if (c == kUncoloured) continue;
            if (seen[c] >= 0)
                return ColouringViolation{ColouringViolation::kConflict, v, seen[c], e};
            seen[c] = e;
        }
        // index consistency against the rescan
        for (int c = 0; c < k_; ++c) {
            if (edge_with_colour(v, c) != seen[c])
                return ColouringViolation{ColouringViolation::kIndexMismatch, v, -1, -1};
            bool bit = (present_[v][c >> 6] >> (c & 63)) & 1;
            if (bit != (seen[c] >= 0))
                return ColouringViolation{ColouringViolation::kIndexMismatch, v, -1, -1};
        }
    }
    return std::nullopt;
}

int PartialEdgeColouring::used_colour_count() const {
    std::vector<char> used(k_, 0);
    for (int c : colour_)
        if (c != kUncoloured) used[c] = 1;
    int count = 0;
    for (char u : used) count += u;
    return count;
}

void PartialEdgeColouring::write(std::ostream& out) const {
    out << "s colouring " << k_ << '\n';
    for (int e = 0; e < static_cast<int>(colour_.size()); ++e)
        out << "l " << e << ' ' << (colour_[e] == kUncoloured ? 0 : colour_[e] + 1) << '\n';
}

PartialEdgeColouring PartialEdgeColouring::parse(std::istream& in, const Multigraph& g) {
    std::string line;
    int lineno = 0;
    int k = -1;
    std::vector<int> colours(g.edge_count(), kUncoloured);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "s") {
            std::string kind;
            ss >> kind >> k;
            if (!ss || kind != "colouring" || k < 0)
                throw ParseError("expected 's colouring <k>'", lineno);
        } else if (tag == "l") {
            if (k < 0) throw ParseError("assignment before header", lineno);
            int e, c;
            ss >> e >> c;
            if (!ss) throw ParseError("expected 'l <edge> <colour>'", lineno);
            if (e < 0 || e >= g.edge_count()) throw ParseError("edge id out of range", lineno);
            if (c < 0 || c > k) throw ParseError("colour out of range", lineno);
            colours[e] = c == 0 ? kUncoloured : c - 1;
        } else {
            throw ParseError("unknown record '" + tag + "'", lineno);
        }
    }
    if (k < 0) throw ParseError("missing 's colouring' header");
    PartialEdgeColouring out(g, k);
    for (int e = 0; e < g.edge_count(); ++e)
        if (colours[e] != kUncoloured) out.assign(e, colours[e]);
    return out;
}

}  // namespace locol
