#include "wtreereg/matchings.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "wtreereg/error.hpp"

namespace wtreereg {

namespace {

EdgeName sorted_name(const WeightedGraph& g, std::size_t e) {
    auto [a, b] = g.edge_name(e);
    if (b < a) std::swap(a, b);
    return {a, b};
}

std::vector<std::size_t> edges_by_name(const WeightedGraph& g) {
    std::vector<std::size_t> order(g.edge_count());
    for (std::size_t e = 0; e < order.size(); ++e) order[e] = e;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return sorted_name(g, x) < sorted_name(g, y);
    });
    return order;
}

bool conflict(const WeightedGraph& g, const Edge& x, const Edge& y) {
    for (auto a : {x.u, x.v})
        for (auto b : {y.u, y.v})
            if (a == b || g.adjacent(a, b)) return true;
    return false;
}

// conflict masks over edges (bit j set when edge j may not accompany edge i)
std::vector<std::uint64_t> conflict_masks(const WeightedGraph& g) {
    if (g.edge_count() > 64)
        throw Error(ErrorCode::InvalidInput, "exhaustive induced matching supports at most 64 edges");
    std::vector<std::uint64_t> masks(g.edge_count(), 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        for (std::size_t j = 0; j < g.edge_count(); ++j)
            if (i == j || conflict(g, g.edges()[i], g.edges()[j])) masks[i] |= std::uint64_t{1} << j;
    return masks;
}

int branch_and_bound(const std::vector<std::uint64_t>& masks, std::uint64_t allowed) {
    int best = 0;
    std::function<void(std::uint64_t, int)> go = [&](std::uint64_t avail, int count) {
        if (count + std::popcount(avail) <= best) return;
        if (avail == 0) {
            best = std::max(best, count);
            return;
        }
        int e = std::countr_zero(avail);
        std::uint64_t bit = std::uint64_t{1} << e;
        go(avail & ~masks[e], count + 1);
        go(avail & ~bit, count);
    };
    go(allowed, 0);
    return best;
}

std::uint64_t all_edges(std::size_t m) {
    return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

int matching_number(const WeightedGraph& g) {
    if (g.edge_count() <= kExhaustiveEdgeLimit) return detail::induced_matching_exhaustive(g);
    if (!g.is_forest())
        throw Error(ErrorCode::InvalidInput,
                    "induced matching number of a non-forest with more than 16 edges");
    return detail::induced_matching_forest_dp(g);
}

WeightedGraph remove_closed_neighborhood(const WeightedGraph& g, VertexIndex u, VertexIndex v) {
    std::vector<VertexIndex> ends{u, v};
    auto nb = neighborhood(g, ends);
    nb.push_back(u);
    nb.push_back(v);
    return delete_vertices(g, nb);
}

}  // namespace

namespace detail {

int induced_matching_exhaustive(const WeightedGraph& g) {
    auto masks = conflict_masks(g);
    return branch_and_bound(masks, all_edges(g.edge_count()));
}

int constrained_matching_exhaustive(const WeightedGraph& g, std::size_t e) {
    auto masks = conflict_masks(g);
    return 1 + branch_and_bound(masks, all_edges(g.edge_count()) & ~masks.at(e));
}

int induced_matching_forest_dp(const WeightedGraph& g) {
    if (!g.is_forest()) throw Error(ErrorCode::InvalidInput, "tree DP requires a forest");
    const std::size_t n = g.vertex_count();
    // free_[v]: v is not an endpoint
    // up[v]:    v is an endpoint matched to its parent (children all free)
    // down[v]:  v is matched to one of its children
    constexpr int never = -1'000'000;
    std::vector<int> free_(n, 0), up(n, 0), down(n, never);
    std::vector<VertexIndex> parent(n, n);
    std::vector<bool> seen(n, false);
    int total = 0;
    for (VertexIndex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<VertexIndex> order;
        std::vector<VertexIndex> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (auto w : g.neighbors(v)) {
                if (seen[w]) continue;
                seen[w] = true;
                parent[w] = v;
                stack.push_back(w);
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto v = *it;
            int sum_free_or_down = 0;
            int sum_free = 0;
            for (auto c : g.neighbors(v)) {
                if (c == parent[v]) continue;
                sum_free_or_down += std::max(free_[c], down[c]);
                sum_free += free_[c];
            }
            free_[v] = sum_free_or_down;
            up[v] = sum_free;
            for (auto c : g.neighbors(v)) {
                if (c == parent[v]) continue;
                down[v] = std::max(down[v], 1 + up[c] + sum_free - free_[c]);
            }
        }
        total += std::max(free_[root], down[root]);
    }
    return total;
}

}  // namespace detail

bool is_induced_matching(const WeightedGraph& g, const std::vector<std::size_t>& edges) {
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b)
            if (edges[a] == edges[b] || conflict(g, g.edges()[edges[a]], g.edges()[edges[b]]))
                return false;
    return true;
}

MatchingResult induced_matching_number(const WeightedGraph& g) {
    MatchingResult result;
    result.size = matching_number(g);

    // Greedy in name order: keep an edge whenever an optimum still extends
    // the current choice; this yields the lexicographically smallest optimum.
    WeightedGraph rest = g;
    int needed = result.size;
    for (auto e : edges_by_name(g)) {
        if (needed == 0) break;
        auto [a, b] = g.edge_name(e);
        auto ia = rest.find_vertex(a);
        auto ib = rest.find_vertex(b);
        if (!ia || !ib || !rest.adjacent(*ia, *ib)) continue;
        auto reduced = remove_closed_neighborhood(rest, *ia, *ib);
        if (1 + matching_number(reduced) == needed) {
            result.witness.push_back(e);
            rest = std::move(reduced);
            --needed;
        }
    }
    return result;
}

MatchingResult constrained_matching_number(const WeightedGraph& g, std::size_t e) {
    if (e >= g.edge_count()) throw Error(ErrorCode::UnknownEdge, "edge index out of range");
    const auto& ed = g.edges()[e];
    auto reduced = remove_closed_neighborhood(g, ed.u, ed.v);
    auto inner = induced_matching_number(reduced);

    MatchingResult result;
    result.size = inner.size + 1;
    result.witness.push_back(e);
    for (auto r : inner.witness) {
        auto [a, b] = reduced.edge_name(r);
        result.witness.push_back(g.edge_index(a, b));
    }
    std::sort(result.witness.begin(), result.witness.end(), [&](std::size_t x, std::size_t y) {
        return sorted_name(g, x) < sorted_name(g, y);
    });

    if (g.edge_count() <= kExhaustiveEdgeLimit &&
        detail::constrained_matching_exhaustive(g, e) != result.size)
        throw std::logic_error("constrained matching: reduction disagrees with exhaustive search");
    return result;
}

MatchingResult constrained_matching_number(const WeightedGraph& g, const EdgeName& e) {
    return constrained_matching_number(g, g.edge_index(e.first, e.second));
}

}  // namespace wtreereg
