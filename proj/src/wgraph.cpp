#include "wtreereg/wgraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "wtreereg/error.hpp"

namespace wtreereg {

WeightedGraph::WeightedGraph(std::vector<std::string> vertices, const std::vector<WeightedEdge>& edges)
    : vertices_(std::move(vertices)), adjacency_(vertices_.size()) {
    for (VertexIndex v = 0; v < vertices_.size(); ++v) {
        if (vertices_[v].empty()) throw Error(ErrorCode::InvalidGraph, "empty vertex identifier");
        if (!index_.emplace(vertices_[v], v).second)
            throw Error(ErrorCode::InvalidGraph, "duplicate vertex '" + vertices_[v] + "'");
    }
    for (const auto& e : edges) {
        auto a = find_vertex(e.u);
        auto b = find_vertex(e.v);
        if (!a) throw Error(ErrorCode::UnknownVertex, "edge endpoint '" + e.u + "'");
        if (!b) throw Error(ErrorCode::UnknownVertex, "edge endpoint '" + e.v + "'");
        if (*a == *b) throw Error(ErrorCode::InvalidGraph, "loop at '" + e.u + "'");
        if (e.weight < 1)
            throw Error(ErrorCode::InvalidGraph, "weight of " + e.u + e.v + " must be >= 1");
        auto key = std::minmax(*a, *b);
        if (edge_lookup_.count(key))
            throw Error(ErrorCode::InvalidGraph, "parallel edge " + e.u + e.v);
        edge_lookup_.emplace(key, edges_.size());
        edges_.push_back({key.first, key.second, e.weight});
        adjacency_[key.first].push_back(key.second);
        adjacency_[key.second].push_back(key.first);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::optional<VertexIndex> WeightedGraph::find_vertex(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexIndex WeightedGraph::vertex(std::string_view id) const {
    auto v = find_vertex(id);
    if (!v) throw Error(ErrorCode::UnknownVertex, "'" + std::string(id) + "'");
    return *v;
}

std::optional<std::size_t> WeightedGraph::find_edge(VertexIndex a, VertexIndex b) const {
    auto it = edge_lookup_.find(std::minmax(a, b));
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
}

std::size_t WeightedGraph::edge_index(std::string_view a, std::string_view b) const {
    auto ia = find_vertex(a);
    auto ib = find_vertex(b);
    std::optional<std::size_t> e;
    if (ia && ib) e = find_edge(*ia, *ib);
    if (!e) throw Error(ErrorCode::UnknownEdge, std::string(a) + std::string(b));
    return *e;
}

int WeightedGraph::weight(VertexIndex a, VertexIndex b) const {
    auto e = find_edge(a, b);
    return e ? edges_[*e].weight : 0;
}

EdgeName WeightedGraph::edge_name(std::size_t e) const {
    const auto& ed = edges_.at(e);
    return {vertices_[ed.u], vertices_[ed.v]};
}

std::vector<WeightedEdge> WeightedGraph::weighted_edges() const {
    std::vector<WeightedEdge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back({vertices_[e.u], vertices_[e.v], e.weight});
    return out;
}

bool WeightedGraph::is_trivial() const noexcept {
    return std::none_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.nontrivial(); });
}

std::vector<std::size_t> WeightedGraph::nontrivial_edges() const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].nontrivial()) out.push_back(e);
    return out;
}

int WeightedGraph::max_weight() const noexcept {
    int m = 0;
    for (const auto& e : edges_) m = std::max(m, e.weight);
    return m;
}

bool WeightedGraph::is_connected() const {
    if (vertices_.empty()) return true;
    return components(*this).size() == 1;
}

bool WeightedGraph::is_forest() const {
    return edges_.size() + components(*this).size() == vertices_.size();
}

bool WeightedGraph::is_tree() const {
    return !vertices_.empty() && edges_.size() + 1 == vertices_.size() && is_connected();
}

bool WeightedGraph::is_path() const {
    if (!is_tree()) return false;
    return std::all_of(adjacency_.begin(), adjacency_.end(),
                       [](const auto& nb) { return nb.size() <= 2; });
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (const auto& e : a.edges_)
        if (b.weight(e.u, e.v) != e.weight) return false;
    return true;
}

int SpineData::spine_weight(const WeightedGraph& g, std::size_t t) const {
    return g.weight(path.at(t - 1), path.at(t));
}

std::vector<std::string> SpineData::path_names(const WeightedGraph& g) const {
    std::vector<std::string> out;
    for (auto v : path) out.push_back(g.name(v));
    return out;
}

bool is_integrally_closed(const WeightedGraph& g) {
    const auto heavy = g.nontrivial_edges();
    auto shares = [](const Edge& x, const Edge& y) -> std::optional<std::pair<VertexIndex, VertexIndex>> {
        // returns the two non-shared endpoints when x and y meet in one vertex
        if (x.u == y.u) return std::pair{x.v, y.v};
        if (x.u == y.v) return std::pair{x.v, y.u};
        if (x.v == y.u) return std::pair{x.u, y.v};
        if (x.v == y.v) return std::pair{x.u, y.u};
        return std::nullopt;
    };
    for (std::size_t a = 0; a < heavy.size(); ++a) {
        for (std::size_t b = a + 1; b < heavy.size(); ++b) {
            const Edge& x = g.edges()[heavy[a]];
            const Edge& y = g.edges()[heavy[b]];
            if (auto ends = shares(x, y)) {
                int closing = g.weight(ends->first, ends->second);
                if (closing == 0) return false;   // induced path of length 2
                if (closing >= 2) return false;   // triangle, all non-trivial
                continue;
            }
            bool joined = g.adjacent(x.u, y.u) || g.adjacent(x.u, y.v) ||
                          g.adjacent(x.v, y.u) || g.adjacent(x.v, y.v);
            if (!joined) return false;  // induced 2K2
        }
    }
    return true;
}

namespace {

std::vector<int> bfs_distances(const WeightedGraph& g, std::span<const VertexIndex> sources,
                               const std::vector<bool>& blocked = {}) {
    constexpr int unreachable = std::numeric_limits<int>::max();
    std::vector<int> dist(g.vertex_count(), unreachable);
    std::deque<VertexIndex> queue;
    for (auto s : sources) {
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(v)) {
            if (dist[w] != unreachable || (!blocked.empty() && blocked[w])) continue;
            dist[w] = dist[v] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

std::vector<VertexIndex> tree_path(const WeightedGraph& g, VertexIndex from, VertexIndex to) {
    std::vector<VertexIndex> parent(g.vertex_count(), from);
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<VertexIndex> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = true;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    std::vector<VertexIndex> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// All longest paths starting at `root` that avoid the vertices in `blocked`,
// each returned as root .. leaf.
std::vector<std::vector<VertexIndex>> longest_arms(const WeightedGraph& g, VertexIndex root,
                                                   const std::vector<bool>& blocked) {
    std::vector<VertexIndex> parent(g.vertex_count(), root);
    std::vector<int> depth(g.vertex_count(), -1);
    std::deque<VertexIndex> queue{root};
    depth[root] = 0;
    int best = 0;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        best = std::max(best, depth[v]);
        for (auto w : g.neighbors(v)) {
            if (depth[w] >= 0 || blocked[w]) continue;
            depth[w] = depth[v] + 1;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    std::vector<std::vector<VertexIndex>> arms;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (depth[v] != best) continue;
        std::vector<VertexIndex> arm{v};
        while (arm.back() != root) arm.push_back(parent[arm.back()]);
        std::reverse(arm.begin(), arm.end());
        arms.push_back(std::move(arm));
    }
    return arms;
}

std::vector<std::string> names_of(const WeightedGraph& g, const std::vector<VertexIndex>& p) {
    std::vector<std::string> out;
    out.reserve(p.size());
    for (auto v : p) out.push_back(g.name(v));
    return out;
}

// Heavy index (1-based) of an oriented spine, or nullopt when the orientation
// puts a lighter non-trivial edge before the heaviest one.
std::optional<std::size_t> heavy_index_for(const WeightedGraph& g, const std::vector<VertexIndex>& p) {
    int best = 0;
    for (std::size_t t = 1; t < p.size(); ++t) best = std::max(best, g.weight(p[t - 1], p[t]));
    std::optional<std::size_t> first_max;
    std::optional<std::size_t> first_heavy;
    for (std::size_t t = 1; t < p.size(); ++t) {
        int w = g.weight(p[t - 1], p[t]);
        if (w >= 2 && !first_heavy) first_heavy = t;
        if (w == best && !first_max) first_max = t;
    }
    if (first_heavy != first_max) return std::nullopt;
    return first_max;
}

}  // namespace

SpineData non_trivial_spine(const WeightedGraph& t) {
    if (!t.is_tree()) throw Error(ErrorCode::NotATree, "spine requires a tree");
    const auto heavy = t.nontrivial_edges();
    if (heavy.empty()) throw Error(ErrorCode::TrivialWeights, "tree has no non-trivial edge");
    if (!is_integrally_closed(t))
        throw Error(ErrorCode::NotIntegrallyClosed, "spine requires an integrally closed tree");

    // Core: the tree path spanning every non-trivial edge endpoint.
    std::vector<VertexIndex> ends;
    for (auto e : heavy) {
        ends.push_back(t.edges()[e].u);
        ends.push_back(t.edges()[e].v);
    }
    std::vector<VertexIndex> core;
    for (auto a : ends) {
        auto dist = bfs_distances(t, std::span(&a, 1));
        for (auto b : ends)
            if (dist[b] + 1 > static_cast<int>(core.size())) core = tree_path(t, a, b);
    }

    std::vector<bool> blocked(t.vertex_count(), false);
    for (auto v : core) blocked[v] = true;
    auto front_arms = longest_arms(t, core.front(), blocked);
    auto back_arms = longest_arms(t, core.back(), blocked);

    std::vector<VertexIndex> best_path;
    std::vector<std::string> best_key;
    for (const auto& fa : front_arms) {
        for (const auto& ba : back_arms) {
            std::vector<VertexIndex> p(fa.rbegin(), fa.rend());
            p.insert(p.end(), core.begin() + 1, core.end() - 1);
            p.insert(p.end(), ba.begin(), ba.end());
            auto fwd = names_of(t, p);
            auto rev = std::vector<std::string>(fwd.rbegin(), fwd.rend());
            auto key = std::min(fwd, rev);
            if (best_path.empty() || key < best_key) {
                best_key = std::move(key);
                best_path = std::move(p);
            }
        }
    }

    std::vector<VertexIndex> reversed(best_path.rbegin(), best_path.rend());
    auto i_fwd = heavy_index_for(t, best_path);
    auto i_rev = heavy_index_for(t, reversed);
    bool use_reverse = false;
    if (!i_fwd) {
        use_reverse = true;
    } else if (i_rev) {
        if (*i_rev < *i_fwd) use_reverse = true;
        else if (*i_rev == *i_fwd) use_reverse = names_of(t, reversed) < names_of(t, best_path);
    }

    SpineData s;
    s.path = use_reverse ? reversed : best_path;
    s.heavy_index = use_reverse ? *i_rev : *i_fwd;
    s.omega_i = s.spine_weight(t, s.heavy_index);
    if (s.heavy_index + 2 <= s.k() - 1) s.omega_i_plus_2 = s.spine_weight(t, s.heavy_index + 2);
    auto profile = distance_profile(t, s.path);
    s.d = profile.d;
    s.per_vertex_d = std::move(profile.per_vertex);
    return s;
}

DistanceProfile distance_profile(const WeightedGraph& t, std::span<const VertexIndex> spine_path) {
    DistanceProfile out;
    out.per_vertex = bfs_distances(t, spine_path);
    for (int x : out.per_vertex) out.d = std::max(out.d, x);
    return out;
}

bool is_caterpillar(const WeightedGraph& t) {
    if (!t.is_tree()) throw Error(ErrorCode::NotATree, "caterpillar test requires a tree");
    std::vector<VertexIndex> inner;
    for (VertexIndex v = 0; v < t.vertex_count(); ++v)
        if (t.degree(v) >= 2) inner.push_back(v);
    if (inner.empty()) return true;
    // the non-leaf vertices of a tree induce a subtree; it is a path iff
    // every inner vertex has at most two inner neighbours
    for (auto v : inner) {
        std::size_t inner_nb = 0;
        for (auto w : t.neighbors(v))
            if (t.degree(w) >= 2) ++inner_nb;
        if (inner_nb > 2) return false;
    }
    return true;
}

WeightedGraph delete_elements(const WeightedGraph& g, std::span<const std::string> vertices,
                              std::span<const EdgeName> edges) {
    std::vector<VertexIndex> vs;
    for (const auto& id : vertices) vs.push_back(g.vertex(id));
    std::set<EdgeName> drop;
    for (const auto& [a, b] : edges) {
        g.edge_index(a, b);
        drop.insert(std::minmax(a, b));
    }
    auto h = delete_vertices(g, vs);
    if (drop.empty()) return h;
    std::vector<WeightedEdge> kept;
    for (auto& e : h.weighted_edges())
        if (!drop.count(std::minmax(e.u, e.v))) kept.push_back(std::move(e));
    return WeightedGraph(h.vertices(), kept);
}

WeightedGraph delete_vertices(const WeightedGraph& g, std::span<const VertexIndex> vertices) {
    std::vector<bool> gone(g.vertex_count(), false);
    for (auto v : vertices) gone.at(v) = true;
    std::vector<VertexIndex> keep;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

WeightedGraph delete_edges(const WeightedGraph& g, std::span<const std::size_t> edges) {
    std::vector<bool> gone(g.edge_count(), false);
    for (auto e : edges) gone.at(e) = true;
    std::vector<WeightedEdge> kept;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (gone[e]) continue;
        const auto& ed = g.edges()[e];
        kept.push_back({g.name(ed.u), g.name(ed.v), ed.weight});
    }
    return WeightedGraph(g.vertices(), kept);
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const VertexIndex> keep) {
    std::vector<bool> in(g.vertex_count(), false);
    for (auto v : keep) in.at(v) = true;
    std::vector<std::string> names;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (in[v]) names.push_back(g.name(v));
    std::vector<WeightedEdge> kept;
    for (const auto& e : g.edges())
        if (in[e.u] && in[e.v]) kept.push_back({g.name(e.u), g.name(e.v), e.weight});
    return WeightedGraph(std::move(names), kept);
}

std::vector<VertexIndex> neighborhood(const WeightedGraph& g, std::span<const VertexIndex> w) {
    std::set<VertexIndex> out;
    for (auto v : w)
        for (auto x : g.neighbors(v)) out.insert(x);
    return {out.begin(), out.end()};
}

std::vector<std::vector<VertexIndex>> components(const WeightedGraph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    std::vector<std::vector<VertexIndex>> out;
    for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<VertexIndex> members;
        std::vector<VertexIndex> stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (auto w : g.neighbors(v)) {
                if (comp[w] >= 0) continue;
                comp[w] = comp[s];
                stack.push_back(w);
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

WeightedGraph make_path(const std::vector<std::string>& ids, const std::vector<int>& weights) {
    if (ids.size() != weights.size() + 1)
        throw Error(ErrorCode::InvalidInput, "path needs exactly one more vertex than weights");
    std::vector<WeightedEdge> edges;
    for (std::size_t t = 0; t < weights.size(); ++t) edges.push_back({ids[t], ids[t + 1], weights[t]});
    return WeightedGraph(ids, edges);
}

WeightedGraph make_path(const std::vector<int>& weights) {
    std::vector<std::string> ids;
    for (std::size_t t = 0; t <= weights.size(); ++t) ids.push_back("x" + std::to_string(t + 1));
    return make_path(ids, weights);
}

}  // namespace wtreereg
