#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wtreereg {

using VertexIndex = std::size_t;

/// Edge input/output form, keyed by vertex identifiers.
struct WeightedEdge {
    std::string u;
    std::string v;
    int weight = 1;
};

/// Internal edge form: endpoint indices into `WeightedGraph::vertices()`,
/// normalized so that `u < v`.
struct Edge {
    VertexIndex u;
    VertexIndex v;
    int weight;

    bool nontrivial() const noexcept { return weight >= 2; }
};

using EdgeName = std::pair<std::string, std::string>;

/// Finite simple graph with positive integer edge weights. Immutable after
/// construction; the constructor rejects loops, parallel edges, duplicate
/// vertex identifiers and weights below 1.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::vector<std::string> vertices, const std::vector<WeightedEdge>& edges);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const std::string& name(VertexIndex v) const { return vertices_.at(v); }
    std::span<const VertexIndex> neighbors(VertexIndex v) const { return adjacency_.at(v); }
    std::size_t degree(VertexIndex v) const { return adjacency_.at(v).size(); }

    std::optional<VertexIndex> find_vertex(std::string_view id) const;
    /// Throws `UnknownVertex` when absent.
    VertexIndex vertex(std::string_view id) const;

    std::optional<std::size_t> find_edge(VertexIndex a, VertexIndex b) const;
    /// Throws `UnknownEdge` when absent.
    std::size_t edge_index(std::string_view a, std::string_view b) const;
    bool adjacent(VertexIndex a, VertexIndex b) const { return find_edge(a, b).has_value(); }
    /// Weight of edge ab, or 0 when a and b are not adjacent.
    int weight(VertexIndex a, VertexIndex b) const;

    EdgeName edge_name(std::size_t e) const;
    std::vector<WeightedEdge> weighted_edges() const;

    bool is_trivial() const noexcept;
    std::vector<std::size_t> nontrivial_edges() const;
    int max_weight() const noexcept;

    bool is_connected() const;
    bool is_forest() const;
    bool is_tree() const;
    /// A tree with maximum degree at most 2.
    bool is_path() const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexIndex>> adjacency_;
    std::unordered_map<std::string, VertexIndex> index_;
    std::map<std::pair<VertexIndex, VertexIndex>, std::size_t> edge_lookup_;
};

/// Longest induced path through all non-trivial edges, oriented so that the
/// heaviest edge e_i = x_i x_{i+1} comes first and any second non-trivial
/// edge sits at e_{i+2}.
struct SpineData {
    std::vector<VertexIndex> path;   // x_1 .. x_k
    std::size_t heavy_index = 1;     // i, 1-based
    int omega_i = 0;
    std::optional<int> omega_i_plus_2;  // weight of e_{i+2} if it lies on the path
    int d = 0;
    std::vector<int> per_vertex_d;   // indexed by VertexIndex

    std::size_t k() const noexcept { return path.size(); }
    int spine_weight(const WeightedGraph& g, std::size_t t) const;  // omega_t, 1-based
    std::vector<std::string> path_names(const WeightedGraph& g) const;

    friend bool operator==(const SpineData&, const SpineData&) = default;
};

struct DistanceProfile {
    int d = 0;
    std::vector<int> per_vertex;
};

bool is_integrally_closed(const WeightedGraph& g);

SpineData non_trivial_spine(const WeightedGraph& t);

DistanceProfile distance_profile(const WeightedGraph& t, std::span<const VertexIndex> spine_path);
inline DistanceProfile distance_profile(const WeightedGraph& t, const SpineData& s) {
    return distance_profile(t, s.path);
}

bool is_caterpillar(const WeightedGraph& t);

/// Induced subgraph on the vertices not listed, then the listed edges removed.
/// Vertex order and weights are inherited.
WeightedGraph delete_elements(const WeightedGraph& g,
                              std::span<const std::string> vertices,
                              std::span<const EdgeName> edges = {});

WeightedGraph delete_vertices(const WeightedGraph& g, std::span<const VertexIndex> vertices);
WeightedGraph delete_edges(const WeightedGraph& g, std::span<const std::size_t> edges);
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const VertexIndex> keep);

/// N_G(W): union of the neighbourhoods of W. For W containing an edge this
/// already contains W itself.
std::vector<VertexIndex> neighborhood(const WeightedGraph& g, std::span<const VertexIndex> w);

/// Connected components, each as a sorted list of vertex indices.
std::vector<std::vector<VertexIndex>> components(const WeightedGraph& g);

/// Convenience constructor: path on the given ids with the given weights.
WeightedGraph make_path(const std::vector<std::string>& ids, const std::vector<int>& weights);
/// Path x1..xn with weights(ω_1..ω_{n-1}).
WeightedGraph make_path(const std::vector<int>& weights);

}  // namespace wtreereg
