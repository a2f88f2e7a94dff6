#pragma once

#include <cstddef>
#include <vector>

#include "wtreereg/wgraph.hpp"

namespace wtreereg {

/// An optimal induced matching. `witness` holds edge indices of the input
/// graph, ordered by endpoint names; among all optima it is the
/// lexicographically smallest such list.
struct MatchingResult {
    int size = 0;
    std::vector<std::size_t> witness;
};

/// Edge count up to which exhaustive search is used; above it the graph must
/// be a forest and the tree dynamic program takes over.
inline constexpr std::size_t kExhaustiveEdgeLimit = 16;

/// ν(G). Weights are ignored.
MatchingResult induced_matching_number(const WeightedGraph& g);

/// Largest induced matching that contains edge `e` (index into g.edges()),
/// via ν(G \ N_G({u, v})) + 1.
MatchingResult constrained_matching_number(const WeightedGraph& g, std::size_t e);

/// Name-keyed overload; throws `UnknownEdge`.
MatchingResult constrained_matching_number(const WeightedGraph& g, const EdgeName& e);

bool is_induced_matching(const WeightedGraph& g, const std::vector<std::size_t>& edges);

namespace detail {

/// Branch-and-bound over all edge subsets; any graph.
int induced_matching_exhaustive(const WeightedGraph& g);
/// Exhaustive search restricted to matchings containing `e`.
int constrained_matching_exhaustive(const WeightedGraph& g, std::size_t e);
/// Linear-time dynamic program; g must be a forest.
int induced_matching_forest_dp(const WeightedGraph& g);

}  // namespace detail

}  // namespace wtreereg
