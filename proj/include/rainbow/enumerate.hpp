#pragma once

#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Largest order for which enumerate_connected_graphs is supported.
inline constexpr int kMaxEnumerationOrder = 9;
// Largest order for which enumerate_trees is supported.
inline constexpr int kMaxTreeOrder = 18;

/// All graphs (connected or not) of order n, one per isomorphism class,
/// canonically labeled and sorted by canonical key.
std::vector<graph> enumerate_graphs(int n);

/// One canonical representative per connected isomorphism class of order n,
/// sorted by canonical key. `edge_count` keeps only graphs with that many edges.
std::vector<graph> enumerate_connected_graphs(int n, std::optional<int> edge_count = std::nullopt);

/// One representative per free tree of order n, sorted by canonical key.
std::vector<graph> enumerate_trees(int n);

/// Rooted-at-center string encoding of a tree; equal iff the trees are isomorphic.
std::string tree_code(const graph& tree);

} // namespace rainbow
