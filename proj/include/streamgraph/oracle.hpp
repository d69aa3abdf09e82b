#pragma once

#include <optional>
#include <vector>

#include "streamgraph/graph.hpp"
#include "streamgraph/types.hpp"

// Offline reference implementations. No streaming, no accounting.
namespace sgraph::oracle {

// dist[v - 1] for v in 1..n.
std::vector<Distance> bfs_distances(const Graph& g, VertexId source);
Distance exact_diameter(const Graph& g);
// Both strategies exact_diameter picks from; exposed for cross-checking.
Distance exact_diameter_plain(const Graph& g);
Distance exact_diameter_bitset(const Graph& g);
bool is_connected(const Graph& g);

// Minimum cover of size <= k_max, or nullopt. k_max <= 12.
std::optional<std::vector<VertexId>> min_vertex_cover(const Graph& g, int k_max);

// Vertices 1..left_count form one side. Throws InvalidGraph if an edge stays
// inside a side.
std::vector<Edge> reference_max_matching(const Graph& g, VertexId left_count);

bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& cover);
bool is_bipartite(const Graph& g);

}  // namespace sgraph::oracle
