#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "streamgraph/types.hpp"

namespace sgraph {

using Edge = std::pair<VertexId, VertexId>;

// Simple undirected graph on vertices 1..n with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(VertexId n);
  // Throws InvalidGraph on self-loops, duplicates, or ids outside 1..n.
  static Graph from_edges(VertexId n, const std::vector<Edge>& edges);

  VertexId vertex_count() const { return static_cast<VertexId>(adj_.size()); }
  std::size_t edge_count() const { return m_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v - 1]; }
  std::size_t degree(VertexId v) const { return adj_[v - 1].size(); }
  bool has_edge(VertexId u, VertexId v) const;

  // Edges with u < v, lexicographic.
  std::vector<Edge> edges() const;
  // Induced subgraph relabelled to 1..|keep| in the order given.
  Graph induced(const std::vector<VertexId>& keep) const;

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::size_t m_ = 0;
};

// "n m" header, then m lines "u v" with 1 <= u < v <= n.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Whitespace separated vertex ids.
std::vector<VertexId> read_vertex_list_file(const std::string& path);

}  // namespace sgraph
