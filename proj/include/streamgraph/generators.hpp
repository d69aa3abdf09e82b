#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "streamgraph/graph.hpp"

namespace sgraph::gen {

// mt19937_64 with portable helpers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t bound) { return bound ? eng_() % bound : 0; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 eng_;
};

Graph path_graph(VertexId n);
Graph cycle_graph(VertexId n);
Graph star_graph(VertexId leaves);  // center is 1
Graph complete_graph(VertexId n);
Graph empty_graph(VertexId n);
Graph disjoint_union(const Graph& a, const Graph& b);  // b's ids shifted by |a|
Graph gnp(VertexId n, double p, std::uint64_t seed);

struct PlantedCover {
  Graph graph;
  std::vector<VertexId> cover;
};
// k cover vertices at random ids; every other vertex gets between min_degree
// and max_degree cover neighbors; cover-cover edges with probability p_inner.
PlantedCover planted_vertex_cover(VertexId n, std::size_t k, std::size_t min_degree, std::size_t max_degree,
                                  double p_inner, std::uint64_t seed);

struct PlantedCliques {
  Graph graph;
  std::vector<VertexId> deletion;
  std::vector<std::vector<VertexId>> cliques;
};
// n - k vertices split into ell nonempty cliques; each clique vertex sees each
// deletion vertex with probability p_attach; deletion-set edges with p_inner.
PlantedCliques planted_cliques(VertexId n, std::size_t k, std::size_t ell, double p_attach, double p_inner,
                               std::uint64_t seed);

struct PlantedSplit {
  Graph graph;
  std::vector<VertexId> clique;
  std::vector<VertexId> independent;
};
// Split graph; each independent vertex sees each clique vertex with p_attach.
PlantedSplit planted_split(VertexId clique_size, VertexId independent_size, double p_attach, std::uint64_t seed);

// Graph whose minimum vertex cover is at most cover_size: edges only touch a
// planted set; vertex degrees are skewed so some exceed typical thresholds.
Graph planted_cover_graph(VertexId n, std::size_t cover_size, std::size_t edges, std::uint64_t seed);

}  // namespace sgraph::gen
