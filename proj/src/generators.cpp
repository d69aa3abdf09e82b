#include "streamgraph/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "streamgraph/stream.hpp"

namespace sgraph::gen {

namespace {

std::vector<VertexId> random_labels(VertexId n, Rng& rng) {
  std::vector<VertexId> lab(n);
  std::iota(lab.begin(), lab.end(), 1);
  seeded_shuffle(lab, rng.next());
  return lab;
}

}  // namespace

Graph path_graph(VertexId n) {
  std::vector<Edge> es;
  for (VertexId v = 1; v < n; ++v) es.emplace_back(v, v + 1);
  return Graph::from_edges(n, es);
}

Graph cycle_graph(VertexId n) {
  std::vector<Edge> es;
  for (VertexId v = 1; v < n; ++v) es.emplace_back(v, v + 1);
  if (n >= 3) es.emplace_back(1, n);
  return Graph::from_edges(n, es);
}

Graph star_graph(VertexId leaves) {
  std::vector<Edge> es;
  for (VertexId v = 2; v <= leaves + 1; ++v) es.emplace_back(1, v);
  return Graph::from_edges(leaves + 1, es);
}

Graph complete_graph(VertexId n) {
  std::vector<Edge> es;
  for (VertexId u = 1; u <= n; ++u)
    for (VertexId v = u + 1; v <= n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph empty_graph(VertexId n) { return Graph(n); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  const VertexId off = a.vertex_count();
  for (auto [u, v] : b.edges()) es.emplace_back(u + off, v + off);
  return Graph::from_edges(off + b.vertex_count(), es);
}

Graph gnp(VertexId n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> es;
  for (VertexId u = 1; u <= n; ++u)
    for (VertexId v = u + 1; v <= n; ++v)
      if (rng.chance(p)) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

PlantedCover planted_vertex_cover(VertexId n, std::size_t k, std::size_t min_degree, std::size_t max_degree,
                                  double p_inner, std::uint64_t seed) {
  Rng rng(seed);
  auto lab = random_labels(n, rng);
  PlantedCover out;
  out.cover.assign(lab.begin(), lab.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<Edge> es;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (rng.chance(p_inner)) es.emplace_back(lab[i], lab[j]);
  std::vector<VertexId> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  max_degree = std::min(max_degree, k);
  min_degree = std::min(min_degree, max_degree);
  for (std::size_t i = k; i < n; ++i) {
    std::size_t deg = rng.between(min_degree, max_degree);
    seeded_shuffle(pick, rng.next());
    for (std::size_t t = 0; t < deg; ++t) es.emplace_back(lab[i], lab[pick[t]]);
  }
  for (auto& e : es)
    if (e.first > e.second) std::swap(e.first, e.second);
  out.graph = Graph::from_edges(n, es);
  return out;
}

PlantedCliques planted_cliques(VertexId n, std::size_t k, std::size_t ell, double p_attach, double p_inner,
                               std::uint64_t seed) {
  Rng rng(seed);
  auto lab = random_labels(n, rng);
  PlantedCliques out;
  out.deletion.assign(lab.begin(), lab.begin() + static_cast<std::ptrdiff_t>(k));
  const std::size_t rest = n - k;
  ell = std::min(ell, rest);
  // cut points for ell nonempty parts
  std::set<std::size_t> cuts;
  while (cuts.size() + 1 < ell) cuts.insert(rng.between(1, rest - 1));
  std::vector<std::size_t> bounds{0};
  bounds.insert(bounds.end(), cuts.begin(), cuts.end());
  bounds.push_back(rest);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (rng.chance(p_inner)) es.emplace_back(lab[i], lab[j]);
  for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
    std::vector<VertexId> members;
    for (std::size_t i = bounds[c]; i < bounds[c + 1]; ++i) members.push_back(lab[k + i]);
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) es.emplace_back(members[a], members[b]);
      for (std::size_t x = 0; x < k; ++x)
        if (rng.chance(p_attach)) es.emplace_back(members[a], lab[x]);
    }
    std::sort(members.begin(), members.end());
    out.cliques.push_back(std::move(members));
  }
  for (auto& e : es)
    if (e.first > e.second) std::swap(e.first, e.second);
  out.graph = Graph::from_edges(n, es);
  return out;
}

PlantedSplit planted_split(VertexId clique_size, VertexId independent_size, double p_attach, std::uint64_t seed) {
  Rng rng(seed);
  const VertexId n = clique_size + independent_size;
  auto lab = random_labels(n, rng);
  PlantedSplit out;
  out.clique.assign(lab.begin(), lab.begin() + clique_size);
  out.independent.assign(lab.begin() + clique_size, lab.end());
  std::vector<Edge> es;
  for (VertexId a = 0; a < clique_size; ++a)
    for (VertexId b = a + 1; b < clique_size; ++b) es.emplace_back(lab[a], lab[b]);
  for (VertexId i = clique_size; i < n; ++i)
    for (VertexId a = 0; a < clique_size; ++a)
      if (rng.chance(p_attach)) es.emplace_back(lab[i], lab[a]);
  for (auto& e : es)
    if (e.first > e.second) std::swap(e.first, e.second);
  out.graph = Graph::from_edges(n, es);
  return out;
}

Graph planted_cover_graph(VertexId n, std::size_t cover_size, std::size_t edges, std::uint64_t seed) {
  Rng rng(seed);
  auto lab = random_labels(n, rng);
  cover_size = std::min<std::size_t>(cover_size, n);
  std::set<Edge> es;
  std::size_t attempts = 0;
  while (es.size() < edges && cover_size > 0 && attempts++ < 50 * edges + 100) {
    // skew towards low cover indices so degrees vary
    std::size_t a = rng.below(cover_size);
    if (rng.chance(0.5)) a = rng.below(a + 1);
    VertexId u = lab[a];
    VertexId v = lab[rng.below(n)];
    if (u == v) continue;
    es.emplace(std::min(u, v), std::max(u, v));
  }
  return Graph::from_edges(n, std::vector<Edge>(es.begin(), es.end()));
}

}  // namespace sgraph::gen
