#include "streamgraph/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>

namespace sgraph::oracle {

std::vector<Distance> bfs_distances(const Graph& g, VertexId source) {
  std::vector<Distance> dist(g.vertex_count());
  std::deque<VertexId> q{source};
  dist[source - 1] = Distance::finite(0);
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop_front();
    for (VertexId w : g.neighbors(u))
      if (dist[w - 1].is_infinite()) {
        dist[w - 1] = dist[u - 1].plus(1);
        q.push_back(w);
      }
  }
  return dist;
}

Distance exact_diameter_plain(const Graph& g) {
  Distance best = Distance::finite(0);
  for (VertexId s = 1; s <= g.vertex_count(); ++s) {
    for (const auto& d : bfs_distances(g, s)) {
      if (d.is_infinite()) return Distance::infinite();
      best = std::max(best, d);
    }
  }
  return best;
}

Distance exact_diameter_bitset(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(n * words, 0);
  for (VertexId v = 1; v <= n; ++v)
    for (VertexId u : g.neighbors(v)) rows[(v - 1) * words + (u - 1) / 64] |= 1ULL << ((u - 1) % 64);
  std::vector<std::uint64_t> seen(words), next(words);
  std::vector<VertexId> frontier, grown;
  std::uint32_t best = 0;
  for (VertexId s = 1; s <= n; ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    seen[(s - 1) / 64] |= 1ULL << ((s - 1) % 64);
    frontier.assign(1, s);
    std::size_t reached = 1;
    std::uint32_t level = 0;
    while (!frontier.empty()) {
      std::fill(next.begin(), next.end(), 0);
      for (VertexId v : frontier) {
        const std::uint64_t* row = &rows[(v - 1) * words];
        for (std::size_t w = 0; w < words; ++w) next[w] |= row[w];
      }
      grown.clear();
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t fresh = next[w] & ~seen[w];
        seen[w] |= fresh;
        while (fresh) {
          int b = std::countr_zero(fresh);
          fresh &= fresh - 1;
          grown.push_back(static_cast<VertexId>(w * 64 + b + 1));
        }
      }
      if (grown.empty()) break;
      ++level;
      reached += grown.size();
      frontier.swap(grown);
    }
    if (reached < n) return Distance::infinite();
    best = std::max(best, level);
  }
  return Distance::finite(best);
}

Distance exact_diameter(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 64 && g.edge_count() > 4 * n) return exact_diameter_bitset(g);
  return exact_diameter_plain(g);
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  for (const auto& d : bfs_distances(g, 1))
    if (d.is_infinite()) return false;
  return true;
}

bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& cover) {
  std::vector<char> in(g.vertex_count() + 1, 0);
  for (VertexId v : cover) in[v] = 1;
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

std::optional<std::vector<VertexId>> min_vertex_cover(const Graph& g, int k_max) {
  auto edges = g.edges();
  std::vector<char> in(g.vertex_count() + 1, 0);
  std::vector<VertexId> chosen;
  // plain branching on an uncovered edge
  std::function<bool(int)> search = [&](int budget) -> bool {
    const Edge* open = nullptr;
    for (const auto& e : edges)
      if (!in[e.first] && !in[e.second]) {
        open = &e;
        break;
      }
    if (!open) return true;
    if (budget == 0) return false;
    for (VertexId pick : {open->first, open->second}) {
      in[pick] = 1;
      chosen.push_back(pick);
      if (search(budget - 1)) return true;
      chosen.pop_back();
      in[pick] = 0;
    }
    return false;
  };
  for (int k = 0; k <= k_max; ++k) {
    chosen.clear();
    std::fill(in.begin(), in.end(), 0);
    if (search(k)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  return std::nullopt;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.vertex_count() + 1, -1);
  for (VertexId s = 1; s <= g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<VertexId> q{s};
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop_front();
      for (VertexId w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          q.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Edge> reference_max_matching(const Graph& g, VertexId left_count) {
  const VertexId n = g.vertex_count();
  for (auto [u, v] : g.edges())
    if ((u <= left_count) == (v <= left_count)) throw InvalidGraph("edge inside one side of the bipartition");
  // Kuhn's augmenting paths from every left vertex
  std::vector<VertexId> mate(n + 1, 0);
  std::vector<char> seen;
  std::function<bool(VertexId)> try_augment = [&](VertexId u) -> bool {
    for (VertexId r : g.neighbors(u)) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (mate[r] == 0 || try_augment(mate[r])) {
        mate[r] = u;
        mate[u] = r;
        return true;
      }
    }
    return false;
  };
  for (VertexId u = 1; u <= left_count; ++u) {
    seen.assign(n + 1, 0);
    try_augment(u);
  }
  std::vector<Edge> out;
  for (VertexId u = 1; u <= left_count; ++u)
    if (mate[u]) out.emplace_back(u, mate[u]);
  return out;
}

}  // namespace sgraph::oracle
