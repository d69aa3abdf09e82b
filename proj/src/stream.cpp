#include "streamgraph/stream.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

namespace sgraph {

void seeded_shuffle(std::vector<VertexId>& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

GraphStream::GraphStream(StreamModel model, VertexId n, const std::vector<std::vector<VertexId>>& items,
                         const std::vector<VertexId>& item_vertices)
    : model_(model), n_(n) {
  std::size_t total = 0;
  for (const auto& it : items) total += it.size();
  pool_.reserve(total);
  for (const auto& it : items) pool_.insert(pool_.end(), it.begin(), it.end());
  items_.reserve(items.size());
  std::size_t off = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    items_.push_back(StreamItem{item_vertices[i], std::span<const VertexId>(pool_.data() + off, items[i].size())});
    off += items[i].size();
  }
}

std::span<const StreamItem> GraphStream::begin_pass(PassMeter& meter) const {
  meter.begin_pass();
  return items_;
}

void GraphStream::pass(PassMeter& meter, const ItemVisitor& visit) const {
  for (const auto& it : begin_pass(meter)) visit(it);
}

namespace {

GraphStream build_impl(const Graph& g, StreamModel model, const std::vector<VertexId>& order,
                       std::uint64_t vertex_seed, std::uint64_t neighbor_seed) {
  const VertexId n = g.vertex_count();
  std::vector<std::vector<VertexId>> items;
  std::vector<VertexId> heads;
  std::mt19937_64 nrng(neighbor_seed ^ 0x9e3779b97f4a7c15ULL);
  if (model == StreamModel::EA) {
    auto edges = g.edges();
    std::vector<VertexId> idx(edges.size());
    std::iota(idx.begin(), idx.end(), 0);
    seeded_shuffle(idx, vertex_seed);
    for (VertexId i : idx) {
      auto [u, v] = edges[i];
      if (nrng() & 1) std::swap(u, v);
      heads.push_back(u);
      items.push_back({v});
    }
    return GraphStream(model, n, items, heads);
  }
  std::vector<std::uint32_t> pos(n + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<std::uint32_t>(i);
  for (VertexId v : order) {
    std::vector<VertexId> nb;
    for (VertexId u : g.neighbors(v))
      if (model == StreamModel::AL || pos[u] < pos[v]) nb.push_back(u);
    seeded_shuffle(nb, nrng());
    heads.push_back(v);
    items.push_back(std::move(nb));
  }
  return GraphStream(model, n, items, heads);
}

void check_order(const std::vector<VertexId>& order, VertexId n) {
  if (order.size() != n) throw InvalidGraph("vertex order has wrong length");
  std::vector<char> seen(n + 1, 0);
  for (VertexId v : order) {
    if (v < 1 || v > n || seen[v]) throw InvalidGraph("vertex order is not a permutation");
    seen[v] = 1;
  }
}

}  // namespace

GraphStream build_stream(const Graph& g, StreamModel model, std::uint64_t vertex_seed, std::uint64_t neighbor_seed) {
  std::vector<VertexId> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 1);
  if (vertex_seed != 0) seeded_shuffle(order, vertex_seed);
  return build_impl(g, model, order, vertex_seed, neighbor_seed);
}

GraphStream build_stream_ordered(const Graph& g, StreamModel model, const std::vector<VertexId>& vertex_order,
                                 std::uint64_t neighbor_seed) {
  if (model != StreamModel::EA) check_order(vertex_order, g.vertex_count());
  return build_impl(g, model, vertex_order, 0, neighbor_seed);
}

std::vector<Edge> reconstruct_edges(const Stream& s, PassMeter& meter) {
  const VertexId n = s.vertex_count();
  std::vector<Edge> out;
  std::vector<char> seen(n + 1, 0);
  auto bad = [](const std::string& what) { throw InvalidGraph("stream breaks model invariants: " + what); };
  s.pass(meter, [&](const StreamItem& it) {
    if (it.vertex < 1 || it.vertex > n) bad("item vertex out of range");
    if (s.model() == StreamModel::EA) {
      if (it.neighbors.size() != 1) bad("EA item without exactly one endpoint");
      VertexId u = it.vertex, v = it.neighbors[0];
      out.emplace_back(std::min(u, v), std::max(u, v));
      return;
    }
    if (seen[it.vertex]) bad("vertex " + std::to_string(it.vertex) + " appears twice");
    seen[it.vertex] = 1;
    for (VertexId u : it.neighbors) {
      if (u < 1 || u > n || u == it.vertex) bad("bad neighbor id");
      if (s.model() == StreamModel::VA && !seen[u]) bad("VA edge revealed before its other endpoint");
      out.emplace_back(std::min(u, it.vertex), std::max(u, it.vertex));
    }
  });
  std::sort(out.begin(), out.end());
  if (s.model() == StreamModel::AL) {
    for (VertexId v = 1; v <= n; ++v)
      if (!seen[v]) bad("AL vertex missing");
    // each edge exactly twice
    std::vector<Edge> once;
    for (std::size_t i = 0; i < out.size(); i += 2) {
      if (i + 1 >= out.size() || out[i] != out[i + 1] || (i + 2 < out.size() && out[i + 2] == out[i]))
        bad("AL edge not seen at both endpoints");
      once.push_back(out[i]);
    }
    return once;
  }
  if (s.model() == StreamModel::VA)
    for (VertexId v = 1; v <= n; ++v)
      if (!seen[v]) bad("VA vertex missing");
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) bad("edge repeated");
  return out;
}

void dump_trace(std::ostream& out, const Stream& s, PassMeter& meter) {
  s.pass(meter, [&](const StreamItem& it) {
    if (s.model() == StreamModel::EA) {
      out << "E " << it.vertex << ' ' << it.neighbors[0] << '\n';
      return;
    }
    out << "V " << it.vertex << ':';
    for (VertexId u : it.neighbors) out << ' ' << u;
    out << '\n';
  });
}

void require_model(const Stream& s, StreamModel needed, std::string_view algorithm) {
  if (s.model() != needed)
    throw ModelMismatch(std::string(algorithm) + " needs an " + std::string(to_string(needed)) + " stream, got " +
                        std::string(to_string(s.model())));
}

void require_model(const Stream& s, std::initializer_list<StreamModel> allowed, std::string_view algorithm) {
  for (auto m : allowed)
    if (s.model() == m) return;
  throw ModelMismatch(std::string(algorithm) + " does not support " + std::string(to_string(s.model())) + " streams");
}

}  // namespace sgraph
