#include "streamgraph/connectivity.hpp"

#include <algorithm>
#include <string>

#include "streamgraph/diameter_cliques.hpp"

namespace sgraph {

void DisjointSets::resize(std::size_t size) {
  parent_.clear();
  rank_.clear();
  components_ = 0;
  for (std::size_t i = 0; i < size; ++i) add();
}

std::size_t DisjointSets::add() {
  parent_.push_back(parent_.size());
  rank_.push_back(0);
  ++components_;
  return parent_.size() - 1;
}

std::size_t DisjointSets::find(std::size_t a) {
  while (parent_[a] != a) {
    parent_[a] = parent_[parent_[a]];
    a = parent_[a];
  }
  return a;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --components_;
  return true;
}

namespace {

// parent pointer plus rank per element
std::uint64_t dsu_bits(std::uint64_t size) { return size * (bits_for(size) + bits_for(bits_for(size) + 1)); }

}  // namespace

bool connectivity_vc(const Stream& s, const Modulator& x, RunMeters& meters) {
  require_model(s, StreamModel::AL, "connectivity_vc");
  const std::size_t k = x.size();
  const VertexId n = s.vertex_count();
  auto mem_cover = meters.memory.raw_bits(k * bits_for(n));
  auto mem_dsu = meters.memory.raw_bits(dsu_bits(k));
  auto mem_flag = meters.memory.flag();
  DisjointSets dsu(k);
  bool isolated = false;
  s.pass(meters.passes, [&](const StreamItem& it) {
    if (it.neighbors.empty()) isolated = true;
    int p = x.position(it.vertex);
    int first = -1;
    for (VertexId u : it.neighbors) {
      int q = x.position(u);
      if (q < 0) {
        if (p < 0)
          throw CoverViolation("edge (" + std::to_string(it.vertex) + "," + std::to_string(u) +
                               ") avoids the vertex cover");
        continue;
      }
      if (p >= 0) {
        dsu.unite(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
      } else if (first < 0) {
        first = q;
      } else {
        dsu.unite(static_cast<std::size_t>(first), static_cast<std::size_t>(q));
      }
    }
  });
  if (n <= 1) return true;
  if (isolated) return false;
  return dsu.components() <= 1;
}

bool connectivity_vc_greedy(const Stream& s, std::size_t k, RunMeters& meters) {
  require_model(s, StreamModel::AL, "connectivity_vc_greedy");
  const VertexId n = s.vertex_count();
  const std::size_t cap = 2 * k;
  // cover members with their dsu slot; mate tracked per member
  std::vector<VertexId> members;
  std::vector<VertexId> mate;
  DisjointSets dsu;
  auto mem_members = meters.memory.raw_bits(0);
  auto mem_flag = meters.memory.flag();
  auto slot_of = [&](VertexId v) -> int {
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i] == v) return static_cast<int>(i);
    return -1;
  };
  auto admit = [&](VertexId v, VertexId m) {
    if (members.size() == cap)
      throw CoverViolation("greedy cover exceeds 2k = " + std::to_string(cap) + "; no vertex cover of size " +
                           std::to_string(k));
    members.push_back(v);
    mate.push_back(m);
    dsu.add();
    mem_members.resize(members.size() * (2 * bits_for(n) + bits_for(cap) + bits_for(bits_for(cap) + 1)));
    return static_cast<int>(members.size() - 1);
  };
  bool isolated = false;
  s.pass(meters.passes, [&](const StreamItem& it) {
    if (it.neighbors.empty()) {
      isolated = true;
      return;
    }
    int self = slot_of(it.vertex);
    if (self < 0) {
      for (VertexId u : it.neighbors)
        if (slot_of(u) < 0) {
          self = admit(it.vertex, u);
          int other = admit(u, it.vertex);
          dsu.unite(static_cast<std::size_t>(self), static_cast<std::size_t>(other));
          break;
        }
    }
    if (self >= 0) {
      for (VertexId u : it.neighbors) {
        int q = slot_of(u);
        if (q >= 0) dsu.unite(static_cast<std::size_t>(self), static_cast<std::size_t>(q));
      }
      return;
    }
    // unmatched item: every neighbor is already in the cover
    int first = slot_of(it.neighbors[0]);
    for (VertexId u : it.neighbors) dsu.unite(static_cast<std::size_t>(first), static_cast<std::size_t>(slot_of(u)));
  });
  if (n <= 1) return true;
  if (isolated) return false;
  return dsu.components() <= 1;
}

bool connectivity_cliques(const Stream& s, const Modulator& x, std::size_t ell, RunMeters& meters) {
  require_model(s, StreamModel::AL, "connectivity_cliques");
  const std::size_t k = x.size();
  const VertexId n = s.vertex_count();
  auto mem_cover = meters.memory.raw_bits(k * bits_for(n));
  auto mem_slots = meters.memory.raw_bits(ell * (3 * bits_for(n) + 1));
  auto mem_dsu = meters.memory.raw_bits(dsu_bits(k + ell));
  DisjointSets dsu(k + ell);
  CliqueRegistry reg(ell);
  s.pass(meters.passes, [&](const StreamItem& it) {
    int p = x.position(it.vertex);
    std::size_t self = p >= 0 ? static_cast<std::size_t>(p) : k + reg.slot_for(it, x);
    for (VertexId u : it.neighbors) {
      int q = x.position(u);
      if (q >= 0) dsu.unite(self, static_cast<std::size_t>(q));
    }
  });
  reg.end_pass();
  // unused slots are singleton sets
  return dsu.components() - (ell - reg.size()) <= 1;
}

bool connectivity_unionfind(const Stream& s, RunMeters& meters) {
  const VertexId n = s.vertex_count();
  auto mem_dsu = meters.memory.raw_bits(dsu_bits(n));
  DisjointSets dsu(n);
  s.pass(meters.passes, [&](const StreamItem& it) {
    for (VertexId u : it.neighbors) dsu.unite(it.vertex - 1, u - 1);
  });
  return dsu.components() <= 1;
}

bool connectivity_split(const Stream& s, RunMeters& meters, std::size_t p) {
  const VertexId n = s.vertex_count();
  if (s.model() == StreamModel::AL) {
    auto mem_flag = meters.memory.flag();
    bool isolated = false;
    s.pass(meters.passes, [&](const StreamItem& it) { isolated |= it.neighbors.empty(); });
    return n <= 1 || !isolated;
  }
  p = std::max<std::size_t>(p, 1);
  const VertexId width = static_cast<VertexId>((n + p - 1) / p);
  auto mem_range = meters.memory.raw_bits(width);
  auto mem_cursor = meters.memory.vertex_id(n);
  bool isolated = false;
  std::vector<char> touched(width);
  for (VertexId lo = 1; lo <= n; lo += width) {
    const VertexId hi = std::min<VertexId>(n, lo + width - 1);
    std::fill(touched.begin(), touched.end(), 0);
    auto mark = [&](VertexId v) {
      if (v >= lo && v <= hi) touched[v - lo] = 1;
    };
    s.pass(meters.passes, [&](const StreamItem& it) {
      if (it.neighbors.empty()) return;
      mark(it.vertex);
      for (VertexId u : it.neighbors) mark(u);
    });
    for (VertexId v = lo; v <= hi; ++v) isolated |= !touched[v - lo];
  }
  return n <= 1 || !isolated;
}

}  // namespace sgraph
