#pragma once

#include <cstdint>
#include <vector>

#include "streamgraph/accounting.hpp"
#include "streamgraph/modulator.hpp"
#include "streamgraph/stream.hpp"

namespace sgraph {

// Union-find with path halving and union by rank over 0..size-1.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size = 0) { resize(size); }
  void resize(std::size_t size);
  std::size_t add();
  std::size_t find(std::size_t a);
  bool unite(std::size_t a, std::size_t b);
  std::size_t size() const { return parent_.size(); }
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t components_ = 0;
};

// AL stream, X a vertex cover.
bool connectivity_vc(const Stream& s, const Modulator& x, RunMeters& meters);
// AL stream, only the cover size k known: greedy matching cover of size <= 2k
// built during the pass. Throws CoverViolation if it outgrows 2k.
bool connectivity_vc_greedy(const Stream& s, std::size_t k, RunMeters& meters);
// AL stream, G - X a disjoint union of at most ell cliques.
bool connectivity_cliques(const Stream& s, const Modulator& x, std::size_t ell, RunMeters& meters);
// Any model; n is taken from the stream metadata.
bool connectivity_unionfind(const Stream& s, RunMeters& meters);
// Split-graph promise: connected iff no isolated vertex. AL checks items
// directly; EA/VA mark vertices in ranges of ceil(n/p) ids, one pass each.
bool connectivity_split(const Stream& s, RunMeters& meters, std::size_t p = 1);

}  // namespace sgraph
