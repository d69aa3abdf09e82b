#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "streamgraph/accounting.hpp"
#include "streamgraph/graph.hpp"
#include "streamgraph/stream.hpp"

namespace sgraph {

enum class Verdict { NO, Kernel };

// High-degree census. AL: degree > k, one pass. EA (and VA, read edge by
// edge): greedy cover, degree > 2k over the cover, edge count; three passes.
struct BussResult {
  Verdict verdict = Verdict::Kernel;
  std::string reason;  // why NO
  std::vector<VertexId> S;
  std::size_t k = 0;
  std::size_t k1 = 0;  // k - |S|
  std::size_t threshold = 0;
  std::uint64_t m_total = 0;    // edges in G
  std::uint64_t m_removed = 0;  // r, edges with an endpoint in S
};

BussResult buss_goldsmith(const Stream& s, std::size_t k, RunMeters& meters);

// G - S as a stream: one pass over it is one pass over the input. AL input
// stays AL (members of S keep empty items); EA and VA input come out as EA.
class BussKernelStream : public Stream {
 public:
  BussKernelStream(const Stream& in, const std::vector<VertexId>& S);
  StreamModel model() const override { return model_; }
  VertexId vertex_count() const override { return in_.vertex_count(); }
  void pass(PassMeter& meter, const ItemVisitor& visit) const override;

 private:
  const Stream& in_;
  StreamModel model_;
  std::vector<char> removed_;
};

// Bipartite double B: v stays v, its copy is v + n. Every edge (x, y) gives
// (x, y') in the first input pass and (x', y) in the second, so one pass over
// B costs two input passes. AL gives AL (V items, then V' items), EA gives EA.
class DoubledStream : public Stream {
 public:
  explicit DoubledStream(const Stream& in);
  StreamModel model() const override { return in_.model() == StreamModel::AL ? StreamModel::AL : StreamModel::EA; }
  VertexId vertex_count() const override { return 2 * in_.vertex_count(); }
  VertexId left_count() const { return in_.vertex_count(); }
  void pass(PassMeter& meter, const ItemVisitor& visit) const override;

 private:
  const Stream& in_;
};

// Replays a materialized stream, charging `cost` input passes per pass.
class CachedStream : public Stream {
 public:
  CachedStream(GraphStream materialized, std::uint64_t cost);
  StreamModel model() const override { return s_.model(); }
  VertexId vertex_count() const override { return s_.vertex_count(); }
  void pass(PassMeter& meter, const ItemVisitor& visit) const override;

 private:
  GraphStream s_;
  std::uint64_t cost_;
};

// Copies one pass of `s` into memory outside the ledger.
GraphStream materialize(const Stream& s, PassMeter& meter);

class Matching {
 public:
  bool matched(VertexId v) const { return mate_.count(v) > 0; }
  VertexId mate(VertexId v) const { return mate_.at(v); }
  void add(VertexId u, VertexId v);
  void remove(VertexId u);
  std::size_t size() const { return mate_.size() / 2; }
  // (left, right) pairs sorted by left endpoint; left means id <= left_count.
  std::vector<Edge> edges(VertexId left_count) const;

 private:
  std::unordered_map<VertexId, VertexId> mate_;
};

// Edges are (left, right) with left <= left_count < right. The matching
// charges 2 ids per edge to the ledger for as long as `hold` lives.
struct LedgerMatching {
  Matching m;
  Charge hold;
};

// One pass. Returns nullopt once the matching would exceed `cap`.
std::optional<LedgerMatching> greedy_maximal_matching(const Stream& b, VertexId left_count, std::size_t cap,
                                                     RunMeters& meters);

// Visited flags on matched edges, keyed by the right endpoint, with the
// start vertex of the search that set them.
struct VisitedMarks {
  std::unordered_map<VertexId, VertexId> start_of;
  Charge hold;
  bool visited(VertexId right) const { return start_of.count(right) > 0; }
};

struct SearchStats {
  std::uint64_t passes = 0;
  std::uint64_t starts = 0;
  std::uint64_t pushes = 0;
};

// Streamed DFS from the free left vertices, one pass per step. Returns the
// path u0, w1, u1, ..., wt (free left to free right) or nullopt.
std::optional<std::vector<VertexId>> find_augmenting_path(const Stream& b, VertexId left_count, const Matching& m,
                                                         VisitedMarks& marks, RunMeters& meters,
                                                         SearchStats* stats = nullptr);

// Greedy seed, then augment until no path. nullopt if |M| would exceed cap.
std::optional<LedgerMatching> maximum_matching(const Stream& b, VertexId left_count, std::size_t cap,
                                              RunMeters& meters, std::uint64_t* augmentations = nullptr);

// Minimum cover of B from a maximum matching: right endpoints of matched
// edges reached by alternating paths from free left vertices, plus left
// endpoints of the rest. Sorted.
std::vector<VertexId> koenig_cover(const Stream& b, VertexId left_count, const Matching& m, RunMeters& meters);

struct NTSets {
  std::vector<VertexId> C0;  // v and v' both in the cover
  std::vector<VertexId> V0;  // exactly one of them
};

NTSets nt_sets(const std::vector<VertexId>& cover_of_b, VertexId n);

struct KernelOptions {
  // Materialize the kernel and doubled streams once; pass counts are still
  // those of re-running the transformations.
  bool cached = false;
};

struct KernelOutput {
  Verdict verdict = Verdict::Kernel;
  std::string reason;
  BussResult buss;
  std::vector<Edge> matching;  // in B, (v, w + n)
  std::size_t greedy_size = 0;
  std::uint64_t augmentations = 0;
  std::vector<VertexId> cover;  // in B
  NTSets nt;
  std::int64_t k_prime = 0;
  Graph kernel;                      // G[V0], relabelled
  std::vector<VertexId> vertex_map;  // kernel id i+1 -> original id
  std::uint64_t passes = 0;
  std::uint64_t peak_bits = 0;
};

KernelOutput kernelize(const Stream& s, std::size_t k, RunMeters& meters, const KernelOptions& opts = {});

}  // namespace sgraph
