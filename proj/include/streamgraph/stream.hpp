#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "streamgraph/accounting.hpp"
#include "streamgraph/graph.hpp"
#include "streamgraph/types.hpp"

namespace sgraph {

// EA items carry the edge (vertex, neighbors[0]); VA/AL items carry a vertex
// and the neighbors revealed with it.
struct StreamItem {
  VertexId vertex = 0;
  std::span<const VertexId> neighbors;
};

using ItemVisitor = std::function<void(const StreamItem&)>;

class Stream {
 public:
  virtual ~Stream() = default;
  virtual StreamModel model() const = 0;
  virtual VertexId vertex_count() const = 0;
  // One full traversal. Charges the passes it costs on the underlying input.
  virtual void pass(PassMeter& meter, const ItemVisitor& visit) const = 0;
};

// Materialized, immutable, replayable stream.
class GraphStream : public Stream {
 public:
  GraphStream(StreamModel model, VertexId n, const std::vector<std::vector<VertexId>>& items,
              const std::vector<VertexId>& item_vertices);

  StreamModel model() const override { return model_; }
  VertexId vertex_count() const override { return n_; }
  void pass(PassMeter& meter, const ItemVisitor& visit) const override;

  std::span<const StreamItem> begin_pass(PassMeter& meter) const;
  std::span<const StreamItem> items() const { return items_; }

 private:
  StreamModel model_;
  VertexId n_;
  std::vector<VertexId> pool_;
  std::vector<StreamItem> items_;
};

GraphStream build_stream(const Graph& g, StreamModel model, std::uint64_t vertex_seed = 0,
                         std::uint64_t neighbor_seed = 0);
// VA/AL with a fixed vertex order (a permutation of 1..n); EA ignores it.
GraphStream build_stream_ordered(const Graph& g, StreamModel model, const std::vector<VertexId>& vertex_order,
                                 std::uint64_t neighbor_seed = 0);

// Edges recovered from one pass according to the model's rules (u < v,
// sorted). Throws InvalidGraph if the pass breaks the model invariants.
std::vector<Edge> reconstruct_edges(const Stream& s, PassMeter& meter);

// "E u v" or "V v: u1 u2 ..." per item.
void dump_trace(std::ostream& out, const Stream& s, PassMeter& meter);

void require_model(const Stream& s, StreamModel needed, std::string_view algorithm);
void require_model(const Stream& s, std::initializer_list<StreamModel> allowed, std::string_view algorithm);

// Fisher-Yates with mt19937_64 raw output, so orders do not depend on the
// standard library's distribution implementations.
void seeded_shuffle(std::vector<VertexId>& v, std::uint64_t seed);

}  // namespace sgraph
