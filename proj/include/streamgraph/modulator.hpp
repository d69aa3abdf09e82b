#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "streamgraph/types.hpp"

namespace sgraph {

// Ordered deletion set X. Bit i of a mask refers to members()[i].
class Modulator {
 public:
  static constexpr std::size_t kMaxSize = 63;

  Modulator(std::vector<VertexId> members, VertexId n);

  std::size_t size() const { return members_.size(); }
  std::span<const VertexId> members() const { return members_; }
  VertexId member(std::size_t pos) const { return members_[pos]; }
  bool contains(VertexId v) const { return pos_[v] >= 0; }
  int position(VertexId v) const { return pos_[v]; }
  std::uint64_t mask_of(std::span<const VertexId> vs) const {
    std::uint64_t m = 0;
    for (VertexId u : vs)
      if (pos_[u] >= 0) m |= std::uint64_t{1} << pos_[u];
    return m;
  }
  VertexId universe() const { return static_cast<VertexId>(pos_.size() - 1); }

 private:
  std::vector<VertexId> members_;
  std::vector<std::int8_t> pos_;
};

}  // namespace sgraph
