#include "streamgraph/modulator.hpp"

#include <string>

namespace sgraph {

Modulator::Modulator(std::vector<VertexId> members, VertexId n) : members_(std::move(members)), pos_(n + 1, -1) {
  if (members_.size() > kMaxSize) throw std::invalid_argument("modulator larger than 63 vertices");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    VertexId v = members_[i];
    if (v < 1 || v > n) throw std::invalid_argument("modulator vertex " + std::to_string(v) + " outside 1..n");
    if (pos_[v] >= 0) throw std::invalid_argument("modulator vertex " + std::to_string(v) + " repeated");
    pos_[v] = static_cast<std::int8_t>(i);
  }
}

}  // namespace sgraph
