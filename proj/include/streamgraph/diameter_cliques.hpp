#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "streamgraph/accounting.hpp"
#include "streamgraph/modulator.hpp"
#include "streamgraph/stream.hpp"

namespace sgraph {

// Canonical clique of a non-X vertex: the minimum id in its closed
// neighborhood outside X, with that neighborhood's size.
struct CliqueKey {
  VertexId id = 0;
  std::uint32_t size = 0;
};
CliqueKey clique_id_of(const StreamItem& item, const Modulator& x);

// Slots for at most ell cliques, with per-pass consistency checks.
class CliqueRegistry {
 public:
  explicit CliqueRegistry(std::size_t ell) : ell_(ell) {}
  // Slot of the item's clique; allocates on first sight. Throws
  // PartitionInconsistency when sizes disagree or more than ell cliques appear.
  std::size_t slot_for(const StreamItem& item, const Modulator& x);
  // Every clique must have been seen in full, including its minimum vertex.
  void end_pass();
  std::size_t size() const { return slots_.size(); }
  VertexId id(std::size_t slot) const { return slots_[slot].id; }
  std::size_t capacity() const { return ell_; }

 private:
  struct Slot {
    VertexId id;
    std::uint32_t size;
    std::uint32_t count;
    bool self_seen;
  };
  std::size_t ell_;
  std::vector<Slot> slots_;
};

struct CliqueSummary {
  VertexId source = 0;
  std::vector<VertexId> cover;
  std::vector<Distance> d_cover;
  std::vector<VertexId> representative;  // clique id per slot, discovery order
  std::vector<Distance> d_clique;
  Distance eccentricity;
  std::vector<Distance> all;  // index v-1, when collected
  std::uint32_t rounds = 0;
  Distance clique_distance(VertexId clique_id) const;
};

struct CliqueBfsOptions {
  std::function<void(std::uint32_t round, const CliqueSummary&)> on_round;
  bool collect_all = false;
};

CliqueSummary bounded_bfs_cliques(const Stream& s, const Modulator& x, std::size_t ell, VertexId source,
                                  RunMeters& meters, const CliqueBfsOptions& opts = {});
Distance diameter_multipass_cliques(const Stream& s, const Modulator& x, std::size_t ell, RunMeters& meters);
Distance diameter_onepass_cliques(const Stream& s, const Modulator& x, std::size_t ell, RunMeters& meters);

}  // namespace sgraph
