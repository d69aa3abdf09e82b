#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "streamgraph/accounting.hpp"
#include "streamgraph/modulator.hpp"
#include "streamgraph/stream.hpp"

namespace sgraph {

// d over X (in modulator order) and the source.
struct TentativeDistances {
  VertexId source = 0;
  std::vector<VertexId> cover;
  std::vector<Distance> d;
  Distance at(VertexId v) const;
};

struct BfsOptions {
  // Called after every round with the current tentative distances.
  std::function<void(std::uint32_t round, const TentativeDistances&)> on_round;
  // Fill BfsResult::all with every vertex's distance (index v-1).
  bool collect_all = false;
};

struct BfsResult {
  TentativeDistances tentative;
  Distance eccentricity;
  std::vector<Distance> all;
  std::uint32_t rounds = 0;
};

// Bounded BFS over an AL stream with vertex cover X: 2k rounds plus one
// extraction pass.
BfsResult bounded_bfs(const Stream& s, const Modulator& x, VertexId source, RunMeters& meters,
                      const BfsOptions& opts = {});

enum class RepresentativeMode { per_class, batched };

struct DiameterVcOptions {
  bool validate_cover = false;
  RepresentativeMode mode = RepresentativeMode::per_class;
};

Distance diameter_multipass(const Stream& s, const Modulator& x, RunMeters& meters,
                            const DiameterVcOptions& opts = {});

enum class Multiplicity : std::uint8_t { none = 0, one = 1, many = 2 };

struct TwinClassTable {
  std::vector<VertexId> cover;
  std::vector<std::uint64_t> cover_adjacency;  // X-neighbors of each member, as a mask
  std::vector<Multiplicity> classes;          // indexed by mask, non-X vertices only
  std::uint64_t vertex_count = 0;             // every item seen, X included
};

TwinClassTable build_twin_class_table(const Stream& s, const Modulator& x, RunMeters& meters);
Distance diameter_from_table(const TwinClassTable& t, VertexId n, RunMeters& meters);
Distance diameter_onepass(const Stream& s, const Modulator& x, RunMeters& meters);

// One pass; throws CoverViolation if an edge avoids X.
void validate_cover(const Stream& s, const Modulator& x, PassMeter& meter);

}  // namespace sgraph
