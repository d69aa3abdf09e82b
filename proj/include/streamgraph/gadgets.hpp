#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streamgraph/graph.hpp"
#include "streamgraph/stream.hpp"
#include "streamgraph/types.hpp"

namespace sgraph {

enum class GadgetKind {
  SimpleVA,
  CliqueVA,
  SimpleAL,
  Windmill,
  Diamond,
  Split,
  Quadratic,
  QuadraticBipartite,
  WindmillPerm,
  DiamondPerm,
  SimpleALConn,
  Cycles,
  CyclesBipartite,
  Interval,
  SplitConn,
  CyclesPerm,
};

const std::vector<GadgetKind>& all_gadget_kinds();
std::string_view gadget_name(GadgetKind k);  // "simple-va", "windmill-perm", ...
std::optional<GadgetKind> parse_gadget_kind(std::string_view name);
bool is_perm_kind(GadgetKind k);
// Disj kinds whose claim assumes neither string is all-zero.
bool requires_nonzero_input(GadgetKind k);
// Bits per string for an n-parameter build (n*n for the Quadratic kinds).
std::size_t disj_input_length(GadgetKind k, std::size_t n);
std::size_t expected_vertex_count(GadgetKind k, std::size_t n);

struct DisjInput {
  std::vector<std::uint8_t> x, y;
  bool intersecting() const;
  static DisjInput from_strings(std::string_view x, std::string_view y);
};

std::string bit_string(const std::vector<std::uint8_t>& bits);

// pi is 1-based: pi[i-1] is the image of i. j in 1..n*log2(n).
struct PermInput {
  std::vector<VertexId> pi;
  std::uint64_t j = 1;

  std::uint32_t log_n() const;
  std::uint64_t psi() const;
  std::uint32_t gamma() const;
  // bit gamma (1-based, most significant first) of m-1 written in log n bits
  bool bit(VertexId m) const;
  bool answer() const { return bit(pi[psi() - 1]); }
  void validate() const;
};

enum class Party : std::uint8_t { Alice, Bob };
enum class Problem { Diameter, Connectivity };

enum class Relation { AtMost, AtLeast, Exactly, Connected, Disconnected };

struct AnswerPredicate {
  Relation rel = Relation::Connected;
  std::uint32_t value = 0;
  bool holds(Distance d) const;
  bool holds(bool connected) const;
  std::string str() const;
};

// on_yes: Disj answer YES (disjoint) or Perm bit 1; on_no the other side.
struct DichotomyClaim {
  Problem problem = Problem::Diameter;
  AnswerPredicate on_yes, on_no;
};

enum class WitnessKind {
  VertexCover,          // vertices meet every edge
  CliqueDeletion,       // G - vertices is at most `bound` disjoint cliques
  MatchingAfterDeletion,
  PathAfterDeletion,    // G - vertices is a single path
  Tree,
  MaxDegree,            // max degree <= bound
  Bipartite,
  SplitPartition,       // vertices form a clique, the rest is independent
  AssertedClass,        // recorded, not checked
};

struct Witness {
  std::string name;
  WitnessKind kind = WitnessKind::AssertedClass;
  std::vector<VertexId> vertices;
  std::size_t bound = 0;
};

struct GadgetInstance {
  GadgetKind kind = GadgetKind::SimpleVA;
  std::size_t n = 0;
  std::optional<DisjInput> disj;
  std::optional<PermInput> perm;
  Graph graph;
  StreamModel model = StreamModel::AL;
  std::vector<VertexId> order;  // stream order of the items
  std::vector<Party> owner;     // owner[i] reveals item order[i]
  std::vector<std::string> names;  // names[v - 1]
  DichotomyClaim claim;
  bool yes = false;
  std::vector<Witness> witnesses;

  GraphStream stream(std::uint64_t neighbor_seed = 0) const;
  VertexId vertex(std::string_view name) const;  // throws if unknown
};

GadgetInstance build_disj_gadget(GadgetKind kind, const DisjInput& input);
GadgetInstance build_perm_gadget(GadgetKind kind, const PermInput& input);

// At most one ownership switch per pass, Alice first, and every item equal
// to the item rebuilt with the other party's input replaced.
bool validate_handoff(const GadgetInstance& g);

// Same graph and order with ownership labels alternating between parties.
GadgetInstance make_interleaved_mutant(const GadgetInstance& g);
// Same graph and ownership, items re-streamed in another model.
GadgetInstance restream(const GadgetInstance& g, StreamModel model);

struct DichotomyReport {
  bool answer_connected = false;
  Distance diameter;  // only for Diameter gadgets
  bool claim_holds = false;
  bool size_ok = false;
  bool connected_ok = true;  // Diameter gadgets must be connected
  bool model_ok = false;
  std::vector<std::pair<std::string, bool>> witness_results;
  bool ok() const;
  std::string describe() const;
};

DichotomyReport verify_dichotomy(const GadgetInstance& g);

}  // namespace sgraph
