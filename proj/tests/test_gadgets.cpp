#include <numeric>

#include "doctest.h"
#include "streamgraph/connectivity.hpp"
#include "streamgraph/diameter_vc.hpp"
#include "streamgraph/gadgets.hpp"
#include "streamgraph/generators.hpp"
#include "streamgraph/oracle.hpp"

using namespace sgraph;

namespace {

GadgetInstance disj(GadgetKind k, std::string_view x, std::string_view y) {
  return build_disj_gadget(k, DisjInput::from_strings(x, y));
}

std::vector<VertexId> identity(std::size_t n) {
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

std::vector<std::uint8_t> bits_of(std::uint64_t v, std::size_t len) {
  std::vector<std::uint8_t> b(len);
  for (std::size_t i = 0; i < len; ++i) b[i] = (v >> i) & 1;
  return b;
}

// Kinds whose claim holds everywhere; the Quadratic kinds and Diamond at
// n = 1 are covered separately.
bool sound_kind(GadgetKind k) {
  return !is_perm_kind(k) && k != GadgetKind::Quadratic && k != GadgetKind::QuadraticBipartite;
}

Distance multipass_on(const GadgetInstance& g, std::initializer_list<std::string_view> cover) {
  auto al = restream(g, StreamModel::AL).stream(4);
  std::vector<VertexId> x;
  for (auto s : cover) x.push_back(g.vertex(s));
  RunMeters m;
  return diameter_multipass(al, Modulator(x, g.graph.vertex_count()), m, {true});
}

}  // namespace

TEST_CASE("kind names round-trip") {
  CHECK(all_gadget_kinds().size() == 16);
  for (auto k : all_gadget_kinds()) CHECK(parse_gadget_kind(gadget_name(k)) == k);
  CHECK_FALSE(parse_gadget_kind("pentagon").has_value());
}

TEST_CASE("simple-va examples") {
  auto g = disj(GadgetKind::SimpleVA, "110", "001");
  CHECK(g.graph.vertex_count() == 6);
  CHECK(oracle::exact_diameter(g.graph) == Distance::finite(4));
  CHECK(verify_dichotomy(g).ok());

  auto h = disj(GadgetKind::SimpleVA, "1010", "0101");
  CHECK(oracle::exact_diameter(h.graph) == Distance::finite(4));

  CHECK(multipass_on(disj(GadgetKind::SimpleVA, "10000", "00001"), {"a", "b", "c"}) == Distance::finite(4));
  CHECK(multipass_on(disj(GadgetKind::SimpleVA, "10001", "00001"), {"a", "b", "c"}) == Distance::finite(3));
}

TEST_CASE("simple-va handoff: Alice reveals the middle, c and a; Bob reveals b") {
  auto g = disj(GadgetKind::SimpleVA, "101", "011");
  CHECK(g.model == StreamModel::VA);
  std::vector<std::string> alice, bob;
  for (std::size_t i = 0; i < g.order.size(); ++i)
    (g.owner[i] == Party::Alice ? alice : bob).push_back(g.names[g.order[i] - 1]);
  CHECK(alice == std::vector<std::string>{"v_1", "v_2", "v_3", "c", "a"});
  CHECK(bob == std::vector<std::string>{"b"});
  CHECK(validate_handoff(g));
  CHECK_FALSE(validate_handoff(make_interleaved_mutant(g)));
  // as an AL stream Alice's middle vertices would reveal Bob's edges
  CHECK_FALSE(validate_handoff(restream(g, StreamModel::AL)));
}

TEST_CASE("cycles examples") {
  auto g = disj(GadgetKind::Cycles, "11", "11");
  CHECK(g.graph.vertex_count() == 20);
  CHECK_FALSE(oracle::is_connected(g.graph));
  CHECK(verify_dichotomy(g).ok());
  auto h = disj(GadgetKind::Cycles, "101", "010");
  CHECK(h.graph.vertex_count() == 28);
  CHECK(oracle::is_connected(h.graph));
  RunMeters m;
  CHECK(connectivity_unionfind(h.stream(), m) == true);
}

TEST_CASE("diamond n=1 falls below the claimed gap") {
  auto g = disj(GadgetKind::Diamond, "1", "1");
  CHECK(g.graph.vertex_count() == 13);
  CHECK(oracle::exact_diameter(g.graph) == Distance::finite(6));
  auto r = verify_dichotomy(g);
  CHECK_FALSE(r.claim_holds);
  CHECK(r.size_ok);
  CHECK(r.model_ok);
  // a second index restores the gap
  CHECK(verify_dichotomy(disj(GadgetKind::Diamond, "10", "10")).ok());
}

TEST_CASE("quadratic: the claim holds for one index and not beyond") {
  for (auto [x, y] : {std::pair{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}})
    CHECK(verify_dichotomy(disj(GadgetKind::Quadratic, x, y)).ok());
  auto g = disj(GadgetKind::Quadratic, "0000", "0000");
  CHECK(g.graph.vertex_count() == 16);
  CHECK(oracle::exact_diameter(g.graph) == Distance::finite(6));
  CHECK_FALSE(verify_dichotomy(g).claim_holds);
  auto q = disj(GadgetKind::QuadraticBipartite, "0000", "0000");
  CHECK(q.graph.vertex_count() == 24);
  CHECK(oracle::is_bipartite(q.graph));
}

TEST_CASE("exhaustive disj sweeps up to n=3") {
  for (auto k : all_gadget_kinds()) {
    if (!sound_kind(k)) continue;
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::uint64_t xv = 0; xv < (1u << n); ++xv)
        for (std::uint64_t yv = 0; yv < (1u << n); ++yv) {
          DisjInput in{bits_of(xv, n), bits_of(yv, n)};
          if (requires_nonzero_input(k) && (xv == 0 || yv == 0)) continue;
          auto g = build_disj_gadget(k, in);
          auto r = verify_dichotomy(g);
          const bool known_gap = k == GadgetKind::Diamond && n == 1 && xv == 1 && yv == 1;
          INFO(gadget_name(k), " x=", bit_string(in.x), " y=", bit_string(in.y), " ", r.describe());
          CHECK(r.ok() != known_gap);
          CHECK(validate_handoff(g));
        }
  }
}

TEST_CASE("perm gadgets at n=2") {
  for (auto k : {GadgetKind::WindmillPerm, GadgetKind::DiamondPerm, GadgetKind::CyclesPerm})
    for (std::vector<VertexId> pi : {std::vector<VertexId>{1, 2}, {2, 1}})
      for (std::uint64_t j = 1; j <= 2; ++j) {
        auto g = build_perm_gadget(k, {pi, j});
        INFO(gadget_name(k), " j=", j, " ", verify_dichotomy(g).describe());
        CHECK(verify_dichotomy(g).ok());
        CHECK(validate_handoff(g));
        CHECK_FALSE(validate_handoff(make_interleaved_mutant(g)));
      }

  // identity, j = 2: psi = 2, gamma = 1, bit of pi(2)-1 = 1 is 1
  auto w = build_perm_gadget(GadgetKind::WindmillPerm, {identity(2), 2});
  CHECK(w.yes);
  CHECK(w.graph.vertex_count() == 22);
  CHECK(oracle::exact_diameter(w.graph) >= Distance::finite(14));

  auto c = build_perm_gadget(GadgetKind::CyclesPerm, {identity(2), 1});
  CHECK_FALSE(c.yes);
  CHECK(oracle::is_connected(c.graph));
  CHECK(c.graph.vertex_count() == 36);

  for (std::uint64_t j = 1; j <= 2; ++j)
    for (std::vector<VertexId> pi : {std::vector<VertexId>{1, 2}, {2, 1}}) {
      auto d = build_perm_gadget(GadgetKind::DiamondPerm, {pi, j});
      CHECK(d.graph.vertex_count() == 31);
      if (!d.yes) CHECK(oracle::exact_diameter(d.graph) <= Distance::finite(9));
    }
}

TEST_CASE("perm encoding") {
  PermInput p{identity(8), 1};
  CHECK(p.log_n() == 3);
  CHECK(p.psi() == 1);
  CHECK(p.gamma() == 1);
  p.j = 6;
  CHECK(p.psi() == 2);
  CHECK(p.gamma() == 3);
  p.j = 24;
  CHECK(p.psi() == 8);
  CHECK(p.gamma() == 3);
  CHECK(p.bit(8));
  CHECK_FALSE(p.bit(7));
}

TEST_CASE("witnesses") {
  for (std::uint64_t xv = 0; xv < 16; ++xv)
    for (std::uint64_t yv = 0; yv < 16; ++yv) {
      DisjInput in{bits_of(xv, 4), bits_of(yv, 4)};
      auto w = build_disj_gadget(GadgetKind::Windmill, in);
      CHECK(oracle::is_connected(w.graph));
      CHECK(w.graph.edge_count() + 1 == w.graph.vertex_count());
    }
  auto al = disj(GadgetKind::SimpleAL, "10", "11");
  REQUIRE(al.witnesses.size() == 1);
  CHECK(verify_dichotomy(al).witness_results[0].second);
  auto cb = disj(GadgetKind::CyclesBipartite, "10", "01");
  CHECK(cb.graph.vertex_count() == 40);
  CHECK(verify_dichotomy(cb).ok());
}

TEST_CASE("random handoff and dichotomy at larger n") {
  gen::Rng rng(11);
  for (auto k : all_gadget_kinds()) {
    for (int rep = 0; rep < 3; ++rep) {
      GadgetInstance g;
      if (is_perm_kind(k)) {
        auto pi = identity(16);
        std::vector<VertexId> tmp(pi);
        seeded_shuffle(tmp, rng.next());
        g = build_perm_gadget(k, {tmp, rng.between(1, 64)});
      } else {
        const std::size_t n = (k == GadgetKind::Quadratic || k == GadgetKind::QuadraticBipartite) ? 9 : 20;
        DisjInput in;
        for (std::size_t i = 0; i < n; ++i) {
          in.x.push_back(rng.chance(0.5));
          in.y.push_back(rng.chance(0.5));
        }
        in.x[0] = 1;
        in.y[1] = 1;
        g = build_disj_gadget(k, in);
      }
      CHECK(validate_handoff(g));
      CHECK_FALSE(validate_handoff(make_interleaved_mutant(g)));
      CHECK(verify_dichotomy(g).size_ok);
      CHECK(verify_dichotomy(g).model_ok);
    }
  }
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(disj(GadgetKind::Cycles, "10", "1"), GadgetInputError);
  CHECK_THROWS_AS(disj(GadgetKind::SimpleVA, "000", "010"), GadgetInputError);
  CHECK_NOTHROW(disj(GadgetKind::Cycles, "000", "010"));
  CHECK_THROWS_AS(disj(GadgetKind::Quadratic, "101", "010"), GadgetInputError);
  CHECK_THROWS_AS(disj(GadgetKind::Cycles, "10a", "010"), GadgetInputError);
  CHECK_THROWS_AS(build_perm_gadget(GadgetKind::CyclesPerm, {identity(3), 1}), GadgetInputError);
  CHECK_THROWS_AS(build_perm_gadget(GadgetKind::CyclesPerm, {identity(4), 9}), GadgetInputError);
  CHECK_THROWS_AS(build_perm_gadget(GadgetKind::CyclesPerm, {{1, 1, 2, 3}, 1}), GadgetInputError);
  CHECK_THROWS_AS(build_perm_gadget(GadgetKind::Cycles, {identity(4), 1}), GadgetInputError);
}
