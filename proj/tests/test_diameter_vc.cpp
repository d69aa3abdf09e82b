#include "doctest.h"
#include "streamgraph/budgets.hpp"
#include "streamgraph/diameter_vc.hpp"
#include "streamgraph/generators.hpp"
#include "streamgraph/oracle.hpp"

using namespace sgraph;

namespace {

Distance fin(std::uint32_t v) { return Distance::finite(v); }

Distance multipass(const Graph& g, std::vector<VertexId> x, std::uint64_t seed = 0, RunMeters* out = nullptr) {
  auto s = build_stream(g, StreamModel::AL, seed, seed + 1);
  RunMeters m;
  Modulator mod(std::move(x), g.vertex_count());
  auto d = diameter_multipass(s, mod, m, {true});
  CHECK(m.memory.current_bits() == 0);
  if (out) *out = std::move(m);
  return d;
}

Distance onepass(const Graph& g, std::vector<VertexId> x, std::uint64_t seed = 0) {
  auto s = build_stream(g, StreamModel::AL, seed, seed + 1);
  RunMeters m;
  Modulator mod(std::move(x), g.vertex_count());
  auto d = diameter_onepass(s, mod, m);
  CHECK(m.passes.passes_used() == 1);
  CHECK(m.memory.current_bits() == 0);
  return d;
}

}  // namespace

TEST_CASE("bounded bfs on a star from the center") {
  auto g = gen::star_graph(4);
  auto s = build_stream(g, StreamModel::AL);
  RunMeters m;
  Modulator x({1}, 5);
  auto r = bounded_bfs(s, x, 1, m, {.collect_all = true});
  CHECK(r.rounds == 2);
  CHECK(m.passes.passes_used() == 3);
  for (VertexId v = 2; v <= 5; ++v) CHECK(r.all[v - 1] == fin(1));
  CHECK(r.eccentricity == fin(1));
}

TEST_CASE("bounded bfs on P5 with cover {2,4}") {
  auto g = gen::path_graph(5);
  auto s = build_stream(g, StreamModel::AL, 3, 4);
  RunMeters m;
  Modulator x({2, 4}, 5);
  auto r = bounded_bfs(s, x, 1, m, {.collect_all = true});
  auto truth = oracle::bfs_distances(g, 1);
  CHECK(r.tentative.at(2) == truth[1]);
  CHECK(r.tentative.at(4) == truth[3]);
  CHECK(r.tentative.at(2) == fin(1));
  CHECK(r.tentative.at(4) == fin(3));
  CHECK(r.all[2] == fin(2));
  CHECK(r.all[4] == fin(4));
  CHECK(r.all == truth);
  CHECK(m.passes.passes_used() <= 5);
}

TEST_CASE("bounded bfs across components") {
  auto g = Graph::from_edges(4, {{1, 2}, {3, 4}});
  auto s = build_stream(g, StreamModel::AL);
  RunMeters m;
  Modulator x({1, 3}, 4);
  auto r = bounded_bfs(s, x, 1, m);
  CHECK(r.tentative.at(3).is_infinite());
  CHECK(r.eccentricity.is_infinite());
}

TEST_CASE("multipass small cases") {
  CHECK(multipass(gen::complete_graph(3), {1, 2}) == fin(1));
  CHECK(multipass(gen::complete_graph(3), {3, 1}) == fin(1));
  CHECK(multipass(gen::empty_graph(1), {}) == fin(0));
  CHECK(multipass(gen::empty_graph(3), {}).is_infinite());
  CHECK(multipass(gen::path_graph(5), {2, 4}) == fin(4));
}

TEST_CASE("onepass small cases") {
  CHECK(onepass(gen::path_graph(3), {2}) == fin(2));
  CHECK(onepass(gen::cycle_graph(4), {1, 3}) == fin(2));
  CHECK(onepass(gen::complete_graph(3), {1, 2}) == fin(1));
  CHECK(onepass(gen::empty_graph(1), {}) == fin(0));
  CHECK(onepass(gen::empty_graph(2), {}).is_infinite());
  CHECK(onepass(gen::path_graph(5), {2, 4}) == fin(4));
}

TEST_CASE("twin class table") {
  auto g = gen::cycle_graph(4);
  auto s = build_stream(g, StreamModel::AL);
  RunMeters m;
  Modulator x({1, 3}, 4);
  auto t = build_twin_class_table(s, x, m);
  CHECK(t.vertex_count == 4);
  CHECK(t.classes[3] == Multiplicity::many);
  CHECK(t.classes[0] == Multiplicity::none);
  CHECK(t.cover_adjacency == std::vector<std::uint64_t>{0, 0});
}

TEST_CASE("cover violations and model mismatch") {
  auto g = gen::path_graph(4);
  auto al = build_stream(g, StreamModel::AL);
  RunMeters m;
  Modulator bad({2}, 4);
  CHECK_THROWS_AS(diameter_multipass(al, bad, m, {true}), CoverViolation);
  RunMeters m2;
  CHECK_THROWS_AS(diameter_onepass(al, bad, m2), CoverViolation);
  auto ea = build_stream(g, StreamModel::EA);
  RunMeters m3;
  Modulator good({2, 3}, 4);
  CHECK_THROWS_AS(diameter_multipass(ea, good, m3), ModelMismatch);
  CHECK_THROWS_AS(diameter_onepass(ea, good, m3), ModelMismatch);
  CHECK_THROWS_AS(bounded_bfs(ea, good, 1, m3), ModelMismatch);
}

TEST_CASE("random planted covers match the oracle in both modes") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    gen::Rng rng(seed);
    std::size_t k = rng.between(1, 5);
    VertexId n = static_cast<VertexId>(rng.between(k + 1, 60));
    auto pc = gen::planted_vertex_cover(n, k, rng.below(2), rng.between(1, k), rng.unit(), seed);
    auto truth = oracle::exact_diameter(pc.graph);
    RunMeters m;
    CHECK(multipass(pc.graph, pc.cover, seed, &m) == truth);
    auto b = budget::diameter_multipass(n, k, 64);
    CHECK(m.passes.passes_used() <= b.passes);
    CHECK(m.memory.peak_bits() <= b.bits);
    CHECK(onepass(pc.graph, pc.cover, seed) == truth);
    auto s = build_stream(pc.graph, StreamModel::AL, seed);
    RunMeters fast;
    CHECK(diameter_multipass(s, Modulator(pc.cover, n), fast, {false, RepresentativeMode::batched}) == truth);
    if (truth.is_finite()) CHECK(truth.value() <= 2 * k);
  }
}

TEST_CASE("round prefix correctness on random instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    gen::Rng rng(seed * 7);
    std::size_t k = rng.between(1, 6);
    VertexId n = static_cast<VertexId>(rng.between(k + 1, 80));
    auto pc = gen::planted_vertex_cover(n, k, 1, 2, 0.2, seed);
    VertexId src = static_cast<VertexId>(rng.between(1, n));
    auto truth = oracle::bfs_distances(pc.graph, src);
    auto s = build_stream(pc.graph, StreamModel::AL, seed, seed);
    RunMeters m;
    Modulator x(pc.cover, n);
    int violations = 0;
    std::vector<Distance> last;
    BfsOptions opts;
    opts.on_round = [&](std::uint32_t round, const TentativeDistances& t) {
      for (std::size_t i = 0; i < t.cover.size(); ++i) {
        auto tv = truth[t.cover[i] - 1];
        if (tv.is_finite() && tv.value() <= round && t.d[i] != tv) ++violations;
        if (t.d[i] < tv) ++violations;
        if (!last.empty() && t.d[i] > last[i]) ++violations;
      }
      last = t.d;
    };
    opts.collect_all = true;
    auto r = bounded_bfs(s, x, src, m, opts);
    CHECK(violations == 0);
    CHECK(r.all == truth);
    CHECK(m.passes.passes_used() <= 2 * k + 1);
  }
}
