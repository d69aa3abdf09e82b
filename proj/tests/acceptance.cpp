// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "streamgraph/budgets.hpp"
#include "streamgraph/connectivity.hpp"
#include "streamgraph/diameter_cliques.hpp"
#include "streamgraph/diameter_vc.hpp"
#include "streamgraph/gadgets.hpp"
#include "streamgraph/generators.hpp"
#include "streamgraph/kernel_vc.hpp"
#include "streamgraph/oracle.hpp"

using namespace sgraph;

namespace {

// Pinned tolerances.
constexpr double kC = 64.0;                  // memory constant c
constexpr double kMaxPassConstant = 256.0;   // largest acceptable logged C
constexpr double kLimit1 = 60.0, kLimit5 = 120.0, kLimit7 = 180.0;  // seconds
constexpr int kOrderings = 5;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Ledger {
  std::size_t runs = 0, over = 0, unbalanced = 0;
  std::string first;
} ledger;

// Runs f under budget b (passes and bits armed). False if a limit tripped.
bool metered(const Budget& b, const std::string& name, const std::function<void(RunMeters&)>& f,
             std::uint64_t* passes = nullptr) {
  RunMeters m;
  arm(m, b, name);
  ++ledger.runs;
  try {
    f(m);
  } catch (const BudgetExceeded& e) {
    ++ledger.over;
    if (ledger.first.empty()) ledger.first = e.what();
    return false;
  }
  if (m.memory.peak_bits() > b.bits) ++ledger.over;
  if (m.memory.current_bits() != 0) {
    ++ledger.unbalanced;
    if (ledger.first.empty()) ledger.first = name + " left bits charged";
  }
  if (passes) *passes = m.passes.passes_used();
  return true;
}

int failures = 0;
void report(int id, bool ok, const std::string& what) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---------------------------------------------------------------- 1
void criterion1() {
  const auto t0 = Clock::now();
  gen::Rng rng(101);
  std::size_t agree = 0, pass_ok = 0, total = 500;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t k = rng.between(1, 8);
    const auto n = static_cast<VertexId>(rng.between(std::max<std::size_t>(5, k + 1), 2000));
    const std::size_t min_deg = rng.chance(0.1) ? 0 : 1;
    auto pc = gen::planted_vertex_cover(n, k, min_deg, rng.between(1, k), rng.unit() * 0.5, rng.next());
    const Distance truth = oracle::exact_diameter(pc.graph);
    const auto seed = rng.next();
    auto s = build_stream(pc.graph, StreamModel::AL, seed, seed + 1);
    Modulator x(pc.cover, n);
    Distance multi, one;
    std::uint64_t passes = 0;
    const auto bm = budget::diameter_multipass(n, k, kC);
    bool ok = metered(bm, "diameter-vc", [&](RunMeters& m) { multi = diameter_multipass(s, x, m); }, &passes);
    ok = metered(budget::diameter_onepass(n, k, kC), "diameter-vc-onepass",
                 [&](RunMeters& m) { one = diameter_onepass(s, x, m); }) && ok;
    if (ok && multi == truth && one == truth) ++agree;
    if (ok && passes <= ((1ull << k) + k) * (2 * k + 2)) ++pass_ok;
  }
  const double secs = seconds_since(t0);
  report(1, agree == total && pass_ok == total && secs < kLimit1,
         fmt("diameter-vc oracle equivalence %zu/%zu, pass bound %zu/%zu, %.1f s (limit %.0f)", agree, total,
             pass_ok, total, secs, kLimit1));
}

// ---------------------------------------------------------------- 2
void criterion2() {
  gen::Rng rng(202);
  std::size_t violations = 0, pass_over = 0, total = 200;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t k = rng.between(1, 8);
    const auto n = static_cast<VertexId>(rng.between(k + 1, 400));
    auto pc = gen::planted_vertex_cover(n, k, rng.chance(0.1) ? 0 : 1, rng.between(1, k), rng.unit() * 0.4,
                                        rng.next());
    const auto src = static_cast<VertexId>(rng.between(1, n));
    const auto truth = oracle::bfs_distances(pc.graph, src);
    const auto seed = rng.next();
    auto s = build_stream(pc.graph, StreamModel::AL, seed, seed + 1);
    Modulator x(pc.cover, n);
    BfsOptions opts;
    opts.collect_all = true;
    std::vector<Distance> last;
    opts.on_round = [&](std::uint32_t round, const TentativeDistances& t) {
      for (std::size_t j = 0; j < t.cover.size(); ++j) {
        const Distance tv = truth[t.cover[j] - 1];
        if (tv.is_finite() && tv.value() <= round && t.d[j] != tv) ++violations;
        if (t.d[j] < tv) ++violations;
        if (!last.empty() && t.d[j] > last[j]) ++violations;
      }
      last = t.d;
    };
    BfsResult r;
    std::uint64_t passes = 0;
    if (!metered(budget::bounded_bfs(n, k, kC), "bounded-bfs",
                 [&](RunMeters& m) { r = bounded_bfs(s, x, src, m, opts); }, &passes)) {
      ++pass_over;
      continue;
    }
    if (r.all != truth) ++violations;
    if (passes > 2 * k + 1) ++pass_over;
  }
  report(2, violations == 0 && pass_over == 0,
         fmt("bounded BFS on %zu instances: %zu prefix violations, %zu over 2k+1 passes", total, violations,
             pass_over));
}

// ---------------------------------------------------------------- 3
void criterion3() {
  const auto t0 = Clock::now();
  gen::Rng rng(303);
  std::size_t agree = 0, bound_ok = 0, pass_ok = 0, total = 300;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t k = rng.between(1, 5);
    const std::size_t ell = rng.between(1, 6);
    const auto n = static_cast<VertexId>(rng.between(k + ell, 1500));
    auto pc = gen::planted_cliques(n, k, ell, 0.02 + rng.unit() * 0.4, rng.unit() * 0.5, rng.next());
    const Distance truth = oracle::exact_diameter(pc.graph);
    const auto seed = rng.next();
    auto s = build_stream(pc.graph, StreamModel::AL, seed, seed + 1);
    Modulator x(pc.deletion, n);
    Distance multi, one;
    std::uint64_t passes = 0;
    const auto bm = budget::diameter_multipass_cliques(n, k, ell, kC);
    bool ok = metered(bm, "diameter-cliques",
                      [&](RunMeters& m) { multi = diameter_multipass_cliques(s, x, ell, m); }, &passes);
    ok = metered(budget::diameter_onepass_cliques(n, k, ell, kC), "diameter-cliques-onepass",
                 [&](RunMeters& m) { one = diameter_onepass_cliques(s, x, ell, m); }) && ok;
    if (ok && multi == truth && one == truth) ++agree;
    if (truth.is_infinite() || truth.value() <= 3 * k + 1) ++bound_ok;
    if (ok && passes <= ((1ull << k) * ell + (1ull << k) + k) * (3 * k + 3)) ++pass_ok;
  }
  report(3, agree == total && bound_ok == total && pass_ok == total,
         fmt("cliques oracle equivalence %zu/%zu, finite diameter <= 3k+1 %zu/%zu, pass bound %zu/%zu, %.1f s",
             agree, total, bound_ok, total, pass_ok, total, seconds_since(t0)));
}

// ---------------------------------------------------------------- 4
void criterion4() {
  gen::Rng rng(404);
  const std::size_t total = 500;
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // name -> (ok, runs)
  std::size_t connected = 0;
  auto run = [&](const std::string& name, const Budget& b, bool truth, const std::function<bool(RunMeters&)>& f) {
    bool got = false;
    std::uint64_t passes = 0;
    const bool ok = metered(b, name, [&](RunMeters& m) { got = f(m); }, &passes);
    auto& t = tally[name];
    ++t.second;
    if (ok && got == truth && passes == 1) ++t.first;
  };
  const StreamModel models[] = {StreamModel::EA, StreamModel::VA, StreamModel::AL};
  for (std::size_t i = 0; i < total; ++i) {
    const auto n = static_cast<VertexId>(rng.between(8, 600));
    const auto seed = rng.next();
    Graph g;
    std::vector<VertexId> x;
    std::size_t ell = 0;
    bool split = false;
    switch (i % 3) {
      case 0: {
        const std::size_t k = rng.between(1, 8);
        auto pc = gen::planted_vertex_cover(n, k, rng.chance(0.5) ? 0 : 1, rng.between(1, k), rng.unit() * 0.3,
                                            rng.next());
        g = std::move(pc.graph);
        x = pc.cover;
        break;
      }
      case 1: {
        const std::size_t k = rng.between(1, 5);
        ell = rng.between(1, 6);
        auto pc = gen::planted_cliques(n, k, ell, rng.unit() * 0.1, rng.unit() * 0.5, rng.next());
        g = std::move(pc.graph);
        x = pc.deletion;
        break;
      }
      default: {
        const auto c = static_cast<VertexId>(rng.between(1, 8));
        auto ps = gen::planted_split(c, n - c, rng.chance(0.5) ? 0.5 : 0.005, rng.next());
        g = std::move(ps.graph);
        x = ps.clique;
        split = true;
      }
    }
    const bool truth = oracle::is_connected(g);
    connected += truth;
    const VertexId vn = g.vertex_count();
    auto al = build_stream(g, StreamModel::AL, seed, seed + 1);
    auto any = build_stream(g, models[rng.below(3)], seed, seed + 1);
    Modulator mod(x, vn);
    if (ell == 0) {
      // X is a vertex cover (planted cover, or the clique side of a split graph)
      run("connectivity-vc", budget::connectivity_vc(vn, x.size(), kC), truth,
          [&](RunMeters& m) { return connectivity_vc(al, mod, m); });
      run("connectivity-vc-greedy", budget::connectivity_vc(vn, x.size(), kC), truth,
          [&](RunMeters& m) { return connectivity_vc_greedy(al, x.size(), m); });
    } else {
      run("connectivity-cliques", budget::connectivity_cliques(vn, x.size(), ell, kC), truth,
          [&](RunMeters& m) { return connectivity_cliques(al, mod, ell, m); });
    }
    if (split)
      run("connectivity-split", budget::connectivity_split(vn, any.model(), 1, kC), truth,
          [&](RunMeters& m) { return connectivity_split(any, m, 1); });
    run("connectivity-unionfind", budget::connectivity_unionfind(vn, kC), truth,
        [&](RunMeters& m) { return connectivity_unionfind(any, m); });
  }
  bool ok = true;
  std::string detail;
  for (const auto& [name, t] : tally) {
    ok = ok && t.first == t.second;
    detail += fmt(" %s %zu/%zu", name.c_str(), t.first, t.second);
  }
  report(4, ok, fmt("%zu instances (%zu connected), correct in one pass:", total, connected) + detail);
}

// ---------------------------------------------------------------- 5 and 6
std::vector<std::uint8_t> bits_of(std::uint64_t v, std::size_t len) {
  std::vector<std::uint8_t> b(len);
  for (std::size_t i = 0; i < len; ++i) b[i] = (v >> i) & 1;
  return b;
}

DisjInput balanced_input(gen::Rng& rng, std::size_t len, bool disjoint) {
  DisjInput in;
  for (std::size_t i = 0; i < len; ++i) {
    in.x.push_back(rng.chance(0.5));
    in.y.push_back(rng.chance(0.5));
  }
  if (disjoint) {
    for (std::size_t i = 0; i < len; ++i)
      if (in.x[i]) in.y[i] = 0;
    if (std::count(in.x.begin(), in.x.end(), 1) == 0) in.x[0] = 1, in.y[0] = 0;
    if (std::count(in.y.begin(), in.y.end(), 1) == 0) {
      if (std::count(in.x.begin(), in.x.end(), 1) == static_cast<long>(len)) in.x[len - 1] = 0;
      for (std::size_t i = 0; i < len; ++i)
        if (!in.x[i]) {
          in.y[i] = 1;
          break;
        }
    }
  } else {
    const std::size_t i = rng.below(len);
    in.x[i] = in.y[i] = 1;
  }
  return in;
}

struct GadgetTally {
  std::size_t instances = 0, handoff_bad = 0, mutant_bad = 0;
  double build_secs = 0, dichotomy_secs = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_kind;  // violations, instances
};

void check_gadget(const std::function<GadgetInstance()>& make, GadgetTally& t) {
  const auto tb = Clock::now();
  const GadgetInstance g = make();
  t.build_secs += seconds_since(tb);
  ++t.instances;
  auto& pk = t.per_kind[std::string(gadget_name(g.kind))];
  ++pk.second;
  const auto t0 = Clock::now();
  if (!verify_dichotomy(g).ok()) ++pk.first;
  t.dichotomy_secs += seconds_since(t0);
  if (!validate_handoff(g)) ++t.handoff_bad;
  if (validate_handoff(make_interleaved_mutant(g))) ++t.mutant_bad;
}

void criteria5and6() {
  GadgetTally t;
  gen::Rng rng(505);
  for (auto kind : all_gadget_kinds()) {
    if (is_perm_kind(kind)) {
      for (std::vector<VertexId> pi : {std::vector<VertexId>{1, 2}, {2, 1}})
        for (std::uint64_t j = 1; j <= 2; ++j) check_gadget([&] { return build_perm_gadget(kind, {pi, j}); }, t);
      for (std::size_t n : {64, 256})
        for (int r = 0; r < 100; ++r) {
          PermInput p;
          p.pi.resize(n);
          std::iota(p.pi.begin(), p.pi.end(), 1);
          seeded_shuffle(p.pi, rng.next());
          p.j = rng.between(1, n * p.log_n());
          check_gadget([&] { return build_perm_gadget(kind, p); }, t);
        }
      continue;
    }
    const bool quadratic = kind == GadgetKind::Quadratic || kind == GadgetKind::QuadraticBipartite;
    // exhaustive: n = 1..4 (Quadratic kinds: side 1..2, i.e. 1 and 4 bits)
    for (std::size_t n = 1; n <= (quadratic ? 2u : 4u); ++n) {
      const std::size_t len = disj_input_length(kind, n);
      for (std::uint64_t xv = 0; xv < (1ull << len); ++xv)
        for (std::uint64_t yv = 0; yv < (1ull << len); ++yv) {
          if (requires_nonzero_input(kind) && (xv == 0 || yv == 0)) continue;
          check_gadget([&] { return build_disj_gadget(kind, {bits_of(xv, len), bits_of(yv, len)}); }, t);
        }
    }
    for (std::size_t n : quadratic ? std::vector<std::size_t>{7, 14} : std::vector<std::size_t>{50, 200})
      for (int r = 0; r < 100; ++r)
        check_gadget([&] { return build_disj_gadget(kind, balanced_input(rng, disj_input_length(kind, n), r % 2 == 0)); }, t);
  }

  // anchors; yes = disjoint
  std::string anchor_misses;
  auto anchor = [&](const char* label, GadgetKind k, const char* x, const char* y, auto pred) {
    auto g = build_disj_gadget(k, DisjInput::from_strings(x, y));
    if (!pred(g.graph)) anchor_misses += std::string(" ") + label;
  };
  auto diam = [](const Graph& g) { return oracle::exact_diameter(g); };
  anchor("simple-va-disjoint==4", GadgetKind::SimpleVA, "1010", "0101",
         [&](const Graph& g) { return diam(g) == Distance::finite(4); });
  anchor("simple-va-intersecting<=3", GadgetKind::SimpleVA, "1010", "0011",
         [&](const Graph& g) { return diam(g) <= Distance::finite(3); });
  anchor("windmill-disjoint<=9", GadgetKind::Windmill, "1001", "0110",
         [&](const Graph& g) { return diam(g) <= Distance::finite(9); });
  anchor("windmill-intersecting>=10", GadgetKind::Windmill, "1001", "0011",
         [&](const Graph& g) { return diam(g) >= Distance::finite(10); });
  anchor("quadratic-disjoint<=4", GadgetKind::Quadratic, "1000", "0100",
         [&](const Graph& g) { return diam(g) <= Distance::finite(4); });
  anchor("quadratic-intersecting>=5", GadgetKind::Quadratic, "1000", "1000",
         [&](const Graph& g) { return diam(g) >= Distance::finite(5); });
  anchor("cycles-disjoint-connected", GadgetKind::Cycles, "101", "010",
         [](const Graph& g) { return oracle::is_connected(g); });
  anchor("cycles-intersecting-disconnected", GadgetKind::Cycles, "101", "100",
         [](const Graph& g) { return !oracle::is_connected(g); });

  // construction plus the dichotomy checks; handoff checks belong to 6
  const double secs = t.build_secs + t.dichotomy_secs;
  std::size_t violations = 0;
  std::string detail;
  for (const auto& [name, v] : t.per_kind) {
    violations += v.first;
    if (v.first) detail += fmt(" %s %zu/%zu", name.c_str(), v.first, v.second);
  }
  report(5, violations == 0 && anchor_misses.empty() && secs < kLimit5,
         fmt("%zu gadget instances, %zu claim violations, %.1f s (limit %.0f)", t.instances, violations, secs,
             kLimit5) +
             (detail.empty() ? "" : "; violations by kind:" + detail) +
             (anchor_misses.empty() ? "" : "; anchor misses:" + anchor_misses));
  report(6, t.handoff_bad == 0 && t.mutant_bad == 0,
         fmt("handoff invalid on %zu/%zu instances, mutant accepted on %zu/%zu", t.handoff_bad, t.instances,
             t.mutant_bad, t.instances));
}

// ---------------------------------------------------------------- 7
Graph kernel_test_graph(gen::Rng& rng, VertexId n, std::size_t k) {
  const std::size_t c = k + rng.below(3) - (k > 0 ? 1 : 0);
  const Graph base = gen::planted_cover_graph(n, std::max<std::size_t>(c, 1), rng.between(1, 6 * n), rng.next());
  auto edges = base.edges();
  const std::size_t triangles = rng.below(3);
  for (std::size_t t = 0; t < triangles; ++t) {
    VertexId a = static_cast<VertexId>(rng.between(1, n)), b = static_cast<VertexId>(rng.between(1, n)),
             d = static_cast<VertexId>(rng.between(1, n));
    if (a == b || b == d || a == d) continue;
    for (Edge e : {Edge{a, b}, Edge{b, d}, Edge{a, d}}) {
      if (e.first > e.second) std::swap(e.first, e.second);
      if (!base.has_edge(e.first, e.second) && std::find(edges.begin(), edges.end(), e) == edges.end())
        edges.push_back(e);
    }
  }
  return Graph::from_edges(n, edges);
}

void criterion7() {
  const auto t0 = Clock::now();
  gen::Rng rng(707);
  const std::size_t total = 300;
  std::size_t preserved = 0, size_ok = 0, matching_ok = 0, matching_runs = 0, koenig_ok = 0, within = 0, kernels = 0;
  double logged_al = 0, logged_ea = 0;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t k = rng.between(0, 6);
    const auto n = static_cast<VertexId>(rng.between(2, 500));
    Graph g = kernel_test_graph(rng, n, k);
    const StreamModel model = i % 2 ? StreamModel::EA : StreamModel::AL;
    const auto seed = rng.next();
    auto s = build_stream(g, model, seed, seed + 1);
    KernelOutput out;
    std::uint64_t passes = 0;
    const bool ran = metered(budget::kernelize(n, k, model, kC), "kernelize",
                             [&](RunMeters& m) { out = kernelize(s, k, m); }, &passes);
    if (!ran) continue;
    ++within;
    const double e = model == StreamModel::AL ? 2.0 : 3.0;
    const double ratio = static_cast<double>(passes) / std::pow(static_cast<double>(k + 1), e);
    (model == StreamModel::AL ? logged_al : logged_ea) = std::max(model == StreamModel::AL ? logged_al : logged_ea, ratio);

    const bool truth = oracle::min_vertex_cover(g, static_cast<int>(k)).has_value();
    if (out.verdict == Verdict::NO) {
      if (!truth) ++preserved;
      size_ok++;
    } else {
      ++kernels;
      const bool kt = out.k_prime >= 0 && oracle::min_vertex_cover(out.kernel, static_cast<int>(out.k_prime)).has_value();
      if (kt == truth) ++preserved;
      if (out.kernel.vertex_count() <= 2 * static_cast<std::size_t>(out.k_prime)) ++size_ok;
    }
    if (out.buss.verdict == Verdict::Kernel) {
      // the double of G - S
      std::vector<char> in_s(n + 1, 0);
      for (VertexId v : out.buss.S) in_s[v] = 1;
      std::vector<Edge> be;
      for (auto [u, v] : g.edges())
        if (!in_s[u] && !in_s[v]) {
          be.emplace_back(u, v + n);
          be.emplace_back(v, u + n);
        }
      const Graph b = Graph::from_edges(2 * n, be);
      const std::size_t ref = oracle::reference_max_matching(b, n).size();
      ++matching_runs;
      if (out.verdict == Verdict::NO && out.reason == "matching of the double exceeds 2k1") {
        if (ref > 2 * out.buss.k1) ++matching_ok, ++koenig_ok;
      } else {
        if (out.matching.size() == ref) ++matching_ok;
        if (out.cover.size() == out.matching.size() && oracle::is_vertex_cover(b, out.cover)) ++koenig_ok;
      }
    }
  }
  const double secs = seconds_since(t0);
  const double logged = std::max(logged_al, logged_ea);
  report(7,
         preserved == total && size_ok == total && within == total && matching_ok == matching_runs &&
             koenig_ok == matching_runs && logged <= kMaxPassConstant && secs < kLimit7,
         fmt("%zu graphs (%zu kernels): answers preserved %zu, size <= 2k' %zu, within pass budget %zu, "
             "matching = reference %zu/%zu, Koenig cover %zu/%zu, logged C AL %.2f EA %.2f (C = %llu, max %.0f), "
             "%.1f s (limit %.0f)",
             total, kernels, preserved, size_ok, within, matching_ok, matching_runs, koenig_ok, matching_runs,
             logged_al, logged_ea, static_cast<unsigned long long>(kKernelPassConstant), kMaxPassConstant, secs,
             kLimit7));
}

// ---------------------------------------------------------------- 9
std::pair<bool, std::string> criterion9() {
  gen::Rng rng(909);
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // name -> (invariant, instances)
  auto over_orders = [&](const std::string& name, const std::function<std::string(std::uint64_t)>& answer) {
    std::string first;
    bool same = true;
    for (int o = 0; o < kOrderings; ++o) {
      const std::string a = answer(rng.next());
      if (o == 0) first = a;
      else same = same && a == first;
    }
    auto& t = tally[name];
    ++t.second;
    if (same) ++t.first;
  };
  auto stream = [](const Graph& g, StreamModel model, std::uint64_t seed) {
    return build_stream(g, model, seed, seed ^ 0x9e3779b97f4a7c15ull);
  };

  for (int i = 0; i < 40; ++i) {
    const std::size_t k = rng.between(1, 6);
    const auto n = static_cast<VertexId>(rng.between(k + 1, 300));
    auto pc = gen::planted_vertex_cover(n, k, rng.chance(0.2) ? 0 : 1, rng.between(1, k), rng.unit() * 0.3,
                                        rng.next());
    Modulator x(pc.cover, n);
    const auto& g = pc.graph;
    const VertexId src = static_cast<VertexId>(rng.between(1, n));
    auto diam = [&](const char* name, const Budget& b, auto solve) {
      over_orders(name, [&](std::uint64_t seed) {
        auto s = stream(g, StreamModel::AL, seed);
        std::string a = "budget";
        metered(b, name, [&](RunMeters& m) { a = solve(s, m); });
        return a;
      });
    };
    diam("diameter-vc", budget::diameter_multipass(n, k, kC),
         [&](const Stream& s, RunMeters& m) { return diameter_multipass(s, x, m).str(); });
    diam("diameter-vc-batched", budget::diameter_multipass_fast(n, k, kC), [&](const Stream& s, RunMeters& m) {
      return diameter_multipass(s, x, m, {false, RepresentativeMode::batched}).str();
    });
    diam("diameter-vc-onepass", budget::diameter_onepass(n, k, kC),
         [&](const Stream& s, RunMeters& m) { return diameter_onepass(s, x, m).str(); });
    diam("bounded-bfs", budget::bounded_bfs(n, k, kC),
         [&](const Stream& s, RunMeters& m) { return bounded_bfs(s, x, src, m).eccentricity.str(); });
    diam("connectivity-vc", budget::connectivity_vc(n, k, kC),
         [&](const Stream& s, RunMeters& m) { return std::to_string(connectivity_vc(s, x, m)); });
    diam("connectivity-vc-greedy", budget::connectivity_vc(n, k, kC),
         [&](const Stream& s, RunMeters& m) { return std::to_string(connectivity_vc_greedy(s, k, m)); });
    for (auto model : {StreamModel::EA, StreamModel::VA, StreamModel::AL})
      over_orders("connectivity-unionfind", [&](std::uint64_t seed) {
        auto s = stream(g, model, seed);
        std::string a = "budget";
        metered(budget::connectivity_unionfind(n, kC), "connectivity-unionfind",
                [&](RunMeters& m) { a = std::to_string(connectivity_unionfind(s, m)); });
        return a;
      });
  }

  for (int i = 0; i < 40; ++i) {
    const std::size_t k = rng.between(1, 4);
    const std::size_t ell = rng.between(1, 5);
    const auto n = static_cast<VertexId>(rng.between(k + ell, 300));
    auto pc = gen::planted_cliques(n, k, ell, 0.02 + rng.unit() * 0.3, rng.unit() * 0.5, rng.next());
    Modulator x(pc.deletion, n);
    auto run = [&](const char* name, const Budget& b, auto solve) {
      over_orders(name, [&](std::uint64_t seed) {
        auto s = stream(pc.graph, StreamModel::AL, seed);
        std::string a = "budget";
        metered(b, name, [&](RunMeters& m) { a = solve(s, m); });
        return a;
      });
    };
    run("diameter-cliques", budget::diameter_multipass_cliques(n, k, ell, kC),
        [&](const Stream& s, RunMeters& m) { return diameter_multipass_cliques(s, x, ell, m).str(); });
    run("diameter-cliques-onepass", budget::diameter_onepass_cliques(n, k, ell, kC),
        [&](const Stream& s, RunMeters& m) { return diameter_onepass_cliques(s, x, ell, m).str(); });
    run("connectivity-cliques", budget::connectivity_cliques(n, k, ell, kC),
        [&](const Stream& s, RunMeters& m) { return std::to_string(connectivity_cliques(s, x, ell, m)); });
  }

  for (int i = 0; i < 40; ++i) {
    const auto c = static_cast<VertexId>(rng.between(1, 6));
    const auto n = static_cast<VertexId>(rng.between(c + 2, 300));
    auto ps = gen::planted_split(c, n - c, rng.chance(0.5) ? 0.5 : 0.01, rng.next());
    for (auto model : {StreamModel::EA, StreamModel::VA, StreamModel::AL})
      over_orders("connectivity-split", [&](std::uint64_t seed) {
        auto s = stream(ps.graph, model, seed);
        std::string a = "budget";
        metered(budget::connectivity_split(n, model, 1, kC), "connectivity-split",
                [&](RunMeters& m) { a = std::to_string(connectivity_split(s, m, 1)); });
        return a;
      });
  }

  for (int i = 0; i < 40; ++i) {
    const std::size_t k = rng.between(0, 5);
    const auto n = static_cast<VertexId>(rng.between(2, 200));
    Graph g = kernel_test_graph(rng, n, k);
    for (auto model : {StreamModel::AL, StreamModel::EA})
      over_orders("kernelize", [&](std::uint64_t seed) {
        auto s = stream(g, model, seed);
        std::string a = "budget";
        metered(budget::kernelize(n, k, model, kC), "kernelize", [&](RunMeters& m) {
          auto out = kernelize(s, k, m);
          a = out.verdict == Verdict::NO ? "NO" : "kernel";
          for (VertexId v : out.vertex_map) a += " " + std::to_string(v);
        });
        return a;
      });
  }

  bool ok = true;
  std::string detail;
  for (const auto& [name, t] : tally) {
    ok = ok && t.first == t.second;
    detail += fmt(" %s %zu/%zu", name.c_str(), t.first, t.second);
  }
  return {ok, fmt("answers equal across %d orderings:", kOrderings) + detail};
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criteria5and6();
  criterion7();
  auto [ok9, line9] = criterion9();
  // 8 audits every metered run, criterion 9's included
  report(8, ledger.over == 0 && ledger.unbalanced == 0,
         fmt("%zu metered runs with c = %.0f: %zu over the bit or pass budget, %zu with bits left charged%s",
             ledger.runs, kC, ledger.over, ledger.unbalanced,
             ledger.first.empty() ? "" : ("; first: " + ledger.first).c_str()));
  report(9, ok9, line9);
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
