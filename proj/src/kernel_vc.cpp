#include "streamgraph/kernel_vc.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgraph {

namespace {

// Calls f(u, v) once per item-edge. AL items give every edge twice.
template <class F>
void for_each_pair(const StreamItem& it, F&& f) {
  for (VertexId u : it.neighbors) f(it.vertex, u);
}

bool in_list(const std::vector<VertexId>& list, VertexId v) { return std::find(list.begin(), list.end(), v) != list.end(); }

BussResult buss_al(const Stream& s, std::size_t k, RunMeters& meters) {
  const VertexId n = s.vertex_count();
  BussResult r;
  r.k = k;
  r.threshold = k;
  auto mem_s = meters.memory.raw_bits((k + 1) * bits_for(n));
  auto mem_m = meters.memory.counter(std::uint64_t{n} * n);
  auto mem_r = meters.memory.counter(std::uint64_t{n} * n);
  auto mem_local = meters.memory.counter(n);
  auto mem_flag = meters.memory.flag();
  std::uint64_t m2 = 0;
  bool too_many = false;
  s.pass(meters.passes, [&](const StreamItem& it) {
    m2 += it.neighbors.size();
    if (too_many || it.neighbors.size() <= k) return;
    if (r.S.size() == k) {
      too_many = true;
      return;
    }
    std::uint64_t local = 0;
    for (VertexId u : it.neighbors)
      if (!in_list(r.S, u)) ++local;
    r.S.push_back(it.vertex);
    r.m_removed += local;
  });
  r.m_total = m2 / 2;
  if (too_many) {
    r.verdict = Verdict::NO;
    r.reason = "more than k vertices of degree > k";
  } else if (r.m_total - r.m_removed > k * (k - r.S.size())) {
    r.verdict = Verdict::NO;
    r.reason = "more than k*(k-|S|) edges remain";
  }
  return r;
}

BussResult buss_ea(const Stream& s, std::size_t k, RunMeters& meters) {
  const VertexId n = s.vertex_count();
  BussResult r;
  r.k = k;
  r.threshold = 2 * k;

  // pass 1: greedy matching, its endpoints cover every edge
  std::vector<VertexId> X;
  auto mem_x = meters.memory.raw_bits(2 * k * bits_for(n));
  auto mem_flag = meters.memory.flag();
  bool overflow = false;
  s.pass(meters.passes, [&](const StreamItem& it) {
    for_each_pair(it, [&](VertexId a, VertexId b) {
      if (overflow || in_list(X, a) || in_list(X, b)) return;
      if (X.size() == 2 * k) {
        overflow = true;
        return;
      }
      X.push_back(a);
      X.push_back(b);
    });
  });
  if (overflow) {
    r.verdict = Verdict::NO;
    r.reason = "matching larger than k";
    return r;
  }

  // pass 2: degrees over X
  std::vector<std::uint64_t> deg(X.size(), 0);
  auto mem_deg = meters.memory.raw_bits(X.size() * bits_for(n));
  s.pass(meters.passes, [&](const StreamItem& it) {
    for_each_pair(it, [&](VertexId a, VertexId b) {
      for (std::size_t i = 0; i < X.size(); ++i)
        if (X[i] == a || X[i] == b) ++deg[i];
    });
  });
  for (std::size_t i = 0; i < X.size(); ++i)
    if (deg[i] > 2 * k) r.S.push_back(X[i]);
  mem_deg.release();
  if (r.S.size() > k) {
    r.verdict = Verdict::NO;
    r.reason = "more than k vertices of degree > 2k";
    return r;
  }
  auto mem_s = meters.memory.raw_bits(r.S.size() * bits_for(n));
  mem_x.release();

  // pass 3: m and r
  auto mem_m = meters.memory.counter(std::uint64_t{n} * n);
  auto mem_r = meters.memory.counter(std::uint64_t{n} * n);
  s.pass(meters.passes, [&](const StreamItem& it) {
    for_each_pair(it, [&](VertexId a, VertexId b) {
      ++r.m_total;
      if (in_list(r.S, a) || in_list(r.S, b)) ++r.m_removed;
    });
  });
  if (r.m_total - r.m_removed > 2 * k * (k - r.S.size())) {
    r.verdict = Verdict::NO;
    r.reason = "more than 2k*(k-|S|) edges remain";
  }
  return r;
}

}  // namespace

BussResult buss_goldsmith(const Stream& s, std::size_t k, RunMeters& meters) {
  require_model(s, {StreamModel::AL, StreamModel::EA, StreamModel::VA}, "buss_goldsmith");
  BussResult r = s.model() == StreamModel::AL ? buss_al(s, k, meters) : buss_ea(s, k, meters);
  std::sort(r.S.begin(), r.S.end());
  r.k1 = r.S.size() <= k ? k - r.S.size() : 0;
  return r;
}

BussKernelStream::BussKernelStream(const Stream& in, const std::vector<VertexId>& S)
    : in_(in),
      model_(in.model() == StreamModel::AL ? StreamModel::AL : StreamModel::EA),
      removed_(in.vertex_count() + 1, 0) {
  for (VertexId v : S) removed_.at(v) = 1;
}

void BussKernelStream::pass(PassMeter& meter, const ItemVisitor& visit) const {
  std::vector<VertexId> buf;
  const bool al = in_.model() == StreamModel::AL;
  in_.pass(meter, [&](const StreamItem& it) {
    if (al) {
      buf.clear();
      if (!removed_[it.vertex])
        for (VertexId u : it.neighbors)
          if (!removed_[u]) buf.push_back(u);
      visit(StreamItem{it.vertex, buf});
      return;
    }
    if (removed_[it.vertex]) return;
    for (std::size_t i = 0; i < it.neighbors.size(); ++i)
      if (!removed_[it.neighbors[i]]) visit(StreamItem{it.vertex, it.neighbors.subspan(i, 1)});
  });
}

DoubledStream::DoubledStream(const Stream& in) : in_(in) {}

void DoubledStream::pass(PassMeter& meter, const ItemVisitor& visit) const {
  const VertexId n = in_.vertex_count();
  std::vector<VertexId> buf;
  // V items with copied neighbors
  in_.pass(meter, [&](const StreamItem& it) {
    buf.clear();
    for (VertexId u : it.neighbors) buf.push_back(u + n);
    if (in_.model() == StreamModel::AL) {
      visit(StreamItem{it.vertex, std::span<const VertexId>(buf)});
    } else {
      for (std::size_t i = 0; i < buf.size(); ++i) visit(StreamItem{it.vertex, std::span<const VertexId>(buf).subspan(i, 1)});
    }
  });
  // V' items with original neighbors
  in_.pass(meter, [&](const StreamItem& it) {
    if (in_.model() == StreamModel::AL) {
      visit(StreamItem{it.vertex + n, it.neighbors});
    } else {
      for (std::size_t i = 0; i < it.neighbors.size(); ++i)
        visit(StreamItem{it.vertex + n, it.neighbors.subspan(i, 1)});
    }
  });
}

CachedStream::CachedStream(GraphStream materialized, std::uint64_t cost) : s_(std::move(materialized)), cost_(cost) {}

void CachedStream::pass(PassMeter& meter, const ItemVisitor& visit) const {
  for (std::uint64_t i = 1; i < cost_; ++i) meter.begin_pass();
  s_.pass(meter, visit);
}

GraphStream materialize(const Stream& s, PassMeter& meter) {
  std::vector<std::vector<VertexId>> items;
  std::vector<VertexId> heads;
  s.pass(meter, [&](const StreamItem& it) {
    heads.push_back(it.vertex);
    items.emplace_back(it.neighbors.begin(), it.neighbors.end());
  });
  const StreamModel model = s.model() == StreamModel::AL ? StreamModel::AL : StreamModel::EA;
  return GraphStream(model, s.vertex_count(), items, heads);
}

void Matching::add(VertexId u, VertexId v) {
  mate_[u] = v;
  mate_[v] = u;
}

void Matching::remove(VertexId u) {
  auto it = mate_.find(u);
  if (it == mate_.end()) return;
  mate_.erase(it->second);
  mate_.erase(it);
}

std::vector<Edge> Matching::edges(VertexId left_count) const {
  std::vector<Edge> out;
  for (auto [a, b] : mate_)
    if (a <= left_count) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::uint64_t pair_bits(const Stream& b) { return 2 * bits_for(b.vertex_count()); }

std::optional<LedgerMatching> greedy_impl(const Stream& b, VertexId left_count, std::size_t cap,
                                          RunMeters& meters) {
  LedgerMatching out{Matching{}, meters.memory.raw_bits(0)};
  bool overflow = false;
  auto mem_flag = meters.memory.flag();
  b.pass(meters.passes, [&](const StreamItem& it) {
    for_each_pair(it, [&](VertexId a, VertexId w) {
      if (overflow || out.m.matched(a) || out.m.matched(w)) return;
      if ((a <= left_count) == (w <= left_count)) throw InvalidGraph("edge inside one side of the bipartite stream");
      if (out.m.size() == cap) {
        overflow = true;
        return;
      }
      out.m.add(a, w);
      out.hold.resize(out.m.size() * pair_bits(b));
    });
  });
  if (overflow) return std::nullopt;
  return out;
}

struct Frame {
  VertexId u;
  std::uint64_t counter;
  VertexId via;  // right vertex whose matched edge led here, 0 for a start
};

enum class StepKind { Free, Push, Exhausted };

struct Step {
  StepKind kind = StepKind::Exhausted;
  VertexId w = 0;
  std::uint64_t index = 0;
};

// Looks at neighbors with index >= from, in stream order.
class StepScan {
 public:
  StepScan(const Matching& m, const VisitedMarks& marks, std::uint64_t from) : m_(m), marks_(marks), from_(from) {}
  void see(VertexId w, std::uint64_t index) {
    if (index < from_ || result.kind == StepKind::Free) return;
    if (!m_.matched(w)) {
      result = {StepKind::Free, w, index};
    } else if (result.kind == StepKind::Exhausted && !marks_.visited(w)) {
      result = {StepKind::Push, w, index};
    }
  }
  Step result;

 private:
  const Matching& m_;
  const VisitedMarks& marks_;
  std::uint64_t from_;
};

// Streamed alternating DFS over all free left vertices. In augment mode it
// stops at the first free right vertex; otherwise reaching one is an error
// and the search runs until every start is exhausted.
std::optional<std::vector<VertexId>> alternating_dfs(const Stream& b, VertexId left_count, const Matching& m,
                                                     VisitedMarks& marks, RunMeters& meters, bool augment,
                                                     SearchStats* stats) {
  const bool al = b.model() == StreamModel::AL;
  const std::uint64_t id_bits = bits_for(b.vertex_count());
  std::vector<Frame> stack;
  auto mem_stack = meters.memory.raw_bits(0);
  auto mem_cursor = meters.memory.raw_bits(id_bits);
  auto mem_done = meters.memory.flag();
  std::uint64_t al_cursor = 0;  // next item position that may start a search
  VertexId ea_cursor = 0;       // starts so far have ids <= ea_cursor
  if (marks.hold.bits() == 0) marks.hold = meters.memory.raw_bits(marks.start_of.size() * 2 * id_bits);
  SearchStats local;
  SearchStats& st = stats ? *stats : local;

  auto sync_stack = [&] { mem_stack.resize(stack.size() * 3 * id_bits); };
  auto mark = [&](VertexId w, VertexId start) {
    marks.start_of.emplace(w, start);
    marks.hold.resize(marks.start_of.size() * 2 * id_bits);
  };
  auto free_reached = [&](VertexId r) -> std::vector<VertexId> {
    if (!augment) throw std::logic_error("alternating search reached a free vertex: matching is not maximum");
    std::vector<VertexId> path;
    for (const auto& f : stack) {
      if (f.via) path.push_back(f.via);
      path.push_back(f.u);
    }
    path.push_back(r);
    return path;
  };
  auto apply = [&](const Step& s) -> std::optional<std::vector<VertexId>> {
    if (s.kind == StepKind::Free) return free_reached(s.w);
    if (s.kind == StepKind::Push) {
      stack.back().counter = s.index + 1;
      const VertexId next = m.mate(s.w);
      mark(s.w, stack.front().u);
      stack.push_back({next, 0, s.w});
      ++st.pushes;
    } else {
      stack.pop_back();
    }
    sync_stack();
    return std::nullopt;
  };

  for (;;) {
    if (stack.empty()) {
      if (al) {
        // consecutive starts that fail at once share a pass
        std::uint64_t pos = 0;
        bool decided = false;
        Step step;
        VertexId start = 0;
        ++st.passes;
        b.pass(meters.passes, [&](const StreamItem& it) {
          const std::uint64_t here = pos++;
          if (decided || here < al_cursor) return;
          if (it.vertex > left_count || m.matched(it.vertex) || it.neighbors.empty()) return;
          ++st.starts;
          StepScan scan(m, marks, 0);
          for (std::size_t i = 0; i < it.neighbors.size(); ++i) scan.see(it.neighbors[i], i);
          al_cursor = here + 1;
          if (scan.result.kind != StepKind::Exhausted) {
            decided = true;
            step = scan.result;
            start = it.vertex;
          }
        });
        if (!decided) return std::nullopt;
        stack.push_back({start, 0, 0});
        sync_stack();
        if (auto p = apply(step)) return p;
        continue;
      }
      // EA: one pass for the next start
      VertexId next = 0;
      ++st.passes;
      b.pass(meters.passes, [&](const StreamItem& it) {
        for_each_pair(it, [&](VertexId a, VertexId w) {
          const VertexId left = a <= left_count ? a : w;
          if (left > ea_cursor && !m.matched(left) && (next == 0 || left < next)) next = left;
        });
      });
      if (next == 0) return std::nullopt;
      ea_cursor = next;
      ++st.starts;
      stack.push_back({next, 0, 0});
      sync_stack();
    }

    const Frame top = stack.back();
    StepScan scan(m, marks, top.counter);
    ++st.passes;
    if (al) {
      b.pass(meters.passes, [&](const StreamItem& it) {
        if (it.vertex != top.u) return;
        for (std::size_t i = 0; i < it.neighbors.size(); ++i) scan.see(it.neighbors[i], i);
      });
    } else {
      std::uint64_t occ = 0;
      b.pass(meters.passes, [&](const StreamItem& it) {
        for_each_pair(it, [&](VertexId a, VertexId w) {
          if (a == top.u) scan.see(w, occ++);
          else if (w == top.u) scan.see(a, occ++);
        });
      });
    }
    if (auto p = apply(scan.result)) return p;
  }
}

void augment(Matching& m, const std::vector<VertexId>& path) {
  // path = u0, w1, u1, ..., wt, ut, r
  for (std::size_t i = 2; i + 1 < path.size(); i += 2) m.remove(path[i]);
  for (std::size_t i = 0; i + 1 < path.size(); i += 2) m.add(path[i], path[i + 1]);
}

}  // namespace

std::optional<LedgerMatching> greedy_maximal_matching(const Stream& b, VertexId left_count, std::size_t cap,
                                                     RunMeters& meters) {
  require_model(b, {StreamModel::AL, StreamModel::EA}, "greedy_maximal_matching");
  return greedy_impl(b, left_count, cap, meters);
}

std::optional<std::vector<VertexId>> find_augmenting_path(const Stream& b, VertexId left_count, const Matching& m,
                                                         VisitedMarks& marks, RunMeters& meters,
                                                         SearchStats* stats) {
  require_model(b, {StreamModel::AL, StreamModel::EA}, "find_augmenting_path");
  return alternating_dfs(b, left_count, m, marks, meters, true, stats);
}

namespace {

std::optional<LedgerMatching> max_matching_impl(const Stream& b, VertexId left_count, std::size_t cap,
                                                RunMeters& meters, std::uint64_t* augmentations,
                                                std::size_t* greedy_size) {
  auto lm = greedy_impl(b, left_count, cap, meters);
  if (!lm) return std::nullopt;
  if (greedy_size) *greedy_size = lm->m.size();
  for (;;) {
    VisitedMarks marks;
    auto path = alternating_dfs(b, left_count, lm->m, marks, meters, true, nullptr);
    if (!path) break;
    if (lm->m.size() == cap) return std::nullopt;
    augment(lm->m, *path);
    lm->hold.resize(lm->m.size() * pair_bits(b));
    if (augmentations) ++*augmentations;
  }
  return lm;
}

}  // namespace

std::optional<LedgerMatching> maximum_matching(const Stream& b, VertexId left_count, std::size_t cap,
                                              RunMeters& meters, std::uint64_t* augmentations) {
  require_model(b, {StreamModel::AL, StreamModel::EA}, "maximum_matching");
  return max_matching_impl(b, left_count, cap, meters, augmentations, nullptr);
}

std::vector<VertexId> koenig_cover(const Stream& b, VertexId left_count, const Matching& m, RunMeters& meters) {
  require_model(b, {StreamModel::AL, StreamModel::EA}, "koenig_cover");
  VisitedMarks marks;
  alternating_dfs(b, left_count, m, marks, meters, false, nullptr);
  std::vector<VertexId> cover;
  for (auto [u, w] : m.edges(left_count)) cover.push_back(marks.visited(w) ? w : u);
  std::sort(cover.begin(), cover.end());
  return cover;
}

NTSets nt_sets(const std::vector<VertexId>& cover_of_b, VertexId n) {
  std::vector<std::uint8_t> count(n + 1, 0);
  for (VertexId v : cover_of_b) ++count[v > n ? v - n : v];
  NTSets out;
  for (VertexId v = 1; v <= n; ++v) {
    if (count[v] == 2) out.C0.push_back(v);
    if (count[v] == 1) out.V0.push_back(v);
  }
  return out;
}

KernelOutput kernelize(const Stream& s, std::size_t k, RunMeters& meters, const KernelOptions& opts) {
  const VertexId n = s.vertex_count();
  KernelOutput out;
  auto finish = [&](Verdict v, std::string reason) -> KernelOutput& {
    out.verdict = v;
    out.reason = std::move(reason);
    out.passes = meters.passes.passes_used();
    out.peak_bits = meters.memory.peak_bits();
    return out;
  };

  out.buss = buss_goldsmith(s, k, meters);
  if (out.buss.verdict == Verdict::NO) return finish(Verdict::NO, out.buss.reason);
  auto mem_s = meters.memory.raw_bits(out.buss.S.size() * bits_for(n));
  const std::size_t k1 = out.buss.k1;

  BussKernelStream ks(s, out.buss.S);
  DoubledStream doubled(ks);
  std::optional<CachedStream> cached;
  if (opts.cached) {
    PassMeter scratch;
    cached.emplace(materialize(doubled, scratch), 2);
  }
  const Stream& b = cached ? static_cast<const Stream&>(*cached) : static_cast<const Stream&>(doubled);

  auto lm = max_matching_impl(b, n, 2 * k1, meters, &out.augmentations, &out.greedy_size);
  if (!lm) return finish(Verdict::NO, "matching of the double exceeds 2k1");
  out.matching = lm->m.edges(n);

  out.cover = koenig_cover(b, n, lm->m, meters);
  auto mem_cover = meters.memory.raw_bits(out.cover.size() * bits_for(2 * n));
  lm.reset();
  out.nt = nt_sets(out.cover, n);
  out.k_prime = static_cast<std::int64_t>(k1) - static_cast<std::int64_t>(out.nt.C0.size());
  if (out.k_prime < 0) return finish(Verdict::NO, "|C0| exceeds k1");
  if (out.nt.V0.size() > 2 * static_cast<std::size_t>(out.k_prime))
    return finish(Verdict::NO, "|V0| exceeds 2k'");

  // last pass: G[V0]
  auto mem_v0 = meters.memory.raw_bits(out.nt.V0.size() * bits_for(n));
  mem_cover.release();
  std::vector<VertexId> local(n + 1, 0);
  for (std::size_t i = 0; i < out.nt.V0.size(); ++i) local[out.nt.V0[i]] = static_cast<VertexId>(i + 1);
  std::vector<Edge> edges;
  s.pass(meters.passes, [&](const StreamItem& it) {
    for (VertexId u : it.neighbors) {
      VertexId a = local[it.vertex], c = local[u];
      if (!a || !c) continue;
      if (s.model() == StreamModel::AL && a > c) continue;
      edges.emplace_back(std::min(a, c), std::max(a, c));
    }
  });
  out.kernel = Graph::from_edges(static_cast<VertexId>(out.nt.V0.size()), edges);
  out.vertex_map = out.nt.V0;
  return finish(Verdict::Kernel, "");
}

}  // namespace sgraph
