#include "streamgraph/diameter_vc.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace sgraph {

Distance TentativeDistances::at(VertexId v) const {
  if (v == source) return Distance::finite(0);
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (cover[i] == v) return d[i];
  throw std::out_of_range("vertex " + std::to_string(v) + " is not tracked");
}

namespace {

// Round logic shared by the streamed and the table-driven BFS.
class CoverBfsCore {
 public:
  CoverBfsCore(std::size_t k, int source_pos) : d_(k) {
    if (source_pos >= 0) d_[source_pos] = Distance::finite(0);
  }

  void cover_item(std::size_t pos, std::uint64_t xnbrs) {
    if (d_[pos].is_finite()) offer(xnbrs, d_[pos].plus(1));
  }
  void source_item(std::uint64_t xnbrs) { offer(xnbrs, Distance::finite(1)); }
  void other_item(std::uint64_t xnbrs) {
    Distance z = min_over(xnbrs);
    if (z.is_finite()) offer(xnbrs, z.plus(2));
  }
  Distance extract(std::uint64_t xnbrs) const { return min_over(xnbrs).plus(1); }
  const std::vector<Distance>& d() const { return d_; }

 private:
  void offer(std::uint64_t mask, Distance val) {
    for (; mask; mask &= mask - 1) {
      auto& cur = d_[std::countr_zero(mask)];
      cur = std::min(cur, val);
    }
  }
  Distance min_over(std::uint64_t mask) const {
    Distance best;
    for (; mask; mask &= mask - 1) best = std::min(best, d_[std::countr_zero(mask)]);
    return best;
  }

  std::vector<Distance> d_;
};

[[noreturn]] void cover_violation(VertexId w, VertexId u) {
  throw CoverViolation("edge (" + std::to_string(w) + "," + std::to_string(u) + ") avoids the vertex cover");
}

std::uint64_t nonx_mask(const Modulator& x, const StreamItem& it) {
  for (VertexId u : it.neighbors)
    if (!x.contains(u)) cover_violation(it.vertex, u);
  return x.mask_of(it.neighbors);
}

BfsResult run_bfs(const Stream& s, const Modulator& x, VertexId source, RunMeters& meters, const BfsOptions& opts) {
  const std::size_t k = x.size();
  const VertexId n = s.vertex_count();
  const std::uint64_t far = 2 * k + 3;
  auto mem_source = meters.memory.vertex_id(n);
  auto mem_d = meters.memory.raw_bits((k + 1) * bits_for(far));
  auto mem_round = meters.memory.counter(2 * k + 1);
  auto mem_scratch = meters.memory.counter(far);

  const int spos = x.position(source);
  CoverBfsCore core(k, spos);
  BfsResult out;
  out.tentative.source = source;
  out.tentative.cover.assign(x.members().begin(), x.members().end());

  const std::uint32_t rounds = static_cast<std::uint32_t>(2 * k);
  for (std::uint32_t r = 1; r <= rounds; ++r) {
    s.pass(meters.passes, [&](const StreamItem& it) {
      int p = x.position(it.vertex);
      if (p >= 0) {
        core.cover_item(static_cast<std::size_t>(p), x.mask_of(it.neighbors));
      } else if (it.vertex == source) {
        core.source_item(nonx_mask(x, it));
      } else {
        core.other_item(nonx_mask(x, it));
      }
    });
    out.rounds = r;
    if (opts.on_round) {
      out.tentative.d = core.d();
      opts.on_round(r, out.tentative);
    }
  }
  out.tentative.d = core.d();

  auto mem_ecc = meters.memory.counter(far);
  Distance ecc = Distance::finite(0);
  if (opts.collect_all) out.all.assign(n, Distance::infinite());
  s.pass(meters.passes, [&](const StreamItem& it) {
    Distance dv;
    int p = x.position(it.vertex);
    if (it.vertex == source) {
      dv = Distance::finite(0);
    } else if (p >= 0) {
      dv = core.d()[static_cast<std::size_t>(p)];
    } else {
      dv = core.extract(nonx_mask(x, it));
    }
    ecc = std::max(ecc, dv);
    if (opts.collect_all) out.all[it.vertex - 1] = dv;
  });
  out.eccentricity = ecc;
  return out;
}

}  // namespace

void validate_cover(const Stream& s, const Modulator& x, PassMeter& meter) {
  s.pass(meter, [&](const StreamItem& it) {
    if (x.contains(it.vertex)) return;
    for (VertexId u : it.neighbors)
      if (!x.contains(u)) cover_violation(it.vertex, u);
  });
}

BfsResult bounded_bfs(const Stream& s, const Modulator& x, VertexId source, RunMeters& meters,
                      const BfsOptions& opts) {
  require_model(s, StreamModel::AL, "bounded_bfs");
  auto mem_cover = meters.memory.raw_bits(x.size() * bits_for(s.vertex_count()));
  return run_bfs(s, x, source, meters, opts);
}

Distance diameter_multipass(const Stream& s, const Modulator& x, RunMeters& meters, const DiameterVcOptions& opts) {
  require_model(s, StreamModel::AL, "diameter_multipass");
  const std::size_t k = x.size();
  const VertexId n = s.vertex_count();
  if (k > 30) throw std::invalid_argument("diameter_multipass: 2^k classes too many");
  auto mem_cover = meters.memory.raw_bits(k * bits_for(n));
  if (opts.validate_cover) validate_cover(s, x, meters.passes);

  auto mem_best = meters.memory.counter(2 * k + 3);
  Distance best = Distance::finite(0);
  const std::uint64_t classes = std::uint64_t{1} << k;

  auto bfs_from = [&](VertexId v) {
    best = std::max(best, run_bfs(s, x, v, meters, {}).eccentricity);
    return best.is_infinite();
  };

  if (opts.mode == RepresentativeMode::per_class) {
    auto mem_mask = meters.memory.raw_bits(k);
    auto mem_rep = meters.memory.vertex_id(n);
    for (std::uint64_t b = 0; b < classes; ++b) {
      VertexId rep = 0;
      s.pass(meters.passes, [&](const StreamItem& it) {
        if (x.contains(it.vertex)) return;
        if (nonx_mask(x, it) == b && (rep == 0 || it.vertex < rep)) rep = it.vertex;
      });
      if (rep != 0 && bfs_from(rep)) return best;
    }
  } else {
    auto mem_reps = meters.memory.raw_bits(classes * bits_for(n));
    std::vector<VertexId> reps(classes, 0);
    s.pass(meters.passes, [&](const StreamItem& it) {
      if (x.contains(it.vertex)) return;
      auto& r = reps[nonx_mask(x, it)];
      if (r == 0 || it.vertex < r) r = it.vertex;
    });
    for (VertexId rep : reps)
      if (rep != 0 && bfs_from(rep)) return best;
  }
  for (VertexId v : x.members())
    if (bfs_from(v)) return best;
  return best;
}

TwinClassTable build_twin_class_table(const Stream& s, const Modulator& x, RunMeters& meters) {
  require_model(s, StreamModel::AL, "build_twin_class_table");
  const std::size_t k = x.size();
  if (k > 24) throw std::invalid_argument("twin class table: 2^k too large");
  TwinClassTable t;
  t.cover.assign(x.members().begin(), x.members().end());
  t.cover_adjacency.assign(k, 0);
  t.classes.assign(std::size_t{1} << k, Multiplicity::none);
  s.pass(meters.passes, [&](const StreamItem& it) {
    ++t.vertex_count;
    int p = x.position(it.vertex);
    if (p >= 0) {
      t.cover_adjacency[static_cast<std::size_t>(p)] = x.mask_of(it.neighbors);
      return;
    }
    auto& c = t.classes[nonx_mask(x, it)];
    c = c == Multiplicity::none ? Multiplicity::one : Multiplicity::many;
  });
  return t;
}

Distance diameter_from_table(const TwinClassTable& t, VertexId n, RunMeters& meters) {
  const std::size_t k = t.cover.size();
  const std::uint64_t far = 2 * k + 3;
  std::vector<std::uint64_t> realized;
  for (std::uint64_t b = 0; b < t.classes.size(); ++b)
    if (t.classes[b] != Multiplicity::none) realized.push_back(b);

  auto mem_d = meters.memory.raw_bits((k + 1) * bits_for(far));
  auto mem_best = meters.memory.counter(far);
  auto mem_src = meters.memory.raw_bits(k + 1);

  // Replays the rounds over one item per realized class and per X member.
  auto eccentricity = [&](int source_pos, std::int64_t source_class) {
    CoverBfsCore core(k, source_pos);
    for (std::size_t r = 0; r < 2 * k; ++r) {
      for (std::size_t p = 0; p < k; ++p) core.cover_item(p, t.cover_adjacency[p]);
      for (std::uint64_t b : realized) {
        if (static_cast<std::int64_t>(b) == source_class) {
          core.source_item(b);
          if (t.classes[b] == Multiplicity::many) core.other_item(b);
        } else {
          core.other_item(b);
        }
      }
    }
    Distance ecc = Distance::finite(0);
    for (const auto& dv : core.d()) ecc = std::max(ecc, dv);
    for (std::uint64_t b : realized) {
      if (static_cast<std::int64_t>(b) == source_class && t.classes[b] == Multiplicity::one) continue;
      ecc = std::max(ecc, core.extract(b));
    }
    return ecc;
  };

  Distance best = Distance::finite(0);
  if (t.vertex_count != n) throw InvalidGraph("twin class table does not account for every vertex");
  for (std::uint64_t b : realized) {
    best = std::max(best, eccentricity(-1, static_cast<std::int64_t>(b)));
    if (best.is_infinite()) return best;
  }
  for (std::size_t p = 0; p < k; ++p) {
    best = std::max(best, eccentricity(static_cast<int>(p), -1));
    if (best.is_infinite()) return best;
  }
  return best;
}

Distance diameter_onepass(const Stream& s, const Modulator& x, RunMeters& meters) {
  require_model(s, StreamModel::AL, "diameter_onepass");
  const std::size_t k = x.size();
  const VertexId n = s.vertex_count();
  auto mem_cover = meters.memory.raw_bits(k * bits_for(n));
  auto mem_table = meters.memory.raw_bits(2 * (std::uint64_t{1} << k) + k * k);
  auto mem_count = meters.memory.vertex_id(n);
  TwinClassTable t = build_twin_class_table(s, x, meters);
  return diameter_from_table(t, n, meters);
}

}  // namespace sgraph
