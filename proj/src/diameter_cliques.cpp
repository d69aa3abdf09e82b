#include "streamgraph/diameter_cliques.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace sgraph {

CliqueKey clique_id_of(const StreamItem& item, const Modulator& x) {
  CliqueKey key{item.vertex, 1};
  for (VertexId u : item.neighbors) {
    if (x.contains(u)) continue;
    key.id = std::min(key.id, u);
    ++key.size;
  }
  return key;
}

std::size_t CliqueRegistry::slot_for(const StreamItem& item, const Modulator& x) {
  CliqueKey key = clique_id_of(item, x);
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    auto& s = slots_[i];
    if (s.id != key.id) continue;
    if (s.size != key.size)
      throw PartitionInconsistency("vertex " + std::to_string(item.vertex) + " disagrees on the size of clique " +
                                   std::to_string(key.id));
    ++s.count;
    s.self_seen |= item.vertex == key.id;
    return i;
  }
  if (slots_.size() == ell_)
    throw PartitionInconsistency("more than " + std::to_string(ell_) + " cliques outside the deletion set");
  slots_.push_back({key.id, key.size, 1, item.vertex == key.id});
  return slots_.size() - 1;
}

void CliqueRegistry::end_pass() {
  for (auto& s : slots_) {
    if (s.count != s.size || !s.self_seen)
      throw PartitionInconsistency("clique " + std::to_string(s.id) + " is not a clique component");
    s.count = 0;
    s.self_seen = false;
  }
}

Distance CliqueSummary::clique_distance(VertexId clique_id) const {
  for (std::size_t i = 0; i < representative.size(); ++i)
    if (representative[i] == clique_id) return d_clique[i];
  return Distance::infinite();
}

namespace {

class CliqueBfsCore {
 public:
  CliqueBfsCore(std::size_t k, std::size_t ell, int source_pos) : d_(k), dq_(ell) {
    if (source_pos >= 0) d_[source_pos] = Distance::finite(0);
  }

  void cover_item(std::size_t pos, std::uint64_t xnbrs) {
    if (d_[pos].is_finite()) offer(xnbrs, d_[pos].plus(1));
  }

  void clique_item(std::size_t slot, std::uint64_t xnbrs, bool is_source) {
    Distance c;
    if (is_source) {
      dq_[slot] = Distance::finite(0);
      c = Distance::finite(0);
    } else {
      Distance via = min_over(xnbrs).plus(1);
      if (via <= dq_[slot]) {
        dq_[slot] = via;
        c = via;
      } else {
        c = dq_[slot].plus(1);
      }
    }
    if (c.is_finite()) offer(xnbrs, c.plus(1));
  }

  Distance extract(std::size_t slot, std::uint64_t xnbrs, bool is_source) const {
    if (is_source) return Distance::finite(0);
    return std::min(dq_[slot].plus(1), min_over(xnbrs).plus(1));
  }

  const std::vector<Distance>& d() const { return d_; }
  const std::vector<Distance>& dq() const { return dq_; }

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
  std::vector<Distance> dq_;
};

CliqueSummary run_bfs(const Stream& s, const Modulator& x, std::size_t ell, VertexId source, RunMeters& meters,
                      const CliqueBfsOptions& opts) {
  const std::size_t k = x.size();
  const VertexId n = s.vertex_count();
  const std::uint64_t far = 3 * k + 3;
  auto mem_source = meters.memory.vertex_id(n);
  auto mem_d = meters.memory.raw_bits((k + ell) * bits_for(far));
  auto mem_slots = meters.memory.raw_bits(ell * (3 * bits_for(n) + 1));
  auto mem_round = meters.memory.counter(3 * k + 2);
  auto mem_scratch = meters.memory.counter(far);

  CliqueRegistry reg(ell);
  CliqueBfsCore core(k, ell, x.position(source));
  CliqueSummary out;
  out.source = source;
  out.cover.assign(x.members().begin(), x.members().end());

  auto snapshot = [&]() {
    out.d_cover = core.d();
    out.representative.clear();
    for (std::size_t i = 0; i < reg.size(); ++i) out.representative.push_back(reg.id(i));
    out.d_clique.assign(core.dq().begin(), core.dq().begin() + static_cast<std::ptrdiff_t>(reg.size()));
  };

  const std::uint32_t rounds = static_cast<std::uint32_t>(3 * k + 1);
  for (std::uint32_t r = 1; r <= rounds; ++r) {
    s.pass(meters.passes, [&](const StreamItem& it) {
      int p = x.position(it.vertex);
      if (p >= 0) {
        core.cover_item(static_cast<std::size_t>(p), x.mask_of(it.neighbors));
        return;
      }
      std::size_t slot = reg.slot_for(it, x);
      core.clique_item(slot, x.mask_of(it.neighbors), it.vertex == source);
    });
    reg.end_pass();
    out.rounds = r;
    if (opts.on_round) {
      snapshot();
      opts.on_round(r, out);
    }
  }

  auto mem_ecc = meters.memory.counter(far);
  Distance ecc = Distance::finite(0);
  if (opts.collect_all) out.all.assign(n, Distance::infinite());
  s.pass(meters.passes, [&](const StreamItem& it) {
    Distance dv;
    int p = x.position(it.vertex);
    if (p >= 0) {
      dv = core.d()[static_cast<std::size_t>(p)];
    } else {
      std::size_t slot = reg.slot_for(it, x);
      dv = core.extract(slot, x.mask_of(it.neighbors), it.vertex == source);
    }
    ecc = std::max(ecc, dv);
    if (opts.collect_all) out.all[it.vertex - 1] = dv;
  });
  reg.end_pass();
  snapshot();
  out.eccentricity = ecc;
  return out;
}

}  // namespace

CliqueSummary bounded_bfs_cliques(const Stream& s, const Modulator& x, std::size_t ell, VertexId source,
                                  RunMeters& meters, const CliqueBfsOptions& opts) {
  require_model(s, StreamModel::AL, "bounded_bfs_cliques");
  auto mem_cover = meters.memory.raw_bits(x.size() * bits_for(s.vertex_count()));
  return run_bfs(s, x, ell, source, meters, opts);
}

Distance diameter_multipass_cliques(const Stream& s, const Modulator& x, std::size_t ell, RunMeters& meters) {
  require_model(s, StreamModel::AL, "diameter_multipass_cliques");
  const std::size_t k = x.size();
  const VertexId n = s.vertex_count();
  if (k > 30) throw std::invalid_argument("diameter_multipass_cliques: 2^k classes too many");
  auto mem_cover = meters.memory.raw_bits(k * bits_for(n));
  auto mem_best = meters.memory.counter(3 * k + 3);
  auto mem_mask = meters.memory.raw_bits(k);
  auto mem_reps = meters.memory.raw_bits(ell * 2 * bits_for(n));

  Distance best = Distance::finite(0);
  auto bfs_from = [&](VertexId v) {
    best = std::max(best, run_bfs(s, x, ell, v, meters, {}).eccentricity);
    return best.is_infinite();
  };

  const std::uint64_t classes = std::uint64_t{1} << k;
  for (std::uint64_t b = 0; b < classes; ++b) {
    // lowest id per clique among vertices realizing mask b
    std::vector<std::pair<VertexId, VertexId>> reps;  // (clique id, vertex)
    s.pass(meters.passes, [&](const StreamItem& it) {
      if (x.contains(it.vertex) || x.mask_of(it.neighbors) != b) return;
      VertexId q = clique_id_of(it, x).id;
      for (auto& [cq, v] : reps)
        if (cq == q) {
          v = std::min(v, it.vertex);
          return;
        }
      if (reps.size() == ell)
        throw PartitionInconsistency("more than " + std::to_string(ell) + " cliques outside the deletion set");
      reps.emplace_back(q, it.vertex);
    });
    for (auto [q, v] : reps)
      if (bfs_from(v)) return best;
  }
  for (VertexId v : x.members())
    if (bfs_from(v)) return best;
  return best;
}

Distance diameter_onepass_cliques(const Stream& s, const Modulator& x, std::size_t ell, RunMeters& meters) {
  require_model(s, StreamModel::AL, "diameter_onepass_cliques");
  const std::size_t k = x.size();
  const VertexId n = s.vertex_count();
  if (k > 20) throw std::invalid_argument("diameter_onepass_cliques: 2^k too large");
  const std::uint64_t classes = std::uint64_t{1} << k;
  auto mem_cover = meters.memory.raw_bits(k * bits_for(n) + k * k);
  auto mem_table = meters.memory.raw_bits(2 * classes * ell);
  auto mem_slots = meters.memory.raw_bits(ell * (3 * bits_for(n) + 1));
  auto mem_count = meters.memory.vertex_id(n);

  std::vector<std::uint64_t> xadj(k, 0);
  std::vector<std::uint8_t> table(classes * ell, 0);  // 0, 1, 2 = many
  CliqueRegistry reg(ell);
  std::uint64_t seen = 0;
  s.pass(meters.passes, [&](const StreamItem& it) {
    ++seen;
    int p = x.position(it.vertex);
    if (p >= 0) {
      xadj[static_cast<std::size_t>(p)] = x.mask_of(it.neighbors);
      return;
    }
    std::size_t slot = reg.slot_for(it, x);
    auto& c = table[x.mask_of(it.neighbors) * ell + slot];
    c = static_cast<std::uint8_t>(std::min(c + 1, 2));
  });
  reg.end_pass();
  if (seen != n) throw InvalidGraph("stream does not list every vertex");

  const std::uint64_t far = 3 * k + 3;
  auto mem_d = meters.memory.raw_bits((k + ell) * bits_for(far));
  auto mem_best = meters.memory.counter(far);
  auto mem_src = meters.memory.raw_bits(k + bits_for(ell) + 1);

  struct Node {
    std::uint64_t mask;
    std::size_t slot;
    std::uint8_t mult;
  };
  std::vector<Node> nodes;
  for (std::uint64_t b = 0; b < classes; ++b)
    for (std::size_t q = 0; q < reg.size(); ++q)
      if (table[b * ell + q]) nodes.push_back({b, q, table[b * ell + q]});

  auto eccentricity = [&](int source_pos, std::ptrdiff_t source_node) {
    CliqueBfsCore core(k, ell, source_pos);
    for (std::size_t r = 0; r < 3 * k + 1; ++r) {
      for (std::size_t p = 0; p < k; ++p) core.cover_item(p, xadj[p]);
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        bool src = static_cast<std::ptrdiff_t>(i) == source_node;
        core.clique_item(nodes[i].slot, nodes[i].mask, src);
        if (src && nodes[i].mult > 1) core.clique_item(nodes[i].slot, nodes[i].mask, false);
      }
    }
    Distance ecc = Distance::finite(0);
    for (const auto& dv : core.d()) ecc = std::max(ecc, dv);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      bool src = static_cast<std::ptrdiff_t>(i) == source_node;
      if (src && nodes[i].mult == 1) continue;
      ecc = std::max(ecc, core.extract(nodes[i].slot, nodes[i].mask, false));
    }
    return ecc;
  };

  Distance best = Distance::finite(0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    best = std::max(best, eccentricity(-1, static_cast<std::ptrdiff_t>(i)));
    if (best.is_infinite()) return best;
  }
  for (std::size_t p = 0; p < k; ++p) {
    best = std::max(best, eccentricity(static_cast<int>(p), -1));
    if (best.is_infinite()) return best;
  }
  return best;
}

}  // namespace sgraph
