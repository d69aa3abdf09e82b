#include "streamgraph/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "streamgraph/oracle.hpp"

namespace sgraph {

namespace {

struct KindInfo {
  GadgetKind kind;
  const char* name;
};

constexpr KindInfo kKinds[] = {
    {GadgetKind::SimpleVA, "simple-va"},
    {GadgetKind::CliqueVA, "clique-va"},
    {GadgetKind::SimpleAL, "simple-al"},
    {GadgetKind::Windmill, "windmill"},
    {GadgetKind::Diamond, "diamond"},
    {GadgetKind::Split, "split"},
    {GadgetKind::Quadratic, "quadratic"},
    {GadgetKind::QuadraticBipartite, "quadratic-bipartite"},
    {GadgetKind::WindmillPerm, "windmill-perm"},
    {GadgetKind::DiamondPerm, "diamond-perm"},
    {GadgetKind::SimpleALConn, "simple-al-conn"},
    {GadgetKind::Cycles, "cycles"},
    {GadgetKind::CyclesBipartite, "cycles-bipartite"},
    {GadgetKind::Interval, "interval"},
    {GadgetKind::SplitConn, "split-conn"},
    {GadgetKind::CyclesPerm, "cycles-perm"},
};

std::string nm(std::string_view base, std::size_t i) { return std::string(base) + "_" + std::to_string(i); }
std::string nm(std::string_view base, std::size_t i, std::size_t k) {
  return std::string(base) + "_" + std::to_string(i) + "_" + std::to_string(k);
}

// Vertices are registered in reveal order with their owner; ids follow the
// stream order (Alice's block, then Bob's), independent of the input.
class Builder {
 public:
  void add(std::string name, Party p) {
    index_.emplace(name, verts_.size());
    verts_.push_back({std::move(name), p});
  }
  void edge(const std::string& a, const std::string& b) { edges_.emplace_back(at(a), at(b)); }
  void path(const std::vector<std::string>& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) edge(p[i], p[i + 1]);
  }
  void clique(const std::vector<std::string>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) edge(c[i], c[j]);
  }

  void finish(GadgetInstance& g) {
    std::vector<std::size_t> perm;
    for (Party p : {Party::Alice, Party::Bob})
      for (std::size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i].owner == p) perm.push_back(i);
    std::vector<VertexId> id(verts_.size());
    g.names.clear();
    g.order.clear();
    g.owner.clear();
    for (std::size_t pos = 0; pos < perm.size(); ++pos) {
      id[perm[pos]] = static_cast<VertexId>(pos + 1);
      g.names.push_back(verts_[perm[pos]].name);
      g.order.push_back(static_cast<VertexId>(pos + 1));
      g.owner.push_back(verts_[perm[pos]].owner);
    }
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (auto [a, b] : edges_) es.emplace_back(id[a], id[b]);
    g.graph = Graph::from_edges(static_cast<VertexId>(verts_.size()), es);
  }

 private:
  std::size_t at(const std::string& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::logic_error("gadget builder: unknown vertex " + s);
    return it->second;
  }
  struct V {
    std::string name;
    Party owner;
  };
  std::vector<V> verts_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

constexpr Party A = Party::Alice;
constexpr Party B = Party::Bob;

AnswerPredicate at_most(std::uint32_t v) { return {Relation::AtMost, v}; }
AnswerPredicate at_least(std::uint32_t v) { return {Relation::AtLeast, v}; }
AnswerPredicate exactly(std::uint32_t v) { return {Relation::Exactly, v}; }
AnswerPredicate connected() { return {Relation::Connected, 0}; }
AnswerPredicate disconnected() { return {Relation::Disconnected, 0}; }

DichotomyClaim diam(AnswerPredicate yes, AnswerPredicate no) { return {Problem::Diameter, yes, no}; }
DichotomyClaim conn(AnswerPredicate yes, AnswerPredicate no) { return {Problem::Connectivity, yes, no}; }

Witness witness(std::string name, WitnessKind kind, std::vector<VertexId> vs = {}, std::size_t bound = 0) {
  return {std::move(name), kind, std::move(vs), bound};
}

void simple_va(Builder& b, const DisjInput& in, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) b.add(nm("v", i), A);
  b.add("c", A);
  b.add("a", A);
  b.add("b", B);
  for (std::size_t i = 1; i <= n; ++i) {
    b.edge("c", nm("v", i));
    if (in.x[i - 1]) b.edge("a", nm("v", i));
    if (in.y[i - 1]) b.edge("b", nm("v", i));
  }
}

void clique_va(Builder& b, const DisjInput& in, std::size_t n) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i <= n + 1; ++i) {
    vs.push_back(nm("v", i));
    b.add(vs.back(), A);
  }
  b.add("a", A);
  b.add("b", B);
  b.clique(vs);
  b.edge("a", "v_0");
  b.edge("b", nm("v", n + 1));
  for (std::size_t i = 1; i <= n; ++i) {
    if (in.x[i - 1]) b.edge("a", nm("v", i));
    if (in.y[i - 1]) b.edge("b", nm("v", i));
  }
}

void simple_al(Builder& b, const DisjInput& in, std::size_t n) {
  b.add("a", A);
  b.add("c", A);
  for (std::size_t i = 1; i <= n; ++i) b.add(nm("l", i), A);
  b.add("b", B);
  for (std::size_t i = 1; i <= n; ++i) b.add(nm("r", i), B);
  for (std::size_t i = 1; i <= n; ++i) {
    b.edge(nm("l", i), nm("r", i));
    b.edge("c", nm("l", i));
    b.edge("c", nm("r", i));
    if (in.x[i - 1]) b.edge("a", nm("l", i));
    if (in.y[i - 1]) b.edge("b", nm("r", i));
  }
}

void windmill(Builder& b, const DisjInput& in, std::size_t n) {
  std::vector<std::string> p;
  for (std::size_t k = 1; k <= 6; ++k) {
    p.push_back(nm("p", k));
    b.add(p.back(), A);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    b.add(nm("a", i, 2), A);
    b.add(nm("a", i, 3), A);
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = 1; k <= 3; ++k) b.add(nm("b", i, k), B);
  b.path(p);
  const std::string center = "p_1";  // a_{i,1} for every i
  for (std::size_t i = 1; i <= n; ++i) {
    auto a2 = nm("a", i, 2), a3 = nm("a", i, 3);
    auto b1 = nm("b", i, 1), b2 = nm("b", i, 2), b3 = nm("b", i, 3);
    b.edge(a3, b1);
    b.edge(center, a2);
    b.edge(in.x[i - 1] ? a2 : center, a3);
    b.edge(b1, b2);
    b.edge(in.y[i - 1] ? b2 : b1, b3);
  }
}

void diamond(Builder& b, const DisjInput& in, std::size_t n) {
  b.add("a", A);
  for (std::size_t i = 0; i <= n; ++i) b.add(nm("c", i), A);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = 1; k <= 9; ++k)
      if (k != 4 && k != 8) b.add(nm("p", i, k), A);
  b.add("b", B);
  for (std::size_t i = 1; i <= n; ++i) {
    b.add(nm("p", i, 4), B);
    b.add(nm("p", i, 8), B);
  }
  b.edge("a", "b");
  for (std::size_t i = 0; i <= n; ++i) {
    b.edge("a", nm("c", i));
    b.edge("b", nm("c", i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::string> p;
    for (std::size_t k = 1; k <= 9; ++k) p.push_back(nm("p", i, k));
    b.path(p);
    b.edge(nm("c", i - 1), p[0]);
    b.edge(p[8], nm("c", i));
    if (!in.x[i - 1]) {
      b.edge("a", p[1]);
      b.edge("a", p[5]);
    }
    if (!in.y[i - 1]) {
      b.edge("b", p[3]);
      b.edge("b", p[7]);
    }
  }
}

void split(Builder& b, const DisjInput& in, std::size_t n) {
  std::vector<std::string> core;
  for (std::size_t i = 0; i <= n; ++i) {
    core.push_back(nm("a", i));
    b.add(core.back(), A);
  }
  for (std::size_t i = 1; i <= n; ++i) b.add(nm("a'", i), A);
  for (std::size_t i = 0; i <= n; ++i) {
    core.push_back(nm("b", i));
    b.add(core.back(), B);
  }
  for (std::size_t i = 1; i <= n; ++i) b.add(nm("b'", i), B);
  b.clique(core);
  for (std::size_t i = 1; i <= n; ++i) {
    b.edge("a_0", nm("b'", i));
    b.edge("b_0", nm("a'", i));
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j) {
        b.edge(nm("a", i), nm("b'", j));
        b.edge(nm("b", i), nm("a'", j));
      }
    b.edge(in.x[i - 1] ? nm("a", i) : "a_0", nm("a'", i));
    b.edge(in.y[i - 1] ? nm("b", i) : "b_0", nm("b'", i));
  }
}

void quadratic(Builder& b, const DisjInput& in, std::size_t n, bool bipartite) {
  b.add("u_A", A);
  if (bipartite) b.add("u_A'", A);
  for (std::size_t i = 1; i <= n; ++i) {
    b.add(nm("s", i), A);
    b.add(nm("a", i), A);
    b.add(nm("a'", i), A);
    b.add(nm("t'", i), A);
    if (bipartite)
      for (std::size_t k = 1; k <= 3; ++k) b.add(nm("q", i, k), A);
    b.add(nm("t", i), A);
  }
  b.add("u_B", B);
  if (bipartite) b.add("u_B'", B);
  for (std::size_t i = 1; i <= n; ++i) {
    b.add(nm("b", i), B);
    b.add(nm("b'", i), B);
  }
  const std::string ua2 = bipartite ? "u_A'" : "u_A";
  const std::string ub2 = bipartite ? "u_B'" : "u_B";
  for (std::size_t i = 1; i <= n; ++i) {
    b.edge("u_A", nm("a", i));
    b.edge(ua2, nm("a'", i));
    b.edge("u_B", nm("b", i));
    b.edge(ub2, nm("b'", i));
    b.edge(nm("s", i), nm("a", i));
    b.edge(nm("s", i), nm("b", i));
    b.edge(nm("t'", i), nm("a'", i));
    b.edge(nm("t'", i), nm("b'", i));
    if (bipartite)
      b.path({nm("t'", i), nm("q", i, 1), nm("q", i, 2), nm("q", i, 3), nm("t", i)});
    else
      b.edge(nm("t'", i), nm("t", i));
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t bit = (i - 1) * n + (j - 1);
      if (!in.x[bit]) b.edge(nm("a", i), nm("a'", j));
      if (!in.y[bit]) b.edge(nm("b", i), nm("b'", j));
    }
  }
}

void simple_al_conn(Builder& b, const DisjInput& in, std::size_t n) {
  b.add("a", A);
  for (std::size_t i = 1; i <= n + 1; ++i) b.add(nm("l", i), A);
  b.add("b", B);
  for (std::size_t i = 1; i <= n + 1; ++i) b.add(nm("r", i), B);
  for (std::size_t i = 1; i <= n + 1; ++i) b.edge(nm("l", i), nm("r", i));
  b.edge("a", nm("l", n + 1));
  b.edge("b", nm("r", n + 1));
  for (std::size_t i = 1; i <= n; ++i) {
    if (!in.x[i - 1]) b.edge("a", nm("l", i));
    if (!in.y[i - 1]) b.edge("b", nm("r", i));
  }
}

// Edge list of the Cycles gadget. Each edge carries the party whose input
// decides it and a slot name that does not depend on the input.
struct SlotEdge {
  std::string u, v, slot;
  Party owner;
};

std::vector<SlotEdge> cycles_edges(const DisjInput& in, std::size_t n) {
  std::vector<SlotEdge> es;
  es.push_back({"a_0", "b_0", "s_0", A});
  es.push_back({nm("a", n + 1), nm("b", n + 1), nm("s", n + 1), A});
  for (std::size_t i = 1; i <= n; ++i) {
    for (const char* side : {"a", "b"}) {
      const Party p = side[0] == 'a' ? A : B;
      const std::string s = side;
      auto v = [&](std::size_t k) { return nm(s, i, k); };
      es.push_back({i > 1 ? nm(s, i - 1, 4) : nm(s, 0), v(1), nm("s" + s, i, 0), p});
      if (i == n) es.push_back({v(4), nm(s, n + 1), nm("s" + s, i, 5), p});
      const bool bit = p == A ? in.x[i - 1] : in.y[i - 1];
      if (bit) {
        es.push_back({v(1), v(2), nm("s" + s, i, 1), p});
        es.push_back({v(3), v(4), nm("s" + s, i, 2), p});
      } else if (p == A) {
        es.push_back({v(1), v(3), nm("s" + s, i, 1), p});
        es.push_back({v(2), v(4), nm("s" + s, i, 2), p});
      } else {
        es.push_back({v(1), v(4), nm("s" + s, i, 1), p});
        es.push_back({v(2), v(3), nm("s" + s, i, 2), p});
      }
    }
    es.push_back({nm("a", i, 2), nm("b", i, 2), nm("x", i, 2), A});
    es.push_back({nm("a", i, 3), nm("b", i, 3), nm("x", i, 3), A});
  }
  return es;
}

void cycles(Builder& b, const DisjInput& in, std::size_t n, bool subdivide) {
  for (const char* side : {"a", "b"}) {
    const Party p = side[0] == 'a' ? A : B;
    b.add(nm(side, 0), p);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 1; k <= 4; ++k) b.add(nm(side, i, k), p);
    b.add(nm(side, n + 1), p);
  }
  auto es = cycles_edges(in, n);
  if (subdivide) {
    // slot names are the same for every input, so the subdivision vertices are too
    for (const auto& e : es) b.add(e.slot, e.owner);
  }
  for (const auto& e : es) {
    if (subdivide) {
      b.edge(e.u, e.slot);
      b.edge(e.slot, e.v);
    } else {
      b.edge(e.u, e.v);
    }
  }
}

void interval(Builder& b, const DisjInput& in, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) {
    b.add(nm("u", i), A);
    b.add(nm("a", i), A);
    b.add(nm("v", i), A);
  }
  for (std::size_t i = 1; i <= n; ++i) b.add(nm("b", i), B);
  for (std::size_t i = 1; i <= n; ++i) {
    b.edge(nm("u", i), nm("a", i));
    b.edge(nm("v", i), nm("b", i));
    if (i > 1) b.edge(nm("v", i - 1), nm("u", i));
    if (!in.x[i - 1]) b.edge(nm("a", i), nm("v", i));
    if (!in.y[i - 1]) {
      b.edge(nm("b", i), nm("u", i));
      b.edge(nm("b", i), nm("a", i));
    }
  }
}

void split_conn(Builder& b, const DisjInput& in, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) b.add(nm("v", i), A);
  b.add("a", A);
  b.add("b", B);
  b.edge("a", "b");
  for (std::size_t i = 1; i <= n; ++i) {
    if (!in.x[i - 1]) b.edge("a", nm("v", i));
    if (!in.y[i - 1]) b.edge("b", nm("v", i));
  }
}

void windmill_perm(Builder& b, const PermInput& in, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) {
    b.add(nm("u", i, 4), A);
    b.add(nm("v", i, 4), A);
  }
  std::vector<std::string> t;
  for (std::size_t k = 1; k <= 8; ++k) {
    t.push_back(nm("t", k));
    b.add(t.back(), B);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    b.add(nm("u", i, 2), B);
    b.add(nm("u", i, 3), B);
    for (std::size_t k = 1; k <= 3; ++k) b.add(nm("v", i, k), B);
  }
  b.path(t);
  const auto psi = in.psi();
  for (std::size_t i = 1; i <= n; ++i) {
    auto u = [&](std::size_t k) { return k == 1 ? std::string("t_1") : nm("u", i, k); };
    auto v = [&](std::size_t k) { return nm("v", i, k); };
    b.edge(u(1), u(2));
    b.edge(i == psi ? u(2) : u(1), u(3));
    b.edge(v(1), v(2));
    b.edge(in.bit(static_cast<VertexId>(i)) ? v(2) : v(1), v(3));
    b.edge(u(3), u(4));
    b.edge(v(4), v(1));
    b.edge(u(4), nm("v", in.pi[i - 1], 4));
  }
}

void diamond_perm(Builder& b, const PermInput& in, std::size_t n) {
  for (std::size_t i = 0; i <= n; ++i) b.add(nm("c", i), A);
  for (std::size_t i = 1; i <= n; ++i) {
    b.add(nm("a", i), A);
    for (const char* s : {"u", "v"})
      for (std::size_t k : {1, 3, 4, 6}) b.add(nm(s, i, k), A);
  }
  b.add("b", B);
  b.add("b'", B);
  for (std::size_t i = 1; i <= n; ++i)
    for (const char* s : {"u", "v"})
      for (std::size_t k : {2, 5}) b.add(nm(s, i, k), B);
  b.edge("b", "b'");
  for (std::size_t i = 0; i <= n; ++i) {
    b.edge(nm("c", i), "b");
    b.edge(nm("c", i), "b'");
  }
  const auto psi = in.psi();
  for (std::size_t i = 1; i <= n; ++i) {
    for (const char* s : {"u", "v"}) {
      b.path({nm(s, i, 1), nm(s, i, 2), nm(s, i, 3)});
      b.path({nm(s, i, 4), nm(s, i, 5), nm(s, i, 6)});
    }
    if (i != psi) {
      b.edge("b'", nm("u", i, 2));
      b.edge("b'", nm("u", i, 5));
    }
    if (!in.bit(static_cast<VertexId>(i))) {
      b.edge("b", nm("v", i, 2));
      b.edge("b", nm("v", i, 5));
    }
    const std::size_t p = in.pi[i - 1];
    b.edge(nm("c", i - 1), nm("u", i, 1));
    b.edge(nm("u", i, 3), nm("v", p, 1));
    b.edge(nm("v", p, 3), nm("a", i));
    b.edge(nm("a", i), nm("u", i, 4));
    b.edge(nm("u", i, 6), nm("v", p, 4));
    b.edge(nm("v", p, 6), nm("c", i));
  }
}

void cycles_perm(Builder& b, const PermInput& in, std::size_t n) {
  for (const char* s : {"a", "a'"}) {
    b.add(nm(s, 0), A);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 1; k <= 4; ++k) b.add(nm(s, i, k), A);
    b.add(nm(s, n + 1), A);
  }
  for (const char* s : {"b", "b'"})
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 1; k <= 4; ++k) b.add(nm(s, i, k), B);
  b.edge("a_0", "a'_0");
  b.edge(nm("a", n + 1), nm("a'", n + 1));
  const auto psi = in.psi();
  auto Ai = [](std::size_t i, std::size_t k) { return nm("a", i, k); };
  auto Api = [](std::size_t i, std::size_t k) { return nm("a'", i, k); };
  auto Bi = [](std::size_t i, std::size_t k) { return nm("b", i, k); };
  auto Bpi = [](std::size_t i, std::size_t k) { return nm("b'", i, k); };
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= 4; ++k) {
      b.edge(Ai(i, k), Bi(i, k));
      b.edge(Api(i, k), Bpi(i, k));
    }
    if (i == psi) {
      b.edge(Bi(i, 1), Bi(i, 2));
      b.edge(Bi(i, 3), Bi(i, 4));
    } else {
      b.edge(Bi(i, 1), Bi(i, 3));
      b.edge(Bi(i, 2), Bi(i, 4));
    }
    if (in.bit(static_cast<VertexId>(i))) {
      b.edge(Bpi(i, 1), Bpi(i, 2));
      b.edge(Bpi(i, 3), Bpi(i, 4));
    } else {
      b.edge(Bpi(i, 1), Bpi(i, 4));
      b.edge(Bpi(i, 2), Bpi(i, 3));
    }
    const std::size_t p = in.pi[i - 1];
    b.edge(i > 1 ? Ai(i - 1, 4) : "a_0", Ai(i, 1));
    if (i == n) b.edge(Ai(n, 4), nm("a", n + 1));
    b.edge(Ai(i, 2), Api(p, 2));
    b.edge(Ai(i, 3), Api(p, 3));
    b.edge(i > 1 ? Api(in.pi[i - 2], 4) : "a'_0", Api(p, 1));
    if (i == n) b.edge(Api(p, 4), nm("a'", n + 1));
  }
}

std::vector<VertexId> ids(const GadgetInstance& g, std::initializer_list<std::string_view> names) {
  std::vector<VertexId> out;
  for (auto s : names) out.push_back(g.vertex(s));
  return out;
}

std::vector<VertexId> ids_with_prefix(const GadgetInstance& g, std::initializer_list<std::string_view> prefixes) {
  std::vector<VertexId> out;
  for (std::size_t v = 1; v <= g.names.size(); ++v) {
    const auto& s = g.names[v - 1];
    for (auto p : prefixes)
      if (s == p || (s.size() > p.size() && s.compare(0, p.size(), p) == 0 && s[p.size()] == '_')) {
        out.push_back(static_cast<VertexId>(v));
        break;
      }
  }
  return out;
}

void add_disj_witnesses(GadgetInstance& g) {
  auto& w = g.witnesses;
  switch (g.kind) {
    case GadgetKind::SimpleVA:
      w.push_back(witness("modulator", WitnessKind::VertexCover, ids(g, {"a", "b", "c"})));
      break;
    case GadgetKind::CliqueVA:
      w.push_back(witness("modulator", WitnessKind::CliqueDeletion, ids(g, {"a", "b"}), 1));
      break;
    case GadgetKind::SimpleAL:
      w.push_back(witness("modulator", WitnessKind::MatchingAfterDeletion, ids(g, {"a", "b", "c"})));
      break;
    case GadgetKind::Windmill:
      w.push_back(witness("tree", WitnessKind::Tree));
      break;
    case GadgetKind::Diamond:
      w.push_back(witness("modulator", WitnessKind::PathAfterDeletion, ids(g, {"a", "b"})));
      break;
    case GadgetKind::Split:
      w.push_back(witness("split partition", WitnessKind::SplitPartition, ids_with_prefix(g, {"a", "b"})));
      break;
    case GadgetKind::Quadratic:
      break;
    case GadgetKind::QuadraticBipartite:
      w.push_back(witness("bipartite", WitnessKind::Bipartite));
      break;
    case GadgetKind::SimpleALConn:
      w.push_back(witness("modulator", WitnessKind::MatchingAfterDeletion, ids(g, {"a", "b"})));
      break;
    case GadgetKind::Cycles:
      w.push_back(witness("max degree", WitnessKind::MaxDegree, {}, 2));
      break;
    case GadgetKind::CyclesBipartite:
      w.push_back(witness("max degree", WitnessKind::MaxDegree, {}, 2));
      w.push_back(witness("bipartite", WitnessKind::Bipartite));
      break;
    case GadgetKind::Interval:
      w.push_back(witness("interval", WitnessKind::AssertedClass));
      break;
    case GadgetKind::SplitConn:
      w.push_back(witness("split partition", WitnessKind::SplitPartition, ids(g, {"a", "b"})));
      break;
    default:
      break;
  }
}

DichotomyClaim claim_for(GadgetKind k) {
  switch (k) {
    case GadgetKind::SimpleVA: return diam(exactly(4), at_most(3));
    case GadgetKind::CliqueVA: return diam(at_least(3), at_most(2));
    case GadgetKind::SimpleAL: return diam(at_least(4), at_most(3));
    case GadgetKind::Windmill: return diam(at_most(9), at_least(10));
    case GadgetKind::Diamond: return diam(at_most(7), at_least(8));
    case GadgetKind::Split: return diam(at_most(2), at_least(3));
    case GadgetKind::Quadratic: return diam(at_most(4), at_least(5));
    case GadgetKind::QuadraticBipartite: return diam(at_most(7), at_least(8));
    case GadgetKind::WindmillPerm: return diam(at_least(14), at_most(13));
    case GadgetKind::DiamondPerm: return diam(at_least(10), at_most(9));
    case GadgetKind::CyclesPerm: return conn(disconnected(), connected());
    default: return conn(connected(), disconnected());
  }
}

StreamModel model_for(GadgetKind k) {
  switch (k) {
    case GadgetKind::SimpleVA:
    case GadgetKind::CliqueVA:
    case GadgetKind::Interval:
    case GadgetKind::SplitConn:
      return StreamModel::VA;
    default:
      return StreamModel::AL;
  }
}

// Sorted item of order[pos] as the model reveals it.
std::vector<VertexId> item_at(const Graph& g, StreamModel model, const std::vector<VertexId>& order,
                              const std::vector<std::uint32_t>& pos_of, std::size_t pos) {
  std::vector<VertexId> out;
  for (VertexId u : g.neighbors(order[pos]))
    if (model == StreamModel::AL || pos_of[u] < pos) out.push_back(u);
  return out;
}

std::vector<std::uint32_t> positions(const std::vector<VertexId>& order) {
  std::vector<std::uint32_t> p(order.size() + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) p[order[i]] = static_cast<std::uint32_t>(i);
  return p;
}

// Items owned by `party` are the same in g and in the rebuild r.
bool party_items_match(const GadgetInstance& g, const GadgetInstance& r, Party party) {
  if (r.graph.vertex_count() != g.graph.vertex_count() || r.names != g.names) return false;
  auto pos_of = positions(g.order);
  for (std::size_t i = 0; i < g.order.size(); ++i) {
    if (g.owner[i] != party) continue;
    if (item_at(g.graph, g.model, g.order, pos_of, i) != item_at(r.graph, g.model, g.order, pos_of, i))
      return false;
  }
  return true;
}

std::vector<std::vector<std::uint8_t>> alternatives(const std::vector<std::uint8_t>& s, bool nonzero) {
  std::vector<std::vector<std::uint8_t>> out;
  auto comp = s;
  for (auto& b : comp) b ^= 1;
  out.push_back(comp);
  out.emplace_back(s.size(), 1);
  out.emplace_back(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); i += std::max<std::size_t>(1, s.size() / 4)) {
    auto f = s;
    f[i] ^= 1;
    out.push_back(f);
  }
  std::erase_if(out, [&](const auto& v) { return nonzero && std::count(v.begin(), v.end(), 1) == 0; });
  return out;
}

bool is_clique_union(const Graph& h, std::size_t max_cliques) {
  const VertexId n = h.vertex_count();
  std::vector<char> seen(n + 1, 0);
  std::size_t count = 0;
  for (VertexId v = 1; v <= n; ++v) {
    if (seen[v]) continue;
    ++count;
    std::vector<VertexId> comp{v};
    seen[v] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (VertexId u : h.neighbors(comp[i]))
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    for (VertexId u : comp)
      if (h.degree(u) != comp.size() - 1) return false;
  }
  return count <= max_cliques;
}

std::vector<VertexId> complement_of(const std::vector<VertexId>& drop, VertexId n) {
  std::vector<char> gone(n + 1, 0);
  for (VertexId v : drop) gone[v] = 1;
  std::vector<VertexId> keep;
  for (VertexId v = 1; v <= n; ++v)
    if (!gone[v]) keep.push_back(v);
  return keep;
}

std::size_t max_degree(const Graph& h) {
  std::size_t d = 0;
  for (VertexId v = 1; v <= h.vertex_count(); ++v) d = std::max(d, h.degree(v));
  return d;
}

bool check_witness(const Graph& g, const Witness& w) {
  const VertexId n = g.vertex_count();
  switch (w.kind) {
    case WitnessKind::VertexCover:
      return oracle::is_vertex_cover(g, w.vertices);
    case WitnessKind::CliqueDeletion:
      return is_clique_union(g.induced(complement_of(w.vertices, n)), w.bound);
    case WitnessKind::MatchingAfterDeletion:
      return max_degree(g.induced(complement_of(w.vertices, n))) <= 1;
    case WitnessKind::PathAfterDeletion: {
      Graph h = g.induced(complement_of(w.vertices, n));
      return h.vertex_count() > 0 && max_degree(h) <= 2 && h.edge_count() + 1 == h.vertex_count() &&
             oracle::is_connected(h);
    }
    case WitnessKind::Tree:
      return n > 0 && g.edge_count() + 1 == n && oracle::is_connected(g);
    case WitnessKind::MaxDegree:
      return max_degree(g) <= w.bound;
    case WitnessKind::Bipartite:
      return oracle::is_bipartite(g);
    case WitnessKind::SplitPartition: {
      std::vector<char> in(n + 1, 0);
      for (VertexId v : w.vertices) in[v] = 1;
      for (VertexId a : w.vertices)
        for (VertexId b : w.vertices)
          if (a < b && !g.has_edge(a, b)) return false;
      for (auto [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
      return true;
    }
    case WitnessKind::AssertedClass:
      return true;
  }
  return false;
}

}  // namespace

const std::vector<GadgetKind>& all_gadget_kinds() {
  static const std::vector<GadgetKind> kinds = [] {
    std::vector<GadgetKind> v;
    for (const auto& k : kKinds) v.push_back(k.kind);
    return v;
  }();
  return kinds;
}

std::string_view gadget_name(GadgetKind k) {
  for (const auto& e : kKinds)
    if (e.kind == k) return e.name;
  return "unknown";
}

std::optional<GadgetKind> parse_gadget_kind(std::string_view name) {
  for (const auto& e : kKinds)
    if (name == e.name) return e.kind;
  return std::nullopt;
}

bool is_perm_kind(GadgetKind k) {
  return k == GadgetKind::WindmillPerm || k == GadgetKind::DiamondPerm || k == GadgetKind::CyclesPerm;
}

bool requires_nonzero_input(GadgetKind k) { return k == GadgetKind::SimpleVA || k == GadgetKind::SimpleAL; }

std::size_t disj_input_length(GadgetKind k, std::size_t n) {
  return (k == GadgetKind::Quadratic || k == GadgetKind::QuadraticBipartite) ? n * n : n;
}

std::size_t expected_vertex_count(GadgetKind k, std::size_t n) {
  switch (k) {
    case GadgetKind::SimpleVA: return n + 3;
    case GadgetKind::CliqueVA: return n + 4;
    case GadgetKind::SimpleAL: return 2 * n + 3;
    case GadgetKind::Windmill: return 5 * n + 6;
    case GadgetKind::Diamond: return 10 * n + 3;
    case GadgetKind::Split: return 4 * n + 2;
    case GadgetKind::Quadratic: return 7 * n + 2;
    case GadgetKind::QuadraticBipartite: return 10 * n + 4;
    case GadgetKind::WindmillPerm: return 7 * n + 8;
    case GadgetKind::DiamondPerm: return 14 * n + 3;
    case GadgetKind::SimpleALConn: return 2 * n + 4;
    case GadgetKind::Cycles: return 8 * n + 4;
    case GadgetKind::CyclesBipartite: return 16 * n + 8;
    case GadgetKind::Interval: return 4 * n;
    case GadgetKind::SplitConn: return n + 2;
    case GadgetKind::CyclesPerm: return 16 * n + 4;
  }
  return 0;
}

bool DisjInput::intersecting() const {
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
    if (x[i] && y[i]) return true;
  return false;
}

DisjInput DisjInput::from_strings(std::string_view xs, std::string_view ys) {
  auto parse = [](std::string_view s) {
    std::vector<std::uint8_t> out;
    for (char c : s) {
      if (c != '0' && c != '1') throw GadgetInputError("bit strings may only contain 0 and 1");
      out.push_back(c == '1');
    }
    return out;
  };
  return {parse(xs), parse(ys)};
}

std::string bit_string(const std::vector<std::uint8_t>& bits) {
  std::string s;
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::uint32_t PermInput::log_n() const { return static_cast<std::uint32_t>(std::countr_zero(pi.size())); }

std::uint64_t PermInput::psi() const {
  const std::uint64_t L = log_n();
  return (j + L - 1) / L;
}

std::uint32_t PermInput::gamma() const { return static_cast<std::uint32_t>(j + log_n() - psi() * log_n()); }

bool PermInput::bit(VertexId m) const { return ((m - 1) >> (log_n() - gamma())) & 1u; }

void PermInput::validate() const {
  const std::size_t n = pi.size();
  if (n < 2 || !std::has_single_bit(n)) throw GadgetInputError("perm gadgets need n a power of two, n >= 2");
  std::vector<char> seen(n + 1, 0);
  for (VertexId p : pi) {
    if (p < 1 || p > n || seen[p]) throw GadgetInputError("pi is not a permutation of 1..n");
    seen[p] = 1;
  }
  if (j < 1 || j > n * log_n()) throw GadgetInputError("j outside 1..n log n");
}

bool AnswerPredicate::holds(Distance d) const {
  switch (rel) {
    case Relation::AtMost: return d.is_finite() && d.value() <= value;
    case Relation::AtLeast: return d.is_infinite() || d.value() >= value;
    case Relation::Exactly: return d == Distance::finite(value);
    case Relation::Connected: return d.is_finite();
    case Relation::Disconnected: return d.is_infinite();
  }
  return false;
}

bool AnswerPredicate::holds(bool is_connected) const {
  switch (rel) {
    case Relation::Connected: return is_connected;
    case Relation::Disconnected: return !is_connected;
    default: return false;
  }
}

std::string AnswerPredicate::str() const {
  switch (rel) {
    case Relation::AtMost: return "<=" + std::to_string(value);
    case Relation::AtLeast: return ">=" + std::to_string(value);
    case Relation::Exactly: return "==" + std::to_string(value);
    case Relation::Connected: return "connected";
    case Relation::Disconnected: return "disconnected";
  }
  return "?";
}

GraphStream GadgetInstance::stream(std::uint64_t neighbor_seed) const {
  return build_stream_ordered(graph, model, order, neighbor_seed);
}

VertexId GadgetInstance::vertex(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<VertexId>(i + 1);
  throw std::out_of_range("no gadget vertex named " + std::string(name));
}

GadgetInstance build_disj_gadget(GadgetKind kind, const DisjInput& input) {
  if (is_perm_kind(kind)) throw GadgetInputError(std::string(gadget_name(kind)) + " takes a permutation input");
  if (input.x.size() != input.y.size()) throw GadgetInputError("x and y differ in length");
  std::size_t n = input.x.size();
  if (kind == GadgetKind::Quadratic || kind == GadgetKind::QuadraticBipartite) {
    const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (side * side != n) throw GadgetInputError("quadratic gadgets need n*n input bits");
    n = side;
  }
  if (n == 0) throw GadgetInputError("empty input");
  auto nonzero = [](const std::vector<std::uint8_t>& s) { return std::count(s.begin(), s.end(), 1) > 0; };
  if (requires_nonzero_input(kind) && (!nonzero(input.x) || !nonzero(input.y)))
    throw GadgetInputError(std::string(gadget_name(kind)) + " needs x and y not all-zero");

  Builder b;
  switch (kind) {
    case GadgetKind::SimpleVA: simple_va(b, input, n); break;
    case GadgetKind::CliqueVA: clique_va(b, input, n); break;
    case GadgetKind::SimpleAL: simple_al(b, input, n); break;
    case GadgetKind::Windmill: windmill(b, input, n); break;
    case GadgetKind::Diamond: diamond(b, input, n); break;
    case GadgetKind::Split: split(b, input, n); break;
    case GadgetKind::Quadratic: quadratic(b, input, n, false); break;
    case GadgetKind::QuadraticBipartite: quadratic(b, input, n, true); break;
    case GadgetKind::SimpleALConn: simple_al_conn(b, input, n); break;
    case GadgetKind::Cycles: cycles(b, input, n, false); break;
    case GadgetKind::CyclesBipartite: cycles(b, input, n, true); break;
    case GadgetKind::Interval: interval(b, input, n); break;
    case GadgetKind::SplitConn: split_conn(b, input, n); break;
    default: break;
  }
  GadgetInstance g;
  g.kind = kind;
  g.n = n;
  g.disj = input;
  g.model = model_for(kind);
  g.claim = claim_for(kind);
  g.yes = !input.intersecting();
  b.finish(g);
  add_disj_witnesses(g);
  return g;
}

GadgetInstance build_perm_gadget(GadgetKind kind, const PermInput& input) {
  if (!is_perm_kind(kind)) throw GadgetInputError(std::string(gadget_name(kind)) + " takes Disj strings");
  input.validate();
  const std::size_t n = input.pi.size();
  Builder b;
  if (kind == GadgetKind::WindmillPerm) windmill_perm(b, input, n);
  if (kind == GadgetKind::DiamondPerm) diamond_perm(b, input, n);
  if (kind == GadgetKind::CyclesPerm) cycles_perm(b, input, n);
  GadgetInstance g;
  g.kind = kind;
  g.n = n;
  g.perm = input;
  g.model = StreamModel::AL;
  g.claim = claim_for(kind);
  g.yes = input.answer();
  b.finish(g);
  if (kind == GadgetKind::WindmillPerm) g.witnesses.push_back(witness("tree", WitnessKind::Tree));
  if (kind == GadgetKind::DiamondPerm)
    g.witnesses.push_back(witness("modulator", WitnessKind::PathAfterDeletion, ids(g, {"b", "b'"})));
  if (kind == GadgetKind::CyclesPerm) g.witnesses.push_back(witness("max degree", WitnessKind::MaxDegree, {}, 2));
  return g;
}

bool validate_handoff(const GadgetInstance& g) {
  if (g.owner.size() != g.order.size() || g.order.size() != g.graph.vertex_count()) return false;
  if (!g.owner.empty() && g.owner.front() != Party::Alice) return false;
  for (std::size_t i = 1; i < g.owner.size(); ++i)
    if (g.owner[i - 1] == Party::Bob && g.owner[i] == Party::Alice) return false;

  try {
    if (g.disj) {
      const bool nz = requires_nonzero_input(g.kind);
      for (const auto& y : alternatives(g.disj->y, nz))
        if (!party_items_match(g, build_disj_gadget(g.kind, {g.disj->x, y}), Party::Alice)) return false;
      for (const auto& x : alternatives(g.disj->x, nz))
        if (!party_items_match(g, build_disj_gadget(g.kind, {x, g.disj->y}), Party::Bob)) return false;
      return true;
    }
    if (g.perm) {
      const std::uint64_t jmax = g.perm->pi.size() * g.perm->log_n();
      for (std::uint64_t j : {std::uint64_t{1}, jmax, g.perm->j % jmax + 1, (g.perm->j + jmax / 2) % jmax + 1}) {
        PermInput alt{g.perm->pi, j};
        if (!party_items_match(g, build_perm_gadget(g.kind, alt), Party::Alice)) return false;
      }
      std::vector<std::vector<VertexId>> pis;
      auto id = g.perm->pi;
      std::sort(id.begin(), id.end());
      pis.push_back(id);
      pis.emplace_back(id.rbegin(), id.rend());
      auto rot = g.perm->pi;
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      pis.push_back(rot);
      for (auto& pi : pis)
        if (!party_items_match(g, build_perm_gadget(g.kind, {pi, g.perm->j}), Party::Bob)) return false;
      return true;
    }
  } catch (const GadgetInputError&) {
    return false;
  }
  return false;
}

GadgetInstance make_interleaved_mutant(const GadgetInstance& g) {
  GadgetInstance m = g;
  for (std::size_t i = 0; i < m.owner.size(); ++i) m.owner[i] = (i % 2 == 0) ? Party::Alice : Party::Bob;
  return m;
}

GadgetInstance restream(const GadgetInstance& g, StreamModel model) {
  GadgetInstance m = g;
  m.model = model;
  return m;
}

bool DichotomyReport::ok() const {
  if (!claim_holds || !size_ok || !connected_ok || !model_ok) return false;
  for (const auto& [name, good] : witness_results)
    if (!good) return false;
  return true;
}

std::string DichotomyReport::describe() const {
  std::ostringstream os;
  os << "answer=" << (diameter.is_finite() || !answer_connected ? diameter.str() : std::string("?"))
     << " connected=" << answer_connected << " claim=" << claim_holds << " size=" << size_ok
     << " diameter_graph_connected=" << connected_ok << " model=" << model_ok;
  for (const auto& [name, good] : witness_results) os << " " << name << "=" << good;
  return os.str();
}

DichotomyReport verify_dichotomy(const GadgetInstance& g) {
  DichotomyReport r;
  const AnswerPredicate& want = g.yes ? g.claim.on_yes : g.claim.on_no;
  if (g.claim.problem == Problem::Diameter) {
    r.diameter = oracle::exact_diameter(g.graph);
    r.answer_connected = r.diameter.is_finite();
    r.claim_holds = want.holds(r.diameter);
    r.connected_ok = r.answer_connected;
  } else {
    r.answer_connected = oracle::is_connected(g.graph);
    r.claim_holds = want.holds(r.answer_connected);
  }
  r.size_ok = g.graph.vertex_count() == expected_vertex_count(g.kind, g.n);
  try {
    auto s = g.stream();
    PassMeter meter;
    r.model_ok = reconstruct_edges(s, meter) == g.graph.edges();
  } catch (const StreamError&) {
    r.model_ok = false;
  }
  for (const auto& w : g.witnesses) r.witness_results.emplace_back(w.name, check_witness(g.graph, w));
  return r;
}

}  // namespace sgraph
