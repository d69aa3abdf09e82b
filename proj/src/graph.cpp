#include "streamgraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sgraph {

std::string_view to_string(StreamModel m) {
  switch (m) {
    case StreamModel::EA: return "EA";
    case StreamModel::VA: return "VA";
    case StreamModel::AL: return "AL";
  }
  return "?";
}

StreamModel parse_model(std::string_view s) {
  std::string t(s);
  for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "ea") return StreamModel::EA;
  if (t == "va") return StreamModel::VA;
  if (t == "al") return StreamModel::AL;
  throw std::invalid_argument("unknown stream model: " + std::string(s));
}

Graph::Graph(VertexId n) : adj_(n) {}

Graph Graph::from_edges(VertexId n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n)
      throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 1.." + std::to_string(n));
    if (u == v) throw InvalidGraph("self-loop at " + std::to_string(u));
    g.adj_[u - 1].push_back(v);
    g.adj_[v - 1].push_back(u);
  }
  for (VertexId v = 1; v <= n; ++v) {
    auto& a = g.adj_[v - 1];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw InvalidGraph("duplicate edge at vertex " + std::to_string(v));
  }
  g.m_ = edges.size();
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& a = adj_[u - 1];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (VertexId u = 1; u <= vertex_count(); ++u)
    for (VertexId v : adj_[u - 1])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<VertexId>& keep) const {
  std::vector<VertexId> label(vertex_count() + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) label[keep[i]] = static_cast<VertexId>(i + 1);
  std::vector<Edge> es;
  for (VertexId u : keep)
    for (VertexId v : adj_[u - 1])
      if (label[v] && label[u] < label[v]) es.emplace_back(label[u], label[v]);
  return from_edges(static_cast<VertexId>(keep.size()), es);
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++lineno;
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) throw IoError("empty graph file");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n < 1 || m < 0) throw IoError("bad header line: " + line);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) throw IoError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream es(line);
    long long u, v;
    if (!(es >> u >> v)) throw IoError("bad edge line " + std::to_string(lineno) + ": " + line);
    if (u < 1 || v > n || u >= v)
      throw IoError("edge line " + std::to_string(lineno) + " violates 1 <= u < v <= n: " + line);
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  try {
    return Graph::from_edges(static_cast<VertexId>(n), edges);
  } catch (const InvalidGraph& e) {
    throw IoError(e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  write_graph(out, g);
  if (!out) throw IoError("write failed: " + path);
}

std::vector<VertexId> read_vertex_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<VertexId> out;
  long long v;
  while (in >> v) {
    if (v < 1) throw IoError("bad vertex id in " + path);
    out.push_back(static_cast<VertexId>(v));
  }
  if (!in.eof()) throw IoError("unparsable vertex list " + path);
  return out;
}

}  // namespace sgraph
