#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "runner.hpp"
#include "streamgraph/gadgets.hpp"
#include "streamgraph/generators.hpp"
#include "streamgraph/stream.hpp"

using namespace sgraph;
using nlohmann::json;

namespace {

std::string stem_of(const std::string& path) {
  const std::string ext = ".graph";
  if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
    return path.substr(0, path.size() - ext.size());
  return path;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

std::vector<VertexId> parse_pi(const std::string& s) {
  std::vector<VertexId> pi;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      pi.push_back(static_cast<VertexId>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw GadgetInputError("bad --pi entry '" + tok + "'");
    }
  }
  return pi;
}

std::string random_bits(gen::Rng& rng, std::size_t len, bool nonzero) {
  std::string b(len, '0');
  for (auto& ch : b) ch = rng.chance(0.5) ? '1' : '0';
  if (nonzero && b.find('1') == std::string::npos) b[rng.below(len)] = '1';
  return b;
}

std::string party_name(Party p) { return p == Party::Alice ? "alice" : "bob"; }

std::string witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::VertexCover: return "vertex-cover";
    case WitnessKind::CliqueDeletion: return "clique-deletion";
    case WitnessKind::MatchingAfterDeletion: return "matching-after-deletion";
    case WitnessKind::PathAfterDeletion: return "path-after-deletion";
    case WitnessKind::Tree: return "tree";
    case WitnessKind::MaxDegree: return "max-degree";
    case WitnessKind::Bipartite: return "bipartite";
    case WitnessKind::SplitPartition: return "split-partition";
    case WitnessKind::AssertedClass: return "asserted-class";
  }
  return "?";
}

struct GenerateArgs {
  std::string kind;
  std::size_t n = 0;
  std::string x, y, pi, out;
  std::uint64_t j = 0;
  std::uint64_t seed = 1;
};

int cmd_generate(const GenerateArgs& a) {
  auto kind = parse_gadget_kind(a.kind);
  if (!kind) throw std::invalid_argument("unknown kind '" + a.kind + "'");
  gen::Rng rng(a.seed);
  GadgetInstance g;
  json input;
  if (is_perm_kind(*kind)) {
    PermInput p;
    if (!a.pi.empty()) {
      p.pi = parse_pi(a.pi);
    } else {
      if (a.n < 2) throw GadgetInputError("--n must be a power of two >= 2");
      p.pi.resize(a.n);
      for (std::size_t i = 0; i < a.n; ++i) p.pi[i] = static_cast<VertexId>(i + 1);
      seeded_shuffle(p.pi, rng.next());
    }
    if (a.n != 0 && a.n != p.pi.size()) throw GadgetInputError("--n disagrees with the length of --pi");
    p.validate();
    p.j = a.j ? a.j : rng.between(1, p.pi.size() * p.log_n());
    g = build_perm_gadget(*kind, p);
    input = {{"pi", p.pi}, {"j", p.j}, {"psi", p.psi()}, {"gamma", p.gamma()}, {"bit", p.answer()}};
  } else {
    std::string x = a.x, y = a.y;
    if (x.empty() != y.empty()) throw GadgetInputError("--x and --y go together");
    if (x.empty()) {
      if (a.n == 0) throw GadgetInputError("--n or --x/--y required");
      const std::size_t len = disj_input_length(*kind, a.n);
      x = random_bits(rng, len, requires_nonzero_input(*kind));
      y = random_bits(rng, len, requires_nonzero_input(*kind));
    }
    auto in = DisjInput::from_strings(x, y);
    g = build_disj_gadget(*kind, in);
    if (a.n != 0 && g.n != a.n) throw GadgetInputError("--n disagrees with the length of --x/--y");
    input = {{"x", x}, {"y", y}, {"disjoint", !in.intersecting()}};
  }

  const std::string out = a.out.empty() ? std::string(gadget_name(*kind)) + "-" + std::to_string(g.n) + ".graph" : a.out;
  const std::string stem = stem_of(out);
  write_graph_file(out, g.graph);

  json side;
  side["kind"] = std::string(gadget_name(*kind));
  side["n"] = g.n;
  side["input"] = input;
  side["yes"] = g.yes;
  side["claim"] = {{"problem", g.claim.problem == Problem::Diameter ? "diameter" : "connectivity"},
                   {"on_yes", g.claim.on_yes.str()},
                   {"on_no", g.claim.on_no.str()}};
  side["model"] = std::string(to_string(g.model));
  side["vertices"] = g.graph.vertex_count();
  side["edges"] = g.graph.edge_count();
  side["names"] = g.names;
  side["order"] = g.order;
  json owners = json::array();
  for (auto p : g.owner) owners.push_back(party_name(p));
  side["owner"] = owners;
  side["handoff"] = validate_handoff(g);

  json wit = json::array();
  std::optional<std::size_t> modulator_witness;
  for (std::size_t i = 0; i < g.witnesses.size(); ++i) {
    const auto& w = g.witnesses[i];
    wit.push_back({{"name", w.name}, {"kind", witness_kind_name(w.kind)}, {"vertices", w.vertices}, {"bound", w.bound}});
    if (!modulator_witness && (w.kind == WitnessKind::VertexCover || w.kind == WitnessKind::CliqueDeletion))
      modulator_witness = i;
  }
  side["witnesses"] = wit;

  auto rep = verify_dichotomy(g);
  json check;
  if (g.claim.problem == Problem::Diameter) check["diameter"] = rep.diameter.str();
  check["connected"] = rep.answer_connected;
  check["claim_holds"] = rep.claim_holds;
  check["ok"] = rep.ok();
  side["check"] = check;

  if (modulator_witness) {
    const auto& w = g.witnesses[*modulator_witness];
    std::string text;
    for (auto v : w.vertices) text += std::to_string(v) + "\n";
    write_text(stem + ".modulator", text);
    side["modulator"] = {{"path", stem + ".modulator"}, {"witness", w.name}, {"ell", w.bound}};
  }
  write_text(stem + ".json", side.dump(2) + "\n");
  std::cout << json{{"graph", out}, {"sidecar", stem + ".json"}, {"vertices", g.graph.vertex_count()}}.dump() << "\n";
  return cli::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streamgraph: streaming graph solvers, gadgets and kernels"};
  app.require_subcommand(1);

  GenerateArgs ga;
  auto* gen_cmd = app.add_subcommand("generate", "build a gadget instance");
  gen_cmd->add_option("--kind", ga.kind, "gadget kind")->required();
  gen_cmd->add_option("--n", ga.n, "instance parameter");
  gen_cmd->add_option("--x", ga.x, "Alice's bit string");
  gen_cmd->add_option("--y", ga.y, "Bob's bit string");
  gen_cmd->add_option("--pi", ga.pi, "permutation, comma separated, 1-based");
  gen_cmd->add_option("--j", ga.j, "bit index for permutation kinds");
  gen_cmd->add_option("--seed", ga.seed, "seed for random inputs");
  gen_cmd->add_option("--out", ga.out, "graph file; sidecars share its stem");

  cli::SolveRequest sr;
  std::string graph_path, modulator_path, model_name = "al";
  auto* solve_cmd = app.add_subcommand("solve", "run one solver and print a JSON report");
  solve_cmd->add_option("--problem", sr.problem)->required()->check(CLI::IsMember({"diameter", "connectivity"}));
  solve_cmd->add_option("--algorithm", sr.algorithm)->required();
  solve_cmd->add_option("--graph", graph_path)->required();
  solve_cmd->add_option("--modulator", modulator_path);
  solve_cmd->add_option("--model", model_name)->check(CLI::IsMember({"ea", "va", "al"}, CLI::ignore_case));
  solve_cmd->add_option("--ell", sr.ell, "number of cliques in G - X");
  solve_cmd->add_option("--k", sr.k, "cover size for connectivity-vc-greedy");
  solve_cmd->add_option("--p", sr.p, "pass parameter for connectivity-split");
  solve_cmd->add_option("--seed", sr.seed, "stream order seed");

  std::size_t kk = 0;
  std::uint64_t kseed = 0;
  std::string kout;
  auto* kern_cmd = app.add_subcommand("kernelize", "vertex cover kernel; provenance JSON on stdout");
  kern_cmd->add_option("--graph", graph_path)->required();
  kern_cmd->add_option("--k", kk)->required();
  kern_cmd->add_option("--model", model_name)->check(CLI::IsMember({"ea", "va", "al"}, CLI::ignore_case));
  kern_cmd->add_option("--seed", kseed);
  kern_cmd->add_option("--out", kout, "kernel graph file")->required();

  std::string suite, format = "csv", bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "run a suite and print one row per run");
  bench_cmd->add_option("--suite", suite, "suite JSON; default suite if omitted");
  bench_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  bench_cmd->add_option("--out", bench_out, "write here instead of stdout");

  std::uint64_t tseed = 0;
  auto* trace_cmd = app.add_subcommand("trace", "dump the stream items of a graph");
  trace_cmd->add_option("--graph", graph_path)->required();
  trace_cmd->add_option("--model", model_name)->check(CLI::IsMember({"ea", "va", "al"}, CLI::ignore_case));
  trace_cmd->add_option("--seed", tseed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kOk : cli::kUsage;
  }

  try {
    const StreamModel model = parse_model(model_name);
    if (*gen_cmd) return cmd_generate(ga);
    if (*solve_cmd) {
      auto g = read_graph_file(graph_path);
      sr.model = model;
      if (!modulator_path.empty()) sr.modulator = read_vertex_list_file(modulator_path);
      std::cout << cli::run_solver(g, sr).dump() << "\n";
      return cli::kOk;
    }
    if (*kern_cmd) {
      auto g = read_graph_file(graph_path);
      auto r = cli::run_kernelize(g, kk, model, kseed);
      if (r.kernel) {
        write_graph_file(kout, *r.kernel);
        r.report["kernel"] = kout;
      }
      std::cout << r.report.dump() << "\n";
      return cli::kOk;
    }
    if (*bench_cmd) return cli::bench_main(suite, format, bench_out);
    if (*trace_cmd) {
      auto g = read_graph_file(graph_path);
      auto s = build_stream(g, model, tseed, tseed + 1);
      PassMeter m;
      dump_trace(std::cout, s, m);
      return cli::kOk;
    }
  } catch (const std::exception& e) {
    return cli::report_error(e);
  }
  return cli::kUsage;
}
