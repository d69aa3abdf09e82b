#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <memory>

#include "streamgraph/budgets.hpp"
#include "streamgraph/connectivity.hpp"
#include "streamgraph/diameter_cliques.hpp"
#include "streamgraph/diameter_vc.hpp"
#include "streamgraph/kernel_vc.hpp"
#include "streamgraph/modulator.hpp"
#include "streamgraph/oracle.hpp"
#include "streamgraph/stream.hpp"

namespace sgraph::cli {

using nlohmann::json;

const std::vector<std::string>& algorithms_for(const std::string& problem) {
  static const std::vector<std::string> diameter{"diameter-vc",      "diameter-vc-batched",      "diameter-vc-onepass",
                                                 "diameter-cliques", "diameter-cliques-onepass", "exact"};
  static const std::vector<std::string> connectivity{"connectivity-vc",         "connectivity-vc-greedy",
                                                     "connectivity-cliques",    "connectivity-unionfind",
                                                     "connectivity-split",      "exact"};
  static const std::vector<std::string> none;
  if (problem == "diameter") return diameter;
  if (problem == "connectivity") return connectivity;
  return none;
}

namespace {

json budget_json(const Budget& b) {
  return {{"passes", b.passes}, {"bits", b.bits}, {"pass_formula", b.pass_formula}, {"bit_formula", b.bit_formula}};
}

Modulator need_modulator(const SolveRequest& r, VertexId n) {
  if (!r.modulator) throw std::invalid_argument(r.algorithm + " needs --modulator");
  return Modulator(*r.modulator, n);
}

}  // namespace

json run_solver(const Graph& g, const SolveRequest& r) {
  const auto& names = algorithms_for(r.problem);
  if (std::find(names.begin(), names.end(), r.algorithm) == names.end())
    throw std::invalid_argument("unknown algorithm '" + r.algorithm + "' for problem '" + r.problem + "'");

  const VertexId n = g.vertex_count();
  const double c = budget_constant();
  auto s = build_stream(g, r.model, r.seed, r.seed + 1);
  RunMeters meters;
  std::optional<Budget> b;
  std::size_t k = 0;
  std::function<json()> run;

  const std::string& a = r.algorithm;
  if (a == "exact") {
    run = [&]() -> json {
      if (r.problem == "diameter") return oracle::exact_diameter(g).str();
      return oracle::is_connected(g);
    };
  } else if (a == "diameter-vc" || a == "diameter-vc-batched" || a == "diameter-vc-onepass") {
    auto x = std::make_shared<Modulator>(need_modulator(r, n));
    k = x->size();
    if (a == "diameter-vc") b = budget::diameter_multipass(n, k, c);
    else if (a == "diameter-vc-batched") b = budget::diameter_multipass_fast(n, k, c);
    else b = budget::diameter_onepass(n, k, c);
    run = [&, x]() -> json {
      if (a == "diameter-vc-onepass") return diameter_onepass(s, *x, meters).str();
      DiameterVcOptions o;
      if (a == "diameter-vc-batched") o.mode = RepresentativeMode::batched;
      return diameter_multipass(s, *x, meters, o).str();
    };
  } else if (a == "diameter-cliques" || a == "diameter-cliques-onepass") {
    auto x = std::make_shared<Modulator>(need_modulator(r, n));
    k = x->size();
    b = a == "diameter-cliques" ? budget::diameter_multipass_cliques(n, k, r.ell, c)
                                : budget::diameter_onepass_cliques(n, k, r.ell, c);
    run = [&, x]() -> json {
      if (a == "diameter-cliques") return diameter_multipass_cliques(s, *x, r.ell, meters).str();
      return diameter_onepass_cliques(s, *x, r.ell, meters).str();
    };
  } else if (a == "connectivity-vc") {
    auto x = std::make_shared<Modulator>(need_modulator(r, n));
    k = x->size();
    b = budget::connectivity_vc(n, k, c);
    run = [&, x]() -> json { return connectivity_vc(s, *x, meters); };
  } else if (a == "connectivity-vc-greedy") {
    k = r.k;
    b = budget::connectivity_vc(n, k, c);
    run = [&]() -> json { return connectivity_vc_greedy(s, r.k, meters); };
  } else if (a == "connectivity-cliques") {
    auto x = std::make_shared<Modulator>(need_modulator(r, n));
    k = x->size();
    b = budget::connectivity_cliques(n, k, r.ell, c);
    run = [&, x]() -> json { return connectivity_cliques(s, *x, r.ell, meters); };
  } else if (a == "connectivity-unionfind") {
    b = budget::connectivity_unionfind(n, c);
    run = [&]() -> json { return connectivity_unionfind(s, meters); };
  } else if (a == "connectivity-split") {
    b = budget::connectivity_split(n, r.model, r.p, c);
    run = [&]() -> json { return connectivity_split(s, meters, r.p); };
  }

  if (b) arm(meters, *b, a);
  const auto t0 = std::chrono::steady_clock::now();
  json answer = run();
  const auto t1 = std::chrono::steady_clock::now();

  json out;
  out["algorithm"] = a;
  out["problem"] = r.problem;
  out["model"] = std::string(to_string(r.model));
  out["n"] = n;
  out["m"] = g.edge_count();
  out["k"] = k;
  if (a.find("cliques") != std::string::npos) out["ell"] = r.ell;
  out["answer"] = answer;
  out[r.problem == "diameter" ? "diameter" : "connected"] = answer;
  out["passes_used"] = meters.passes.passes_used();
  out["peak_bits"] = meters.memory.peak_bits();
  out["ledger_balance"] = meters.memory.current_bits();
  out["wall_time_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  out["budget"] = b ? budget_json(*b) : json(nullptr);
  return out;
}

KernelRun run_kernelize(const Graph& g, std::size_t k, StreamModel model, std::uint64_t seed) {
  const VertexId n = g.vertex_count();
  auto s = build_stream(g, model, seed, seed + 1);
  RunMeters meters;
  const Budget b = budget::kernelize(n, k, model, budget_constant());
  arm(meters, b, "kernelize");
  const auto t0 = std::chrono::steady_clock::now();
  auto out = kernelize(s, k, meters);
  const auto t1 = std::chrono::steady_clock::now();

  KernelRun r;
  json& j = r.report;
  j["algorithm"] = "kernelize";
  j["model"] = std::string(to_string(model));
  j["n"] = n;
  j["m"] = g.edge_count();
  j["k"] = k;
  j["verdict"] = out.verdict == Verdict::NO ? "NO" : "KERNEL";
  if (out.verdict == Verdict::NO) j["reason"] = out.reason;
  j["S"] = out.buss.S;
  j["C0"] = out.nt.C0;
  j["k_prime"] = out.k_prime;
  if (out.verdict == Verdict::Kernel) {
    j["kernel_vertices"] = out.kernel.vertex_count();
    j["kernel_edges"] = out.kernel.edge_count();
    j["vertex_map"] = out.vertex_map;
    r.kernel = std::move(out.kernel);
  }
  j["matching_size"] = out.matching.size();
  j["passes"] = meters.passes.passes_used();
  j["passes_AL_equivalent"] = meters.passes.passes_used();
  j["peak_bits"] = meters.memory.peak_bits();
  j["ledger_balance"] = meters.memory.current_bits();
  j["wall_time_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  j["budget"] = budget_json(b);
  return r;
}

int report_error(const std::exception& e) {
  int code = kFailure;
  if (dynamic_cast<const ModelMismatch*>(&e)) code = kModel;
  else if (dynamic_cast<const BudgetExceeded*>(&e)) code = kBudget;
  else if (dynamic_cast<const IoError*>(&e)) code = kIo;
  else if (dynamic_cast<const GadgetInputError*>(&e) || dynamic_cast<const std::invalid_argument*>(&e)) code = kUsage;
  std::cerr << "error: " << e.what() << "\n";
  return code;
}

}  // namespace sgraph::cli
