#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "streamgraph/graph.hpp"
#include "streamgraph/types.hpp"

namespace sgraph::cli {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kModel = 3, kBudget = 4, kIo = 5 };

struct SolveRequest {
  std::string problem;    // diameter | connectivity
  std::string algorithm;
  StreamModel model = StreamModel::AL;
  std::uint64_t seed = 0;  // stream order
  std::optional<std::vector<VertexId>> modulator;
  std::size_t ell = 1;
  std::size_t k = 0;  // connectivity-vc-greedy, kernelize
  std::size_t p = 1;  // connectivity-split
};

const std::vector<std::string>& algorithms_for(const std::string& problem);

// Runs one solver under its budget. Throws the library errors unchanged.
nlohmann::json run_solver(const Graph& g, const SolveRequest& r);

struct KernelRun {
  nlohmann::json report;
  std::optional<Graph> kernel;
};
KernelRun run_kernelize(const Graph& g, std::size_t k, StreamModel model, std::uint64_t seed);

// Maps an exception in flight to an exit code and prints it to stderr.
int report_error(const std::exception& e);

int bench_main(const std::string& suite_path, const std::string& format, const std::string& out_path);

}  // namespace sgraph::cli
