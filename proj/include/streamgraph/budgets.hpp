#pragma once

#include <cstdint>
#include <string>

#include "streamgraph/accounting.hpp"
#include "streamgraph/types.hpp"

namespace sgraph {

// Per-algorithm constant c (default 64, env STREAMGRAPH_BUDGET_C).
double budget_constant();
// Constant C in the kernel pass bounds C(k+1)^2 (AL) and C(k+1)^3 (EA).
inline constexpr std::uint64_t kKernelPassConstant = 64;

struct Budget {
  std::uint64_t passes = 0;
  std::uint64_t bits = 0;
  std::string pass_formula;
  std::string bit_formula;
};

// Installs both limits on the meters.
void arm(RunMeters& meters, const Budget& b, const std::string& algorithm);

namespace budget {
Budget bounded_bfs(std::uint64_t n, std::uint64_t k, double c);
Budget diameter_multipass(std::uint64_t n, std::uint64_t k, double c);
Budget diameter_multipass_fast(std::uint64_t n, std::uint64_t k, double c);
Budget diameter_onepass(std::uint64_t n, std::uint64_t k, double c);
Budget bounded_bfs_cliques(std::uint64_t n, std::uint64_t k, std::uint64_t ell, double c);
Budget diameter_multipass_cliques(std::uint64_t n, std::uint64_t k, std::uint64_t ell, double c);
Budget diameter_onepass_cliques(std::uint64_t n, std::uint64_t k, std::uint64_t ell, double c);
Budget connectivity_vc(std::uint64_t n, std::uint64_t k, double c);
Budget connectivity_cliques(std::uint64_t n, std::uint64_t k, std::uint64_t ell, double c);
Budget connectivity_unionfind(std::uint64_t n, double c);
Budget connectivity_split(std::uint64_t n, StreamModel model, std::uint64_t p, double c);
Budget buss_goldsmith(std::uint64_t n, std::uint64_t k, StreamModel model, double c);
Budget augmenting_search(std::uint64_t n, std::uint64_t k, double c);
Budget kernelize(std::uint64_t n, std::uint64_t k, StreamModel model, double c);
}  // namespace budget

}  // namespace sgraph
