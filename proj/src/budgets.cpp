#include "streamgraph/budgets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace sgraph {

double budget_constant() {
  if (const char* env = std::getenv("STREAMGRAPH_BUDGET_C")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 64.0;
}

void arm(RunMeters& meters, const Budget& b, const std::string& algorithm) {
  meters.passes.set_budget(b.passes, algorithm + " (" + b.pass_formula + ")");
  meters.memory.set_budget(b.bits, algorithm + " (" + b.bit_formula + ")");
}

namespace budget {
namespace {

double lg(std::uint64_t n) { return std::log2(static_cast<double>(n) + 1.0); }
double kk(std::uint64_t k) { return static_cast<double>(std::max<std::uint64_t>(k, 1)); }
std::uint64_t bits(double c, double f) { return static_cast<std::uint64_t>(std::ceil(c * f)); }
std::uint64_t pow2(std::uint64_t k) { return std::uint64_t{1} << k; }

}  // namespace

Budget bounded_bfs(std::uint64_t n, std::uint64_t k, double c) {
  return {2 * k + 1, bits(c, kk(k) * lg(n)), "2k+1", "c*k*log2(n+1)"};
}

Budget diameter_multipass(std::uint64_t n, std::uint64_t k, double c) {
  return {(pow2(k) + k) * (2 * k + 2), bits(c, kk(k) * lg(n)), "(2^k+k)(2k+2)", "c*k*log2(n+1)"};
}

Budget diameter_multipass_fast(std::uint64_t n, std::uint64_t k, double c) {
  return {(pow2(k) + k) * (2 * k + 2), bits(c, (static_cast<double>(pow2(k)) + kk(k)) * lg(n)), "(2^k+k)(2k+2)",
          "c*(2^k+k)*log2(n+1)"};
}

Budget diameter_onepass(std::uint64_t n, std::uint64_t k, double c) {
  return {1, bits(c, static_cast<double>(pow2(k)) + kk(k) * lg(n)), "1", "c*(2^k+k*log2(n+1))"};
}

Budget bounded_bfs_cliques(std::uint64_t n, std::uint64_t k, std::uint64_t ell, double c) {
  return {3 * k + 2, bits(c, (kk(k) + static_cast<double>(ell)) * lg(n)), "3k+2", "c*(k+l)*log2(n+1)"};
}

Budget diameter_multipass_cliques(std::uint64_t n, std::uint64_t k, std::uint64_t ell, double c) {
  return {(pow2(k) * ell + pow2(k) + k) * (3 * k + 3), bits(c, (kk(k) + static_cast<double>(ell)) * lg(n)),
          "(2^k*l+2^k+k)(3k+3)", "c*(k+l)*log2(n+1)"};
}

Budget diameter_onepass_cliques(std::uint64_t n, std::uint64_t k, std::uint64_t ell, double c) {
  double f = static_cast<double>(pow2(k) * ell) + (kk(k) + static_cast<double>(ell)) * lg(n);
  return {1, bits(c, f), "1", "c*(2^k*l+(k+l)*log2(n+1))"};
}

Budget connectivity_vc(std::uint64_t n, std::uint64_t k, double c) {
  return {1, bits(c, kk(k) * lg(n)), "1", "c*k*log2(n+1)"};
}

Budget connectivity_cliques(std::uint64_t n, std::uint64_t k, std::uint64_t ell, double c) {
  return {1, bits(c, (kk(k) + static_cast<double>(ell)) * lg(n)), "1", "c*(k+l)*log2(n+1)"};
}

Budget connectivity_unionfind(std::uint64_t n, double c) {
  return {1, bits(c, static_cast<double>(n) * lg(n)), "1", "c*n*log2(n+1)"};
}

Budget connectivity_split(std::uint64_t n, StreamModel model, std::uint64_t p, double c) {
  if (model == StreamModel::AL) return {1, bits(c, lg(n)), "1", "c*log2(n+1)"};
  double range = std::ceil(static_cast<double>(n) / static_cast<double>(std::max<std::uint64_t>(p, 1)));
  return {std::max<std::uint64_t>(p, 1), bits(c, range + lg(n)), "p", "c*(n/p+log2(n+1))"};
}

Budget buss_goldsmith(std::uint64_t n, std::uint64_t k, StreamModel model, double c) {
  std::uint64_t passes = model == StreamModel::EA ? 4 : 2;
  return {passes, bits(c, kk(k) * lg(n)), model == StreamModel::EA ? "4" : "2", "c*k*log2(n+1)"};
}

Budget augmenting_search(std::uint64_t n, std::uint64_t k, double c) {
  double big = std::max(static_cast<double>(k) * static_cast<double>(k), static_cast<double>(n));
  return {0, bits(c, kk(k) * std::log2(big + 1.0)), "", "c*k*log2(max(k^2,n)+1)"};
}

Budget kernelize(std::uint64_t n, std::uint64_t k, StreamModel model, double c) {
  std::uint64_t k1 = k + 1;
  double big = std::max(static_cast<double>(k) * static_cast<double>(k), static_cast<double>(n));
  if (model == StreamModel::EA)
    return {kKernelPassConstant * k1 * k1 * k1, bits(c, kk(k) * std::log2(big + 1.0)), "C*(k+1)^3",
            "c*k*log2(max(k^2,n)+1)"};
  return {kKernelPassConstant * k1 * k1, bits(c, kk(k) * std::log2(big + 1.0)), "C*(k+1)^2",
          "c*k*log2(max(k^2,n)+1)"};
}

}  // namespace budget
}  // namespace sgraph
