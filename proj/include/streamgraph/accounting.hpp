#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace sgraph {

// ceil(log2(x + 1)): bits to hold any value in [0, x].
std::uint64_t bits_for(std::uint64_t max_value);

class PassMeter {
 public:
  void set_budget(std::uint64_t passes, std::string label);
  void clear_budget() { budget_.reset(); }
  // Throws BudgetExceeded if the budget is already used up.
  void begin_pass();
  std::uint64_t passes_used() const { return used_; }
  std::optional<std::uint64_t> budget() const { return budget_; }

 private:
  std::uint64_t used_ = 0;
  std::optional<std::uint64_t> budget_;
  std::string label_;
};

class MemoryLedger;

// RAII charge; refunds on destruction. Movable, not copyable.
class Charge {
 public:
  Charge() = default;
  Charge(MemoryLedger* ledger, std::uint64_t bits) : ledger_(ledger), bits_(bits) {}
  Charge(Charge&& o) noexcept;
  Charge& operator=(Charge&& o) noexcept;
  Charge(const Charge&) = delete;
  Charge& operator=(const Charge&) = delete;
  ~Charge();

  std::uint64_t bits() const { return bits_; }
  // Grow or shrink in place; growing may throw BudgetExceeded.
  void resize(std::uint64_t bits);
  void release();

 private:
  MemoryLedger* ledger_ = nullptr;
  std::uint64_t bits_ = 0;
};

class MemoryLedger {
 public:
  void set_budget(std::uint64_t bits, std::string label);
  void clear_budget() { budget_.reset(); }

  Charge vertex_id(std::uint64_t n) { return raw_bits(bits_for(n)); }
  Charge counter(std::uint64_t max_value) { return raw_bits(bits_for(max_value)); }
  Charge flag() { return raw_bits(1); }
  Charge raw_bits(std::uint64_t bits);

  std::uint64_t current_bits() const { return current_; }
  std::uint64_t peak_bits() const { return peak_; }
  std::optional<std::uint64_t> budget() const { return budget_; }

 private:
  friend class Charge;
  void add(std::uint64_t bits);
  void sub(std::uint64_t bits) { current_ -= bits; }

  std::uint64_t current_ = 0;
  std::uint64_t peak_ = 0;
  std::optional<std::uint64_t> budget_;
  std::string label_;
};

// Meters owned by one algorithm run.
struct RunMeters {
  PassMeter passes;
  MemoryLedger memory;
};

}  // namespace sgraph
