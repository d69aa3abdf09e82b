#include "streamgraph/accounting.hpp"

#include <bit>

#include "streamgraph/types.hpp"

namespace sgraph {

std::uint64_t bits_for(std::uint64_t max_value) {
  // smallest b with 2^b > max_value
  return max_value == 0 ? 0 : static_cast<std::uint64_t>(std::bit_width(max_value));
}

void PassMeter::set_budget(std::uint64_t passes, std::string label) {
  budget_ = passes;
  label_ = std::move(label);
}

void PassMeter::begin_pass() {
  if (budget_ && used_ >= *budget_)
    throw BudgetExceeded("pass budget exceeded: " + label_ + " allows " + std::to_string(*budget_) + " passes");
  ++used_;
}

Charge::Charge(Charge&& o) noexcept : ledger_(o.ledger_), bits_(o.bits_) {
  o.ledger_ = nullptr;
  o.bits_ = 0;
}

Charge& Charge::operator=(Charge&& o) noexcept {
  if (this != &o) {
    release();
    ledger_ = o.ledger_;
    bits_ = o.bits_;
    o.ledger_ = nullptr;
    o.bits_ = 0;
  }
  return *this;
}

Charge::~Charge() { release(); }

void Charge::resize(std::uint64_t bits) {
  if (!ledger_) return;
  if (bits > bits_) {
    ledger_->add(bits - bits_);
  } else {
    ledger_->sub(bits_ - bits);
  }
  bits_ = bits;
}

void Charge::release() {
  if (ledger_) ledger_->sub(bits_);
  ledger_ = nullptr;
  bits_ = 0;
}

void MemoryLedger::set_budget(std::uint64_t bits, std::string label) {
  budget_ = bits;
  label_ = std::move(label);
}

Charge MemoryLedger::raw_bits(std::uint64_t bits) {
  add(bits);
  return Charge(this, bits);
}

void MemoryLedger::add(std::uint64_t bits) {
  if (budget_ && current_ + bits > *budget_)
    throw BudgetExceeded("memory budget exceeded: " + label_ + " allows " + std::to_string(*budget_) + " bits, needed " +
                         std::to_string(current_ + bits));
  current_ += bits;
  if (current_ > peak_) peak_ = current_;
}

}  // namespace sgraph
