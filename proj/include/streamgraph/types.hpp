#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgraph {

using VertexId = std::uint32_t;  // dense 1..n

enum class StreamModel { EA, VA, AL };

std::string_view to_string(StreamModel m);
StreamModel parse_model(std::string_view s);  // "ea" / "va" / "al", any case

// Shortest-path length or Infinite. Finite values order below Infinite.
class Distance {
 public:
  constexpr Distance() = default;  // Infinite
  static constexpr Distance infinite() { return Distance(); }
  static constexpr Distance finite(std::uint32_t v) { return Distance(v); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }
  std::uint32_t value() const {
    if (!finite_) throw std::logic_error("value() of an infinite distance");
    return value_;
  }
  constexpr Distance plus(std::uint32_t delta) const {
    return finite_ ? Distance(value_ + delta) : Distance();
  }

  friend constexpr bool operator==(const Distance& a, const Distance& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string str() const { return finite_ ? std::to_string(value_) : std::string("infinite"); }

 private:
  constexpr explicit Distance(std::uint32_t v) : value_(v), finite_(true) {}
  std::uint32_t value_ = 0;
  bool finite_ = false;
};

class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ModelMismatch : public StreamError {
 public:
  using StreamError::StreamError;
};
class BudgetExceeded : public StreamError {
 public:
  using StreamError::StreamError;
};
class CoverViolation : public StreamError {
 public:
  using StreamError::StreamError;
};
class PartitionInconsistency : public StreamError {
 public:
  using StreamError::StreamError;
};
class InvalidGraph : public StreamError {
 public:
  using StreamError::StreamError;
};
class GadgetInputError : public StreamError {
 public:
  using StreamError::StreamError;
};
class IoError : public StreamError {
 public:
  using StreamError::StreamError;
};

}  // namespace sgraph
