#pragma once

#include <cstdint>
#include <exception>
#include <limits>

namespace heredenum {

// Thrown when a counter passes its limit. Used to abort budgeted runs.
struct BudgetExhausted : std::exception {
  const char* what() const noexcept override { return "step budget exhausted"; }
};

// Abstract step count: successor-set constructions plus class-membership
// tests. Ticks propagate to the parent counter, if any.
class StepCounter {
 public:
  static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

  StepCounter() = default;
  explicit StepCounter(std::uint64_t limit, StepCounter* parent = nullptr)
      : limit_(limit), parent_(parent) {}

  void tick(std::uint64_t k = 1) {
    steps_ += k;
    if (parent_) parent_->tick(k);
    if (steps_ > limit_) throw BudgetExhausted();
  }

  std::uint64_t steps() const { return steps_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t steps_ = 0;
  std::uint64_t limit_ = kUnlimited;
  StepCounter* parent_ = nullptr;
};

}  // namespace heredenum
