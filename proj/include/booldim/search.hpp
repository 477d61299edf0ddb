#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

namespace booldim {

/// Resource limits shared by the exhaustive searches.
struct SearchLimits {
  using Clock = std::chrono::steady_clock;

  std::optional<Clock::time_point> deadline;
  unsigned workers = 1;

  static SearchLimits with_budget(double seconds, unsigned workers = 1);

  /// Throws BudgetExceeded once the deadline has passed.
  void check() const;
};

/// Amortises deadline checks over many cheap iterations.
class BudgetTicker {
 public:
  explicit BudgetTicker(const SearchLimits& limits) : limits_(&limits) {}

  void tick() {
    if ((++count_ & 0xfffu) == 0) limits_->check();
  }

 private:
  const SearchLimits* limits_;
  std::uint32_t count_ = 0;
};

unsigned default_workers();

}  // namespace booldim
