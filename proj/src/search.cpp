#include "booldim/search.hpp"

#include <thread>

#include "booldim/error.hpp"

namespace booldim {

SearchLimits SearchLimits::with_budget(double seconds, unsigned workers) {
  SearchLimits limits;
  limits.workers = workers == 0 ? 1 : workers;
  if (seconds > 0) {
    limits.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(seconds));
  }
  return limits;
}

void SearchLimits::check() const {
  if (deadline && Clock::now() > *deadline) throw BudgetExceeded("search budget exceeded");
}

unsigned default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace booldim
