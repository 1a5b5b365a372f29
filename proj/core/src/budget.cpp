#include "tww/budget.hpp"

#include <cstdlib>

namespace tww {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("TWW_BUDGET_MS")) {
    char* end = nullptr;
    long long ms = std::strtoll(env, &end, 10);
    if (end != env && ms > 0) b.time_limit = std::chrono::milliseconds(ms);
  }
  return b;
}

BudgetMeter::BudgetMeter(const Budget& b, std::string what)
    : budget_(b), what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}

void BudgetMeter::tick() {
  ++nodes_;
  if (budget_.max_nodes && nodes_ > budget_.max_nodes)
    throw BudgetExceeded(what_ + ": node budget of " + std::to_string(budget_.max_nodes) + " exceeded");
  if (budget_.time_limit.count() > 0 && (nodes_ & 1023) == 0) {
    auto elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed > budget_.time_limit)
      throw BudgetExceeded(what_ + ": time budget of " + std::to_string(budget_.time_limit.count()) +
                           " ms exceeded");
  }
}

}  // namespace tww
