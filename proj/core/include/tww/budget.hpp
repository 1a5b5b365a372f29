#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tww {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Limits for exhaustive searches. Zero means unlimited.
struct Budget {
  std::uint64_t max_nodes = 0;
  std::chrono::milliseconds time_limit{0};

  // Budget from the TWW_BUDGET_MS environment variable, if set.
  static Budget from_env();
  static Budget nodes(std::uint64_t n) { return Budget{n, std::chrono::milliseconds(0)}; }
};

class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& b, std::string what = "search");
  void tick();
  std::uint64_t nodes() const { return nodes_; }

 private:
  Budget budget_;
  std::string what_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace tww
