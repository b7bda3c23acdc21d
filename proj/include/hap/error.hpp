#pragma once

#include <stdexcept>
#include <string>

namespace hap {

enum class ErrorKind {
  Input,              // malformed files, bad parameters, domain errors
  BudgetExceeded,     // enumeration limits or node budgets
  ModeInfeasible,     // exact mode requested where it cannot finish
  KindViolation,      // set-pair system fails its declared condition
  NoTransversal,
  Internal,           // invariant violations and crosscheck mismatches
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace hap
