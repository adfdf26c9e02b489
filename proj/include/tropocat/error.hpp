#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropocat {

enum class ErrorCode {
  InvalidArgument,
  FootMismatch,
  NegativeBetti,
  WrongMonoid,
  UnsupportedMonoid,
  Disconnected,
  EmptyCut,
  NotNested,
  InvalidChain,
  InvalidSimplex,
  UnstableResidue,
  InconsistentDims,
  ResourceBudgetExceeded,
  CounterexampleFound,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported through this type; `code()` is the
/// machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropocat
