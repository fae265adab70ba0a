#pragma once

#include <stdexcept>
#include <string>

namespace qrmt {

enum class ErrorCode {
  InvalidDimension,
  GaussianRegime,    // q == 1; callers route to the GOE formulas
  BoundaryInvalid,   // q == q_max, i.e. lambda == 0
  OutOfBranch,       // parameter outside the branch an operation accepts
  MarginalCase,      // lambda == 1 has no tail coefficient
  WrongRegime,
  Domain,
  MomentDivergence,  // requested moment does not exist for this lambda
  Io,
};

/// Exception type thrown by every qrmt operation on contract violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qrmt
