#pragma once

#include <stdexcept>
#include <string>

namespace drury {

/// Raised when an input fails a mathematical hypothesis an operation needs
/// (commuting, nilpotent, cyclic, ...). `hypothesis()` names the failed one.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(std::string hypothesis, const std::string& what)
      : std::runtime_error(what), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Raised when a randomized or iterative routine fails for numerical reasons
/// even though the hypotheses hold.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace drury
