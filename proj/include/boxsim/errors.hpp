#pragma once

#include <stdexcept>
#include <string>

namespace boxsim {

// A numerical routine failed to reach its requested tolerance.  Carries the
// residual that was actually achieved.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what + " (achieved residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace boxsim
