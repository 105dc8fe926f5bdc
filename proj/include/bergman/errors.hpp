#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

/// An iterative method hit its cap without meeting its residual target.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bergman
