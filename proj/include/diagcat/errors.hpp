#pragma once

#include <stdexcept>
#include <string>

namespace diagcat {

/// Bad parameters or mismatched operands.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A size guard refused the computation.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two independent computations disagreed; indicates a bug.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace diagcat
