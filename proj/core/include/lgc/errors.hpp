#pragma once

#include <stdexcept>

namespace lgc {

/// Violated precondition or invalid argument on a public interface.
class contract_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file or text payload.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant. Indicates a bug, not a usage error.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lgc
