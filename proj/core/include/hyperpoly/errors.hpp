#pragma once

#include <stdexcept>
#include <string>

namespace hyperpoly {

// Malformed input: bad syntax, unknown labels, invalid structures.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A resource guard refused the request.
class GuardError : public InputError {
 public:
  using InputError::InputError;
};

// A computed object failed one of its own consistency checks.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t max_carrier = 8;
  std::size_t max_tree_nodes = 7;
  std::size_t max_pba_n = 4;
};

}  // namespace hyperpoly
