#pragma once

#include <stdexcept>
#include <string>

namespace disclosure {

// Input that violates a documented precondition: malformed documents,
// probabilities that do not sum to one, values outside a segment.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or problem size exceeded its configured bound.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace disclosure
