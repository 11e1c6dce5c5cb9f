#pragma once

#include <stdexcept>
#include <string>

namespace cubic {

// Caller broke an operation's contract (mismatched variable sets, wrong
// degree, malformed text).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameter n or k outside the range where an operation is defined.
class UnsupportedRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NotTopDegree : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computed value contradicts a claim the engine is meant to confirm.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonIntegralResult : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubic
