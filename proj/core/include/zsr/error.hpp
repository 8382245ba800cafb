#pragma once

#include <stdexcept>
#include <string>

namespace zsr {

/// Input violates an operation's precondition (bad factor, non-coprime
/// arguments, non-zero-sum input, ...). The CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An oracle enumeration would exceed its candidate limit. Oracles never
/// return partial answers.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A theorem-backed invariant failed at runtime (inexact division in an
/// integral divisor sum, non-unique argmin, ...). Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace zsr
