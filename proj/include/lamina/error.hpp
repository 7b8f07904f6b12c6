#pragma once

#include <stdexcept>
#include <string>

namespace lamina {

// Raised for invalid inputs and violated preconditions: callers can recover.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an invariant the library itself guarantees fails to hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

[[noreturn]] inline void internal_error(const std::string& msg) { throw InternalError(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) internal_error(msg);
}

}  // namespace lamina
