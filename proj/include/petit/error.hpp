#pragma once

#include <stdexcept>
#include <string>

namespace petit {

/// Invalid input or violated precondition. CLI maps this to exit code 2.
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation not available on this backend or beyond the desk-scale bounds.
class UnsupportedError : public InputError {
  using InputError::InputError;
};

/// A cross-checked identity failed. CLI maps this to exit code 3.
class InternalError : public std::logic_error {
  using std::logic_error::logic_error;
};

[[noreturn]] inline void input_error(const std::string& msg) {
  throw InputError(msg);
}

[[noreturn]] inline void unsupported(const std::string& msg) {
  throw UnsupportedError(msg);
}

[[noreturn]] inline void internal_error(const std::string& msg) {
  throw InternalError("internal consistency failure: " + msg);
}

}  // namespace petit
