#ifndef FGL_ERRORS_HPP
#define FGL_ERRORS_HPP

#include <stdexcept>

namespace fgl {

// Input failed a precondition. The CLI maps this (and std::invalid_argument)
// to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested enumeration exceeds the configured limit. Exit code 3.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fgl

#endif
