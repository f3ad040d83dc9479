#ifndef LLL_ERRORS_HPP
#define LLL_ERRORS_HPP

#include <stdexcept>

namespace lll {

/// A documented precondition was broken by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested size exceeds a configured cap or work budget.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace lll

#endif  // LLL_ERRORS_HPP
