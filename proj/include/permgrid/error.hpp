#pragma once

#include <stdexcept>
#include <string>

namespace permgrid {

// Argument outside the mathematical domain of an operation (bad grid point,
// i == j for chi, odd size for fixed-point-free objects).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument in range but violating a structural precondition (square not
// filled, permutation not an involution, element outside its subset).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that does not parse as a permutation.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Something that the theory says cannot happen did happen.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Request exceeds a configured enumeration cap.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace permgrid
