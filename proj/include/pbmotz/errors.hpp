#ifndef PBMOTZ_ERRORS_HPP_
#define PBMOTZ_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbmotz {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A point lies outside {1..n, 1'..n'}, or a parameter is out of range.
struct OutOfRangeError : Error {
  using Error::Error;
};

// A point appears in more than one listed block.
struct DuplicatePointError : Error {
  using Error::Error;
};

// A block of size > 2 was supplied.
struct OversizedBlockError : Error {
  using Error::Error;
};

// Operands have different degrees.
struct DegreeMismatchError : Error {
  using Error::Error;
};

// Rank r with r != n (mod 2) for a family whose D-classes need that parity.
struct ParityError : Error {
  using Error::Error;
};

// An enumeration would exceed the configured cardinality guard.
struct TooLargeError : Error {
  using Error::Error;
};

// A closure grew past the requested element bound; carries the partial size.
struct BoundExceededError : Error {
  BoundExceededError(const std::string& what, std::size_t partial)
      : Error(what), partial_size(partial) {}
  std::size_t partial_size;
};

// The argument is not a weakly decreasing positive integer partition.
struct NotAPartitionError : Error {
  using Error::Error;
};

// The requested input lies outside the range where a closed form is known.
struct TheoremRangeError : Error {
  using Error::Error;
};

struct NotANontransversalBlockError : Error {
  using Error::Error;
};

struct FamilyMismatchError : Error {
  using Error::Error;
};

struct NotAProjectionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace pbmotz

#endif  // PBMOTZ_ERRORS_HPP_
