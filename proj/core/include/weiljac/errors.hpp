#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weiljac {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

/// Enumeration or dense-matrix work refused because the module is too large.
class BoundExceeded : public Error {
 public:
  BoundExceeded(std::string what, std::size_t bound, std::size_t size)
      : Error(what + ": size " + std::to_string(size) + " exceeds bound " +
              std::to_string(bound)),
        bound_(bound),
        size_(size) {}

  std::size_t bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return size_; }

 private:
  std::size_t bound_;
  std::size_t size_;
};

/// A theorem's hypothesis does not hold for the given input.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity that must hold exactly was found to fail.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class InsufficientTruncation : public Error {
 public:
  InsufficientTruncation(const std::string& what, double tail_estimate)
      : Error(what + " (tail estimate " + std::to_string(tail_estimate) + ")"),
        tail_(tail_estimate) {}

  double tail_estimate() const noexcept { return tail_; }

 private:
  double tail_;
};

}  // namespace weiljac
