#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mappeel {

// Caller passed something malformed (mismatched orders, bad option values).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quadrangulation with p = 1 and n = 2 has no last-car decomposition.
class BaseCaseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An exact computation produced something impossible (remainder, negative count).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mappeel
