#pragma once

#include <stdexcept>
#include <string>

namespace specgap {

// Argument outside an operation's admissible set (violated precondition).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An iteration, factorization, or quadrature failed to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text: spec strings, config files, CLI values.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace specgap
