#pragma once

#include <stdexcept>
#include <string>

namespace htcover {

/// Violated precondition: bad parameter, foreign vertex, mismatched lengths.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (vertex count, search nodes, generators) was hit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace htcover
