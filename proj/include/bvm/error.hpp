#pragma once

#include <stdexcept>
#include <string>

namespace bvm {

/// Malformed input: bad JSON, unknown symbol, operands from different algebras.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource bound (atom cap, pool size, work estimate) would be exceeded.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace bvm
