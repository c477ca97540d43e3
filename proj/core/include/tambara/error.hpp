#pragma once

#include <stdexcept>
#include <string>

namespace tambara {

// Malformed input: bad tables, mismatched shapes, unparsable text.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource guard refused the computation.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact integer arithmetic left the 64-bit range.
class OverflowError : public ResourceCapError {
 public:
  using ResourceCapError::ResourceCapError;
};

// Requested construction is outside what the engine supports.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tambara
