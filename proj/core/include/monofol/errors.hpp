#pragma once

#include <stdexcept>
#include <string>

namespace monofol {

// Malformed input: unreadable JSON, bad rational syntax, wrong row lengths.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Blow-up center rejected: fewer than two indices, out of bounds, or a
// chart index outside the center.
class InvalidCenter : public std::runtime_error {
public:
  explicit InvalidCenter(const std::string& what) : std::runtime_error(what) {}
};

// A vector or point whose length does not match the ambient dimension.
class LengthMismatch : public std::runtime_error {
public:
  explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monofol
