#pragma once

#include <stdexcept>
#include <string>

namespace ordmetric {

// A precondition of a mathematical operation does not hold (label collision,
// domain mismatch, tau <= 1, chain not characteristic, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A certificate that a theorem guarantees came out false. Never expected.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ordmetric
