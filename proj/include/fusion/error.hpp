#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

// Malformed shapes: tensor sizes, index ranges, label collisions.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that parses but violates the based-ring or module axioms.
class AxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace fusion
