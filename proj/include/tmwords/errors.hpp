#pragma once

#include <stdexcept>
#include <string>

namespace tmwords {

// Letter outside an alphabet or morphism domain, or a word of the wrong kind.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Out-of-range numeric parameter (k < 2, window too small, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction precondition failed (e.g. a seed the morphism is not prolongable on).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds the size guard of an operation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A stabilization oracle hit its hard cap without two agreeing rounds.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Report serialization requested in a format the payload cannot take.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tmwords
