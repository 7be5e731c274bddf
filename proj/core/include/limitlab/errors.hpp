#pragma once

#include <stdexcept>
#include <string>

namespace limitlab {

/// Malformed text input: bad bit-strings, bad rationals, unparsable records.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of a construction does not hold for otherwise well-formed
/// input (invalid presentation, counting bound violated, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters are inconsistent with each other (e.g. epsilon' <= epsilon).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace limitlab
