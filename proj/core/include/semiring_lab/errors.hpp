// Exception types shared by every engine component.

#pragma once

#include <stdexcept>
#include <string>

namespace semiring_lab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad dimensions, out-of-range entries, unparsable files,
// violated operation preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

// An enumeration hit a configured cap. Callers may retry with a larger cap
// (see max_relations() in congruence.hpp).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// A property the engine relies on (one that is provable for valid inputs)
// failed to hold. Always an engine bug or corrupted input, never a normal
// negative result.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace semiring_lab
