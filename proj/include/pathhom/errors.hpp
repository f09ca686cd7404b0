#pragma once

#include <stdexcept>

namespace pathhom {

// Malformed or semantically invalid user input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured enumeration or size cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant did not hold. Either a bug, or a mathematical
// situation the construction does not cover (see ChainMapEscape).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An even-degree element sent an Omega basis chain outside the target
// Omega space, so it does not restrict to a chain map there.
class ChainMapEscape : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

}  // namespace pathhom
