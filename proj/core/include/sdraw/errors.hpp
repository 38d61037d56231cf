#pragma once

#include <stdexcept>
#include <string>

namespace sdraw {

/// Malformed or out-of-contract input. The CLI maps this to exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that cannot come from a genuine simple drawing (for example a
/// K_{2,2} whose two independent pairs both cross). Exit code 2 in the CLI.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Degenerate geometry: coincident points, a vertex on an edge, overlapping
/// segments, three edges through one crossing point.
class GeneralPositionError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace sdraw
