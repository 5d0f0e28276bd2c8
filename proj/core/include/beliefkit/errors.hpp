#pragma once

#include <stdexcept>

namespace beliefkit {

/// The operands live on different frames of discernment.
class FrameMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dempster normalization is impossible: the conflict coefficient is 1.
class TotalConflictError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A layered redistribution found mass with nowhere to flow.
class RedistributionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A belief-vector inversion produced an inconsistent mass function,
/// or the transformation matrix is singular for this frame size.
class InversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; the message carries line/column coordinates.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace beliefkit
