#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey {

/// Raised by the forest grammar and the file readers; carries the byte
/// offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A classical Ramsey value (or witness coloring) that is not in the table.
/// Never guessed; the message names the tuple.
class UnknownValueError : public std::runtime_error {
 public:
  explicit UnknownValueError(const std::string& what) : std::runtime_error(what) {}
};

/// An instance is beyond a configured capacity (order cap, search cap).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A search ran out of node or time budget before reaching a verdict.
/// This is a third outcome, distinct from true/false, and is never folded
/// into a mathematical claim.
class IndeterminateError : public std::runtime_error {
 public:
  explicit IndeterminateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ramsey
