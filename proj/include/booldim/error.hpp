#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace booldim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates an operation's precondition (malformed file, bad
/// vertex index, mismatched orders, non-tree passed as a tree, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text-format parse failure; `offset()` is the byte offset of the fault.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The instance is larger than the exact search supports.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A search ran past its wall-clock budget. Never converted into a partial
/// answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace booldim
