#pragma once

#include <stdexcept>
#include <string>

namespace mmfvs {

/// Malformed input file or document. Carries an optional 1-based line/column.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  int line_;
  int column_;
};

/// An operation was called with arguments violating its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured cap (oracle enumeration size, node budget) was exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mmfvs
