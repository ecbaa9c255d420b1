#pragma once

#include <stdexcept>
#include <string>

namespace rwkit {

/// Bad argument: invalid position, element outside a carrier, mismatched
/// sequence lengths, or a violated operation precondition.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured bound was exceeded (term size/height guard, redex cap).
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Rejected text input; carries a 1-based source location.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace rwkit
