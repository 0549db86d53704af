#pragma once

#include <stdexcept>
#include <string>

namespace icsi {

/// The input digraph or inner set does not describe a usable structure.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on a family that breaks its preconditions
/// (for example an outer-cycle family without a central cycle).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A brute-force oracle refused an instance above its configured size bound.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace icsi
