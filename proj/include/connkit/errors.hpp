#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace connkit {

// Base for everything the kernel throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexing/parsing problems in the expression language.  `offset` is the
// 0-based character position inside the offending expression string.
struct ParseError : Error {
  std::size_t offset;
  ParseError(std::string msg, std::size_t off) : Error(std::move(msg)), offset(off) {}
};

// Expression references a variable not bound by the chart.
struct BindError : Error {
  std::string variable;
  std::size_t offset;
  BindError(std::string msg, std::string var, std::size_t off)
      : Error(std::move(msg)), variable(std::move(var)), offset(off) {}
};

// Numeric domain violation while evaluating (division by zero, log of a
// non-positive value, sqrt of a negative, non-integer power of a
// non-positive base).
struct EvalError : Error {
  std::size_t offset;
  EvalError(std::string msg, std::size_t off) : Error(std::move(msg)), offset(off) {}
};

// Structural misuse of the algebra: grade overflow/mismatch, bad basis
// indices, extensor arity violations, tower depth exhaustion.
struct DomainError : Error {
  using Error::Error;
};

// A frame's component matrix was (numerically) singular at a point.
struct SingularFrameError : Error {
  std::string point;
  SingularFrameError(std::string msg, std::string pt)
      : Error(std::move(msg)), point(std::move(pt)) {}
};

// Config file problems; position is 1-based line/column in the file.
struct ConfigError : Error {
  std::string file;
  int line;
  int column;
  ConfigError(std::string msg, std::string f, int ln, int col)
      : Error(std::move(msg)), file(std::move(f)), line(ln), column(col) {}
};

}  // namespace connkit
