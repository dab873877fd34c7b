#pragma once

#include <stdexcept>
#include <string>

namespace qfrob {

// Base class for every error raised by the library. The CLI maps subclasses
// to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateMetric : public Error {
 public:
  using Error::Error;
};

class DegeneratePencil : public Error {
 public:
  using Error::Error;
};

class DegenerateForm : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class AsymmetricMetric : public Error {
 public:
  using Error::Error;
};

class NotAPoissonBracket : public Error {
 public:
  NotAPoissonBracket(int which, const std::string& what)
      : Error(what), which_(which) {}
  // 1 for the first bracket of the pair, 2 for the second.
  int which() const noexcept { return which_; }

 private:
  int which_;
};

class NotQuadratic : public Error {
 public:
  using Error::Error;
};

class NotCubic : public Error {
 public:
  using Error::Error;
};

class NotCommutative : public Error {
 public:
  NotCommutative(std::size_t i, std::size_t j, const std::string& what)
      : Error(what), i_(i), j_(j) {}
  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }

 private:
  std::size_t i_, j_;
};

class NotIntegrable : public Error {
 public:
  using Error::Error;
};

class NotRightCommutative : public Error {
 public:
  using Error::Error;
};

// Input-side errors.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

}  // namespace qfrob
