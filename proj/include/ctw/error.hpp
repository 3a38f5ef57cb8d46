#ifndef CTW_ERROR_HPP
#define CTW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ctw {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An instance or permutation breaks a structural invariant.
class InstanceError : public Error {
public:
  using Error::Error;
};

/// Input text could not be read. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
  ParseError(const std::string &what, int line = 0, int column = 0)
      : Error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) +
                             ": " + what
                       : what),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// An operation was called on an instance outside of its supported class.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A size guard refused to run (factorial enumeration and friends).
class LimitError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

} // namespace ctw

#endif
