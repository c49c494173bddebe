#ifndef RAOFV_ERRORS_HPP
#define RAOFV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace raofv {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotSymmetric : public Error {
public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class EvaluationFailure : public Error {
public:
  using Error::Error;
};

class LinearSolveFailure : public Error {
public:
  using Error::Error;
};

class SnapshotMissing : public Error {
public:
  using Error::Error;
};

class DegenerateFit : public Error {
public:
  using Error::Error;
};

class MisalignedHorizon : public Error {
public:
  using Error::Error;
};

/// Syntax error in a config file; carries the source position.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Semantic error in a parsed config; names the offending field.
class ValidationError : public Error {
public:
  ValidationError(const std::string& field, const std::string& what)
      : Error(what), field_(field) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

}  // namespace raofv

#endif
