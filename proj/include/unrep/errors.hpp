#pragma once

#include <stdexcept>
#include <string>

namespace unrep {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A builder was given parameters outside its family's domain.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A horizontal cut never attains the neutral element, so no inverse power exists.
class NoInverseError : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

/// Evaluation produced a value outside [0,1] or NaN.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double point)
      : Error(what), point_(point) {}
  double point() const noexcept { return point_; }

 private:
  double point_;
};

/// Operator-spec or CSV input could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line) : ParseError(what, line, "") {}
  int line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }
  /// Same error, reported as "<source>:<line>: <detail>".
  ParseError in(const std::string& source) const {
    return ParseError(detail_, line_, source);
  }

 private:
  ParseError(const std::string& what, int line, const std::string& source)
      : Error(format(what, line, source)), detail_(what), line_(line) {}
  static std::string format(const std::string& what, int line,
                            const std::string& source) {
    if (source.empty()) {
      return line > 0 ? "line " + std::to_string(line) + ": " + what : what;
    }
    return source + (line > 0 ? ":" + std::to_string(line) : "") + ": " + what;
  }

  std::string detail_;
  int line_;
};

}  // namespace unrep
