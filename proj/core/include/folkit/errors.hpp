#pragma once

#include <stdexcept>
#include <string>

namespace folkit {

// Error classes double as process exit codes for the command line tool:
// 1 usage or syntax, 2 violated precondition, 3 failed certificate.
enum class ErrorClass { Usage = 1, Precondition = 2, Certificate = 3 };

class Error : public std::runtime_error {
public:
  Error(ErrorClass cls, std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), cls_(cls), kind_(std::move(kind)) {}

  ErrorClass error_class() const noexcept { return cls_; }
  const std::string& kind() const noexcept { return kind_; }

private:
  ErrorClass cls_;
  std::string kind_;
};

// An input broke a documented contract (mixed fields, zero divisor, bad
// index and friends). The kind string names the specific violation.
class PreconditionError : public Error {
public:
  PreconditionError(std::string kind, const std::string& what)
      : Error(ErrorClass::Precondition, std::move(kind), what) {}
};

// An identity that is guaranteed by construction failed its exact replay.
// This is never a routine input mistake; it means a hypothesis was violated
// or the library has a bug, so it gets its own class and exit code.
class CertificateError : public Error {
public:
  explicit CertificateError(const std::string& what)
      : Error(ErrorClass::Certificate, "CertificateFailure", what) {}
};

class ScriptSyntaxError : public Error {
public:
  ScriptSyntaxError(int line, int col, const std::string& what)
      : Error(ErrorClass::Usage, "SyntaxError",
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what),
        line_(line), col_(col) {}

  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

private:
  int line_;
  int col_;
};

}  // namespace folkit
