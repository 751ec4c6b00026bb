#pragma once

#include <stdexcept>
#include <string>

namespace annring {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A table or map failed one of the axioms of the structure it claims to be.
// `axiom` names the failing law, `witness` holds the offending arguments.
class AxiomError : public Error {
 public:
  AxiomError(std::string axiom, std::string witness)
      : Error(axiom + " fails at " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

class GuardError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& file, int line, int column, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class OverflowError : public Error {
 public:
  OverflowError() : Error("integer overflow in exact arithmetic") {}
};

}  // namespace annring
