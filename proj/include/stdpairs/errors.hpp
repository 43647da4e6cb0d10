#pragma once

#include <stdexcept>
#include <string>

namespace stdpairs {

/// Dimension or argument contract violated by the caller.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument is well-formed but outside the mathematical domain of the
/// operation (not a face, not in the monoid, non-principal ideal, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotPointedError : public DomainError {
 public:
  NotPointedError() : DomainError("generating matrix does not span a pointed cone") {}
};

/// Raised when a pair is constructed with a properness check and fails it.
class NotProperError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounded iteration hit its cap before reaching a fixpoint.
class LoopCapExceeded : public std::runtime_error {
 public:
  explicit LoopCapExceeded(std::size_t cap)
      : std::runtime_error("cover refinement did not reach a fixpoint within loop cap " +
                           std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stdpairs
