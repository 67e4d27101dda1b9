#ifndef BOOLSEMI_ERRORS_HPP
#define BOOLSEMI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boolsemi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested structure or search space exceeds a hard size cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// An element, subset or map does not belong to the algebra it is used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A table description failed validation (closure, names, identity laws).
class LoadError : public Error {
 public:
  using Error::Error;
};

/// The algebra lacks the structure an operation needs (no complement,
/// non-idempotent addition, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A formula mentions an atom that has no binding.
class NameError : public Error {
 public:
  using Error::Error;
};

/// Building a derived structure uncovered a law violation.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Lexical or syntax error in formula text. `position()` is a byte offset.
class ParseError : public Error {
 public:
  enum class Kind { lexical, syntax };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : Error(message + " at byte " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

}  // namespace boolsemi

#endif  // BOOLSEMI_ERRORS_HPP
