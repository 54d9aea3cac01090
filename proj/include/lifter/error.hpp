// lifter :: error types shared by every stage

#ifndef LIFTER_ERROR_HPP_
#define LIFTER_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lifter {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

std::string to_string(const SourcePos& pos);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Always carries the position where reading stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourcePos pos);

  const SourcePos& pos() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  SourcePos pos_;
  std::string detail_;
};

// Well-formed text that violates a structural invariant (dangling rule,
// arity mismatch, duplicate id, malformed term).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Assertion that refers to an unbound variable or uses one at the wrong sort.
class SortError : public Error {
 public:
  SortError(const std::string& message, SourcePos pos);

  const SourcePos& pos() const { return pos_; }

 private:
  SourcePos pos_;
};

}  // namespace lifter

#endif  // LIFTER_ERROR_HPP_
