#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfaff {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands disagree on variable count, component count or matrix shape.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& detail, const std::string& context = {})
      : Error("syntax error at column " + std::to_string(position + 1) +
              (context.empty() ? "" : " of " + context) + ": " + detail),
        position_(position),
        detail_(detail) {}

  // Zero-based offset into the parsed text.
  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

// A series matrix whose determinant has zero constant term, so it has no
// inverse in the truncated ring.
class NonUnitMatrix : public Error {
 public:
  explicit NonUnitMatrix(const std::string& what, long level = -1)
      : Error(what), level_(level) {}

  // Layer index j for the layered solver; -1 when not applicable.
  long level() const noexcept { return level_; }

 private:
  long level_;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class InvalidSystem : public Error {
 public:
  using Error::Error;
};

}  // namespace pfaff
