#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace perihall {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes, fields or quivers of the operands do not fit together.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// An enumeration would visit more elements than the budget allows.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t dimension, std::uint64_t cap)
      : Error(what + ": enumeration of dimension " + std::to_string(dimension) +
              " exceeds cap " + std::to_string(cap)),
        dimension_(dimension),
        cap_(cap) {}
  std::uint64_t dimension() const { return dimension_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t dimension_;
  std::uint64_t cap_;
};

// A self-check failed; this always indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, int column, const std::string& msg)
      : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Enumeration budget shared by every search-backed operation.
struct Budget {
  std::uint64_t cap = 1'000'000;

  // Throws unless q^dim <= cap.
  void require(std::uint32_t q, std::uint64_t dim, const char* what) const;
  static std::uint64_t power_or_saturate(std::uint32_t q, std::uint64_t dim);
};

}  // namespace perihall
