#ifndef XMG_COMMON_HPP_
#define XMG_COMMON_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace xmg {

using Idx = std::uint32_t;
inline constexpr Idx kNoIdx = std::numeric_limits<Idx>::max();

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural law failed (bad table, broken naturality, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A search or construction exceeded its configured budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Caller passed incompatible or unknown objects.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Bundle text could not be parsed.
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace xmg

#endif  // XMG_COMMON_HPP_
