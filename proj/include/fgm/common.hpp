#pragma once

#include <stdexcept>
#include <string>

namespace fgm {

inline constexpr const char* kVersion = "0.1.0";

// Bad arguments, inconsistent inputs, broken invariants detected at the API
// surface. CLI maps this family to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input files; carries the offending location in the message.
// CLI maps this (and other I/O failures) to exit code 3.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A factorial-cost operation was requested above the configured oracle
// limit. CLI maps this to exit code 4.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fgm
