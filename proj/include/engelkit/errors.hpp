#pragma once

#include <stdexcept>
#include <string>

namespace engelkit {

// Base for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Text that does not match a grammar (cycles, words, exponent expressions).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error("parse: " + msg) {}
};

// Group closure exceeded the configured order cap.
class OrderCapError : public Error {
 public:
  OrderCapError(int cap, const std::string& name)
      : Error("order cap " + std::to_string(cap) + " exceeded while closing group \"" +
              name + "\""),
        cap_(cap) {}
  int cap() const { return cap_; }

 private:
  int cap_;
};

// A structural check on input data failed. `kind` is a stable identifier
// so callers can tell the failure modes apart.
class ValidationError : public Error {
 public:
  ValidationError(std::string kind, const std::string& msg)
      : Error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// A name (group, claim, label) did not resolve.
class UnknownNameError : public Error {
 public:
  explicit UnknownNameError(const std::string& msg) : Error(msg) {}
};

}  // namespace engelkit
