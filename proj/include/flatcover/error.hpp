#pragma once

#include <stdexcept>
#include <string>

namespace flatcover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed arguments outside an operation's domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A search or enumeration would exceed its work budget.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, unsigned long long budget)
      : Error(what), budget_(budget) {}
  unsigned long long budget() const { return budget_; }

 private:
  unsigned long long budget_;
};

// Malformed flatset / record / cache file.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Algebraic object could not be built (e.g. non-primitive modulus).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace flatcover
