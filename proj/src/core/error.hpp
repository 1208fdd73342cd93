#pragma once

#include <stdexcept>
#include <string>

namespace slhash {

enum class ErrorCode {
  kDomain = 1,      // argument outside the operation's mathematical domain
  kValidation = 2,  // malformed input object (duplicate keys, bad key set)
  kBudget = 3,      // exhaustive enumeration would exceed the work budget
  kOverflow = 4,    // result does not fit the supported integer range
  kIo = 5,
  kInvalidArgument = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::kDomain, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::kValidation, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error(ErrorCode::kBudget, what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what)
      : Error(ErrorCode::kOverflow, what) {}
};

}  // namespace slhash
