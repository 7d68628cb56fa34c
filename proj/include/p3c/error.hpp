#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace p3c {

enum class ErrorCode {
  argument,
  parse,
  invalid_set,
  not_cograph,
  dispatch,
  size_refusal,
  verification,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Carries four vertices inducing a P4 (in path order).
class NotCographError : public Error {
 public:
  explicit NotCographError(std::vector<int> witness);
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace p3c
