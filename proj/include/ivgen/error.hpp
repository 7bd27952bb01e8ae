#pragma once

#include <stdexcept>
#include <string>

namespace ivgen {

enum class ErrorCode {
  invalid_argument = 1,
  parse,
  degree_mismatch,
  not_member,
  cap_exceeded,
  not_found,
  io,
  internal,
};

/// Base exception for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DegreeMismatch : public Error {
 public:
  explicit DegreeMismatch(const std::string& what) : Error(ErrorCode::degree_mismatch, what) {}
};

class NotMember : public Error {
 public:
  explicit NotMember(const std::string& what) : Error(ErrorCode::not_member, what) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(ErrorCode::cap_exceeded, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::invalid_argument, what) {}
};

}  // namespace ivgen
