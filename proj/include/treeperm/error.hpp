#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeperm {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  NotStackSortable,
  NotComplete,
  OutOfRange,
  SizeLimit,
  Internal,
};

// Every failure raised by the library. The kind maps one-to-one onto the
// status codes of the C API.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::Parse, what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace treeperm
