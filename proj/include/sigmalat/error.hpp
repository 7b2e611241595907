#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigmalat {

enum class ErrorKind {
  InvalidSpec,
  ParseError,
  OrderCapExceeded,
  LatticeTooLarge,
  LimitTooLarge,
  SearchCapExceeded,
  InvalidTable,
  NotAPermutation,
  NotNormal,
  NotAPGroup,
  NotCoprime,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sigmalat
