#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stalg {

enum class Errc {
  IndexAlreadyFixed,
  UniverseTooSmall,
  UniverseTooLarge,
  UniverseMismatch,
  EmptyVector,
  NotBinary,
  InvalidOrder,
  ParseError,
  UnknownVariable,
  CompileCapExceeded,
  NotAClause,
  IndicatorCollision,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

// Every failure the library reports carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Syntax errors from the DSL and DIMACS readers. Lines and columns are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace stalg
