#include "stalg/error.hpp"

namespace stalg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::IndexAlreadyFixed: return "IndexAlreadyFixed";
    case Errc::UniverseTooSmall: return "UniverseTooSmall";
    case Errc::UniverseTooLarge: return "UniverseTooLarge";
    case Errc::UniverseMismatch: return "UniverseMismatch";
    case Errc::EmptyVector: return "EmptyVector";
    case Errc::NotBinary: return "NotBinary";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::CompileCapExceeded: return "CompileCapExceeded";
    case Errc::NotAClause: return "NotAClause";
    case Errc::IndicatorCollision: return "IndicatorCollision";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(Errc::ParseError,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

}  // namespace stalg
