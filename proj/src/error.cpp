#include "lifter/error.hpp"

namespace lifter {

std::string to_string(const SourcePos& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

ParseError::ParseError(const std::string& message, SourcePos pos)
    : Error(to_string(pos) + ": " + message), pos_(pos), detail_(message) {}

SortError::SortError(const std::string& message, SourcePos pos)
    : Error(to_string(pos) + ": " + message), pos_(pos) {}

}  // namespace lifter
