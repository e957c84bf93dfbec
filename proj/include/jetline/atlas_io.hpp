#pragma once

// Reading and writing atlas description files. The grammar is JSON with
// every number written as an exact pair [numerator, denominator]; see
// docs/atlas-format.md.

#include <string>

#include "jetline/errors.hpp"
#include "jetline/proj_surface.hpp"
#include "json.hpp"

namespace jetline {

/// Error kind AtlasParseError with a 1-based source position.
class AtlasParseError : public Error {
 public:
  AtlasParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Parses atlas text. `name` is used when the document has no "name" field.
Atlas parse_atlas(const std::string& text, const std::string& name = {});
/// Reads a file; an unreadable file is reported as AtlasParseError at 0:0.
Atlas load_atlas(const std::string& path);
/// Canonical text: emit(parse(emit(a))) == emit(a).
std::string emit_atlas(const Atlas& atlas);

/// Census, validation results and lift obstructions, as text or JSON.
std::string describe_atlas(const Atlas& atlas);
nlohmann::ordered_json describe_atlas_json(const Atlas& atlas);

}  // namespace jetline
