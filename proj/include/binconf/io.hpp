#pragma once

#include <string>

#include "binconf/glue.hpp"
#include "binconf/incidence.hpp"

namespace binconf {

class ParseError : public Error {
public:
  ParseError(int line, const std::string& what);
  int line;  // 1-based source line, 0 when not applicable
};

/// Structure file grammar (UTF-8):
///   # comment to end of line
///   config v1
///   points: <id> <id> ...        (one or more lines)
///   line <id>: <point-id> ...    (zero or more lines)
/// Identifiers are nonempty tokens without whitespace or ':'.
IncidenceStructure parse_structure(const std::string& text);
std::string serialize_structure(const IncidenceStructure& k);

/// Gluing map file: one "<line-id> -> <point-id>" per line, sorted by line id.
GluingMap parse_gluing(const std::string& text, const IncidenceStructure& k1,
                       const IncidenceStructure& k2);
std::string serialize_gluing(const GluingMap& map);

}  // namespace binconf
