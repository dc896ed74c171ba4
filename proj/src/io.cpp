#include "binconf/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

namespace binconf {

ParseError::ParseError(int line_no, const std::string& what)
    : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
      line(line_no) {}

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

void check_id(const std::string& id, int line_no) {
  if (id.empty()) throw ParseError(line_no, "empty identifier");
  if (id.find(':') != std::string::npos)
    throw ParseError(line_no, "identifier '" + id + "' contains ':'");
}

}  // namespace

IncidenceStructure parse_structure(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool header_seen = false;
  bool lines_started = false;
  std::vector<std::string> points;
  std::unordered_set<std::string> point_set, line_set;
  std::vector<LineSpec> lines;

  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = tokenize(strip_comment(raw));
    if (tokens.empty()) continue;
    if (!header_seen) {
      if (tokens.size() != 2 || tokens[0] != "config" || tokens[1] != "v1")
        throw ParseError(line_no, "expected header 'config v1'");
      header_seen = true;
      continue;
    }
    if (tokens[0] == "points:") {
      if (lines_started) throw ParseError(line_no, "points declared after line declarations");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        check_id(tokens[i], line_no);
        if (!point_set.insert(tokens[i]).second)
          throw ParseError(line_no, "duplicate point '" + tokens[i] + "'");
        points.push_back(tokens[i]);
      }
      continue;
    }
    if (tokens[0] == "line") {
      if (tokens.size() < 2 || tokens[1].size() < 2 || tokens[1].back() != ':')
        throw ParseError(line_no, "expected 'line <id>: <point-id> ...'");
      lines_started = true;
      LineSpec spec;
      spec.id = tokens[1].substr(0, tokens[1].size() - 1);
      check_id(spec.id, line_no);
      if (point_set.count(spec.id))
        throw ParseError(line_no, "identifier '" + spec.id + "' already names a point");
      if (!line_set.insert(spec.id).second)
        throw ParseError(line_no, "duplicate line '" + spec.id + "'");
      std::unordered_set<std::string> seen;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        check_id(tokens[i], line_no);
        if (!point_set.count(tokens[i]))
          throw ParseError(line_no, "unknown point '" + tokens[i] + "'");
        if (!seen.insert(tokens[i]).second)
          throw ParseError(line_no, "line '" + spec.id + "' repeats point '" + tokens[i] + "'");
        spec.points.push_back(tokens[i]);
      }
      lines.push_back(std::move(spec));
      continue;
    }
    throw ParseError(line_no, "unrecognized directive '" + tokens[0] + "'");
  }
  if (!header_seen) throw ParseError(0, "missing header 'config v1'");
  return IncidenceStructure::build(std::move(points), std::move(lines));
}

namespace {

void check_serializable(const std::string& id) {
  if (id.empty() || id.find(':') != std::string::npos ||
      id.find_first_of(" \t\r\n") != std::string::npos || id.find('#') != std::string::npos)
    throw Error("identifier '" + id + "' cannot appear in a structure file");
}

}  // namespace

std::string serialize_structure(const IncidenceStructure& k) {
  std::ostringstream out;
  out << "config v1\n";
  out << "points:";
  for (const auto& p : k.point_ids()) {
    check_serializable(p);
    out << ' ' << p;
  }
  out << '\n';
  for (const auto& l : k.line_ids()) {
    check_serializable(l);
    out << "line " << l << ":";
    for (const auto& p : k.points_on(l)) out << ' ' << p;
    out << '\n';
  }
  return out.str();
}

GluingMap parse_gluing(const std::string& text, const IncidenceStructure& k1,
                       const IncidenceStructure& k2) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::map<std::string, std::string> entries;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = tokenize(strip_comment(raw));
    if (tokens.empty()) continue;
    if (tokens.size() != 3 || tokens[1] != "->")
      throw ParseError(line_no, "expected '<line-id> -> <point-id>'");
    if (!entries.emplace(tokens[0], tokens[2]).second)
      throw ParseError(line_no, "duplicate entry for line '" + tokens[0] + "'");
  }
  return validate_gluing(k1, k2, entries);
}

std::string serialize_gluing(const GluingMap& map) {
  std::ostringstream out;
  for (const auto& [line, point] : map.entries) out << line << " -> " << point << '\n';
  return out.str();
}

}  // namespace binconf
