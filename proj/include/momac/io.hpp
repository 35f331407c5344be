#pragma once

// Text formats.
//
// Poset files (.sp) are line based:
//
//   # comment, runs to end of line
//   poset NAME            optional, at most once, before any face
//   vertices M            required, exactly once, before any face
//   face ID : F1 F2 ...   one face per line, facets by id, vertices
//                         named by their labels 1..M, faces in
//                         non-decreasing rank order
//
// Matrix files are whitespace-separated integers, one row per line,
// with the same comment syntax.
//
// Parse errors report 1-based line and column.

#include "momac/core.hpp"
#include "momac/exact.hpp"
#include "momac/poset.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace momac {

namespace detail {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

// Splits one line into whitespace-separated tokens, dropping any
// comment tail.
inline std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return tokens;
}

[[noreturn]] inline void syntax_fail(int line, int column, const std::string& message) {
  throw error(errc::syntax_error, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

inline bool parse_int(const std::string& text, long& out) {
  if (text.empty()) return false;
  std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (i == text.size()) return false;
  for (std::size_t k = i; k < text.size(); ++k)
    if (text[k] < '0' || text[k] > '9') return false;
  try {
    out = std::stol(text);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace detail

inline RawPoset parse_poset_text(std::string_view text) {
  RawPoset raw;
  bool saw_name = false, saw_vertices = false;

  std::istringstream stream{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    std::vector<detail::Token> tokens = detail::tokenize_line(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0].text;

    if (head == "poset") {
      if (saw_name) detail::syntax_fail(lineno, tokens[0].column, "repeated 'poset' line");
      if (saw_vertices || !raw.faces.empty())
        detail::syntax_fail(lineno, tokens[0].column, "'poset' must come before 'vertices'");
      if (tokens.size() != 2) detail::syntax_fail(lineno, tokens[0].column, "'poset' takes exactly one name");
      raw.name = tokens[1].text;
      saw_name = true;
    } else if (head == "vertices") {
      if (saw_vertices) detail::syntax_fail(lineno, tokens[0].column, "repeated 'vertices' line");
      if (tokens.size() != 2) detail::syntax_fail(lineno, tokens[0].column, "'vertices' takes exactly one count");
      long m = 0;
      if (!detail::parse_int(tokens[1].text, m) || m < 0)
        detail::syntax_fail(lineno, tokens[1].column, "vertex count must be a nonnegative integer");
      raw.vertex_count = static_cast<int>(m);
      saw_vertices = true;
    } else if (head == "face") {
      if (!saw_vertices) detail::syntax_fail(lineno, tokens[0].column, "'face' before 'vertices'");
      if (tokens.size() < 4) detail::syntax_fail(lineno, tokens[0].column, "expected 'face ID : FACET...'");
      if (tokens[1].text == ":") detail::syntax_fail(lineno, tokens[1].column, "missing face id");
      if (tokens[2].text != ":") detail::syntax_fail(lineno, tokens[2].column, "expected ':' after the face id");
      RawPoset::Face face;
      face.id = tokens[1].text;
      for (std::size_t k = 3; k < tokens.size(); ++k) {
        if (tokens[k].text == ":") detail::syntax_fail(lineno, tokens[k].column, "unexpected ':'");
        face.facets.push_back(tokens[k].text);
      }
      raw.faces.push_back(std::move(face));
    } else {
      detail::syntax_fail(lineno, tokens[0].column, "unknown directive '" + head + "'");
    }
  }
  if (!saw_vertices) throw error(errc::syntax_error, "missing 'vertices' line");
  return raw;
}

inline std::string serialize_poset(const SimplicialPoset& p) {
  std::string out = "poset " + p.name() + "\nvertices " + std::to_string(p.vertex_count()) + "\n";
  for (int s = 0; s < p.size(); ++s) {
    const auto& e = p.element(s);
    if (e.rank < 2) continue;
    out += "face " + e.id + " :";
    for (int f : e.facets) out += " " + p.element(f).id;
    out += "\n";
  }
  return out;
}

inline IntMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::vector<Int>> rows;
  std::istringstream stream{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    std::vector<detail::Token> tokens = detail::tokenize_line(line);
    if (tokens.empty()) continue;
    std::vector<Int> row;
    for (const detail::Token& t : tokens) {
      long value = 0;
      if (!detail::parse_int(t.text, value)) detail::syntax_fail(lineno, t.column, "expected an integer, got '" + t.text + "'");
      row.push_back(value);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      detail::syntax_fail(lineno, tokens[0].column,
                          "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw error(errc::syntax_error, "matrix file has no rows");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  return m;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline RawPoset parse_poset_file(const std::string& path) { return parse_poset_text(read_file(path)); }

inline SimplicialPoset load_poset(const std::string& path) { return validate(parse_poset_file(path)); }

inline IntMatrix parse_matrix_file(const std::string& path) { return parse_matrix_text(read_file(path)); }

}  // namespace momac
