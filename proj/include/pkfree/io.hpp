#pragma once

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "alpha_sequence.hpp"
#include "errors.hpp"
#include "tournament.hpp"

namespace pkfree {

// Text format: first non-comment line holds n, then n rows of n '0'/'1'
// characters; row i column j is '1' iff i->j. Lines starting with '#' are
// ignored. Errors carry 1-based line and column.
inline Tournament parse_tournament(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw MalformedInput("missing vertex count", lineno + 1, 1);
  std::size_t n = 0;
  {
    std::size_t pos = 0;
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') {
      n = n * 10 + static_cast<std::size_t>(line[pos] - '0');
      if (n > kMaxVertices) throw MalformedInput("vertex count exceeds the cap", lineno, start + 1);
      ++pos;
    }
    if (pos == start) throw MalformedInput("expected a vertex count", lineno, pos + 1);
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos != line.size()) throw MalformedInput("unexpected character after vertex count", lineno, pos + 1);
  }
  std::vector<std::string> rows;
  std::vector<std::size_t> row_line;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line()) throw MalformedInput("expected " + std::to_string(n) + " rows", lineno + 1, 1);
    if (line.size() != n)
      throw MalformedInput("row has " + std::to_string(line.size()) + " characters, expected " + std::to_string(n),
                           lineno, std::min(line.size(), n) + 1);
    for (std::size_t j = 0; j < n; ++j)
      if (line[j] != '0' && line[j] != '1') throw MalformedInput("expected '0' or '1'", lineno, j + 1);
    if (line[i] != '0') throw MalformedInput("diagonal entry must be '0'", lineno, i + 1);
    rows.push_back(line);
    row_line.push_back(lineno);
  }
  while (next_line()) {
    if (line.find_first_not_of(" \t") != std::string::npos) throw MalformedInput("trailing content", lineno, 1);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((rows[i][j] == '1') == (rows[j][i] == '1'))
        throw MalformedInput("entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                                 std::to_string(j) + "," + std::to_string(i) + ") are not antisymmetric",
                             row_line[i], j + 1);
  return Tournament::from_orientation(n, [&](Vertex i, Vertex j) { return rows[i][j] == '1'; });
}

inline Tournament parse_tournament(const std::string& text) {
  std::istringstream in(text);
  return parse_tournament(in);
}

inline std::string serialize_tournament(const Tournament& t) {
  std::string out = std::to_string(t.size()) + "\n";
  out.reserve(out.size() + t.size() * (t.size() + 1));
  for (Vertex i = 0; i < t.size(); ++i) {
    for (Vertex j = 0; j < t.size(); ++j) out.push_back(t.has_edge(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

// Comma or whitespace separated vertex indices.
inline std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    for (char ch : token)
      if (ch < '0' || ch > '9') throw MalformedInput("bad vertex index '" + token + "'");
    unsigned long long value = std::stoull(token);
    if (value >= kMaxVertices) throw MalformedInput("vertex index '" + token + "' out of range");
    out.push_back(static_cast<Vertex>(value));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t') flush(); else token.push_back(ch);
  }
  flush();
  return out;
}

// One alpha-sequence element per non-comment line.
inline std::vector<VertexSet> parse_sets(std::istream& in) {
  std::vector<VertexSet> sets;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      sets.emplace_back(parse_vertex_list(line));
    } catch (const std::invalid_argument& e) {
      throw MalformedInput(e.what(), lineno, 1);
    }
  }
  return sets;
}

}  // namespace pkfree
