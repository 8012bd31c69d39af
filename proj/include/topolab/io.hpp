#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/space.hpp"

namespace topolab {

// Space text format (UTF-8, line oriented):
//   points: a b c d
//   open: a
//   open: a c d
// `#` starts a comment, blank lines are skipped, tokens match
// [A-Za-z0-9_]+. A line "open:" with no tokens is the empty set; the
// lines for {} and X may be omitted, validation adds both.

namespace detail {

inline bool valid_token(std::string_view t) {
  if (t.empty()) return false;
  for (char c : t)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Canonical set literal, e.g. "{a,c}"; "{}" for the empty set. Tokens
/// appear in point declaration order.
inline std::string format_set(const FiniteSpace& s, PointSet a) {
  std::string out = "{";
  bool first = true;
  for (int p : a.points()) {
    if (!first) out += ',';
    out += s.point_names()[static_cast<std::size_t>(p)];
    first = false;
  }
  return out + "}";
}

/// One set per line, family in canonical order.
inline std::string format_family(const FiniteSpace& s, const SetFamily& fam) {
  std::string out;
  for (PointSet m : fam) {
    out += format_set(s, m);
    out += '\n';
  }
  return out;
}

/// Canonical space serialization: the points line followed by every open
/// (including {} and X) in canonical order.
inline std::string format_space(const FiniteSpace& s) {
  std::string out = "points:";
  for (const auto& nm : s.point_names()) {
    out += ' ';
    out += nm;
  }
  out += '\n';
  for (PointSet o : s.opens()) {
    out += "open:";
    for (int p : o.points()) {
      out += ' ';
      out += s.point_names()[static_cast<std::size_t>(p)];
    }
    out += '\n';
  }
  return out;
}

/// Parses the space text format and validates the topology axioms.
inline FiniteSpace parse_space(std::string_view text) {
  std::vector<std::string> names;
  std::vector<PointSet> opens;
  bool have_points = false;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    if (toks[0] == "points:") {
      if (have_points) throw ValidationError(where + ": repeated points line");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!detail::valid_token(toks[i]))
          throw ValidationError(where + ": bad point token '" + toks[i] + "'");
        names.push_back(toks[i]);
      }
      if (names.empty()) throw ValidationError(where + ": no points declared");
      have_points = true;
    } else if (toks[0] == "open:") {
      if (!have_points) throw ValidationError(where + ": open line before points line");
      PointSet s;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        bool found = false;
        for (std::size_t p = 0; p < names.size(); ++p)
          if (names[p] == toks[i]) {
            s = s.with(static_cast<int>(p));
            found = true;
            break;
          }
        if (!found)
          throw ValidationError(where + ": unknown point '" + toks[i] + "'");
      }
      opens.push_back(s);
    } else {
      throw ValidationError(where + ": expected 'points:' or 'open:', got '" + toks[0] + "'");
    }
  }
  if (!have_points) throw ValidationError("no points line");
  // {} or X listed explicitly is fine; validate_space adds them anyway.
  std::vector<PointSet> pruned;
  bool saw_empty = false, saw_full = false;
  const PointSet full = PointSet::full(static_cast<int>(names.size()));
  for (PointSet s : opens) {
    if (s.empty()) {
      if (saw_empty) throw ValidationError("duplicate open set: {}");
      saw_empty = true;
      continue;
    }
    if (s == full) {
      if (saw_full) throw ValidationError("duplicate open set: X");
      saw_full = true;
      continue;
    }
    pruned.push_back(s);
  }
  return validate_space(std::move(names), pruned);
}

/// Parses a canonical set literal such as "{a,c}" against a space's
/// declared points. Surrounding whitespace is ignored, the literal itself
/// is strict.
inline PointSet parse_set(const FiniteSpace& space, std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  text = text.substr(b, e - b);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ValidationError("set literal must look like {a,c}, got '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  PointSet out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok = body.substr(pos, (comma == std::string_view::npos ? body.size() : comma) - pos);
    int idx = space.point_index(tok);
    if (idx < 0)
      throw ValidationError("unknown point '" + std::string(tok) + "' in set literal");
    if (out.contains(idx))
      throw ValidationError("repeated point '" + std::string(tok) + "' in set literal");
    out = out.with(idx);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace topolab
