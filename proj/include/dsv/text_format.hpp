#ifndef DSV_TEXT_FORMAT_HPP
#define DSV_TEXT_FORMAT_HPP

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dsv/error.hpp"
#include "dsv/frame.hpp"
#include "dsv/mass.hpp"

// Line-oriented text formats shared by mass files and knowledge files:
//
//   # comment
//   frame long low next-to
//   focal long&low 0.15
//   focal THETA 0.2
//
// Clauses join atoms with '&' (conjunction) or '|' (disjunction); '!' negates.

namespace dsv {

inline constexpr std::string_view kThetaToken = "THETA";

namespace text {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Strips a trailing '#' comment.
inline std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return trim(line);
}

inline double parse_number(std::string_view token, std::string_view what) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(v))
    throw Error(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(token) + "'");
  return v;
}

/// Fixed-point rendering with `decimals` places, "-0.000" folded to "0.000".
inline std::string fixed(double v, int decimals = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

/// Shortest round-trip rendering.
inline std::string exact(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace text

/// Literals in a clause token, without validating them against a frame.
struct ClauseSyntax {
  ClauseKind kind = ClauseKind::Conjunction;
  std::vector<Literal> literals;  // empty means THETA
};

inline ClauseSyntax parse_clause_syntax(std::string_view token) {
  token = text::trim(token);
  if (token.empty()) throw Error(ErrorCode::ParseError, "empty clause");
  ClauseSyntax out;
  if (token == kThetaToken) return out;
  const bool has_and = token.find('&') != std::string_view::npos;
  const bool has_or = token.find('|') != std::string_view::npos;
  if (has_and && has_or) throw Error(ErrorCode::ParseError, "clause mixes '&' and '|': " + std::string(token));
  const char sep = has_or ? '|' : '&';
  out.kind = has_or ? ClauseKind::Disjunction : ClauseKind::Conjunction;
  std::size_t start = 0;
  while (start <= token.size()) {
    auto end = token.find(sep, start);
    if (end == std::string_view::npos) end = token.size();
    auto part = text::trim(token.substr(start, end - start));
    Polarity polarity = Polarity::Positive;
    if (!part.empty() && part.front() == '!') {
      polarity = Polarity::Negative;
      part.remove_prefix(1);
    }
    if (part.empty() || part == kThetaToken)
      throw Error(ErrorCode::ParseError, "malformed clause '" + std::string(token) + "'");
    out.literals.push_back({std::string(part), polarity});
    start = end + 1;
  }
  return out;
}

inline Clause parse_clause(const Frame& frame, std::string_view token) {
  auto syntax = parse_clause_syntax(token);
  if (syntax.literals.empty()) return Clause::theta(frame);
  return syntax.kind == ClauseKind::Disjunction ? Clause::disjunction(frame, syntax.literals)
                                                : Clause::conjunction(frame, syntax.literals);
}

inline std::string format_clause(const Clause& c) {
  if (c.is_theta()) return std::string(kThetaToken);
  const char sep = c.is_conjunction() ? '&' : '|';
  std::string out;
  for (const auto& lit : c.literals()) {
    if (!out.empty()) out += sep;
    if (lit.polarity == Polarity::Negative) out += '!';
    out += lit.atom;
  }
  return out;
}

/// One parsed `focal` line.
struct FocalLine {
  std::string clause;
  double mass = 0;
  int line = 0;
};

/// Raw content of a frame/focal file before it is bound to a frame.
struct FocalDocument {
  std::optional<std::string> hypothesis;
  std::optional<std::vector<std::string>> frame;
  std::vector<FocalLine> focals;
};

inline FocalDocument parse_focal_document(std::string_view content) {
  FocalDocument doc;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    auto eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    ++lineno;
    const auto line = text::strip_comment(content.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    auto tokens = text::split_ws(line);
    const auto where = " (line " + std::to_string(lineno) + ")";
    if (tokens[0] == "hypothesis") {
      if (tokens.size() != 2) throw Error(ErrorCode::ParseError, "hypothesis takes one name" + where);
      if (doc.hypothesis) throw Error(ErrorCode::ParseError, "repeated hypothesis" + where);
      doc.hypothesis = std::string(tokens[1]);
    } else if (tokens[0] == "frame") {
      if (tokens.size() < 2) throw Error(ErrorCode::ParseError, "frame lists no atoms" + where);
      if (doc.frame) throw Error(ErrorCode::ParseError, "repeated frame" + where);
      doc.frame.emplace(tokens.begin() + 1, tokens.end());
    } else if (tokens[0] == "focal") {
      if (tokens.size() != 3) throw Error(ErrorCode::ParseError, "expected 'focal <clause> <mass>'" + where);
      doc.focals.push_back({std::string(tokens[1]), text::parse_number(tokens[2], "mass"), lineno});
    } else {
      throw Error(ErrorCode::ParseError, "unknown directive '" + std::string(tokens[0]) + "'" + where);
    }
  }
  return doc;
}

/// Parses a mass file. The file's own `frame` line wins; otherwise
/// `default_frame` is used.
inline MassFunction parse_mass_function(std::string_view content, const std::optional<Frame>& default_frame = {}) {
  auto doc = parse_focal_document(content);
  if (!doc.frame && !default_frame) throw Error(ErrorCode::ParseError, "mass file has no frame line");
  const Frame frame = doc.frame ? Frame(*doc.frame) : *default_frame;
  std::vector<std::pair<Clause, double>> focals;
  for (const auto& f : doc.focals) focals.emplace_back(parse_clause(frame, f.clause), f.mass);
  return MassFunction::make(frame, focals);
}

/// Writes the frame line followed by one `focal` line per focal element,
/// THETA last. Masses use the shortest form that reads back exactly.
inline std::string format_mass_function(const MassFunction& m) {
  std::ostringstream out;
  out << "frame";
  for (const auto& a : m.frame().atoms()) out << ' ' << a;
  out << '\n';
  std::optional<double> theta;
  for (const auto& [clause, mass] : m.focals()) {
    if (clause.is_theta()) {
      theta = mass;
      continue;
    }
    out << "focal " << format_clause(clause) << ' ' << text::exact(mass) << '\n';
  }
  if (theta) out << "focal " << kThetaToken << ' ' << text::exact(*theta) << '\n';
  return out.str();
}

}  // namespace dsv

#endif  // DSV_TEXT_FORMAT_HPP
