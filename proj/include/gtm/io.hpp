#pragma once

// Text formats.
//
// Matrix file: first non-empty line holds n; the next n lines hold n
// whitespace-separated entries each, written as an integer, "p/q", or a
// decimal literal (converted exactly). Blank lines are skipped and a '#'
// starts a comment. Output always prints exact rationals.
//
// Script file: JSON array of arrays of 1-based vertices, e.g. [[1,2],[1,2,3]].
// Every inner array must be strictly increasing and within [n].

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gtm/certify.hpp"
#include "gtm/error.hpp"
#include "gtm/index_set.hpp"
#include "gtm/matrix.hpp"
#include "gtm/rational.hpp"

namespace gtm::io {

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline std::string strip_comment(std::string line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  return line;
}

[[noreturn]] inline void parse_fail(std::size_t line, std::size_t col, const std::string& what) {
  throw Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what,
              {line, col});
}

}  // namespace detail

/// Parses the matrix grammar without checking GT invariants.
inline RawMatrix parse_raw_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_n = false;
  RawMatrix rows;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = detail::tokens(detail::strip_comment(line));
    if (toks.empty()) continue;
    if (!have_n) {
      if (toks.size() != 1) detail::parse_fail(line_no, 2, "expected the order n alone");
      const auto& t = toks[0];
      if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 6) {
        detail::parse_fail(line_no, 1, "order '" + t + "' is not a positive integer");
      }
      n = std::stoul(t);
      if (n == 0) detail::parse_fail(line_no, 1, "order must be positive");
      have_n = true;
      continue;
    }
    if (rows.size() == n) detail::parse_fail(line_no, 1, "more than n rows");
    if (toks.size() != n) {
      detail::parse_fail(line_no, std::min(toks.size(), n) + 1,
                         "row has " + std::to_string(toks.size()) + " entries, expected " +
                             std::to_string(n));
    }
    std::vector<Rational> row;
    row.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      try {
        row.push_back(Rational::parse(toks[c]));
      } catch (const Error&) {
        detail::parse_fail(line_no, c + 1, "'" + toks[c] + "' is not a number");
      }
    }
    rows.push_back(std::move(row));
  }
  if (!have_n) detail::parse_fail(line_no + 1, 1, "missing order line");
  if (rows.size() != n) {
    detail::parse_fail(line_no + 1, 1,
                       "expected " + std::to_string(n) + " rows, found " +
                           std::to_string(rows.size()));
  }
  return rows;
}

/// Parses and validates; ParseError for grammar problems, the GT invariant
/// errors of GTMatrix::validate otherwise.
inline GTMatrix parse_matrix(std::string_view text) {
  return GTMatrix::validate(parse_raw_matrix(text));
}

inline std::string format_matrix(const GTMatrix& m) {
  std::string out = std::to_string(m.order()) + "\n";
  for (Vertex i = 1; i <= m.order(); ++i) {
    for (Vertex j = 1; j <= m.order(); ++j) {
      if (j > 1) out += ' ';
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "error reading '" + path.string() + "'");
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error(ErrorKind::IoError, "error writing '" + path.string() + "'");
}

inline GTMatrix read_matrix(const std::filesystem::path& path) {
  return parse_matrix(read_file(path));
}

/// Parses a script for matrices of order n.
inline ReversalScript parse_script(std::string_view text, std::size_t n) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("script is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorKind::ParseError, "script must be a JSON array");
  ReversalScript script;
  for (std::size_t s = 0; s < doc.size(); ++s) {
    const auto& step = doc[s];
    const std::string where = "script step " + std::to_string(s + 1);
    if (!step.is_array()) throw Error(ErrorKind::ParseError, where + " is not an array", {s + 1});
    std::vector<Vertex> vs;
    for (const auto& v : step) {
      if (!v.is_number_unsigned()) {
        throw Error(ErrorKind::ParseError, where + " holds a non-positive-integer entry", {s + 1});
      }
      const auto x = v.get<std::uint64_t>();
      if (x < 1 || x > n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    where + ": vertex " + std::to_string(x) + " outside [1," + std::to_string(n) + "]",
                    {s + 1});
      }
      if (!vs.empty() && x <= vs.back()) {
        throw Error(ErrorKind::ParseError, where + " is not strictly increasing", {s + 1});
      }
      vs.push_back(static_cast<Vertex>(x));
    }
    script.emplace_back(std::move(vs));
  }
  return script;
}

/// Compact JSON, e.g. "[[1,2],[1,2,3,4]]".
inline std::string format_script(const ReversalScript& script) {
  nlohmann::json doc = nlohmann::json::array();
  for (const IndexSet& y : script) doc.push_back(y.items());
  return doc.dump();
}

}  // namespace gtm::io
