#pragma once

// Knot tables: one knot per line,
//   name: X(a,b,c,d) X(...) ... {key=value ...}  # comment
// The optional brace block carries reference values used for regression.

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "knotslope/error.hpp"
#include "knotslope/laurent.hpp"
#include "knotslope/pd_code.hpp"

namespace knotslope {

struct ExpectedValues {
  std::optional<bool> alternating;
  std::optional<int> signature;
  std::optional<BigInt> determinant;
  std::optional<LaurentPolynomial> jones;

  bool empty() const { return !alternating && !signature && !determinant && !jones; }
};

struct TableEntry {
  std::string name;
  std::string pd_text;
  int line = 0;
  std::optional<PDCode> code;
  /// set when the line could not be parsed; code is then empty
  std::optional<std::string> error;
  ExpectedValues expected;
};

struct KnotTable {
  std::vector<TableEntry> entries;

  int size() const noexcept { return static_cast<int>(entries.size()); }
  bool empty() const noexcept { return entries.empty(); }
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

inline ExpectedValues parse_expected(std::string_view block) {
  ExpectedValues out;
  std::istringstream in{std::string(block)};
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw Error(ErrorKind::MalformedSyntax, "expected key=value in reference block, found '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "alternating") {
        if (value != "Y" && value != "N")
          throw Error(ErrorKind::MalformedSyntax, "alternating must be Y or N");
        out.alternating = value == "Y";
      } else if (key == "signature") {
        std::size_t used = 0;
        out.signature = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } else if (key == "determinant") {
        out.determinant = BigInt(value);
      } else if (key == "jones") {
        out.jones = LaurentPolynomial::parse(value, 't');
      } else {
        throw Error(ErrorKind::MalformedSyntax, "unknown reference key '" + key + "'");
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(ErrorKind::MalformedSyntax, "bad value for '" + key + "': " + value);
    }
  }
  return out;
}

}  // namespace detail

/// Parses table text. Malformed lines become flagged entries; duplicate
/// names abort with DuplicateName.
inline KnotTable parse_table(std::string_view text) {
  KnotTable table;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    line = detail::trim(line);
    if (line.empty()) continue;

    TableEntry entry;
    entry.line = line_no;
    const auto colon = line.find(':');
    entry.name = colon == std::string::npos ? "line " + std::to_string(line_no) : detail::trim(line.substr(0, colon));
    std::string body = colon == std::string::npos ? line : line.substr(colon + 1);

    try {
      if (colon == std::string::npos) throw Error(ErrorKind::MalformedSyntax, "missing 'name:' prefix");
      if (entry.name.empty() || entry.name.find_first_of(" \t") != std::string::npos)
        throw Error(ErrorKind::MalformedSyntax, "malformed name");
      const auto open = body.find('{');
      if (open != std::string::npos) {
        const auto close = body.find('}', open);
        if (close == std::string::npos || !detail::trim(body.substr(close + 1)).empty())
          throw Error(ErrorKind::MalformedSyntax, "unterminated reference block");
        entry.expected = detail::parse_expected(std::string_view(body).substr(open + 1, close - open - 1));
        body = body.substr(0, open);
      }
      entry.pd_text = detail::trim(body);
      auto code = parse_pd(entry.pd_text);
      code.name = entry.name;
      entry.code = std::move(code);
    } catch (const Error& e) {
      if (entry.pd_text.empty()) entry.pd_text = detail::trim(body);
      entry.error = "line " + std::to_string(line_no) + ": " + e.what();
    }

    if (!seen.insert(entry.name).second)
      throw Error(ErrorKind::DuplicateName, "line " + std::to_string(line_no) + ": name '" + entry.name +
                                                "' already used");
    table.entries.push_back(std::move(entry));
  }
  return table;
}

inline KnotTable load_table(const std::string& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) throw Error(ErrorKind::IoError, "'" + path + "' is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
  return parse_table(buffer.str());
}

}  // namespace knotslope
