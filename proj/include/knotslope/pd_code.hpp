#pragma once

// Planar diagram (PD) codes. Each crossing is a 4-tuple of edge labels listed
// counterclockwise starting at the incoming understrand.

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knotslope/error.hpp"

namespace knotslope {

using CrossingTuple = std::array<int, 4>;

struct PDCode {
  std::string name;
  std::vector<CrossingTuple> crossings;

  int size() const noexcept { return static_cast<int>(crossings.size()); }

  std::string to_string() const {
    std::string out;
    for (const auto& x : crossings) {
      if (!out.empty()) out += ' ';
      out += "X(" + std::to_string(x[0]) + ',' + std::to_string(x[1]) + ',' +
             std::to_string(x[2]) + ',' + std::to_string(x[3]) + ')';
    }
    return out;
  }

  friend bool operator==(const PDCode& a, const PDCode& b) { return a.crossings == b.crossings; }
};

namespace detail {

/// Result of walking the knot along the under-strand convention.
struct StrandTrace {
  /// incoming position at each crossing for the over strand (1 or 3)
  std::vector<int> over_in;
  /// darts (4*crossing + position) in the order they are entered
  std::vector<int> passages;
};

/// Walks the single component and orients every over strand. Throws
/// MultiComponent if the walk does not cover all darts.
inline StrandTrace trace_strands(const std::vector<CrossingTuple>& crossings) {
  const int n = static_cast<int>(crossings.size());
  StrandTrace trace;
  trace.over_in.assign(n, 0);
  if (n == 0) return trace;

  std::map<int, std::vector<int>> darts_of_label;
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) darts_of_label[crossings[c][p]].push_back(4 * c + p);
  auto partner = [&](int dart) {
    const auto& pair = darts_of_label.at(crossings[dart / 4][dart % 4]);
    return pair[0] == dart ? pair[1] : pair[0];
  };

  // The successor map on outgoing darts is a bijection, so the walk from the
  // understrand leaving crossing 0 returns to it.
  int out = 2;
  int visited_count = 0;
  do {
    const int in = partner(out);
    const int c = in / 4;
    const int p = in % 4;
    if (p == 2)
      throw Error(ErrorKind::InconsistentOrientation,
                  "crossing " + std::to_string(c + 1) + " is entered along its outgoing understrand");
    if (p % 2 == 1) {
      if (trace.over_in[c] != 0)
        throw Error(ErrorKind::InconsistentOrientation,
                    "over strand of crossing " + std::to_string(c + 1) + " traversed twice");
      trace.over_in[c] = p;
    }
    trace.passages.push_back(in);
    visited_count += 2;
    out = 4 * c + (p + 2) % 4;
  } while (out != 2);
  if (visited_count != 4 * n)
    throw Error(ErrorKind::MultiComponent, "edge labels form more than one cycle (link diagrams are rejected)");
  return trace;
}

}  // namespace detail

/// Validates label structure and single-componentness.
inline void validate_pd(const PDCode& code) {
  const int n = code.size();
  std::map<int, int> count;
  for (const auto& x : code.crossings)
    for (int label : x) {
      if (label < 1 || label > 2 * n)
        throw Error(ErrorKind::LabelOutOfRange,
                    "label " + std::to_string(label) + " outside 1.." + std::to_string(2 * n));
      ++count[label];
    }
  for (int label = 1; label <= 2 * n; ++label) {
    auto it = count.find(label);
    const int k = it == count.end() ? 0 : it->second;
    if (k != 2)
      throw Error(ErrorKind::LabelMultiplicity,
                  "label " + std::to_string(label) + " appears " + std::to_string(k) + " times");
  }
  detail::trace_strands(code.crossings);
}

/// Parses whitespace-separated `X(a,b,c,d)` terms with an optional leading
/// `name:` token. `#` starts a comment running to end of line.
inline PDCode parse_pd(std::string_view text) {
  PDCode code;
  std::string cleaned;
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '#') in_comment = true;
    if (ch == '\n') in_comment = false;
    cleaned += in_comment ? ' ' : ch;
  }

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < cleaned.size() && std::isspace(static_cast<unsigned char>(cleaned[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::MalformedSyntax, why + " at offset " + std::to_string(i));
  };

  skip_ws();
  // optional name token: everything up to the first ':' provided no '(' precedes it
  {
    const auto colon = cleaned.find(':', i);
    const auto paren = cleaned.find('(', i);
    if (colon != std::string::npos && (paren == std::string::npos || colon < paren)) {
      std::string name = cleaned.substr(i, colon - i);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      if (name.empty() || name.find_first_of(" \t") != std::string::npos) fail("malformed name token");
      code.name = name;
      i = colon + 1;
    }
  }

  while (true) {
    skip_ws();
    if (i >= cleaned.size()) break;
    if (cleaned[i] != 'X') fail(std::string("expected 'X', found '") + cleaned[i] + "'");
    ++i;
    if (i >= cleaned.size() || cleaned[i] != '(') fail("expected '(' after X");
    ++i;
    CrossingTuple tuple{};
    int arity = 0;
    while (true) {
      skip_ws();
      std::string digits;
      while (i < cleaned.size() && std::isdigit(static_cast<unsigned char>(cleaned[i]))) digits += cleaned[i++];
      if (digits.empty()) fail("expected unsigned label");
      if (digits.size() > 9) fail("label too large");
      if (arity == 4) fail("crossing has more than 4 labels");
      tuple[arity++] = std::stoi(digits);
      skip_ws();
      if (i < cleaned.size() && cleaned[i] == ',') {
        ++i;
        continue;
      }
      if (i < cleaned.size() && cleaned[i] == ')') {
        ++i;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (arity != 4) fail("crossing has " + std::to_string(arity) + " labels, expected 4");
    code.crossings.push_back(tuple);
  }
  validate_pd(code);
  return code;
}

/// Mirror image: reflecting the projection plane reverses the cyclic order at
/// every crossing while keeping the understrand first.
inline PDCode mirror(const PDCode& code) {
  PDCode out = code;
  for (auto& x : out.crossings) std::swap(x[1], x[3]);
  return out;
}

/// Switches over and under at one crossing.
inline PDCode change_crossing(const PDCode& code, int crossing) {
  const auto trace = detail::trace_strands(code.crossings);
  PDCode out = code;
  const auto& x = code.crossings[crossing];
  const int start = trace.over_in[crossing];
  out.crossings[crossing] = {x[start], x[(start + 1) % 4], x[(start + 2) % 4], x[(start + 3) % 4]};
  return out;
}

}  // namespace knotslope
