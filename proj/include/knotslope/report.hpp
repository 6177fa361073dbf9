#pragma once

// Report serialization: canonical JSON, fixed-column CSV and plain text.

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotslope/verify.hpp"

namespace knotslope {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json rational_to_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Bounds are integers or half-integers.
inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return Rational(static_cast<std::int64_t>(std::llround(j.get<double>() * 2)), 2);
}

inline std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  std::ostringstream out;
  out << static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  return out.str();
}

inline Json coefficient_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

inline BigInt coefficient_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

template <class T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace detail

inline Json jones_to_json(const LaurentPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [exp, coeff] : p.terms()) terms.push_back({{"coeff", detail::coefficient_to_json(coeff)}, {"exp", exp}});
  return {{"terms", terms}};
}

inline LaurentPolynomial jones_from_json(const Json& j) {
  LaurentPolynomial p('t');
  for (const auto& term : j.at("terms")) p.add_term(term.at("exp").get<int>(), detail::coefficient_from_json(term.at("coeff")));
  return p;
}

inline Json to_json(const KnotReport& r) {
  Json checks = Json::object();
  for (const auto& [key, v] : r.checks.fields()) checks[std::string(key)] = to_string(v);
  return {
      {"name", r.name},
      {"pd", r.pd},
      {"crossings", r.crossings},
      {"cr_plus", r.cr_plus},
      {"cr_minus", r.cr_minus},
      {"writhe", r.writhe},
      {"alternating", r.alternating},
      {"reduced", r.reduced},
      {"s_plus", r.s_plus},
      {"s_minus", r.s_minus},
      {"adequate_plus", r.adequate_plus},
      {"adequate_minus", r.adequate_minus},
      {"jones", jones_to_json(r.jones)},
      {"jones_min_deg", r.jones_min_deg},
      {"jones_max_deg", r.jones_max_deg},
      {"bound_upper", detail::rational_to_json(r.bound_upper)},
      {"bound_lower", detail::rational_to_json(r.bound_lower)},
      {"slope_max", r.slope_max},
      {"slope_min", r.slope_min},
      {"goeritz", {{"size", r.goeritz.size()}, {"rows", r.goeritz}}},
      {"sigma_g", r.sigma_g},
      {"mu", r.mu},
      {"sigma", r.sigma},
      {"gap_max", detail::optional_to_json(r.gap_max)},
      {"gap_min", detail::optional_to_json(r.gap_min)},
      {"skipped", r.skipped},
      {"checks", checks},
      {"error", detail::optional_to_json(r.error)},
  };
}

inline KnotReport report_from_json(const Json& j) {
  KnotReport r;
  r.name = j.at("name").get<std::string>();
  r.pd = j.at("pd").get<std::string>();
  r.crossings = j.at("crossings").get<int>();
  r.cr_plus = j.at("cr_plus").get<int>();
  r.cr_minus = j.at("cr_minus").get<int>();
  r.writhe = j.at("writhe").get<int>();
  r.alternating = j.at("alternating").get<bool>();
  r.reduced = j.at("reduced").get<bool>();
  r.s_plus = j.at("s_plus").get<int>();
  r.s_minus = j.at("s_minus").get<int>();
  r.adequate_plus = j.at("adequate_plus").get<bool>();
  r.adequate_minus = j.at("adequate_minus").get<bool>();
  r.jones = jones_from_json(j.at("jones"));
  r.jones_min_deg = j.at("jones_min_deg").get<int>();
  r.jones_max_deg = j.at("jones_max_deg").get<int>();
  r.bound_upper = detail::rational_from_json(j.at("bound_upper"));
  r.bound_lower = detail::rational_from_json(j.at("bound_lower"));
  r.slope_max = j.at("slope_max").get<int>();
  r.slope_min = j.at("slope_min").get<int>();
  r.goeritz = j.at("goeritz").at("rows").get<IntMatrix>();
  if (j.at("goeritz").at("size").get<std::size_t>() != r.goeritz.size())
    throw Error(ErrorKind::MalformedSyntax, "goeritz size disagrees with its rows");
  r.sigma_g = j.at("sigma_g").get<int>();
  r.mu = j.at("mu").get<int>();
  r.sigma = j.at("sigma").get<int>();
  if (!j.at("gap_max").is_null()) r.gap_max = j.at("gap_max").get<int>();
  if (!j.at("gap_min").is_null()) r.gap_min = j.at("gap_min").get<int>();
  r.skipped = j.at("skipped").get<bool>();
  for (auto [key, ptr] : Checks::entries(r.checks))
    *ptr = parse_verdict(j.at("checks").at(std::string(key)).get<std::string>());
  if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
  return r;
}

inline Json summary_to_json(const CorpusSummary& s) {
  return {{"knots", s.knots},
          {"holds", s.holds},
          {"fails", s.fails},
          {"not_applicable", s.not_applicable},
          {"errors", s.errors},
          {"skipped", s.skipped},
          {"checks_holding", s.checks_holding},
          {"checks_failing", s.checks_failing}};
}

inline Json to_json(const CorpusReport& c) {
  Json knots = Json::array();
  for (const auto& r : c.reports) knots.push_back(to_json(r));
  return {{"knots", knots}, {"summary", summary_to_json(c.summary)}};
}

/// Fixed CSV columns, in this order.
inline std::vector<std::string> csv_columns() {
  std::vector<std::string> cols{"name",       "crossings",     "cr_plus",       "cr_minus",      "writhe",
                                "alternating", "reduced",      "s_plus",        "s_minus",       "jones",
                                "jones_min_deg", "jones_max_deg", "bound_upper", "bound_lower",   "slope_max",
                                "slope_min",  "sigma_g",       "mu",            "sigma"};
  for (const auto& [key, _] : Checks{}.fields()) cols.emplace_back(key);
  cols.emplace_back("error");
  return cols;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace detail

inline std::string csv_row(const KnotReport& r) {
  std::vector<std::string> cells{r.name,
                                 std::to_string(r.crossings),
                                 std::to_string(r.cr_plus),
                                 std::to_string(r.cr_minus),
                                 std::to_string(r.writhe),
                                 r.alternating ? "Y" : "N",
                                 r.reduced ? "Y" : "N",
                                 std::to_string(r.s_plus),
                                 std::to_string(r.s_minus),
                                 r.jones.to_string(),
                                 std::to_string(r.jones_min_deg),
                                 std::to_string(r.jones_max_deg),
                                 detail::rational_text(r.bound_upper),
                                 detail::rational_text(r.bound_lower),
                                 std::to_string(r.slope_max),
                                 std::to_string(r.slope_min),
                                 std::to_string(r.sigma_g),
                                 std::to_string(r.mu),
                                 std::to_string(r.sigma)};
  for (const auto& [_, v] : r.checks.fields()) cells.emplace_back(to_string(v));
  cells.push_back(r.error.value_or(""));
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + detail::csv_field(cells[i]);
  return line;
}

inline std::string to_csv(const CorpusReport& c) {
  std::string out;
  const auto cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += '\n';
  for (const auto& r : c.reports) out += csv_row(r) + '\n';
  return out;
}

inline std::string to_text(const KnotReport& r) {
  std::ostringstream out;
  out << "name:            " << (r.name.empty() ? "(unnamed)" : r.name) << '\n'
      << "pd:              " << (r.pd.empty() ? "(empty)" : r.pd) << '\n';
  if (r.error) {
    out << "error:           " << *r.error << '\n';
    return out.str();
  }
  if (r.skipped) {
    out << "skipped:         above crossing limit\n";
    return out.str();
  }
  out << "crossings:       " << r.crossings << " (cr+ " << r.cr_plus << ", cr- " << r.cr_minus << ", writhe " << r.writhe
      << ")\n"
      << "alternating:     " << (r.alternating ? "yes" : "no") << ", reduced: " << (r.reduced ? "yes" : "no") << '\n'
      << "state circles:   |S+| = " << r.s_plus << ", |S-| = " << r.s_minus << " (adequate: "
      << (r.adequate_plus ? "+" : "") << (r.adequate_minus ? "-" : "")
      << (!r.adequate_plus && !r.adequate_minus ? "none" : "") << ")\n"
      << "jones:           " << r.jones.to_string() << '\n'
      << "degrees:         [" << r.jones_min_deg << ", " << r.jones_max_deg << "] within bounds ["
      << detail::rational_text(r.bound_lower) << ", " << detail::rational_text(r.bound_upper) << "]\n"
      << "slopes:          max " << r.slope_max << ", min " << r.slope_min << '\n'
      << "goeritz:         " << Json(r.goeritz).dump() << '\n'
      << "signature:       sigma(G) " << r.sigma_g << ", mu " << r.mu << ", sigma " << r.sigma << '\n';
  if (r.gap_max) out << "gaps:            max " << *r.gap_max << ", min " << *r.gap_min << " (informational)\n";
  out << "checks:\n";
  for (const auto& [key, v] : r.checks.fields()) out << "  " << key << ": " << to_string(v) << '\n';
  out << "time:            " << r.elapsed_ms << " ms\n";
  return out.str();
}

inline std::string summary_line(const CorpusSummary& s) {
  std::ostringstream out;
  out << s.knots << " knots, " << s.holds << " holds, " << s.fails << " fails";
  if (s.not_applicable) out << ", " << s.not_applicable << " not-applicable";
  if (s.errors) out << ", " << s.errors << " errors";
  return out.str();
}

}  // namespace knotslope
