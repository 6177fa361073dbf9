#pragma once

// Per-knot reports, tri-state verdicts for the slope/Jones/signature theorem
// and its proof identities, and a concurrent corpus runner.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <functional>
#include <utility>
#include <vector>

#include "knotslope/diagram.hpp"
#include "knotslope/error.hpp"
#include "knotslope/laurent.hpp"
#include "knotslope/pd_code.hpp"
#include "knotslope/signature.hpp"
#include "knotslope/state_sum.hpp"
#include "knotslope/surfaces.hpp"
#include "knotslope/table.hpp"

namespace knotslope {

enum class Verdict { Holds, Fails, NotApplicable };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

inline Verdict parse_verdict(std::string_view text) {
  if (text == "holds") return Verdict::Holds;
  if (text == "fails") return Verdict::Fails;
  if (text == "not-applicable") return Verdict::NotApplicable;
  throw Error(ErrorKind::MalformedSyntax, "unknown verdict '" + std::string(text) + "'");
}

inline Verdict verdict(bool ok) { return ok ? Verdict::Holds : Verdict::Fails; }

struct Checks {
  Verdict thm31_max = Verdict::NotApplicable;
  Verdict thm31_min = Verdict::NotApplicable;
  Verdict id_crplus = Verdict::NotApplicable;
  Verdict id_crminus = Verdict::NotApplicable;
  Verdict id_crossings = Verdict::NotApplicable;
  Verdict id_degree_span = Verdict::NotApplicable;
  Verdict id_sigma_g = Verdict::NotApplicable;
  Verdict id_mu = Verdict::NotApplicable;
  Verdict id_negative_definite = Verdict::NotApplicable;
  Verdict id_slopes = Verdict::NotApplicable;
  Verdict degree_bounds = Verdict::NotApplicable;
  Verdict det_jones_cross_check = Verdict::NotApplicable;
  Verdict regression = Verdict::NotApplicable;

  /// Keyed references in serialization order.
  template <class Self>
  static auto entries(Self& self) {
    using Ref = decltype(&self.thm31_max);
    return std::vector<std::pair<std::string_view, Ref>>{{"thm31_max", &self.thm31_max},
                                                         {"thm31_min", &self.thm31_min},
                                                         {"id_crplus", &self.id_crplus},
                                                         {"id_crminus", &self.id_crminus},
                                                         {"id_crossings", &self.id_crossings},
                                                         {"id_degree_span", &self.id_degree_span},
                                                         {"id_sigma_g", &self.id_sigma_g},
                                                         {"id_mu", &self.id_mu},
                                                         {"id_negative_definite", &self.id_negative_definite},
                                                         {"id_slopes", &self.id_slopes},
                                                         {"degree_bounds", &self.degree_bounds},
                                                         {"det_jones_cross_check", &self.det_jones_cross_check},
                                                         {"regression", &self.regression}};
  }

  std::vector<std::pair<std::string_view, Verdict>> fields() const {
    std::vector<std::pair<std::string_view, Verdict>> out;
    for (auto [key, ptr] : entries(*this)) out.emplace_back(key, *ptr);
    return out;
  }

  bool any(Verdict v) const {
    for (const auto& [_, x] : fields())
      if (x == v) return true;
    return false;
  }

  friend bool operator==(const Checks&, const Checks&) = default;
};

struct KnotReport {
  std::string name;
  std::string pd;
  int crossings = 0;
  int cr_plus = 0;
  int cr_minus = 0;
  int writhe = 0;
  bool alternating = false;
  bool reduced = false;
  int s_plus = 0;
  int s_minus = 0;
  bool adequate_plus = false;
  bool adequate_minus = false;
  LaurentPolynomial jones{'t'};
  int jones_min_deg = 0;
  int jones_max_deg = 0;
  Rational bound_upper{0};
  Rational bound_lower{0};
  int slope_max = 0;
  int slope_min = 0;
  IntMatrix goeritz;
  int sigma_g = 0;
  int mu = 0;
  int sigma = 0;
  /// slope - (2 deg + sigma) for diagrams outside the theorem's hypothesis
  std::optional<int> gap_max;
  std::optional<int> gap_min;
  Checks checks;
  bool skipped = false;
  std::optional<std::string> error;
  double elapsed_ms = 0;

  /// Verdict on the main theorem as a whole.
  Verdict theorem() const {
    if (checks.thm31_max == Verdict::Fails || checks.thm31_min == Verdict::Fails) return Verdict::Fails;
    if (checks.thm31_max == Verdict::Holds && checks.thm31_min == Verdict::Holds) return Verdict::Holds;
    return Verdict::NotApplicable;
  }
};

struct ReportOptions {
  std::optional<int> outer_face;
  std::optional<int> max_crossings;
  BracketOptions bracket;
};

namespace detail {

inline bool theorem_hypothesis(const PlanarDiagram& d) {
  return d.crossing_count() > 0 && is_alternating(d) && is_reduced(d);
}

/// Proof-shading checks: sigma(G) = 1 - |S-D|, mu = -cr-, G negative definite.
inline void check_shading(const PlanarDiagram& d, KnotReport& r) {
  const auto face = negative_shading_outer_face(d);
  if (!face) {
    r.checks.id_sigma_g = r.checks.id_mu = r.checks.id_negative_definite = Verdict::Fails;
    return;
  }
  const auto shaded = with_outer_face(d, *face);
  const auto g = goeritz_matrix(shaded, checkerboard_coloring(shaded));
  const auto dec = symmetric_signature(g.entries);
  r.checks.id_sigma_g = verdict(dec.nullity == 0 && dec.signature == 1 - r.s_minus);
  r.checks.id_mu = verdict(g.mu == -r.cr_minus);
  r.checks.id_negative_definite =
      verdict(dec.nullity == 0 && std::all_of(dec.pivots.begin(), dec.pivots.end(), [](const auto& p) { return p < 0; }));
}

/// Checkerboard slopes vs {2cr+, -2cr-} vs layered slopes of the extreme states.
inline Verdict check_slopes(const PlanarDiagram& d, const KnotReport& r) {
  const int n = d.crossing_count();
  const int layered_plus = layered_slope(d, State::uniform(n, Smoothing::Positive));
  const int layered_minus = layered_slope(d, State::uniform(n, Smoothing::Negative));
  return verdict(r.slope_max == 2 * r.cr_plus && r.slope_min == -2 * r.cr_minus && layered_plus == 2 * r.cr_plus &&
                 layered_minus == -2 * r.cr_minus);
}

inline Verdict check_regression(const KnotReport& r, const ExpectedValues& expected, const BigRational& det) {
  if (expected.empty()) return Verdict::NotApplicable;
  bool ok = true;
  if (expected.alternating) ok = ok && *expected.alternating == r.alternating;
  if (expected.signature) ok = ok && *expected.signature == r.sigma;
  if (expected.determinant) ok = ok && BigRational(*expected.determinant) == abs(det);
  if (expected.jones) ok = ok && *expected.jones == r.jones;
  return verdict(ok);
}

}  // namespace detail

/// Computes every invariant of a diagram and evaluates all checks. Never
/// throws on mathematical input: computation errors land in `error`.
inline KnotReport build_report(const PDCode& code, const ExpectedValues& expected = {}, const ReportOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  KnotReport r;
  r.name = code.name;
  r.pd = code.to_string();
  r.crossings = code.size();
  auto finish = [&] {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return r;
  };
  if (options.max_crossings && r.crossings > *options.max_crossings) {
    r.skipped = true;
    return finish();
  }
  try {
    const auto d = build_diagram(code, options.outer_face);
    const int n = d.crossing_count();
    const auto signs = crossing_signs(d);
    r.cr_plus = signs.cr_plus;
    r.cr_minus = signs.cr_minus;
    r.writhe = signs.writhe;
    r.alternating = is_alternating(d);
    r.reduced = is_reduced(d);
    const auto all_plus = State::uniform(n, Smoothing::Positive);
    const auto all_minus = State::uniform(n, Smoothing::Negative);
    r.s_plus = smooth(d, all_plus).count;
    r.s_minus = smooth(d, all_minus).count;
    r.adequate_plus = is_adequate(d, all_plus);
    r.adequate_minus = is_adequate(d, all_minus);

    r.jones = jones_polynomial(d, options.bracket);
    const auto degrees = jones_degrees(r.jones);
    r.jones_min_deg = degrees.min_deg;
    r.jones_max_deg = degrees.max_deg;
    const auto bounds = degree_bounds(d);
    r.bound_upper = bounds.upper;
    r.bound_lower = bounds.lower;

    const auto coloring = checkerboard_coloring(d);
    const int black = boundary_slope(d, coloring, Color::Black).slope;
    const int white = boundary_slope(d, coloring, Color::White).slope;
    r.slope_max = std::max(black, white);
    r.slope_min = std::min(black, white);

    const auto g = goeritz_matrix(d, coloring);
    r.goeritz = g.entries;
    const auto dec = symmetric_signature(g.entries);
    if (dec.nullity != 0) throw Error(ErrorKind::InvariantViolation, "Goeritz matrix of a knot diagram is singular");
    r.sigma_g = dec.signature;
    r.mu = g.mu;
    r.sigma = r.sigma_g - r.mu;
    const BigRational det = dec.determinant();

    const bool hypothesis = detail::theorem_hypothesis(d);
    if (hypothesis) {
      r.checks.thm31_max = verdict(r.slope_max == 2 * r.jones_max_deg + r.sigma);
      r.checks.thm31_min = verdict(r.slope_min == 2 * r.jones_min_deg + r.sigma);
      r.checks.id_crplus = verdict(r.cr_plus == r.s_plus - r.sigma - 1);
      r.checks.id_crminus = verdict(r.cr_minus == r.s_minus + r.sigma - 1);
      r.checks.id_crossings = verdict(n == r.s_plus + r.s_minus - 2);
      r.checks.id_degree_span = verdict(r.jones_max_deg - r.jones_min_deg == n);
      detail::check_shading(d, r);
      r.checks.id_slopes = detail::check_slopes(d, r);
    } else if (n > 0) {
      r.gap_max = r.slope_max - (2 * r.jones_max_deg + r.sigma);
      r.gap_min = r.slope_min - (2 * r.jones_min_deg + r.sigma);
    }

    const bool within = Rational(r.jones_max_deg) <= r.bound_upper && r.bound_lower <= Rational(r.jones_min_deg);
    const bool sharp_top = !r.adequate_minus || Rational(r.jones_max_deg) == r.bound_upper;
    const bool sharp_bottom = !r.adequate_plus || Rational(r.jones_min_deg) == r.bound_lower;
    r.checks.degree_bounds = verdict(within && sharp_top && sharp_bottom);
    r.checks.det_jones_cross_check = verdict(abs(det) == BigRational(abs(r.jones.evaluate_at_minus_one())));
    r.checks.regression = detail::check_regression(r, expected, det);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return finish();
}

inline KnotReport build_report(const PlanarDiagram& d, const ReportOptions& options = {}) {
  ReportOptions pinned = options;
  pinned.outer_face = d.outer_face();
  return build_report(d.code(), {}, pinned);
}

struct TheoremVerdicts {
  Verdict max_slope = Verdict::NotApplicable;
  Verdict min_slope = Verdict::NotApplicable;
};

namespace detail {

inline Verdict verdict_on_error(const KnotReport& r, Verdict v) {
  if (!r.error) return v;
  // a diagram too large to evaluate is outside scope; anything else is a failure
  return r.error->rfind(std::string(to_string(ErrorKind::TooManyCrossings)), 0) == 0 ? Verdict::NotApplicable
                                                                                      : Verdict::Fails;
}

}  // namespace detail

/// max_slope = 2 max_deg V + sigma and min_slope = 2 min_deg V + sigma on
/// reduced alternating diagrams; not-applicable elsewhere.
inline TheoremVerdicts verify_main_theorem(const PlanarDiagram& d, const ReportOptions& options = {}) {
  if (!detail::theorem_hypothesis(d)) return {};
  const auto r = build_report(d, options);
  return {detail::verdict_on_error(r, r.checks.thm31_max), detail::verdict_on_error(r, r.checks.thm31_min)};
}

struct IdentityVerdicts {
  Verdict cr_plus = Verdict::NotApplicable;
  Verdict cr_minus = Verdict::NotApplicable;
  Verdict crossings = Verdict::NotApplicable;
  Verdict degree_span = Verdict::NotApplicable;
  Verdict sigma_g = Verdict::NotApplicable;
  Verdict mu = Verdict::NotApplicable;

  std::vector<Verdict> all() const { return {cr_plus, cr_minus, crossings, degree_span, sigma_g, mu}; }
};

inline IdentityVerdicts verify_identities(const PlanarDiagram& d, const ReportOptions& options = {}) {
  if (!detail::theorem_hypothesis(d)) return {};
  const auto r = build_report(d, options);
  auto v = [&](Verdict x) { return detail::verdict_on_error(r, x); };
  return {v(r.checks.id_crplus),      v(r.checks.id_crminus), v(r.checks.id_crossings),
          v(r.checks.id_degree_span), v(r.checks.id_sigma_g), v(r.checks.id_mu)};
}

struct CorpusSummary {
  int knots = 0;
  /// theorem verdicts per knot
  int holds = 0;
  int fails = 0;
  int not_applicable = 0;
  int errors = 0;
  int skipped = 0;
  /// individual check verdicts across all knots
  int checks_holding = 0;
  int checks_failing = 0;
};

struct CorpusReport {
  std::vector<KnotReport> reports;
  CorpusSummary summary;
};

inline KnotReport report_entry(const TableEntry& entry, const ReportOptions& options) {
  if (entry.code) {
    auto r = build_report(*entry.code, entry.expected, options);
    r.name = entry.name;
    return r;
  }
  KnotReport r;
  r.name = entry.name;
  r.pd = entry.pd_text;
  r.error = entry.error.value_or("unparsed entry");
  return r;
}

inline CorpusSummary summarize(const std::vector<KnotReport>& reports) {
  CorpusSummary s;
  s.knots = static_cast<int>(reports.size());
  for (const auto& r : reports) {
    switch (r.theorem()) {
      case Verdict::Holds: ++s.holds; break;
      case Verdict::Fails: ++s.fails; break;
      case Verdict::NotApplicable: ++s.not_applicable; break;
    }
    if (r.error) ++s.errors;
    if (r.skipped) ++s.skipped;
    for (const auto& [_, v] : r.checks.fields()) {
      if (v == Verdict::Holds) ++s.checks_holding;
      if (v == Verdict::Fails) ++s.checks_failing;
    }
  }
  return s;
}

/// Evaluates every entry on a worker pool; reports keep table order.
inline CorpusReport run_corpus(const KnotTable& table, const ReportOptions& options = {}, unsigned threads = 0) {
  CorpusReport out;
  out.reports.resize(table.entries.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, table.entries.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < table.entries.size(); i = next++)
      out.reports[i] = report_entry(table.entries[i], options);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(std::ref(work));
  work();
  for (auto& t : pool) t.join();
  out.summary = summarize(out.reports);
  return out;
}

}  // namespace knotslope
