#pragma once

// Kauffman states, state circles and the state-sum bracket.
//
// The positive smoothing of a crossing is the bracket's A-smoothing: the
// regions swept by turning the overstrand counterclockwise (quadrants 1 and 3)
// are joined, so the arcs pair positions (0,1) and (2,3). The negative
// smoothing pairs (0,3) and (1,2).

#include <boost/pending/disjoint_sets.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <utility>
#include <vector>

#include "knotslope/diagram.hpp"
#include "knotslope/error.hpp"
#include "knotslope/laurent.hpp"

namespace knotslope {

enum class Smoothing { Positive, Negative };

struct State {
  std::vector<Smoothing> choice;

  static State uniform(int crossings, Smoothing s) { return State{std::vector<Smoothing>(crossings, s)}; }

  /// Bit i of mask set means crossing i is smoothed negatively.
  static State from_mask(int crossings, std::uint64_t mask) {
    State s;
    s.choice.reserve(crossings);
    for (int i = 0; i < crossings; ++i)
      s.choice.push_back(((mask >> i) & 1U) ? Smoothing::Negative : Smoothing::Positive);
    return s;
  }

  int positive_count() const {
    int a = 0;
    for (auto c : choice) a += (c == Smoothing::Positive);
    return a;
  }
  int negative_count() const { return static_cast<int>(choice.size()) - positive_count(); }
};

inline std::array<std::pair<int, int>, 2> smoothing_arcs(Smoothing s) {
  if (s == Smoothing::Positive) return {{{0, 1}, {2, 3}}};
  return {{{0, 3}, {1, 2}}};
}

struct StateCircles {
  /// circle index per dart, numbered 0..count-1 in order of first dart
  std::vector<int> circle_of_dart;
  int count = 0;
};

inline StateCircles smooth(const PlanarDiagram& d, const State& s) {
  const int n = d.crossing_count();
  if (static_cast<int>(s.choice.size()) != n)
    throw Error(ErrorKind::IncompleteState,
                "state assigns " + std::to_string(s.choice.size()) + " of " + std::to_string(n) + " crossings");
  StateCircles out;
  if (n == 0) {
    out.count = 1;
    return out;
  }
  boost::disjoint_sets_with_storage<> sets(4 * n);
  for (int i = 0; i < 4 * n; ++i) sets.make_set(i);
  for (const auto& dart : d.darts()) sets.union_set(4 * dart.crossing + dart.position, dart.partner);
  for (int c = 0; c < n; ++c)
    for (auto [p, q] : smoothing_arcs(s.choice[c])) sets.union_set(4 * c + p, 4 * c + q);
  out.circle_of_dart.assign(4 * n, -1);
  std::vector<int> id_of_root(4 * n, -1);
  for (int i = 0; i < 4 * n; ++i) {
    const int r = static_cast<int>(sets.find_set(i));
    if (id_of_root[r] < 0) id_of_root[r] = out.count++;
    out.circle_of_dart[i] = id_of_root[r];
  }
  return out;
}

/// At every crossing the two smoothing arcs lie on different state circles.
inline bool is_adequate(const PlanarDiagram& d, const State& s) {
  const auto circles = smooth(d, s);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto arcs = smoothing_arcs(s.choice[c]);
    if (circles.circle_of_dart[4 * c + arcs[0].first] == circles.circle_of_dart[4 * c + arcs[1].first])
      return false;
  }
  return true;
}

/// d = -A^2 - A^{-2}
inline LaurentPolynomial loop_value() {
  LaurentPolynomial delta('A');
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  return delta;
}

struct BracketOptions {
  int max_crossings = 16;
};

/// Sum over all 2^n states of A^{a-b} d^{|s|-1}.
inline LaurentPolynomial kauffman_bracket(const PlanarDiagram& d, BracketOptions options = {}) {
  const int n = d.crossing_count();
  if (n > options.max_crossings)
    throw Error(ErrorKind::TooManyCrossings,
                std::to_string(n) + " crossings exceeds the state-sum limit " + std::to_string(options.max_crossings));
  // histogram[a - b + n][circles]
  std::vector<std::vector<std::int64_t>> histogram(2 * n + 1, std::vector<std::int64_t>(2 * n + 2, 0));
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    const State s = State::from_mask(n, mask);
    const int circles = smooth(d, s).count;
    const int a_minus_b = n - 2 * s.negative_count();
    ++histogram[a_minus_b + n][circles];
  }
  const LaurentPolynomial delta = loop_value();
  std::vector<LaurentPolynomial> delta_powers{LaurentPolynomial::constant(1, 'A')};
  for (int k = 1; k <= 2 * n + 1; ++k) delta_powers.push_back(delta_powers.back() * delta);

  LaurentPolynomial bracket('A');
  for (int e = 0; e <= 2 * n; ++e)
    for (int circles = 1; circles <= 2 * n + 1; ++circles)
      if (histogram[e][circles] != 0)
        bracket += delta_powers[circles - 1].shifted(e - n) * LaurentPolynomial::constant(histogram[e][circles], 'A');
  return bracket;
}

/// V(t) = (-A)^{-3w} <D> with t = A^{-4}.
inline LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int writhe) {
  const BigInt sign = (writhe % 2 == 0) ? 1 : -1;
  const LaurentPolynomial normalized = bracket.shifted(-3 * writhe) * LaurentPolynomial::constant(sign, 'A');
  return normalized.substitute_root(-4, 't');
}

inline LaurentPolynomial jones_polynomial(const PlanarDiagram& d, BracketOptions options = {}) {
  return jones_from_bracket(kauffman_bracket(d, options), crossing_signs(d).writhe);
}

using Rational = boost::rational<std::int64_t>;

struct DegreeBounds {
  Rational upper;
  Rational lower;
};

/// upper = (2cr+ - cr- + |S-D| - 1)/2, lower = (cr+ - 2cr- - |S+D| + 1)/2
inline DegreeBounds degree_bounds(const PlanarDiagram& d) {
  const auto signs = crossing_signs(d);
  const int n = d.crossing_count();
  const int s_plus = smooth(d, State::uniform(n, Smoothing::Positive)).count;
  const int s_minus = smooth(d, State::uniform(n, Smoothing::Negative)).count;
  if (n == 0) return {Rational(0), Rational(0)};
  return {Rational(2 * signs.cr_plus - signs.cr_minus + s_minus - 1, 2),
          Rational(signs.cr_plus - 2 * signs.cr_minus - s_plus + 1, 2)};
}

struct JonesDegrees {
  int min_deg = 0;
  int max_deg = 0;
};

inline JonesDegrees jones_degrees(const LaurentPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "degrees of the zero polynomial");
  return {p.min_degree(), p.max_degree()};
}

}  // namespace knotslope
