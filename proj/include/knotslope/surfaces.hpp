#pragma once

// Checkerboard surfaces and their boundary slopes.
//
// The surface of a color is the union of that color's regions joined by a
// half-twisted band at each crossing. The band is orientable-compatible
// (nonexceptional) when the two strands run antiparallel along it, which
// happens exactly when the oriented (Seifert) smoothing at the crossing keeps
// the two quadrants of that color apart. When the oriented smoothing merges
// them, the strands run parallel along the band and the crossing is
// exceptional; it then contributes 2*sign to the boundary slope.

#include <algorithm>
#include <utility>
#include <vector>

#include "knotslope/diagram.hpp"
#include "knotslope/error.hpp"
#include "knotslope/state_sum.hpp"

namespace knotslope {

/// Quadrant pair {q, q+2} merged by the oriented smoothing: positive crossings
/// are smoothed A-wise (quadrants 1,3 merged), negative ones B-wise (0,2).
inline int seifert_merged_quadrant(const PlanarDiagram& d, int crossing) {
  return d.sign(crossing) > 0 ? 1 : 0;
}

inline Smoothing seifert_smoothing(const PlanarDiagram& d, int crossing) {
  return d.sign(crossing) > 0 ? Smoothing::Positive : Smoothing::Negative;
}

inline std::vector<bool> exceptional_crossings(const PlanarDiagram& d, const Coloring& coloring, Color color) {
  std::vector<bool> exceptional(d.crossing_count(), false);
  for (int c = 0; c < d.crossing_count(); ++c)
    exceptional[c] = coloring[d.quadrant_face(c, seifert_merged_quadrant(d, c))] == color;
  return exceptional;
}

struct SlopeResult {
  int slope = 0;
  std::vector<int> contributions;
};

/// Twice the signed count of exceptional crossings.
inline SlopeResult boundary_slope(const PlanarDiagram& d, const Coloring& coloring, Color color) {
  SlopeResult out;
  const auto exceptional = exceptional_crossings(d, coloring, color);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int local = exceptional[c] ? 2 * d.sign(c) : 0;
    out.contributions.push_back(local);
    out.slope += local;
  }
  return out;
}

struct SlopePair {
  int max_slope = 0;
  int min_slope = 0;
};

/// For reduced alternating diagrams: {2cr+, -2cr-}, cross-checked against the
/// exceptional-crossing sums of both checkerboard surfaces.
inline SlopePair checkerboard_slopes(const PlanarDiagram& d) {
  if (!is_alternating(d)) throw Error(ErrorKind::NotAlternating, "checkerboard slope formula needs an alternating diagram");
  if (!is_reduced(d)) throw Error(ErrorKind::NotReduced, "checkerboard slope formula needs a reduced diagram");
  const auto signs = crossing_signs(d);
  const SlopePair expected{2 * signs.cr_plus, -2 * signs.cr_minus};
  const auto coloring = checkerboard_coloring(d);
  const int black = boundary_slope(d, coloring, Color::Black).slope;
  const int white = boundary_slope(d, coloring, Color::White).slope;
  const SlopePair computed{std::max(black, white), std::min(black, white)};
  if (computed.max_slope != expected.max_slope || computed.min_slope != expected.min_slope)
    throw Error(ErrorKind::InvariantViolation,
                "surface slopes (" + std::to_string(black) + ", " + std::to_string(white) +
                    ") disagree with (2cr+, -2cr-) = (" + std::to_string(expected.max_slope) + ", " +
                    std::to_string(expected.min_slope) + ")");
  return expected;
}

/// Slope of the layered surface built on a state: a - b + cr+ - cr-.
inline int layered_slope(const PlanarDiagram& d, const State& s) {
  if (static_cast<int>(s.choice.size()) != d.crossing_count())
    throw Error(ErrorKind::IncompleteState, "state does not assign every crossing");
  const auto signs = crossing_signs(d);
  return s.positive_count() - s.negative_count() + signs.cr_plus - signs.cr_minus;
}

}  // namespace knotslope
