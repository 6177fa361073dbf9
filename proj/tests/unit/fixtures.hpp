#pragma once

#include <string>
#include <vector>

#include "knotslope/knotslope.hpp"

namespace fixtures {

inline constexpr const char* kLeftTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
inline constexpr const char* kRightTrefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
inline constexpr const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
inline constexpr const char* kKink = "X(1,2,2,1)";
/// square knot: the left trefoil glued to its mirror; this diagram is alternating
inline constexpr const char* kTrefoilSumMirror =
    "X(1,4,2,5) X(3,12,4,1) X(5,2,6,3) X(7,11,8,10) X(9,7,10,6) X(11,9,12,8)";
/// 8_19, a non-alternating diagram
inline constexpr const char* kNonAlternating =
    "X(2,14,3,13) X(5,11,6,10) X(7,15,8,14) X(9,5,10,4) X(11,7,12,6) X(12,2,13,1) X(15,9,16,8) X(16,4,1,3)";
/// left trefoil with the cyclic order at crossing 0 reflected: a torus embedding
inline constexpr const char* kNonPlanar = "X(1,5,2,4) X(3,6,4,1) X(5,2,6,3)";

inline const knotslope::KnotTable& corpus() {
  static const knotslope::KnotTable table = knotslope::load_table(KNOTSLOPE_TABLE);
  return table;
}

inline std::vector<knotslope::PDCode> corpus_codes(int max_crossings = 10) {
  std::vector<knotslope::PDCode> out;
  for (const auto& e : corpus().entries)
    if (e.code && e.code->size() <= max_crossings) out.push_back(*e.code);
  return out;
}

inline std::vector<knotslope::PDCode> random_codes(int count, int max_crossings,
                                                   std::uint64_t seed = knotslope::kDefaultSeed) {
  knotslope::RandomDiagramGenerator gen(seed);
  std::vector<knotslope::PDCode> out;
  for (int i = 0; i < count; ++i) out.push_back(gen.next(max_crossings));
  return out;
}

}  // namespace fixtures
