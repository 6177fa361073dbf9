#pragma once

// Seeded random knot diagrams for property tests.
//
// Diagrams grow from the round unknot by inserting kinks and bigons whose
// local cyclic orders and over/under data are drawn at random. Each candidate
// tuple set is kept only if it builds into a planar single-component map;
// otherwise it is rejected and redrawn. Finally every crossing is switched
// with probability 1/2.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "knotslope/diagram.hpp"
#include "knotslope/error.hpp"
#include "knotslope/pd_code.hpp"

namespace knotslope {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

namespace detail {

/// Renames edges to 1..2n along the orientation, starting with the edge
/// leaving crossing 0 on its understrand.
inline PDCode relabel_along_orientation(const std::vector<CrossingTuple>& crossings) {
  PDCode code;
  code.crossings = crossings;
  if (crossings.empty()) return code;
  const auto trace = trace_strands(crossings);
  std::map<int, int> rename;
  int next = 1;
  // passages are entered darts; the edge into passage i leaves passage i-1
  for (int dart : trace.passages) {
    const int label = crossings[dart / 4][dart % 4];
    if (!rename.count(label)) rename[label] = next++;
  }
  for (auto& x : code.crossings)
    for (int& label : x) label = rename.at(label);
  return code;
}

inline CrossingTuple rotate_to(const std::array<int, 4>& ccw, int start) {
  return {ccw[start], ccw[(start + 1) % 4], ccw[(start + 2) % 4], ccw[(start + 3) % 4]};
}

struct EdgeEnds {
  int tail = -1;  // dart where the edge leaves a crossing
  int head = -1;  // dart where it enters one
};

inline std::map<int, EdgeEnds> edge_ends(const std::vector<CrossingTuple>& crossings) {
  const auto trace = trace_strands(crossings);
  std::map<int, EdgeEnds> ends;
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c)
    for (int p = 0; p < 4; ++p) {
      const bool incoming = p == 0 || p == trace.over_in[c];
      auto& e = ends[crossings[c][p]];
      (incoming ? e.head : e.tail) = 4 * c + p;
    }
  return ends;
}

}  // namespace detail

class RandomDiagramGenerator {
 public:
  explicit RandomDiagramGenerator(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  /// A planar single-component diagram with between 1 and max_crossings crossings.
  PDCode next(int max_crossings) {
    if (max_crossings < 1) throw Error(ErrorKind::TooManyCrossings, "need room for at least one crossing");
    const int target = std::uniform_int_distribution<int>(1, max_crossings)(rng_);
    std::vector<CrossingTuple> crossings;
    while (static_cast<int>(crossings.size()) < target) {
      const bool room_for_bigon = static_cast<int>(crossings.size()) + 2 <= target;
      const bool bigon = room_for_bigon && !crossings.empty() && coin(0.7);
      auto candidate = bigon ? insert_bigon(crossings) : insert_kink(crossings);
      if (accept(candidate)) crossings = std::move(candidate);
    }
    PDCode code = detail::relabel_along_orientation(crossings);
    for (int c = 0; c < code.size(); ++c)
      if (coin(0.5)) code = change_crossing(code, c);
    return code;
  }

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  static bool accept(const std::vector<CrossingTuple>& crossings) {
    try {
      build_diagram(detail::relabel_along_orientation(crossings));
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  int fresh_label(const std::vector<CrossingTuple>& crossings) {
    int top = 0;
    for (const auto& x : crossings)
      for (int label : x) top = std::max(top, label);
    return top + 1;
  }

  /// Splits an edge e into e -> kink crossing -> loop -> kink crossing -> e2.
  std::vector<CrossingTuple> insert_kink(std::vector<CrossingTuple> crossings) {
    if (crossings.empty()) {
      // X(1,2,2,1) or its mirror
      return {coin(0.5) ? CrossingTuple{1, 2, 2, 1} : CrossingTuple{1, 1, 2, 2}};
    }
    const auto ends = detail::edge_ends(crossings);
    auto it = ends.begin();
    std::advance(it, pick(static_cast<int>(ends.size())));
    const int e = it->first;
    const int loop = fresh_label(crossings);
    const int e2 = loop + 1;
    crossings[it->second.head / 4][it->second.head % 4] = e2;

    const bool loop_returns_at_1 = coin(0.5);
    const std::array<int, 4> ccw{e, loop_returns_at_1 ? loop : e2, loop, loop_returns_at_1 ? e2 : loop};
    const bool first_pass_under = coin(0.5);
    crossings.push_back(detail::rotate_to(ccw, first_pass_under ? 0 : (loop_returns_at_1 ? 1 : 3)));
    return crossings;
  }

  /// Pushes one edge across another, creating two crossings with random
  /// local data; non-planar outcomes are rejected by the caller.
  std::vector<CrossingTuple> insert_bigon(std::vector<CrossingTuple> crossings) {
    const auto ends = detail::edge_ends(crossings);
    std::vector<int> labels;
    for (const auto& [label, _] : ends) labels.push_back(label);
    const int e = labels[pick(static_cast<int>(labels.size()))];
    const int g = labels[pick(static_cast<int>(labels.size()))];
    if (e == g) return crossings;  // rejected: no new crossings, loop retries

    const int base = fresh_label(crossings);
    const int em = base, eb = base + 1, gm = base + 2, gb = base + 3;
    const auto& e_ends = ends.at(e);
    const auto& g_ends = ends.at(g);
    crossings[e_ends.head / 4][e_ends.head % 4] = eb;
    crossings[g_ends.head / 4][g_ends.head % 4] = gb;

    // e passes P then Q; g passes them in either order
    const bool g_meets_p_first = coin(0.5);
    const int g_in_p = g_meets_p_first ? g : gm;
    const int g_out_p = g_meets_p_first ? gm : gb;
    const int g_in_q = g_meets_p_first ? gm : g;
    const int g_out_q = g_meets_p_first ? gb : gm;

    auto make = [&](int e_in, int e_out, int g_in, int g_out) {
      const bool g_in_at_1 = coin(0.5);
      const std::array<int, 4> ccw{e_in, g_in_at_1 ? g_in : g_out, e_out, g_in_at_1 ? g_out : g_in};
      const bool e_under = coin(0.5);
      return detail::rotate_to(ccw, e_under ? 0 : (g_in_at_1 ? 1 : 3));
    };
    crossings.push_back(make(e, em, g_in_p, g_out_p));
    crossings.push_back(make(em, eb, g_in_q, g_out_q));
    return crossings;
  }

  std::mt19937_64 rng_;
};

}  // namespace knotslope
