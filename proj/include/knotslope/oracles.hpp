#pragma once

// Independent cross-checks for the state sum and the Goeritz signature.
//
// bracket_oracle expands crossings one at a time, tracking how the open
// strand ends are paired, and memoizes on that pairing.
//
// signature_oracle builds the Seifert surface of the diagram: Seifert circles
// bound disks stacked by nesting depth, joined by a half-twisted band at each
// crossing. H1 is generated by the fundamental cycles of the Seifert graph.
// For loops a, b the symmetrized Seifert form lk(a, b+) + lk(a, b-) is the sum
// of two local terms:
//   * twist: each band traversed by both loops contributes -sign(x) d_a d_b,
//     d = +-1 the traversal direction;
//   * nesting: when a band runs from a circle to a circle nested directly
//     inside it, the band hangs over the outer disk. A loop routed along the
//     outer circle (counterclockwise, just inside it) passes under the band
//     and picks up -d_b for every traversal of b it passes, d = +1 inward.
// Loops on distinct disks never overlap in projection, and crossings between
// two loops on the same disk cancel against the two push-offs.

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>
#include <utility>
#include <vector>

#include "knotslope/diagram.hpp"
#include "knotslope/error.hpp"
#include "knotslope/laurent.hpp"
#include "knotslope/signature.hpp"
#include "knotslope/state_sum.hpp"
#include "knotslope/surfaces.hpp"

namespace knotslope {

inline constexpr int kOracleCrossingLimit = 10;

namespace detail {

class SkeinExpansion {
 public:
  explicit SkeinExpansion(const PlanarDiagram& d) : d_(d), n_(d.crossing_count()) {}

  /// polynomial in A per number of closed circles
  using Partial = std::map<int, LaurentPolynomial>;

  Partial expand(int crossing, std::vector<int> mate) {
    if (crossing == n_) return {{0, LaurentPolynomial::constant(1, 'A')}};
    std::vector<int> key(mate.begin() + 4 * crossing, mate.end());
    auto memo_key = std::make_pair(crossing, key);
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;

    Partial result;
    for (auto s : {Smoothing::Positive, Smoothing::Negative}) {
      std::vector<int> next = mate;
      int closed = 0;
      for (auto [p, q] : smoothing_arcs(s)) {
        const int x = 4 * crossing + p;
        const int y = 4 * crossing + q;
        const int mx = next[x];
        const int my = next[y];
        if (mx == y) {
          ++closed;
        } else {
          next[mx] = my;
          next[my] = mx;
        }
        next[x] = next[y] = -1;
      }
      const int exponent = s == Smoothing::Positive ? 1 : -1;
      for (const auto& [k, poly] : expand(crossing + 1, next)) {
        auto [it, inserted] = result.try_emplace(k + closed, LaurentPolynomial('A'));
        it->second += poly.shifted(exponent);
      }
    }
    memo_.emplace(std::move(memo_key), result);
    return result;
  }

 private:
  const PlanarDiagram& d_;
  int n_;
  std::map<std::pair<int, std::vector<int>>, Partial> memo_;
};

}  // namespace detail

inline LaurentPolynomial bracket_oracle(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  if (n > kOracleCrossingLimit)
    throw Error(ErrorKind::TooManyCrossings, "skein oracle is limited to " + std::to_string(kOracleCrossingLimit) +
                                                  " crossings");
  if (n == 0) return LaurentPolynomial::constant(1, 'A');
  std::vector<int> mate(4 * n);
  for (const auto& dart : d.darts()) mate[4 * dart.crossing + dart.position] = dart.partner;
  detail::SkeinExpansion expansion(d);
  const auto partial = expansion.expand(0, mate);
  const LaurentPolynomial delta = loop_value();
  LaurentPolynomial bracket('A');
  for (const auto& [circles, poly] : partial) {
    if (circles < 1) throw Error(ErrorKind::InvariantViolation, "state without circles");
    bracket += poly * delta.pow(static_cast<unsigned>(circles - 1));
  }
  return bracket;
}

/// Seifert circles, their nesting, and the Seifert graph.
struct SeifertSurface {
  StateCircles circles;
  /// circles at each crossing: first = circle of the arc through position 0
  std::vector<std::pair<int, int>> band_circles;
  /// parent circle of the band at each crossing (the one whose disk lies
  /// under the band), or -1 when the two circles are not nested
  std::vector<int> band_parent;
  /// crossings in counterclockwise order around each circle
  std::vector<std::vector<int>> feet_ccw;
};

inline SeifertSurface seifert_surface(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  SeifertSurface surface;
  State seifert;
  for (int c = 0; c < n; ++c) seifert.choice.push_back(seifert_smoothing(d, c));
  surface.circles = smooth(d, seifert);
  const int s = surface.circles.count;
  const auto& circle_of = surface.circles.circle_of_dart;

  // inside[f][k]: face f lies inside circle k. Crossing an edge flips the
  // parity of the circle that edge belongs to; the merged (channel) quadrants
  // at a crossing are on the same side of every circle.
  std::vector<std::vector<std::pair<int, int>>> links(d.face_count());
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      const int a = d.quadrant_face(c, (p + 3) % 4);
      const int b = d.quadrant_face(c, p);
      links[a].emplace_back(b, circle_of[4 * c + p]);
      links[b].emplace_back(a, circle_of[4 * c + p]);
    }
    const int m = seifert_merged_quadrant(d, c);
    const int a = d.quadrant_face(c, m);
    const int b = d.quadrant_face(c, m + 2);
    links[a].emplace_back(b, -1);
    links[b].emplace_back(a, -1);
  }
  std::vector<std::vector<char>> inside(d.face_count());
  std::vector<char> seen(d.face_count(), 0);
  std::queue<int> pending;
  inside[d.outer_face()].assign(s, 0);
  seen[d.outer_face()] = 1;
  pending.push(d.outer_face());
  while (!pending.empty()) {
    const int f = pending.front();
    pending.pop();
    for (auto [g, k] : links[f]) {
      auto parity = inside[f];
      if (k >= 0) parity[k] ^= 1;
      if (!seen[g]) {
        seen[g] = 1;
        inside[g] = std::move(parity);
        pending.push(g);
      } else if (inside[g] != parity) {
        throw Error(ErrorKind::InvariantViolation, "Seifert circle parity is inconsistent");
      }
    }
  }

  surface.band_circles.resize(n);
  surface.band_parent.assign(n, -1);
  for (int c = 0; c < n; ++c) {
    const auto arcs = smoothing_arcs(seifert.choice[c]);
    const int k = circle_of[4 * c + arcs[0].first];
    const int m = circle_of[4 * c + arcs[1].first];
    if (k == m) throw Error(ErrorKind::InvariantViolation, "Seifert band joins a circle to itself");
    surface.band_circles[c] = {k, m};
    const int channel = d.quadrant_face(c, seifert_merged_quadrant(d, c));
    if (inside[channel][k]) surface.band_parent[c] = k;
    if (inside[channel][m]) surface.band_parent[c] = m;
  }

  // Walk each circle along the knot orientation, then flip to ccw if the
  // interior is on the right.
  surface.feet_ccw.assign(s, {});
  std::vector<char> walked(s, 0);
  for (const auto& dart : d.darts()) {
    const int start = 4 * dart.crossing + dart.position;
    if (dart.incoming) continue;
    const int k = circle_of[start];
    if (walked[k]) continue;
    walked[k] = 1;
    const bool ccw = inside[d.quadrant_face(dart.crossing, dart.position)][k];
    std::vector<int> feet;
    int out = start;
    do {
      const int in = d.darts()[out].partner;
      const int c = in / 4;
      const int p = in % 4;
      feet.push_back(c);
      int next = -1;
      for (auto [x, y] : smoothing_arcs(seifert.choice[c])) {
        if (x == p) next = y;
        if (y == p) next = x;
      }
      out = 4 * c + next;
    } while (out != start);
    if (!ccw) std::reverse(feet.begin(), feet.end());
    surface.feet_ccw[k] = std::move(feet);
  }
  return surface;
}

/// Symmetrized Seifert form V + V^T on the fundamental cycles of the Seifert graph.
inline IntMatrix symmetrized_seifert_form(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return {};
  const auto surface = seifert_surface(d);
  const int s = surface.circles.count;

  // spanning tree of the Seifert graph by BFS from circle 0
  std::vector<std::vector<std::pair<int, int>>> adjacent(s);  // (crossing, other circle)
  for (int c = 0; c < n; ++c) {
    auto [k, m] = surface.band_circles[c];
    adjacent[k].emplace_back(c, m);
    adjacent[m].emplace_back(c, k);
  }
  std::vector<int> parent_band(s, -1), parent_circle(s, -1), depth(s, -1);
  std::vector<char> tree_band(n, 0);
  std::queue<int> pending;
  depth[0] = 0;
  pending.push(0);
  while (!pending.empty()) {
    const int v = pending.front();
    pending.pop();
    for (auto [c, w] : adjacent[v]) {
      if (depth[w] >= 0) continue;
      depth[w] = depth[v] + 1;
      parent_band[w] = c;
      parent_circle[w] = v;
      tree_band[c] = 1;
      pending.push(w);
    }
  }
  if (std::count(depth.begin(), depth.end(), -1) != 0)
    throw Error(ErrorKind::InvariantViolation, "Seifert graph is disconnected");

  // A traversal crosses band `crossing` from circle `from` to circle `to`.
  struct Traversal {
    int crossing;
    int from;
    int to;
  };
  std::vector<std::vector<Traversal>> loops;
  for (int c = 0; c < n; ++c) {
    if (tree_band[c]) continue;
    auto [u, v] = surface.band_circles[c];
    // path u -> lca <- v through the tree, closed by band c from v to u
    std::vector<Traversal> up_u, up_v;
    int a = u, b = v;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        up_u.push_back({parent_band[a], a, parent_circle[a]});
        a = parent_circle[a];
      } else {
        up_v.push_back({parent_band[b], b, parent_circle[b]});
        b = parent_circle[b];
      }
    }
    std::vector<Traversal> loop = up_u;
    for (auto it = up_v.rbegin(); it != up_v.rend(); ++it) loop.push_back({it->crossing, it->to, it->from});
    loop.push_back({c, v, u});
    loops.push_back(std::move(loop));
  }
  const int rank = static_cast<int>(loops.size());

  // reference direction of each band: parent -> child, else lower -> higher circle
  auto direction = [&](const Traversal& t) {
    const int parent = surface.band_parent[t.crossing];
    if (parent >= 0) return t.from == parent ? +1 : -1;
    return t.from < t.to ? +1 : -1;
  };

  std::vector<std::map<int, int>> traversal_direction(rank);  // crossing -> d
  for (int i = 0; i < rank; ++i)
    for (const auto& t : loops[i]) traversal_direction[i][t.crossing] = direction(t);

  IntMatrix form(rank, std::vector<std::int64_t>(rank, 0));
  // twist terms
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      for (const auto& [c, di] : traversal_direction[i])
        if (auto it = traversal_direction[j].find(c); it != traversal_direction[j].end())
          form[i][j] += -d.sign(c) * di * it->second;

  // nesting terms: position of each foot along its parent circle, ccw
  std::vector<int> rank_on_circle(n, -1);
  for (int k = 0; k < s; ++k)
    for (int idx = 0; idx < static_cast<int>(surface.feet_ccw[k].size()); ++idx) {
      const int c = surface.feet_ccw[k][idx];
      if (surface.band_parent[c] == k) rank_on_circle[c] = idx;
    }
  // point on a parent circle where loop `j` meets band `c`: (foot rank, lateral slot = j)
  using Point = std::pair<int, int>;
  std::vector<std::vector<std::tuple<Point, int, int>>> marks(s);  // (point, loop, d)
  for (int j = 0; j < rank; ++j)
    for (const auto& [c, dj] : traversal_direction[j]) {
      const int parent = surface.band_parent[c];
      if (parent >= 0) marks[parent].push_back({{rank_on_circle[c], j}, j, dj});
    }

  IntMatrix passes(rank, std::vector<std::int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    const auto& loop = loops[i];
    const int len = static_cast<int>(loop.size());
    for (int step = 0; step < len; ++step) {
      const auto& arrive = loop[step];
      const auto& leave = loop[(step + 1) % len];
      const int k = arrive.to;
      const auto& feet = surface.feet_ccw[k];
      auto foot_rank = [&](int c) {
        return static_cast<int>(std::find(feet.begin(), feet.end(), c) - feet.begin());
      };
      const Point from{foot_rank(arrive.crossing), i};
      const Point to{foot_rank(leave.crossing), i};
      for (const auto& [point, j, dj] : marks[k]) {
        const bool between = from < to ? (from < point && point < to) : (point > from || point < to);
        if (between) passes[i][j] += -dj;
      }
    }
  }
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) form[i][j] += passes[i][j] + passes[j][i];
  return form;
}

inline int signature_oracle(const PlanarDiagram& d) {
  if (d.crossing_count() > kOracleCrossingLimit)
    throw Error(ErrorKind::TooManyCrossings, "Seifert oracle is limited to " +
                                                  std::to_string(kOracleCrossingLimit) + " crossings");
  const auto decomposition = symmetric_signature(symmetrized_seifert_form(d));
  if (decomposition.nullity != 0)
    throw Error(ErrorKind::InvariantViolation, "symmetrized Seifert form is degenerate");
  return decomposition.signature;
}

}  // namespace knotslope
