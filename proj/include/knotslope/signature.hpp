#pragma once

// Goeritz matrices and the Gordon-Litherland knot signature
//   sigma(K) = sigma(G) - mu(D).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

#include "knotslope/diagram.hpp"
#include "knotslope/error.hpp"
#include "knotslope/laurent.hpp"
#include "knotslope/surfaces.hpp"

namespace knotslope {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using BigRational = boost::multiprecision::cpp_rational;

struct SignatureDecomposition {
  int signature = 0;
  int nullity = 0;
  /// diagonal entries produced by the congruence, in elimination order
  std::vector<BigRational> pivots;

  /// Product of the pivots; zero when the form is degenerate.
  BigRational determinant() const {
    if (nullity > 0) return 0;
    BigRational det = 1;
    for (const auto& p : pivots) det *= p;
    return det;
  }
};

/// Exact congruence diagonalization over the rationals. Pivots on the
/// largest-magnitude remaining diagonal entry; if every remaining diagonal
/// entry vanishes but some a_ij does not, row/column j is added to i first.
inline SignatureDecomposition symmetric_signature(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::NotSymmetric, "matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i])
        throw Error(ErrorKind::NotSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from its transpose");

  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];

  SignatureDecomposition out;
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;

  while (!live.empty()) {
    std::optional<std::size_t> pivot;
    for (std::size_t k = 0; k < live.size(); ++k) {
      const auto& v = a[live[k]][live[k]];
      if (v == 0) continue;
      if (!pivot || abs(v) > abs(a[live[*pivot]][live[*pivot]])) pivot = k;
    }
    if (!pivot) {
      std::optional<std::pair<std::size_t, std::size_t>> hit;
      for (std::size_t x = 0; x < live.size() && !hit; ++x)
        for (std::size_t y = x + 1; y < live.size() && !hit; ++y)
          if (a[live[x]][live[y]] != 0) hit = {x, y};
      if (!hit) {
        out.nullity = static_cast<int>(live.size());
        break;
      }
      const std::size_t i = live[hit->first];
      const std::size_t j = live[hit->second];
      for (std::size_t k : live) a[i][k] += a[j][k];
      for (std::size_t k : live) a[k][i] += a[k][j];
      pivot = hit->first;
    }
    const std::size_t p = live[*pivot];
    const BigRational d = a[p][p];
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(*pivot));
    for (std::size_t r : live) {
      if (a[r][p] == 0) continue;
      const BigRational f = a[r][p] / d;
      for (std::size_t c : live) a[r][c] -= f * a[p][c];
    }
    out.pivots.push_back(d);
    out.signature += d > 0 ? 1 : -1;
  }
  return out;
}

/// eta(p) = -1 when the quadrants swept by turning the overstrand
/// counterclockwise (quadrants 1 and 3) are White, +1 when they are Black.
/// Calibrated so that the right-handed trefoil has signature -2.
inline int eta(const PlanarDiagram& d, const Coloring& coloring, int crossing) {
  return coloring[d.quadrant_face(crossing, 1)] == Color::White ? -1 : +1;
}

struct GoeritzMatrix {
  IntMatrix entries;
  /// white faces in index order; region_faces[0] is the unbounded white region R0
  std::vector<int> region_faces;
  std::vector<int> eta;
  int mu = 0;

  int size() const noexcept { return static_cast<int>(entries.size()); }
};

/// Rows are the bounded white regions R1..Rn in face-index order. A crossing
/// joining two distinct white regions adds eta to both diagonal entries and
/// -eta to the shared off-diagonal entry; a crossing touching one white region
/// twice contributes nothing. mu sums eta over the crossings exceptional for
/// the Black surface.
inline GoeritzMatrix goeritz_matrix(const PlanarDiagram& d, const Coloring& coloring) {
  GoeritzMatrix g;
  const int outer = d.outer_face();
  if (coloring[outer] != Color::White)
    throw Error(ErrorKind::DegenerateColoring, "the unbounded face must be White");
  g.region_faces.push_back(outer);
  std::vector<int> row_of_face(d.face_count(), -1);
  for (int f = 0; f < d.face_count(); ++f) {
    if (f == outer || coloring[f] != Color::White) continue;
    row_of_face[f] = static_cast<int>(g.region_faces.size()) - 1;
    g.region_faces.push_back(f);
  }
  const int rows = static_cast<int>(g.region_faces.size()) - 1;
  g.entries.assign(rows, std::vector<std::int64_t>(rows, 0));

  const auto exceptional = exceptional_crossings(d, coloring, Color::Black);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int e = eta(d, coloring, c);
    g.eta.push_back(e);
    if (exceptional[c]) g.mu += e;
    const int q = coloring[d.quadrant_face(c, 0)] == Color::White ? 0 : 1;
    const int fa = d.quadrant_face(c, q);
    const int fb = d.quadrant_face(c, q + 2);
    if (fa == fb) continue;
    const int ra = row_of_face[fa];
    const int rb = row_of_face[fb];
    if (ra >= 0) g.entries[ra][ra] += e;
    if (rb >= 0) g.entries[rb][rb] += e;
    if (ra >= 0 && rb >= 0) {
      g.entries[ra][rb] -= e;
      g.entries[rb][ra] -= e;
    }
  }
  return g;
}

struct SignatureResult {
  int sigma_g = 0;
  int mu = 0;
  int sigma_k = 0;
};

inline SignatureResult knot_signature(const PlanarDiagram& d) {
  const auto coloring = checkerboard_coloring(d);
  const auto g = goeritz_matrix(d, coloring);
  const auto decomposition = symmetric_signature(g.entries);
  if (decomposition.nullity != 0)
    throw Error(ErrorKind::InvariantViolation, "Goeritz matrix of a knot diagram is singular");
  return {decomposition.signature, g.mu, decomposition.signature - g.mu};
}

/// Lowest-index face whose outer-White coloring gives eta = -1 at every
/// crossing, if any. Alternating diagrams always have one.
inline std::optional<int> negative_shading_outer_face(const PlanarDiagram& d) {
  for (int f = 0; f < d.face_count(); ++f) {
    const auto shaded = with_outer_face(d, f);
    const auto coloring = checkerboard_coloring(shaded);
    bool all_negative = true;
    for (int c = 0; c < d.crossing_count() && all_negative; ++c) all_negative = eta(shaded, coloring, c) == -1;
    if (all_negative) return f;
  }
  return std::nullopt;
}

}  // namespace knotslope
