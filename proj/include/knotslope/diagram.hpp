#pragma once

// Oriented planar combinatorial map of a knot diagram.
//
// Darts are indexed 4*crossing + position, positions counterclockwise with
// 0/2 on the understrand and 1/3 on the overstrand. Quadrant q of a crossing
// is the corner between positions q and q+1. Faces are orbits of
//   next(d) = ccw_successor(partner(d)),
// and the dart (c, q+1) lies in the orbit of the face filling quadrant q.

#include <array>
#include <optional>
#include <queue>
#include <vector>

#include "knotslope/error.hpp"
#include "knotslope/pd_code.hpp"

namespace knotslope {

enum class Color { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

struct Face {
  std::vector<int> darts;
};

struct Dart {
  int crossing = 0;
  int position = 0;
  int label = 0;
  int partner = 0;
  int face = 0;
  bool incoming = false;
  bool over = false;
};

class PlanarDiagram {
 public:
  const PDCode& code() const noexcept { return code_; }
  int crossing_count() const noexcept { return code_.size(); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  int outer_face() const noexcept { return outer_face_; }

  const std::vector<Dart>& darts() const noexcept { return darts_; }
  const Dart& dart(int crossing, int position) const { return darts_[4 * crossing + position]; }
  const std::vector<Face>& faces() const noexcept { return faces_; }

  /// +1 for a positive (right-handed) crossing, -1 for a negative one.
  int sign(int crossing) const { return signs_[crossing]; }
  const std::vector<int>& signs() const noexcept { return signs_; }

  /// Face filling quadrant q (between positions q and q+1) of a crossing.
  int quadrant_face(int crossing, int quadrant) const {
    return darts_[4 * crossing + (quadrant + 1) % 4].face;
  }

  /// Incoming position of the overstrand (1 or 3).
  int over_in(int crossing) const { return over_in_[crossing]; }

  /// Entered darts in the order the knot visits them.
  const std::vector<int>& passages() const noexcept { return passages_; }

  friend PlanarDiagram build_diagram(const PDCode& code, std::optional<int> outer);
  friend PlanarDiagram with_outer_face(const PlanarDiagram& d, int outer);

 private:
  PDCode code_;
  std::vector<Dart> darts_;
  std::vector<Face> faces_;
  std::vector<int> signs_;
  std::vector<int> over_in_;
  std::vector<int> passages_;
  int outer_face_ = 0;
};

/// Builds the oriented map. Faces are numbered in discovery order starting
/// from the dart of edge 1 at position 0 (or its first occurrence if edge 1
/// is never an incoming understrand); that first face is the default outer face.
inline PlanarDiagram build_diagram(const PDCode& code, std::optional<int> outer = std::nullopt) {
  PlanarDiagram d;
  d.code_ = code;
  const int n = code.size();
  const auto trace = detail::trace_strands(code.crossings);
  d.over_in_ = trace.over_in;
  d.passages_ = trace.passages;

  if (n == 0) {
    d.faces_.resize(2);
  } else {
    d.darts_.resize(4 * n);
    std::vector<int> first_of_label(2 * n + 1, -1);
    for (int c = 0; c < n; ++c) {
      for (int p = 0; p < 4; ++p) {
        const int idx = 4 * c + p;
        auto& dart = d.darts_[idx];
        dart.crossing = c;
        dart.position = p;
        dart.label = code.crossings[c][p];
        dart.over = (p % 2 == 1);
        dart.incoming = (p == 0) || (p == trace.over_in[c]);
        int& first = first_of_label[dart.label];
        if (first < 0) {
          first = idx;
        } else {
          dart.partner = first;
          d.darts_[first].partner = idx;
        }
      }
      d.signs_.push_back(trace.over_in[c] == 3 ? +1 : -1);
    }

    int start = -1;
    for (int idx = 0; idx < 4 * n && start < 0; ++idx)
      if (d.darts_[idx].label == 1 && d.darts_[idx].position == 0) start = idx;
    if (start < 0) start = first_of_label[1];

    std::vector<int> face_of(4 * n, -1);
    auto trace_face = [&](int from) {
      Face face;
      const int id = static_cast<int>(d.faces_.size());
      int cur = from;
      do {
        face_of[cur] = id;
        face.darts.push_back(cur);
        const int partner = d.darts_[cur].partner;
        cur = 4 * (partner / 4) + (partner % 4 + 1) % 4;
      } while (cur != from);
      d.faces_.push_back(std::move(face));
    };
    trace_face(start);
    for (int idx = 0; idx < 4 * n; ++idx)
      if (face_of[idx] < 0) trace_face(idx);
    for (int idx = 0; idx < 4 * n; ++idx) d.darts_[idx].face = face_of[idx];

    if (d.face_count() != n + 2)
      throw Error(ErrorKind::NonPlanar, std::to_string(d.face_count()) + " faces for " + std::to_string(n) +
                                            " crossings (a planar diagram has " + std::to_string(n + 2) + ")");
  }

  if (outer) {
    if (*outer < 0 || *outer >= d.face_count())
      throw Error(ErrorKind::InvalidFace, "outer face " + std::to_string(*outer) + " out of range 0.." +
                                              std::to_string(d.face_count() - 1));
    d.outer_face_ = *outer;
  }
  return d;
}

inline PlanarDiagram build_diagram(std::string_view pd_text, std::optional<int> outer = std::nullopt) {
  return build_diagram(parse_pd(pd_text), outer);
}

/// Same map with a different face designated unbounded.
inline PlanarDiagram with_outer_face(const PlanarDiagram& d, int outer) {
  if (outer < 0 || outer >= d.face_count())
    throw Error(ErrorKind::InvalidFace, "outer face " + std::to_string(outer) + " out of range");
  PlanarDiagram out = d;
  out.outer_face_ = outer;
  return out;
}

inline PlanarDiagram mirror(const PlanarDiagram& d) {
  return build_diagram(mirror(d.code()), d.outer_face());
}

struct CrossingSigns {
  std::vector<int> signs;
  int cr_plus = 0;
  int cr_minus = 0;
  int writhe = 0;
};

inline CrossingSigns crossing_signs(const PlanarDiagram& d) {
  CrossingSigns out;
  out.signs = d.signs();
  for (int s : out.signs) (s > 0 ? out.cr_plus : out.cr_minus)++;
  out.writhe = out.cr_plus - out.cr_minus;
  return out;
}

/// Over and under passages alternate along the knot.
inline bool is_alternating(const PlanarDiagram& d) {
  const auto& passages = d.passages();
  const std::size_t m = passages.size();
  for (std::size_t i = 0; i < m; ++i) {
    const bool over_here = passages[i] % 2 == 1;
    const bool over_next = passages[(i + 1) % m] % 2 == 1;
    if (over_here == over_next) return false;
  }
  return true;
}

/// No crossing meets the same face in two opposite quadrants (no nugatory crossing).
inline bool is_reduced(const PlanarDiagram& d) {
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int q = 0; q < 2; ++q)
      if (d.quadrant_face(c, q) == d.quadrant_face(c, q + 2)) return false;
  return true;
}

struct Coloring {
  std::vector<Color> face_color;

  Color operator[](int face) const { return face_color[face]; }
  int count(Color c) const {
    int k = 0;
    for (Color x : face_color) k += (x == c);
    return k;
  }
};

/// The unique two-coloring with the outer face White in which the two faces
/// along every edge differ.
inline Coloring checkerboard_coloring(const PlanarDiagram& d) {
  Coloring coloring;
  const int faces = d.face_count();
  if (d.crossing_count() == 0) {
    coloring.face_color.assign(2, Color::Black);
    coloring.face_color[d.outer_face()] = Color::White;
    return coloring;
  }
  // Across the edge at dart (c,p) lie quadrants p-1 and p.
  std::vector<std::vector<int>> neighbours(faces);
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int p = 0; p < 4; ++p) {
      const int a = d.quadrant_face(c, (p + 3) % 4);
      const int b = d.quadrant_face(c, p);
      neighbours[a].push_back(b);
      neighbours[b].push_back(a);
    }
  std::vector<int> color(faces, -1);
  std::queue<int> pending;
  color[d.outer_face()] = 0;
  pending.push(d.outer_face());
  while (!pending.empty()) {
    const int f = pending.front();
    pending.pop();
    for (int g : neighbours[f]) {
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        pending.push(g);
      } else if (color[g] == color[f]) {
        throw Error(ErrorKind::ColoringInconsistent, "faces " + std::to_string(f) + " and " +
                                                          std::to_string(g) + " share an edge and a color");
      }
    }
  }
  for (int c : color)
    coloring.face_color.push_back(c == 0 ? Color::White : Color::Black);
  return coloring;
}

}  // namespace knotslope
