#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace knotslope;

namespace {

ErrorKind build_error_kind(const std::string& text, std::optional<int> outer = std::nullopt) {
  try {
    build_diagram(parse_pd(text), outer);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST(Diagram, TrefoilHasFiveFaces) {
  const auto d = build_diagram(fixtures::kLeftTrefoil);
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(d.face_count(), 5);
  EXPECT_EQ(d.outer_face(), 0);
}

TEST(Diagram, EmptyDiagramHasTwoFaces) {
  const auto d = build_diagram("");
  EXPECT_EQ(d.crossing_count(), 0);
  EXPECT_EQ(d.face_count(), 2);
}

TEST(Diagram, CorruptedTupleOrderIsNonPlanar) {
  EXPECT_EQ(build_error_kind(fixtures::kNonPlanar), ErrorKind::NonPlanar);
}

TEST(Diagram, OuterFaceOutOfRange) {
  EXPECT_EQ(build_error_kind(fixtures::kLeftTrefoil, 5), ErrorKind::InvalidFace);
  EXPECT_EQ(build_error_kind(fixtures::kLeftTrefoil, -1), ErrorKind::InvalidFace);
}

TEST(Diagram, FacesPartitionTheDarts) {
  const auto d = build_diagram(fixtures::kFigureEight);
  std::vector<int> seen(4 * d.crossing_count(), 0);
  for (int f = 0; f < d.face_count(); ++f)
    for (int dart : d.faces()[f].darts) {
      ++seen[dart];
      EXPECT_EQ(d.darts()[dart].face, f);
    }
  for (int s : seen) EXPECT_EQ(s, 1);
}

TEST(Diagram, TrefoilSigns) {
  const auto left = crossing_signs(build_diagram(fixtures::kLeftTrefoil));
  EXPECT_EQ(left.signs, (std::vector<int>{-1, -1, -1}));
  EXPECT_EQ(left.cr_plus, 0);
  EXPECT_EQ(left.cr_minus, 3);
  EXPECT_EQ(left.writhe, -3);
  const auto right = crossing_signs(mirror(build_diagram(fixtures::kLeftTrefoil)));
  EXPECT_EQ(right.cr_plus, 3);
  EXPECT_EQ(right.cr_minus, 0);
}

TEST(Diagram, EmptySigns) {
  const auto s = crossing_signs(build_diagram(""));
  EXPECT_TRUE(s.signs.empty());
  EXPECT_EQ(s.cr_plus + s.cr_minus + s.writhe, 0);
}

TEST(Diagram, FigureEightWritheIsZero) {
  const auto s = crossing_signs(build_diagram(fixtures::kFigureEight));
  EXPECT_EQ(s.cr_plus, 2);
  EXPECT_EQ(s.cr_minus, 2);
  EXPECT_EQ(s.writhe, 0);
}

TEST(Diagram, Alternation) {
  EXPECT_TRUE(is_alternating(build_diagram(fixtures::kLeftTrefoil)));
  EXPECT_TRUE(is_alternating(build_diagram("")));
  EXPECT_FALSE(is_alternating(build_diagram(fixtures::kNonAlternating)));
  EXPECT_FALSE(is_alternating(build_diagram(change_crossing(parse_pd(fixtures::kLeftTrefoil), 0))));
}

TEST(Diagram, TrefoilGluedToMirrorIsAlternating) {
  const auto d = build_diagram(fixtures::kTrefoilSumMirror);
  EXPECT_TRUE(is_alternating(d));
  EXPECT_TRUE(is_reduced(d));
  const auto left = jones_polynomial(build_diagram(fixtures::kLeftTrefoil));
  EXPECT_EQ(jones_polynomial(d), left * left.inverted_variable());
  EXPECT_EQ(knot_signature(d).sigma_k, 0);
}

TEST(Diagram, Reducedness) {
  EXPECT_TRUE(is_reduced(build_diagram(fixtures::kLeftTrefoil)));
  EXPECT_TRUE(is_reduced(build_diagram("")));
  EXPECT_FALSE(is_reduced(build_diagram(fixtures::kKink)));
}

TEST(Diagram, TrefoilColoring) {
  const auto d = build_diagram(fixtures::kLeftTrefoil);
  const auto c = checkerboard_coloring(d);
  EXPECT_EQ(c[d.outer_face()], Color::White);
  const int black = c.count(Color::Black);
  const int white = c.count(Color::White);
  EXPECT_EQ(black + white, 5);
  EXPECT_TRUE((black == 2 && white == 3) || (black == 3 && white == 2));
}

TEST(Diagram, EmptyColoring) {
  const auto d = build_diagram("");
  const auto c = checkerboard_coloring(d);
  EXPECT_EQ(c[d.outer_face()], Color::White);
  EXPECT_EQ(c[1 - d.outer_face()], Color::Black);
}

TEST(DiagramProperty, CorpusFaceCountAndEdgeColors) {
  for (const auto& code : fixtures::corpus_codes()) {
    const auto d = build_diagram(code);
    ASSERT_EQ(d.face_count(), code.size() + 2) << code.name;
    const auto c = checkerboard_coloring(d);
    for (int x = 0; x < d.crossing_count(); ++x)
      for (int p = 0; p < 4; ++p)
        ASSERT_NE(c[d.quadrant_face(x, (p + 3) % 4)], c[d.quadrant_face(x, p)]) << code.name;
  }
}

TEST(DiagramProperty, RecoloringIsGlobalSwapOrIdentity) {
  for (const auto& code : fixtures::random_codes(60, 7)) {
    const auto d = build_diagram(code);
    const auto base = checkerboard_coloring(d);
    for (int f = 0; f < d.face_count(); ++f) {
      const auto other = checkerboard_coloring(with_outer_face(d, f));
      const bool swapped = base[f] == Color::Black;
      for (int g = 0; g < d.face_count(); ++g)
        ASSERT_EQ(other[g], swapped ? opposite(base[g]) : base[g]) << code.to_string();
    }
  }
}

TEST(DiagramProperty, MirrorNegatesSignsAndKeepsAlternation) {
  for (const auto& code : fixtures::corpus_codes(8)) {
    const auto d = build_diagram(code);
    const auto m = mirror(d);
    const auto s = crossing_signs(d);
    const auto sm = crossing_signs(m);
    ASSERT_EQ(sm.writhe, -s.writhe);
    ASSERT_EQ(sm.cr_plus, s.cr_minus);
    ASSERT_EQ(is_alternating(m), is_alternating(d));
    ASSERT_EQ(is_reduced(m), is_reduced(d));
  }
}

TEST(DiagramProperty, CrossingChangeFlipsOneSign) {
  const auto code = parse_pd(fixtures::kFigureEight);
  const auto d = build_diagram(code);
  for (int c = 0; c < code.size(); ++c) {
    const auto changed = build_diagram(change_crossing(code, c));
    for (int x = 0; x < code.size(); ++x) EXPECT_EQ(changed.sign(x), x == c ? -d.sign(x) : d.sign(x));
  }
}
