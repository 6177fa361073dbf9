#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace knotslope;

TEST(RandomDiagram, SameSeedSameSequence) {
  EXPECT_EQ(fixtures::random_codes(20, 8, 5), fixtures::random_codes(20, 8, 5));
  EXPECT_NE(fixtures::random_codes(20, 8, 5), fixtures::random_codes(20, 8, 6));
}

TEST(RandomDiagram, ProducesValidKnotDiagrams) {
  int non_alternating = 0;
  for (const auto& code : fixtures::random_codes(200, 8)) {
    ASSERT_GE(code.size(), 1);
    ASSERT_LE(code.size(), 8);
    ASSERT_NO_THROW(validate_pd(code));
    const auto d = build_diagram(code);
    ASSERT_EQ(d.face_count(), code.size() + 2);
    non_alternating += !is_alternating(d);
  }
  EXPECT_GE(non_alternating, 20);
}

TEST(RandomDiagram, LabelsFollowOrientation) {
  for (const auto& code : fixtures::random_codes(50, 8, 17)) {
    const auto d = build_diagram(code);
    const auto& passages = d.passages();
    const int edges = static_cast<int>(passages.size());
    // consecutive passages are entered along consecutive labels
    for (int i = 0; i < edges; ++i) {
      const int label = code.crossings[passages[i] / 4][passages[i] % 4];
      const int next = code.crossings[passages[(i + 1) % edges] / 4][passages[(i + 1) % edges] % 4];
      ASSERT_EQ(next, label % edges + 1) << code.to_string();
    }
  }
}

TEST(RandomDiagram, RejectsZeroBudget) { EXPECT_THROW(RandomDiagramGenerator().next(0), Error); }
