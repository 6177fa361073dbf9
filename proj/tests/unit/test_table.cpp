#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"

using namespace knotslope;

TEST(Table, TwoLineFile) {
  const auto t = parse_table(std::string("3_1: ") + fixtures::kLeftTrefoil + "\n4_1: " + fixtures::kFigureEight + "\n");
  ASSERT_EQ(t.size(), 2);
  EXPECT_EQ(t.entries[0].name, "3_1");
  EXPECT_EQ(t.entries[1].name, "4_1");
  EXPECT_EQ(t.entries[1].line, 2);
  ASSERT_TRUE(t.entries[1].code.has_value());
  EXPECT_EQ(t.entries[1].code->size(), 4);
}

TEST(Table, EmptyAndCommentOnly) {
  EXPECT_TRUE(parse_table("").empty());
  EXPECT_TRUE(parse_table("# header\n\n   \n").empty());
}

TEST(Table, DuplicateNamesNameTheLine) {
  try {
    parse_table("a: X(1,2,2,1)\n\nb: X(1,1,2,2)\na: X(1,1,2,2)\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateName);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(Table, CorruptLinesAreFlaggedNotFatal) {
  const auto t = parse_table("good: X(1,2,2,1)\nbad: X(1,2,3)\nno colon here\ngood2: X(1,1,2,2)\n");
  ASSERT_EQ(t.size(), 4);
  EXPECT_FALSE(t.entries[0].error);
  ASSERT_TRUE(t.entries[1].error);
  EXPECT_NE(t.entries[1].error->find("line 2"), std::string::npos);
  EXPECT_NE(t.entries[1].error->find("MalformedSyntax"), std::string::npos);
  ASSERT_TRUE(t.entries[2].error);
  EXPECT_FALSE(t.entries[3].error);
}

TEST(Table, ReferenceBlock) {
  const auto t = parse_table("3_1: X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) {alternating=Y signature=-2 determinant=3 "
                             "jones=1*t^1+1*t^3-1*t^4}  # right trefoil");
  ASSERT_EQ(t.size(), 1);
  const auto& e = t.entries[0].expected;
  EXPECT_EQ(e.alternating, true);
  EXPECT_EQ(e.signature, -2);
  EXPECT_EQ(*e.determinant, 3);
  EXPECT_EQ(e.jones->to_string(), "1*t^1 + 1*t^3 - 1*t^4");
}

TEST(Table, BadReferenceBlock) {
  EXPECT_TRUE(parse_table("k: X(1,2,2,1) {signature=x}").entries[0].error);
  EXPECT_TRUE(parse_table("k: X(1,2,2,1) {colour=red}").entries[0].error);
  EXPECT_TRUE(parse_table("k: X(1,2,2,1) {signature=0").entries[0].error);
}

TEST(Table, UnreadableFile) {
  try {
    load_table("/nonexistent/knots.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
  EXPECT_THROW(load_table(std::filesystem::temp_directory_path().string()), Error);
}

TEST(Table, BundledCorpus) {
  const auto& t = fixtures::corpus();
  EXPECT_EQ(t.size(), 249);
  int alternating = 0;
  for (const auto& e : t.entries) {
    ASSERT_FALSE(e.error) << *e.error;
    const auto d = build_diagram(*e.code);
    ASSERT_EQ(is_alternating(d), e.expected.alternating.value()) << e.name;
    alternating += is_alternating(d);
    if (is_alternating(d)) {
      ASSERT_TRUE(is_reduced(d)) << e.name;
      const int n = d.crossing_count();
      ASSERT_EQ(smooth(d, State::uniform(n, Smoothing::Positive)).count +
                    smooth(d, State::uniform(n, Smoothing::Negative)).count,
                n + 2)
          << e.name;
    }
  }
  EXPECT_EQ(alternating, 196);
}
