#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace knotslope;

namespace {

int circles(const PlanarDiagram& d, Smoothing s) { return smooth(d, State::uniform(d.crossing_count(), s)).count; }

}  // namespace

TEST(StateSum, EmptyDiagramHasOneCircle) {
  const auto d = build_diagram("");
  EXPECT_EQ(smooth(d, State{}).count, 1);
  EXPECT_TRUE(is_adequate(d, State{}));
}

TEST(StateSum, TrefoilExtremeStates) {
  const auto d = build_diagram(fixtures::kLeftTrefoil);
  EXPECT_EQ(circles(d, Smoothing::Positive), 3);
  EXPECT_EQ(circles(d, Smoothing::Negative), 2);
  EXPECT_TRUE(is_adequate(d, State::uniform(3, Smoothing::Positive)));
  EXPECT_TRUE(is_adequate(d, State::uniform(3, Smoothing::Negative)));
}

TEST(StateSum, KinkAdequacy) {
  const auto d = build_diagram(fixtures::kKink);
  EXPECT_EQ(circles(d, Smoothing::Positive), 1);
  EXPECT_EQ(circles(d, Smoothing::Negative), 2);
  EXPECT_FALSE(is_adequate(d, State::uniform(1, Smoothing::Positive)));
}

TEST(StateSum, IncompleteStateRejected) {
  const auto d = build_diagram(fixtures::kLeftTrefoil);
  try {
    smooth(d, State::uniform(2, Smoothing::Positive));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IncompleteState);
  }
}

TEST(StateSum, BracketOfEmptyAndKink) {
  EXPECT_EQ(kauffman_bracket(build_diagram("")), LaurentPolynomial::constant(1, 'A'));
  const auto kink = kauffman_bracket(build_diagram(fixtures::kKink));
  EXPECT_EQ(kink, LaurentPolynomial::monomial(-1, -3, 'A'));
  EXPECT_EQ(kauffman_bracket(build_diagram("X(1,1,2,2)")), LaurentPolynomial::monomial(-1, 3, 'A'));
}

TEST(StateSum, JonesCalibration) {
  EXPECT_EQ(jones_polynomial(build_diagram("")), LaurentPolynomial::constant(1, 't'));
  EXPECT_EQ(jones_polynomial(build_diagram(fixtures::kKink)), LaurentPolynomial::constant(1, 't'));
  EXPECT_EQ(jones_polynomial(build_diagram(fixtures::kLeftTrefoil)).to_string(), "-1*t^-4 + 1*t^-3 + 1*t^-1");
  EXPECT_EQ(jones_polynomial(build_diagram(fixtures::kFigureEight)).to_string(),
            "1*t^-2 - 1*t^-1 + 1*t^0 - 1*t^1 + 1*t^2");
}

TEST(StateSum, CrossingCap) {
  const auto d = build_diagram(fixtures::kFigureEight);
  BracketOptions tight;
  tight.max_crossings = 3;
  try {
    kauffman_bracket(d, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooManyCrossings);
  }
}

TEST(StateSum, NonIntegralExponentIsFatal) {
  // a bracket that is not a knot bracket once normalized
  EXPECT_THROW(jones_from_bracket(LaurentPolynomial::monomial(1, 2, 'A'), 0), Error);
}

TEST(StateSum, DegreeBoundsExamples) {
  const auto left = degree_bounds(build_diagram(fixtures::kLeftTrefoil));
  EXPECT_EQ(left.upper, Rational(-1));
  EXPECT_EQ(left.lower, Rational(-4));
  const auto fig8 = degree_bounds(build_diagram(fixtures::kFigureEight));
  EXPECT_EQ(fig8.upper, Rational(2));
  EXPECT_EQ(fig8.lower, Rational(-2));
  const auto empty = degree_bounds(build_diagram(""));
  EXPECT_EQ(empty.upper, Rational(0));
  EXPECT_EQ(empty.lower, Rational(0));
}

TEST(StateSum, JonesDegrees) {
  EXPECT_EQ(jones_degrees(LaurentPolynomial::constant(1)).min_deg, 0);
  const auto t = jones_degrees(LaurentPolynomial::parse("-1*t^-4 + 1*t^-3 + 1*t^-1"));
  EXPECT_EQ(t.min_deg, -4);
  EXPECT_EQ(t.max_deg, -1);
  const auto f = jones_degrees(LaurentPolynomial::parse("1*t^-2 - 1*t^-1 + 1*t^0 - 1*t^1 + 1*t^2"));
  EXPECT_EQ(f.min_deg, -2);
  EXPECT_EQ(f.max_deg, 2);
  EXPECT_THROW(jones_degrees(LaurentPolynomial('t')), Error);
}

TEST(StateSumProperty, SingleFlipChangesCircleCountByOne) {
  for (const auto& code : fixtures::random_codes(40, 6)) {
    const auto d = build_diagram(code);
    const int n = d.crossing_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const int base = smooth(d, State::from_mask(n, mask)).count;
      for (int c = 0; c < n; ++c) {
        const int flipped = smooth(d, State::from_mask(n, mask ^ (std::uint64_t{1} << c))).count;
        ASSERT_EQ(std::abs(flipped - base), 1) << code.to_string();
      }
    }
  }
}

TEST(StateSumProperty, JonesDegreesWithinBounds) {
  for (const auto& code : fixtures::random_codes(80, 8, 7)) {
    const auto d = build_diagram(code);
    const auto deg = jones_degrees(jones_polynomial(d));
    const auto b = degree_bounds(d);
    const int n = d.crossing_count();
    ASSERT_LE(Rational(deg.max_deg), b.upper) << code.to_string();
    ASSERT_GE(Rational(deg.min_deg), b.lower) << code.to_string();
    if (is_adequate(d, State::uniform(n, Smoothing::Negative))) {
      ASSERT_EQ(Rational(deg.max_deg), b.upper);
    }
    if (is_adequate(d, State::uniform(n, Smoothing::Positive))) {
      ASSERT_EQ(Rational(deg.min_deg), b.lower);
    }
  }
}

TEST(StateSumProperty, MirrorInvertsJones) {
  for (const auto& code : fixtures::corpus_codes(9)) {
    const auto d = build_diagram(code);
    ASSERT_EQ(jones_polynomial(mirror(d)), jones_polynomial(d).inverted_variable()) << code.name;
  }
}

TEST(StateSumProperty, ReducedAlternatingCircleIdentity) {
  for (const auto& code : fixtures::corpus_codes()) {
    const auto d = build_diagram(code);
    if (!is_alternating(d) || !is_reduced(d)) continue;
    const int n = d.crossing_count();
    ASSERT_EQ(circles(d, Smoothing::Positive) + circles(d, Smoothing::Negative), n + 2) << code.name;
    ASSERT_TRUE(is_adequate(d, State::uniform(n, Smoothing::Positive)));
    ASSERT_TRUE(is_adequate(d, State::uniform(n, Smoothing::Negative)));
    const auto deg = jones_degrees(jones_polynomial(d));
    ASSERT_EQ(deg.max_deg - deg.min_deg, n) << code.name;
  }
}
