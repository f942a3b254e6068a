#include <gtest/gtest.h>

#include "lexsemi/error.hpp"
#include "lexsemi/generators.hpp"
#include "lexsemi/space.hpp"
#include "test_oracles.hpp"

namespace lexsemi {
namespace {

const Line kTwos{ValueSeq{{}, {2}}, ValueSeq{{}, {2}}};
const Line kTwoThree{ValueSeq{{}, {2, 3}}, ValueSeq{{}, {2, 3}}};
// Right side has product 3.
const Line kFiniteRight{ValueSeq{{}, {2}}, ValueSeq{{3}, {}}};

Point pt(std::string_view text, const Line& line = kTwos) { return parse_point(text, line); }
Point canon(std::string_view text, const Line& line = kTwos) { return canonical(pt(text, line)); }
Rational q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

TEST(Point, ParsePrintRoundTrip) {
  const char* text = "point{left: {-3:2, -1:2}, right: [2,1], tail: cycle[2,1]}";
  EXPECT_EQ(to_string(pt(text)), text);
  EXPECT_EQ(to_string(pt("point{}")), "point{left: {}, right: [], tail: ones}");
  EXPECT_EQ(to_string(pt("point{tail: max, right: [1]}")),
            "point{left: {}, right: [1], tail: max}");
}

TEST(Point, ParseErrors) {
  EXPECT_THROW(pt("point{right: [3]}"), ParseError);
  EXPECT_THROW(pt("point{left: {1:2}}"), ParseError);
  EXPECT_THROW(pt("point{tail: sometimes}"), ParseError);
  EXPECT_THROW(pt("point{right: [2]"), ParseError);
  EXPECT_THROW(pt("point{colour: [2]}"), ParseError);
  EXPECT_THROW(pt("point{tail: cycle[2]}", kTwoThree), ParseError);
}

TEST(Point, Validation) {
  const Line padded{ValueSeq{{}, {2}}, ValueSeq{{5}, {2}}};
  EXPECT_THROW(validate(Point{padded, {}, {}, Tail{TailKind::kPeriodic, {2}}}), DomainError);
  EXPECT_NO_THROW(validate(Point{padded, {}, {4}, Tail{TailKind::kPeriodic, {2}}}));
  EXPECT_THROW(validate(Point{kTwoThree, {}, {}, Tail{TailKind::kPeriodic, {2}}}), DomainError);
  EXPECT_THROW(validate(Point{kTwos, {{1, 3}}, {}, {}}), DomainError);
  EXPECT_THROW(validate(Point{kTwos, {}, {0}, {}}), DomainError);
}

TEST(Point, CanonicalForms) {
  EXPECT_EQ(canon("point{right: [2,1,1]}"), canon("point{right: [2]}"));
  EXPECT_EQ(canon("point{left: {-2:1}}"), canon("point{}"));
  EXPECT_EQ(canon("point{tail: cycle[1,1]}"), canon("point{}"));
  EXPECT_EQ(canon("point{tail: cycle[2]}"), top_point(kTwos));
  EXPECT_EQ(canon("point{right: [2,2], tail: max}"), top_point(kTwos));
  EXPECT_EQ(canon("point{tail: cycle[2,1,2,1]}"), canon("point{tail: cycle[2,1]}"));
  EXPECT_EQ(canon("point{right: [1,2], tail: cycle[1,2]}"), canon("point{tail: cycle[1,2]}"));
  EXPECT_EQ(canon("point{right: [1,2], tail: cycle[1,2]}").right.size(), 0u);
  EXPECT_EQ(canon("point{tail: cycle[2,3]}", kTwoThree), top_point(kTwoThree));
}

TEST(Point, CanonicalPreservesCoordinates) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const Line line = kTwoThree;
    Point x{line, {}, {}, {}};
    for (int k = 0; k < 3; ++k) x.right.push_back(1 + rng() % 2);
    x.right.push_back(1 + rng() % 3);
    x.tail = Tail{TailKind::kPeriodic, {1 + rng() % 2, 1 + rng() % 3, 1 + rng() % 2, 1 + rng() % 3}};
    EXPECT_EQ(testing::window_compare(x, canonical(x), 40), 0) << to_string(x);
  }
}

TEST(LexCompare, Examples) {
  EXPECT_EQ(lex_compare(pt("point{}"), pt("point{right: [2]}")), LexOrder::kLess);
  EXPECT_EQ(lex_compare(pt("point{left: {-1:2}}"), pt("point{tail: max}")), LexOrder::kGreater);
  EXPECT_EQ(lex_compare(pt("point{left: {-4:2}}"), pt("point{left: {-1:2}}")), LexOrder::kGreater);
  EXPECT_EQ(lex_compare(pt("point{tail: cycle[2]}"), pt("point{tail: max}")), LexOrder::kEqual);
  EXPECT_THROW(lex_compare(pt("point{}"), pt("point{}", kTwoThree)), TermMismatchError);
}

TEST(LexCompare, MatchesCoordinateWindow) {
  Rng rng(8);
  for (const Line& line : {kTwos, kTwoThree}) {
    for (int i = 0; i < 500; ++i) {
      const Point x = random_point(line, rng);
      const Point y = random_point(line, rng);
      const int w = testing::window_compare(x, y, 40);
      const LexOrder o = lex_compare(x, y);
      EXPECT_EQ(o, w < 0 ? LexOrder::kLess : w > 0 ? LexOrder::kGreater : LexOrder::kEqual);
    }
  }
}

TEST(DValue, Examples) {
  EXPECT_EQ(d_value(pt("point{}")), 0);
  EXPECT_EQ(d_value(pt("point{right: [2]}")), q(1, 2));
  EXPECT_EQ(d_value(pt("point{tail: max}")), 1);
  EXPECT_EQ(d_value(pt("point{left: {-1:2}}")), 1);
  EXPECT_EQ(d_value(pt("point{left: {-2:2}, right: [1,2]}")), q(2) + q(1, 4));
  // 1/2 + 1/8 + 1/32 + ... = 2/3
  EXPECT_EQ(d_value(pt("point{tail: cycle[2,1]}")), q(2, 3));
  EXPECT_EQ(d_value(pt("point{tail: cycle[2,3]}", kTwoThree)), 1);
  EXPECT_EQ(d_value(pt("point{tail: max}", kFiniteRight)), q(2, 3));
  EXPECT_EQ(d_value(pt("point{left: {-2:3}}", kTwoThree)), q(4));
}

TEST(DValue, WithinTruncationBounds) {
  Rng rng(19);
  for (int i = 0; i < 40; ++i) {
    const Line line{random_infinite_seq(rng), random_infinite_seq(rng)};
    for (int j = 0; j < 25; ++j) {
      const Point x = random_point(line, rng);
      const Rational d = d_value(x);
      const Rational lower = testing::truncated_d(x, 40);
      const Rational gap = Rational(BigInt(1), testing::right_radix(line, 40));
      EXPECT_LE(lower, d) << to_string(x);
      EXPECT_LE(d, lower + gap) << to_string(x);
    }
  }
}

TEST(DValue, Calibration) {
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const Line line{random_infinite_seq(rng), random_infinite_seq(rng)};
    EXPECT_EQ(d_value(all_ones_point(line)), 0);
    EXPECT_EQ(d_value(top_point(line)), 1);
    EXPECT_EQ(closed_orbit_measure(top_point(line)), 1);
  }
}

TEST(Cylinder, Measure) {
  EXPECT_EQ(cylinder_measure(kTwos, Cylinder{{{1, 1}, {-1, 2}}}), q(1, 4));
  EXPECT_EQ(cylinder_measure(kTwoThree, Cylinder{{{1, 2}, {2, 3}, {-2, 1}}}), q(1, 18));
  EXPECT_EQ(cylinder_measure(kTwos, Cylinder{}), 1);
  EXPECT_THROW(cylinder_measure(kTwos, Cylinder{{{1, 3}}}), DomainError);
  EXPECT_THROW(cylinder_measure(kTwos, Cylinder{{{0, 1}}}), DomainError);
}

TEST(GapPartner, Examples) {
  EXPECT_EQ(gap_partner(pt("point{right: [2]}")), canon("point{right: [1], tail: max}"));
  EXPECT_EQ(gap_partner(pt("point{right: [1], tail: max}")), canon("point{right: [2]}"));
  EXPECT_EQ(gap_partner(pt("point{left: {-1:2}}")), top_point(kTwos));
  EXPECT_EQ(gap_partner(top_point(kTwos)), canon("point{left: {-1:2}}"));
  EXPECT_EQ(gap_partner(pt("point{left: {-3:2}}")),
            canon("point{left: {-2:2, -1:2}, tail: max}"));
}

TEST(GapPartner, Errors) {
  EXPECT_THROW(gap_partner(pt("point{}")), NoPartnerError);
  EXPECT_THROW(gap_partner(pt("point{tail: cycle[2,1]}")), NoPartnerError);
  EXPECT_THROW(gap_partner(pt("point{right: [2]}", kFiniteRight)), NoPartnerError);
}

TEST(GapPartner, SameMeasureAndInvolutive) {
  Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    const Line line{random_infinite_seq(rng), random_infinite_seq(rng)};
    for (int j = 0; j < 30; ++j) {
      const Point x = random_point(line, rng);
      if (x.tail.kind == TailKind::kPeriodic || x == all_ones_point(line)) continue;
      const Point y = gap_partner(x);
      EXPECT_NE(lex_compare(x, y), LexOrder::kEqual);
      EXPECT_EQ(d_value(x), d_value(y)) << to_string(x);
      EXPECT_EQ(gap_partner(y), x) << to_string(x);
    }
  }
}

TEST(ClosedOrbit, Containment) {
  const Point x = pt("point{right: [2]}");
  EXPECT_TRUE(closed_orbit_contains(pt("point{}"), x));
  EXPECT_TRUE(closed_orbit_contains(x, x));
  EXPECT_TRUE(closed_orbit_contains(pt("point{right: [1], tail: max}"), x));
  EXPECT_FALSE(closed_orbit_contains(pt("point{right: [2,2]}"), x));
  EXPECT_EQ(closed_orbit_measure(x), q(1, 2));
}

TEST(ClosedOrbit, TopPoint) {
  const Point top = top_point(kTwos);
  EXPECT_TRUE(closed_orbit_contains(pt("point{right: [2,1,2], tail: cycle[1,2]}"), top));
  EXPECT_TRUE(closed_orbit_contains(pt("point{tail: max}"), top));
  EXPECT_FALSE(closed_orbit_contains(pt("point{left: {-5:2}}"), top));
  EXPECT_THROW(closed_orbit_contains(pt("point{}", kTwoThree), top), TermMismatchError);
}

}  // namespace
}  // namespace lexsemi
