// Randomized invariants that span several modules.

#include <gtest/gtest.h>

#include "lexsemi/autos.hpp"
#include "lexsemi/classify.hpp"
#include "lexsemi/condense.hpp"
#include "lexsemi/generators.hpp"
#include "lexsemi/oracle.hpp"
#include "test_oracles.hpp"

namespace lexsemi {
namespace {

TEST(Properties, PairEquivIsAnEquivalence) {
  const char* parts[] = {"1", "2", "3", "2^inf", "3^inf", "6", "2^inf*3"};
  std::vector<SupernaturalPair> pairs;
  for (const char* r : parts) {
    for (const char* s : parts) pairs.push_back({parse_supernatural(r), parse_supernatural(s)});
  }
  for (const auto& a : pairs) {
    EXPECT_TRUE(pair_equiv(a, a).equivalent);
    for (const auto& b : pairs) {
      const bool ab = pair_equiv(a, b).equivalent;
      EXPECT_EQ(ab, pair_equiv(b, a).equivalent);
      if (!ab) continue;
      for (const auto& c : pairs) {
        if (pair_equiv(b, c).equivalent) EXPECT_TRUE(pair_equiv(a, c).equivalent);
      }
    }
  }
}

TEST(Properties, ClassifyInvariantUnderUnitPadding) {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const OrderTerm t = random_zeta_term(rng);
    ZetaAtom z = std::get<ZetaAtom>(t.atoms[0]);
    z.left.prefix.insert(z.left.prefix.begin(), 1);
    z.right.cycle.push_back(1);
    z.right.cycle.push_back(1);
    EXPECT_TRUE(classify(t, OrderTerm{{z}}).isomorphic) << print(t);
  }
}

TEST(Properties, DMonotoneWithTiesOnlyAtGaps) {
  Rng rng(44);
  for (int i = 0; i < 20; ++i) {
    const Line line = line_of(random_zeta_term(rng));
    for (int j = 0; j < 50; ++j) {
      const Point x = random_point(line, rng);
      const Point y = random_point(line, rng);
      if (lex_compare(x, y) != LexOrder::kLess) continue;
      const Rational dx = d_value(x), dy = d_value(y);
      EXPECT_LE(dx, dy);
      if (dx == dy) EXPECT_EQ(gap_partner(x), y);
    }
  }
}

TEST(Properties, CylinderMeasureIsCountedFraction) {
  Rng rng(50);
  for (int i = 0; i < 50; ++i) {
    const WeightedChain f = random_chain(rng, 4, 4);
    const Line line{ValueSeq{{}, {2}}, ValueSeq{f, {3}}};
    Cylinder c;
    std::map<std::size_t, Weight> fixed;
    for (std::size_t t = 0; t < f.size(); t += 2) {
      fixed[t] = f[t];
      c.constraints[static_cast<std::int64_t>(t + 1)] = f[t];
    }
    EXPECT_EQ(cylinder_measure(line, c), counted_fraction(f, fixed));
  }
}

TEST(Properties, DAtTruncationIsRank) {
  Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    const WeightedChain f = random_chain(rng, 4, 5);
    const Line line{ValueSeq{{}, {2}}, ValueSeq{f, {2}}};
    for (const FinitePoint& p : enumerate_points(f)) {
      EXPECT_EQ(d_value(Point{line, {}, p.coords, {}}), counted_rank(f, p.coords));
    }
  }
}

TEST(Properties, GeneratorKeepsGapsAndTies) {
  Rng rng(52);
  const Line line{ValueSeq{{3}, {2, 3}}, ValueSeq{{2}, {6}}};
  for (Prime p : {2, 3}) {
    const RecodingPlan plan = recoding_plan(line, p);
    for (int i = 0; i < 100; ++i) {
      const Point x = random_point(line, rng);
      if (x.tail.kind == TailKind::kPeriodic || x == all_ones_point(line)) continue;
      EXPECT_EQ(act(plan, gap_partner(x)), gap_partner(act(plan, x))) << to_string(x);
    }
  }
}

TEST(Properties, SignatureOfNormalizedTermUnchanged) {
  Rng rng(53);
  for (int i = 0; i < 500; ++i) {
    const OrderTerm t = random_term(rng);
    EXPECT_EQ(condense(t), condense(normalize(t))) << print(t);
  }
}

}  // namespace
}  // namespace lexsemi
