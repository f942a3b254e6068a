#pragma once

// Generators of the automorphism group of a single discrete class: for each
// prime p dividing both sides with infinite multiplicity, the positions are
// grouped into blocks whose weight products are divisible by p, each block
// value is split into a p-digit and a residual digit, and the p-digits move
// one slot to the right across the origin. The result scales d by 1/p.

#include <cstdint>
#include <optional>
#include <vector>

#include "lexsemi/orderdsl.hpp"
#include "lexsemi/rational.hpp"
#include "lexsemi/space.hpp"
#include "lexsemi/supernat.hpp"

namespace lexsemi {

// Blocks on one side of the origin, numbered outward from 1. Block 1 covers
// the weight prefix plus one cycle, every later block exactly one cycle.
struct SidePlan {
  ValueSeq weights;
  std::size_t head_length = 0;   // positions in block 1
  std::size_t cycle_length = 0;  // positions in each later block
  BigInt head_product = 1;
  BigInt cycle_product = 1;

  std::size_t first_position(std::size_t block) const;
  std::size_t last_position(std::size_t block) const;
  const BigInt& product(std::size_t block) const;
  // Block of an outward position (1-based).
  std::size_t block_of(std::size_t position) const;
};

struct RecodingPlan {
  Prime p = 2;
  Line line;
  SidePlan left;
  SidePlan right;
  // Number of applications of the generator; 0 is the identity and negative
  // values apply the inverse.
  std::int64_t steps = 1;

  // p-digit extracted from a block: product = p * residual.
  BigInt residual(bool right_side, std::size_t block) const;
};

struct AutomorphismConstant {
  Rational c;
  friend bool operator==(const AutomorphismConstant&, const AutomorphismConstant&) = default;
};

// Throws NotDivisibleError when p does not divide the cycle product on both
// sides, DomainError when p is not prime.
RecodingPlan recoding_plan(const Line& line, Prime p, std::int64_t steps = 1);
// The term must condense to a single class (see line_of).
RecodingPlan recoding_plan(const OrderTerm& t, Prime p, std::int64_t steps = 1);

// Applies the plan. The image is canonical and satisfies
// d(act(plan, x)) = p^(-steps) d(x). Throws TermMismatchError when x lives on
// another line.
Point act(const RecodingPlan& plan, const Point& x);

// p^(-steps).
AutomorphismConstant expected_constant(const RecodingPlan& plan);

// d(act(x)) / d(x) over `sample_size` random points with d(x) != 0. Throws
// InconsistentRatioError when two samples disagree, DomainError when
// sample_size is 0.
AutomorphismConstant measured_constant(const RecodingPlan& plan, std::size_t sample_size,
                                       std::uint64_t seed = 1);

}  // namespace lexsemi
