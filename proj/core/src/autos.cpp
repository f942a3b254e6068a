#include "lexsemi/autos.hpp"

#include <random>

#include "lexsemi/condense.hpp"
#include "lexsemi/error.hpp"
#include "lexsemi/generators.hpp"

namespace lexsemi {

std::size_t SidePlan::first_position(std::size_t block) const {
  return block == 1 ? 1 : head_length + (block - 2) * cycle_length + 1;
}

std::size_t SidePlan::last_position(std::size_t block) const {
  return head_length + (block - 1) * cycle_length;
}

const BigInt& SidePlan::product(std::size_t block) const {
  return block == 1 ? head_product : cycle_product;
}

std::size_t SidePlan::block_of(std::size_t position) const {
  if (position <= head_length) return 1;
  return 2 + (position - head_length - 1) / cycle_length;
}

BigInt RecodingPlan::residual(bool right_side, std::size_t block) const {
  return (right_side ? right : left).product(block) / p;
}

namespace {

bool is_prime(Prime p) {
  if (p < 2) return false;
  for (Prime d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

SidePlan side_plan(const ValueSeq& weights, Prime p, const char* side) {
  BigInt cycle_product = 1;
  for (Weight w : weights.cycle) cycle_product *= w;
  if (weights.cycle.empty() || cycle_product % p != 0) {
    throw NotDivisibleError(std::to_string(p) + "^inf does not divide the " + side +
                            " side");
  }
  BigInt head_product = cycle_product;
  for (Weight w : weights.prefix) head_product *= w;
  return SidePlan{weights, weights.prefix.size() + weights.cycle.size(),
                  weights.cycle.size(), head_product, cycle_product};
}

// Block digits: an explicit list followed by a repeating list. A block digit
// is the mixed-radix value of (value - 1) over the block's positions.
struct Digits {
  std::vector<BigInt> head;
  std::vector<BigInt> cycle;  // empty: all further digits are 0

  const BigInt& at(std::size_t block) const {  // 1-based
    static const BigInt zero = 0;
    if (block <= head.size()) return head[block - 1];
    if (cycle.empty()) return zero;
    return cycle[(block - 1 - head.size()) % cycle.size()];
  }
};

// Right blocks read left to right: the position nearest the origin is most
// significant.
BigInt right_digit(const SidePlan& s, const Point& x, std::size_t block) {
  BigInt d = 0;
  for (std::size_t k = s.first_position(block); k <= s.last_position(block); ++k) {
    d = d * s.weights.at(k) + (value_at(x, static_cast<std::int64_t>(k)) - 1);
  }
  return d;
}

// Left blocks also read left to right: the position farthest from the origin
// is most significant.
BigInt left_digit(const SidePlan& s, const Point& x, std::size_t block) {
  BigInt d = 0;
  for (std::size_t k = s.last_position(block); k >= s.first_position(block); --k) {
    d = d * s.weights.at(k) + (value_at(x, -static_cast<std::int64_t>(k)) - 1);
  }
  return d;
}

void write_right(const SidePlan& s, BigInt d, std::size_t block, std::vector<Weight>& out) {
  const std::size_t first = s.first_position(block);
  const std::size_t last = s.last_position(block);
  if (out.size() < last) out.resize(last, 1);
  for (std::size_t k = last; k >= first; --k) {
    const Weight w = s.weights.at(k);
    out[k - 1] = static_cast<Weight>(d % w) + 1;
    d /= w;
  }
}

void write_left(const SidePlan& s, BigInt d, std::size_t block,
                std::map<std::size_t, Weight>& out) {
  for (std::size_t k = s.first_position(block); k <= s.last_position(block); ++k) {
    const Weight w = s.weights.at(k);
    const auto v = static_cast<Weight>(d % w) + 1;
    if (v != 1) out[k] = v;
    d /= w;
  }
}

struct BlockState {
  Digits right;
  std::vector<BigInt> left;  // all further left digits are 0
};

std::size_t tail_length(const Point& x, std::size_t cycle_length) {
  switch (x.tail.kind) {
    case TailKind::kOnes: return cycle_length;
    case TailKind::kMax: return cycle_length;
    case TailKind::kPeriodic: return x.tail.values.size();
  }
  return cycle_length;
}

BlockState read_blocks(const RecodingPlan& plan, const Point& x) {
  BlockState st;
  const SidePlan& r = plan.right;
  // First block ending at or after the explicit prefix; from the next block
  // on, block digits repeat with period tail_length / cycle_length.
  std::size_t b = 1;
  while (r.last_position(b) < x.right.size()) ++b;
  const std::size_t period = tail_length(x, r.cycle_length) / r.cycle_length;
  for (std::size_t i = 1; i <= b; ++i) st.right.head.push_back(right_digit(r, x, i));
  for (std::size_t i = b + 1; i <= b + period; ++i) {
    st.right.cycle.push_back(right_digit(r, x, i));
  }
  const SidePlan& l = plan.left;
  const std::size_t deepest = x.left.empty() ? 0 : x.left.rbegin()->first;
  const std::size_t nl = deepest == 0 ? 0 : l.block_of(deepest);
  for (std::size_t i = 1; i <= nl; ++i) st.left.push_back(left_digit(l, x, i));
  return st;
}

Point write_blocks(const RecodingPlan& plan, const BlockState& st) {
  Point y{plan.line, {}, {}, {}};
  const SidePlan& r = plan.right;
  for (std::size_t i = 1; i <= st.right.head.size(); ++i) {
    write_right(r, st.right.head[i - 1], i, y.right);
  }
  std::vector<Weight> cycle;
  const std::size_t base = st.right.head.size();
  for (std::size_t j = 0; j < st.right.cycle.size(); ++j) {
    std::vector<Weight> scratch(r.last_position(base + 1 + j), 1);
    write_right(r, st.right.cycle[j], base + 1 + j, scratch);
    cycle.insert(cycle.end(), scratch.begin() + static_cast<std::ptrdiff_t>(
                                                    r.first_position(base + 1 + j) - 1),
                 scratch.end());
  }
  y.tail = Tail{TailKind::kPeriodic, std::move(cycle)};
  for (std::size_t i = 1; i <= st.left.size(); ++i) {
    write_left(plan.left, st.left[i - 1], i, y.left);
  }
  return canonical(std::move(y));
}

// One generator step. Source blocks split with the p-digit least
// significant, image blocks joined with the p-digit most significant; the
// sequence of split digits is unchanged while the origin moves one slot.
BlockState forward(const RecodingPlan& plan, const BlockState& x) {
  const BigInt p = plan.p;
  auto pi_r = [&](std::size_t i) -> BigInt { return x.right.at(i) % p; };
  auto sigma_r = [&](std::size_t i) -> BigInt { return x.right.at(i) / p; };
  auto left_at = [&](std::size_t i) -> BigInt {
    return i <= x.left.size() ? x.left[i - 1] : BigInt(0);
  };
  auto pi_l = [&](std::size_t i) -> BigInt { return left_at(i) % p; };
  auto sigma_l = [&](std::size_t i) -> BigInt { return left_at(i) / p; };
  auto image_right = [&](std::size_t i) -> BigInt {
    const BigInt carried = i == 1 ? pi_l(1) : pi_r(i - 1);
    return carried * plan.residual(true, i) + sigma_r(i);
  };

  BlockState y;
  const std::size_t h = x.right.head.size() + 1;
  for (std::size_t i = 1; i <= h; ++i) y.right.head.push_back(image_right(i));
  for (std::size_t j = 1; j <= x.right.cycle.size(); ++j) {
    y.right.cycle.push_back(image_right(h + j));
  }
  for (std::size_t i = 1; i <= x.left.size(); ++i) {
    y.left.push_back(pi_l(i + 1) * plan.residual(false, i) + sigma_l(i));
  }
  return y;
}

BlockState backward(const RecodingPlan& plan, const BlockState& y) {
  const BigInt p = plan.p;
  // Image blocks split with the p-digit most significant.
  auto pi_r = [&](std::size_t i) -> BigInt { return y.right.at(i) / plan.residual(true, i); };
  auto sigma_r = [&](std::size_t i) -> BigInt {
    return y.right.at(i) % plan.residual(true, i);
  };
  auto left_at = [&](std::size_t i) -> BigInt {
    return i <= y.left.size() ? y.left[i - 1] : BigInt(0);
  };
  auto pi_l = [&](std::size_t i) -> BigInt { return left_at(i) / plan.residual(false, i); };
  auto sigma_l = [&](std::size_t i) -> BigInt { return left_at(i) % plan.residual(false, i); };
  auto source_right = [&](std::size_t i) -> BigInt { return sigma_r(i) * p + pi_r(i + 1); };

  BlockState x;
  const std::size_t h = y.right.head.size();
  for (std::size_t i = 1; i <= h; ++i) x.right.head.push_back(source_right(i));
  for (std::size_t j = 1; j <= y.right.cycle.size(); ++j) {
    x.right.cycle.push_back(source_right(h + j));
  }
  const std::size_t nl = y.left.size() + 1;
  for (std::size_t i = 1; i <= nl; ++i) {
    const BigInt carried = i == 1 ? pi_r(1) : pi_l(i - 1);
    x.left.push_back(sigma_l(i) * p + carried);
  }
  return x;
}

}  // namespace

RecodingPlan recoding_plan(const Line& line, Prime p, std::int64_t steps) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  SidePlan right = side_plan(line.right, p, "right");
  SidePlan left = side_plan(line.left, p, "left");
  return RecodingPlan{p, line, std::move(left), std::move(right), steps};
}

RecodingPlan recoding_plan(const OrderTerm& t, Prime p, std::int64_t steps) {
  return recoding_plan(line_of(t), p, steps);
}

Point act(const RecodingPlan& plan, const Point& input) {
  if (!(input.line == plan.line)) {
    throw TermMismatchError("point does not belong to the plan's term");
  }
  Point x = canonical(input);
  if (plan.steps == 0) return x;
  // A periodic tail must start inside the periodic part of the weights; the
  // canonical form guarantees it.
  BlockState st = read_blocks(plan, x);
  const std::int64_t n = plan.steps > 0 ? plan.steps : -plan.steps;
  for (std::int64_t i = 0; i < n; ++i) {
    st = plan.steps > 0 ? forward(plan, st) : backward(plan, st);
  }
  return write_blocks(plan, st);
}

AutomorphismConstant expected_constant(const RecodingPlan& plan) {
  BigInt power = 1;
  const std::int64_t n = plan.steps > 0 ? plan.steps : -plan.steps;
  for (std::int64_t i = 0; i < n; ++i) power *= plan.p;
  return AutomorphismConstant{plan.steps >= 0 ? Rational(BigInt(1), power)
                                              : Rational(power)};
}

AutomorphismConstant measured_constant(const RecodingPlan& plan, std::size_t sample_size,
                                       std::uint64_t seed) {
  if (sample_size == 0) throw DomainError("sample size must be at least 1");
  std::mt19937_64 rng(seed);
  std::optional<Rational> ratio;
  std::size_t taken = 0;
  while (taken < sample_size) {
    const Point x = random_point(plan.line, rng);
    const Rational dx = d_value(x);
    if (dx == 0) continue;
    const Rational r = d_value(act(plan, x)) / dx;
    if (ratio && *ratio != r) {
      throw InconsistentRatioError("ratio " + to_string(r) + " at " + to_string(x) +
                                   " differs from " + to_string(*ratio));
    }
    ratio = r;
    ++taken;
  }
  return AutomorphismConstant{*ratio};
}

}  // namespace lexsemi
