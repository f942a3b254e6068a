#pragma once

// Points of the product space over a single discrete class, described
// finitely: coordinates left of the origin are 1 except at finitely many
// positions; coordinates right of the origin are an explicit prefix followed
// by an all-ones, all-max or periodic tail.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lexsemi/rational.hpp"
#include "lexsemi/value_seq.hpp"

namespace lexsemi {

enum class TailKind { kOnes, kMax, kPeriodic };

struct Tail {
  TailKind kind = TailKind::kOnes;
  // kPeriodic only; length a positive multiple of the weight cycle length.
  std::vector<Weight> values;
  friend bool operator==(const Tail&, const Tail&) = default;
};

struct Point {
  Line line;
  // Key k stands for position -k. Values of 1 are not stored.
  std::map<std::size_t, Weight> left;
  // Positions 1..right.size().
  std::vector<Weight> right;
  // Positions right.size()+1, ...
  Tail tail;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Cylinder {
  // position (nonzero) -> fixed value
  std::map<std::int64_t, Weight> constraints;
};

enum class LexOrder { kLess, kEqual, kGreater, kNoFirstDifference };

// Throws DomainError when a value is out of range or a periodic tail is not
// aligned with the weight cycle.
void validate(const Point& x);

// Validated, with 1s dropped from `left`, tails reduced (periodic all-ones
// becomes kOnes, periodic equal to the weights becomes kMax, minimal period)
// and the explicit prefix shortened. Equal points have equal canonical forms.
Point canonical(Point x);

Weight value_at(const Point& x, std::int64_t position);

Point all_ones_point(const Line& line);
// 1 left of the origin, maximal right of it.
Point top_point(const Line& line);

// Compares by the first differing coordinate. Left tails are all ones, so a
// first difference always exists for distinct points and kNoFirstDifference
// is never produced in this domain. Throws TermMismatchError.
LexOrder lex_compare(const Point& x, const Point& y);

// Product over constrained positions of 1/mu(w).
Rational cylinder_measure(const Line& line, const Cylinder& c);

//   sum_k (x_k - 1) / (r_1 ... r_k)  +  sum_k (x_{-k} - 1) s_0 s_1 ... s_{k-1}
// with s_0 = 1, evaluated exactly. Periodic tails use the geometric series
// over whole periods.
Rational d_value(const Point& x);

// y = x or y precedes x. Throws TermMismatchError.
bool closed_orbit_contains(const Point& y, const Point& x);

// Invariant measure of the closed orbit, normalized so the orbit of the top
// point has measure 1. Coincides with d_value.
Rational closed_orbit_measure(const Point& x);

// The other point with the same d value: (.., v, 1, 1, ..) <-> (.., v-1, max,
// max, ..). Throws NoPartnerError for the all-ones point, for periodic tails
// and when the right side has finite product.
Point gap_partner(const Point& x);

// "point{left: {-3:2}, right: [2,1], tail: ones|max|cycle[..]}"; fields are
// optional and default to {}, [] and ones.
Point parse_point(std::string_view text, const Line& line);
std::string to_string(const Point& x);

}  // namespace lexsemi
