#pragma once

// Brute-force ground truth on finite truncations. Nothing here calls the
// main-path routines for the quantities it is compared against.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexsemi/algebra.hpp"
#include "lexsemi/orderdsl.hpp"
#include "lexsemi/rational.hpp"
#include "lexsemi/supernat.hpp"

namespace lexsemi {

inline constexpr std::size_t kMaxEnumeratedPoints = 100000;
// Relations store every pair explicitly.
inline constexpr std::size_t kMaxRelationPoints = 2048;

struct FinitePoint {
  std::vector<Weight> coords;  // 1-based values
  friend bool operator==(const FinitePoint&, const FinitePoint&) = default;
};

// Reflexive, transitive, antisymmetric relation on {0, ..., n-1}.
struct FiniteRelation {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted
};

// All tuples of the product in lexicographic order. Throws SizeLimitError
// above kMaxEnumeratedPoints.
std::vector<FinitePoint> enumerate_points(const WeightedChain& f);

// x <= y lexicographically. Throws SizeLimitError above kMaxRelationPoints.
FiniteRelation build_relation(const WeightedChain& f);

FiniteRelation relation_of(const Digraph& g);

// Throws DomainError when the relation is not a partial order.
void check_partial_order(const FiniteRelation& r);

// Total orders compare by size; otherwise both sides are canonicalized as
// posets, which throws SizeLimitError above 10 points.
bool relation_iso(const FiniteRelation& a, const FiniteRelation& b);

// Fraction of tuples of f that match the constraints (0-based coordinate ->
// value), counted one by one.
Rational counted_fraction(const WeightedChain& f,
                          const std::map<std::size_t, Weight>& constraints);

// Number of tuples strictly below x, divided by the number of tuples.
Rational counted_rank(const WeightedChain& f, const std::vector<Weight>& x);

// Number of positions strictly between two positions of a term, or nullopt
// when infinite. Positions: fin 0..k-1, omega 0, 1, ..., omega* -1, -2, ...
// (ascending in the order), zeta any integer, eta any integer (all points of
// an eta atom have infinitely many points between them).
struct TermPosition {
  std::size_t atom = 0;
  std::int64_t index = 0;
};
std::optional<std::size_t> interval_size(const OrderTerm& t, TermPosition x, TermPosition y);

// Suite over every cross-check, seeded and deterministic.
struct SuiteHooks {
  std::function<PairVerdict(const SupernaturalPair&, const SupernaturalPair&)> pair_equiv;
};

struct CaseResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first few failure descriptions
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  std::size_t failures() const;
  std::string text() const;
  std::string json() const;
};

std::vector<std::string> suite_case_names();

// Runs every case, or only `only` (DomainError when unknown). Cases run
// concurrently; the report lists them in the order of suite_case_names.
Report run_suite(std::uint64_t seed, const SuiteHooks& hooks = {},
                 const std::optional<std::string>& only = std::nullopt);

}  // namespace lexsemi
