#pragma once

// Supernatural (generalized) integers: formal products prod p^e_p over
// finitely many primes with e_p in {1, 2, ...} U {inf}.

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexsemi/rational.hpp"
#include "lexsemi/value_seq.hpp"

namespace lexsemi {

using Prime = std::uint64_t;

class Exponent {
 public:
  constexpr Exponent() = default;
  constexpr explicit Exponent(std::uint32_t n) : value_(n) {}

  static constexpr Exponent infinite() { return Exponent(kInfinite); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr bool is_zero() const { return value_ == 0; }
  // Only meaningful when !is_infinite().
  constexpr std::uint32_t value() const { return value_; }

  // n + inf = inf.
  friend constexpr Exponent operator+(Exponent a, Exponent b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return Exponent(a.value_ + b.value_);
  }
  // Every finite n is <= inf.
  friend constexpr auto operator<=>(Exponent, Exponent) = default;

 private:
  static constexpr std::uint32_t kInfinite =
      std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_ = 0;
};

class Supernatural {
 public:
  using Factor = std::pair<Prime, Exponent>;

  // The value 1.
  Supernatural() = default;

  static Supernatural from_integer(std::uint64_t n);
  static Supernatural prime_power(Prime p, Exponent e);
  // Factors need not be sorted; exponents of repeated primes add up.
  static Supernatural from_factors(std::vector<Factor> factors);

  Exponent exponent(Prime p) const;
  // Sorted by prime, no zero exponents.
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  bool is_finite() const;
  // The integer value when finite.
  std::optional<BigInt> finite_value() const;

  friend bool operator==(const Supernatural&, const Supernatural&) = default;

 private:
  std::vector<Factor> factors_;
};

struct SupernaturalPair {
  Supernatural r;
  Supernatural s;

  friend bool operator==(const SupernaturalPair&,
                         const SupernaturalPair&) = default;
};

// Coprime positive integers a, b with b*r = a*t and a*s = b*u.
struct EquivWitness {
  BigInt a = 1;
  BigInt b = 1;

  friend bool operator==(const EquivWitness&, const EquivWitness&) = default;
};

struct PairVerdict {
  bool equivalent = false;
  std::optional<EquivWitness> witness;
};

struct OracleVerdict {
  enum class Outcome { kEquivalent, kInconclusive };
  Outcome outcome = Outcome::kInconclusive;
  std::optional<EquivWitness> witness;
};

// Prime factorization by trial division; n >= 1.
std::vector<std::pair<Prime, std::uint32_t>> factorize(std::uint64_t n);

// Product of a weight sequence: finite prefix times p^inf for every prime
// dividing the cycle product.
Supernatural from_seq(const ValueSeq& seq);

Supernatural mul(const Supernatural& x, const Supernatural& y);
inline Supernatural operator*(const Supernatural& x, const Supernatural& y) {
  return mul(x, y);
}
Supernatural mul(const Supernatural& x, const BigInt& n);

bool equals(const Supernatural& x, const Supernatural& y);
bool divides(const Supernatural& x, const Supernatural& y);

// Decides (A.r, A.s) ~ (B.r, B.s): A.r*A.s = B.r*B.s and coprime a, b exist
// with b*A.r = a*B.r and a*A.s = b*B.s. Solved one prime at a time; the
// witness returned is the unique minimal one.
PairVerdict pair_equiv(const SupernaturalPair& A, const SupernaturalPair& B);

// Independent positive-instance oracle: exhaustive search over coprime
// a, b <= bound, verified with mul/equals. Never reports a negative; a
// failed search is inconclusive. Candidates are restricted to integers whose
// prime factors occur in one of the four supernaturals, since any other prime
// must have equal exponent in a and b and hence exponent zero.
OracleVerdict pair_equiv_oracle(const SupernaturalPair& A,
                                const SupernaturalPair& B, std::uint64_t bound);

// Same search without the support restriction: every coprime pair is tried.
// Quadratic in bound; used to cross-check the restricted search.
OracleVerdict pair_equiv_oracle_unrestricted(const SupernaturalPair& A,
                                             const SupernaturalPair& B,
                                             std::uint64_t bound);

// Number of primes dividing both components with infinite multiplicity.
std::size_t aut_rank(const SupernaturalPair& P);

// Primes with infinite exponent in both components, ascending.
std::vector<Prime> shared_infinite_primes(const SupernaturalPair& P);

// Text forms: "3*2^inf", "1", "(3*2^inf, 2^inf)". Finite factors print
// before infinite ones, each group by ascending prime.
std::string to_string(const Supernatural& x);
std::string to_string(const SupernaturalPair& P);

// Accepts '*'-separated factors, each an integer >= 1 optionally raised to
// a power ("^3") or to "^inf". Composite bases are factored.
Supernatural parse_supernatural(std::string_view text);
SupernaturalPair parse_pair(std::string_view text);

}  // namespace lexsemi
