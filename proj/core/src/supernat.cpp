#include "lexsemi/supernat.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "lexsemi/error.hpp"

namespace lexsemi {
namespace {

[[noreturn]] void fail_at(std::size_t column, const std::string& message) {
  throw ParseError(ParseError::Kind::kSyntax, 1, column + 1, message);
}

std::set<Prime> joint_support(const SupernaturalPair& A,
                              const SupernaturalPair& B) {
  std::set<Prime> primes;
  for (const Supernatural* x : {&A.r, &A.s, &B.r, &B.s}) {
    for (const auto& [p, e] : x->factors()) primes.insert(p);
  }
  return primes;
}

BigInt power(Prime p, std::int64_t e) {
  BigInt result = 1;
  for (std::int64_t i = 0; i < e; ++i) result *= p;
  return result;
}

// Integers <= bound whose prime factors all lie in `primes`, ascending.
std::vector<std::uint64_t> smooth_numbers(const std::vector<Prime>& primes,
                                          std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  std::function<void(std::size_t, std::uint64_t)> walk =
      [&](std::size_t index, std::uint64_t value) {
        if (index == primes.size()) {
          out.push_back(value);
          return;
        }
        for (std::uint64_t v = value; v <= bound; v *= primes[index]) {
          walk(index + 1, v);
          if (v > bound / primes[index]) break;
        }
      };
  if (bound >= 1) walk(0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool witness_holds(const SupernaturalPair& A, const SupernaturalPair& B,
                   std::uint64_t a, std::uint64_t b) {
  const Supernatural sa = Supernatural::from_integer(a);
  const Supernatural sb = Supernatural::from_integer(b);
  return equals(mul(sb, A.r), mul(sa, B.r)) &&
         equals(mul(sa, A.s), mul(sb, B.s)) &&
         equals(mul(A.r, A.s), mul(B.r, B.s));
}

OracleVerdict search(const SupernaturalPair& A, const SupernaturalPair& B,
                     const std::vector<std::uint64_t>& candidates) {
  for (std::uint64_t a : candidates) {
    for (std::uint64_t b : candidates) {
      if (std::gcd(a, b) != 1) continue;
      if (witness_holds(A, B, a, b)) {
        return {OracleVerdict::Outcome::kEquivalent, EquivWitness{a, b}};
      }
    }
  }
  return {};
}

}  // namespace

std::vector<std::pair<Prime, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<Prime, std::uint32_t>> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Supernatural Supernatural::from_integer(std::uint64_t n) {
  if (n == 0) throw DomainError("supernatural from integer 0");
  Supernatural x;
  for (auto [p, e] : factorize(n)) x.factors_.emplace_back(p, Exponent(e));
  return x;
}

Supernatural Supernatural::prime_power(Prime p, Exponent e) {
  Supernatural x;
  if (!e.is_zero()) x.factors_.emplace_back(p, e);
  return x;
}

Supernatural Supernatural::from_factors(std::vector<Factor> factors) {
  std::map<Prime, Exponent> merged;
  for (const auto& [p, e] : factors) merged[p] = merged[p] + e;
  Supernatural x;
  for (const auto& [p, e] : merged) {
    if (!e.is_zero()) x.factors_.emplace_back(p, e);
  }
  return x;
}

Exponent Supernatural::exponent(Prime p) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), p,
      [](const Factor& f, Prime q) { return f.first < q; });
  if (it == factors_.end() || it->first != p) return Exponent(0);
  return it->second;
}

bool Supernatural::is_finite() const {
  return std::none_of(factors_.begin(), factors_.end(),
                      [](const Factor& f) { return f.second.is_infinite(); });
}

std::optional<BigInt> Supernatural::finite_value() const {
  if (!is_finite()) return std::nullopt;
  BigInt v = 1;
  for (const auto& [p, e] : factors_) v *= power(p, e.value());
  return v;
}

Supernatural from_seq(const ValueSeq& seq) {
  std::vector<Supernatural::Factor> factors;
  for (Weight w : seq.prefix) {
    for (auto [p, e] : factorize(w)) factors.emplace_back(p, Exponent(e));
  }
  for (Weight w : seq.cycle) {
    for (auto [p, e] : factorize(w)) factors.emplace_back(p, Exponent::infinite());
  }
  return Supernatural::from_factors(std::move(factors));
}

Supernatural mul(const Supernatural& x, const Supernatural& y) {
  std::vector<Supernatural::Factor> out;
  out.reserve(x.factors().size() + y.factors().size());
  auto i = x.factors().begin();
  auto j = y.factors().begin();
  while (i != x.factors().end() || j != y.factors().end()) {
    if (j == y.factors().end() || (i != x.factors().end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == x.factors().end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return Supernatural::from_factors(std::move(out));
}

Supernatural mul(const Supernatural& x, const BigInt& n) {
  if (n <= 0) throw DomainError("supernatural times non-positive integer");
  std::vector<Supernatural::Factor> factors(x.factors());
  BigInt rest = n;
  for (std::uint64_t p = 2; BigInt(p) * p <= rest; ++p) {
    std::uint32_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, Exponent(e));
  }
  if (rest > 1) {
    if (rest > std::numeric_limits<std::uint64_t>::max()) {
      throw SizeLimitError("prime factor exceeds 64 bits");
    }
    factors.emplace_back(static_cast<std::uint64_t>(rest), Exponent(1));
  }
  return Supernatural::from_factors(std::move(factors));
}

bool equals(const Supernatural& x, const Supernatural& y) { return x == y; }

bool divides(const Supernatural& x, const Supernatural& y) {
  return std::all_of(x.factors().begin(), x.factors().end(),
                     [&](const Supernatural::Factor& f) {
                       return f.second <= y.exponent(f.first);
                     });
}

PairVerdict pair_equiv(const SupernaturalPair& A, const SupernaturalPair& B) {
  if (!equals(mul(A.r, A.s), mul(B.r, B.s))) return {};

  EquivWitness witness;
  for (Prime p : joint_support(A, B)) {
    // Unknown: D = alpha_p - beta_p. Each equation either forces D, leaves it
    // free (infinite on both sides) or is unsatisfiable (inf against finite).
    std::optional<std::int64_t> forced;
    const auto constrain = [&](Exponent x, Exponent y) {
      // Requires D = x - y when both finite.
      if (x.is_infinite() && y.is_infinite()) return true;
      if (x.is_infinite() != y.is_infinite()) return false;
      const std::int64_t d = std::int64_t{x.value()} - std::int64_t{y.value()};
      if (forced && *forced != d) return false;
      forced = d;
      return true;
    };
    // beta + e(A.r) = alpha + e(B.r)  =>  D = e(A.r) - e(B.r)
    if (!constrain(A.r.exponent(p), B.r.exponent(p))) return {};
    // alpha + e(A.s) = beta + e(B.s)  =>  D = e(B.s) - e(A.s)
    if (!constrain(B.s.exponent(p), A.s.exponent(p))) return {};
    const std::int64_t d = forced.value_or(0);
    if (d > 0) witness.a *= power(p, d);
    if (d < 0) witness.b *= power(p, -d);
  }
  return {true, witness};
}

OracleVerdict pair_equiv_oracle(const SupernaturalPair& A,
                                const SupernaturalPair& B,
                                std::uint64_t bound) {
  const std::set<Prime> support = joint_support(A, B);
  return search(A, B, smooth_numbers({support.begin(), support.end()}, bound));
}

OracleVerdict pair_equiv_oracle_unrestricted(const SupernaturalPair& A,
                                             const SupernaturalPair& B,
                                             std::uint64_t bound) {
  std::vector<std::uint64_t> all(bound);
  std::iota(all.begin(), all.end(), 1);
  return search(A, B, all);
}

std::vector<Prime> shared_infinite_primes(const SupernaturalPair& P) {
  std::vector<Prime> out;
  for (const auto& [p, e] : P.r.factors()) {
    if (e.is_infinite() && P.s.exponent(p).is_infinite()) out.push_back(p);
  }
  return out;
}

std::size_t aut_rank(const SupernaturalPair& P) {
  return shared_infinite_primes(P).size();
}

std::string to_string(const Supernatural& x) {
  if (x.is_one()) return "1";
  std::string finite;
  std::string infinite;
  for (const auto& [p, e] : x.factors()) {
    std::string& out = e.is_infinite() ? infinite : finite;
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e.is_infinite()) {
      out += "^inf";
    } else if (e.value() > 1) {
      out += '^' + std::to_string(e.value());
    }
  }
  if (finite.empty()) return infinite;
  if (infinite.empty()) return finite;
  return finite + '*' + infinite;
}

std::string to_string(const SupernaturalPair& P) {
  return "(" + to_string(P.r) + ", " + to_string(P.s) + ")";
}

namespace {

class PairScanner {
 public:
  explicit PairScanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail_at(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  std::size_t position() const { return pos_; }

  std::uint64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = text_[pos_] - '0';
      if (v > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
        fail_at(start, "integer too large");
      }
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail_at(start, "expected integer");
    return v;
  }

  Supernatural supernatural() {
    std::vector<Supernatural::Factor> factors;
    do {
      const std::size_t at = pos_;
      const std::uint64_t base = integer();
      if (base == 0) {
        throw ParseError(ParseError::Kind::kSemantic, 1, at + 1,
                         "factor 0 is not allowed");
      }
      Exponent e(1);
      if (peek('^')) {
        ++pos_;
        skip_space();
        if (text_.substr(pos_, 3) == "inf") {
          pos_ += 3;
          e = Exponent::infinite();
        } else {
          e = Exponent(static_cast<std::uint32_t>(integer()));
        }
      }
      if (e.is_zero()) continue;
      for (auto [p, k] : factorize(base)) {
        factors.emplace_back(p, e.is_infinite() ? e : Exponent(k * e.value()));
      }
    } while (peek('*') && (++pos_, true));
    return Supernatural::from_factors(std::move(factors));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Supernatural parse_supernatural(std::string_view text) {
  PairScanner scanner(text);
  Supernatural x = scanner.supernatural();
  if (!scanner.at_end()) fail_at(scanner.position(), "trailing input");
  return x;
}

SupernaturalPair parse_pair(std::string_view text) {
  PairScanner scanner(text);
  scanner.expect('(');
  SupernaturalPair P;
  P.r = scanner.supernatural();
  scanner.expect(',');
  P.s = scanner.supernatural();
  scanner.expect(')');
  if (!scanner.at_end()) fail_at(scanner.position(), "trailing input");
  return P;
}

}  // namespace lexsemi
