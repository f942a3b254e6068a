#pragma once

// Reference computations for tests, written against the definitions rather
// than the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "lexsemi/posets.hpp"
#include "lexsemi/rational.hpp"
#include "lexsemi/space.hpp"
#include "lexsemi/supernat.hpp"

namespace lexsemi::testing {

// Coordinates 1..n of a point, expanded straight from its fields.
inline std::vector<Weight> right_coords(const Point& x, std::size_t n) {
  std::vector<Weight> out;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k <= x.right.size()) {
      out.push_back(x.right[k - 1]);
      continue;
    }
    const std::size_t j = k - x.right.size() - 1;
    switch (x.tail.kind) {
      case TailKind::kOnes: out.push_back(1); break;
      case TailKind::kMax: out.push_back(x.line.right.at(k)); break;
      case TailKind::kPeriodic: out.push_back(x.tail.values[j % x.tail.values.size()]); break;
    }
  }
  return out;
}

// Coordinates -n..-1, farthest first.
inline std::vector<Weight> left_coords(const Point& x, std::size_t n) {
  std::vector<Weight> out;
  for (std::size_t k = n; k >= 1; --k) {
    auto it = x.left.find(k);
    out.push_back(it == x.left.end() ? 1 : it->second);
  }
  return out;
}

// Left part plus the first n right terms of the d series.
inline Rational truncated_d(const Point& x, std::size_t n) {
  Rational d = 0;
  std::size_t deepest = x.left.empty() ? 0 : x.left.rbegin()->first;
  for (std::size_t k = 1; k <= deepest; ++k) {
    BigInt place = 1;
    for (std::size_t j = 1; j < k; ++j) place *= x.line.left.at(j);
    auto it = x.left.find(k);
    if (it != x.left.end()) d += BigInt(it->second - 1) * place;
  }
  const std::vector<Weight> r = right_coords(x, n);
  BigInt radix = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    radix *= x.line.right.at(k);
    d += Rational(BigInt(r[k - 1] - 1), radix);
  }
  return d;
}

inline BigInt right_radix(const Line& line, std::size_t n) {
  BigInt radix = 1;
  for (std::size_t k = 1; k <= n; ++k) radix *= line.right.at(k);
  return radix;
}

// Lexicographic comparison over a window of 2n+1 coordinates.
inline int window_compare(const Point& x, const Point& y, std::size_t n) {
  const auto lx = left_coords(x, n), ly = left_coords(y, n);
  if (lx != ly) return lx < ly ? -1 : 1;
  const auto rx = right_coords(x, n), ry = right_coords(y, n);
  if (rx != ry) return rx < ry ? -1 : 1;
  return 0;
}

// Per-prime search for the exponent difference D = v_p(a) - v_p(b), with
// infinity encoded as std::nullopt. Finite exponents only up to `range`.
inline std::optional<std::map<Prime, int>> brute_pair_equiv(const SupernaturalPair& A,
                                                            const SupernaturalPair& B,
                                                            int range = 8) {
  auto val = [](const Supernatural& s, Prime p) -> std::optional<int> {
    const Exponent e = s.exponent(p);
    if (e.is_infinite()) return std::nullopt;
    return static_cast<int>(e.value());
  };
  auto side_ok = [](std::optional<int> lhs_base, int lhs_add, std::optional<int> rhs_base,
                    int rhs_add) {
    if (!lhs_base || !rhs_base) return !lhs_base && !rhs_base;
    return *lhs_base + lhs_add == *rhs_base + rhs_add;
  };
  std::vector<Prime> primes;
  for (const Supernatural* s : {&A.r, &A.s, &B.r, &B.s}) {
    for (const auto& [p, e] : s->factors()) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::map<Prime, int> out;
  for (Prime p : primes) {
    std::optional<int> found;
    for (int alpha = 0; alpha <= range && !found; ++alpha) {
      for (int beta = 0; beta <= range && !found; ++beta) {
        if (alpha > 0 && beta > 0) continue;
        // b r = a t and a s = b u at p.
        if (side_ok(val(A.r, p), beta, val(B.r, p), alpha) &&
            side_ok(val(A.s, p), alpha, val(B.s, p), beta)) {
          found = alpha - beta;
        }
      }
    }
    if (!found) return std::nullopt;
    out[p] = *found;
  }
  return out;
}

// Poset isomorphism by trying every bijection.
inline bool brute_isomorphic(const FinPoset& a, const FinPoset& b) {
  if (a.size() != b.size() || a.strict_pairs().size() != b.strict_pairs().size()) return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (const auto& [i, j] : a.strict_pairs()) {
      if (!b.less(perm[i - 1], perm[j - 1])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace lexsemi::testing
