#pragma once

// Finite partial orders on {1, ..., n}, stored as their strict relation
// (irreflexive, antisymmetric, transitively closed).

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace lexsemi {

// Brute-force canonicalization bound.
inline constexpr std::size_t kCanonicalFormLimit = 10;

class FinPoset {
 public:
  using Pair = std::pair<int, int>;

  FinPoset() = default;

  // Pairs are 1-based "i < j" relations (Hasse pairs suffice); the
  // transitive closure is taken. Throws DomainError on out-of-range labels
  // or cycles.
  static FinPoset from_pairs(std::size_t n, std::span<const Pair> pairs);

  std::size_t size() const { return n_; }
  bool less(int i, int j) const;
  // Full strict relation, sorted.
  const std::vector<Pair>& strict_pairs() const { return pairs_; }
  // Covering pairs of the Hasse diagram, sorted.
  std::vector<Pair> covering_pairs() const;
  bool is_chain() const;

  friend bool operator==(const FinPoset&, const FinPoset&) = default;
  friend auto operator<=>(const FinPoset&, const FinPoset&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Pair> pairs_;
};

FinPoset chain_poset(std::size_t n);

// new_label[i - 1] is the label vertex i receives.
FinPoset relabel(const FinPoset& p, std::span<const int> new_label);

// Comparability graph connected (a single vertex counts as connected).
bool is_connected(const FinPoset& p);

// Lexicographically minimal relabeling among those ordering vertices by
// (in-degree, out-degree). Throws SizeLimitError above kCanonicalFormLimit.
FinPoset canonical_form(const FinPoset& p);

bool isomorphic(const FinPoset& p, const FinPoset& q);

}  // namespace lexsemi
