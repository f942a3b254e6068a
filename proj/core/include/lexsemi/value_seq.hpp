#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lexsemi {

using Weight = std::uint64_t;

// Eventually periodic weight sequence w_1, w_2, ...: the explicit prefix,
// followed by the cycle repeated forever. An empty cycle means every
// position after the prefix has weight 1.
struct ValueSeq {
  std::vector<Weight> prefix;
  std::vector<Weight> cycle;

  // Weight at 1-based position k.
  Weight at(std::size_t k) const {
    if (k <= prefix.size()) return prefix[k - 1];
    if (cycle.empty()) return 1;
    return cycle[(k - 1 - prefix.size()) % cycle.size()];
  }

  // True when infinitely many positions carry a weight >= 2.
  bool is_infinite() const {
    for (Weight w : cycle) {
      if (w >= 2) return true;
    }
    return false;
  }

  friend bool operator==(const ValueSeq&, const ValueSeq&) = default;
};

// Two-sided weight data over the nonzero integers: mu(k) = right.at(k) and
// mu(-k) = left.at(k) for k >= 1. This is the coordinate system of a single
// discrete condensation class.
struct Line {
  ValueSeq left;
  ValueSeq right;

  Weight at(std::int64_t position) const {
    return position > 0 ? right.at(static_cast<std::size_t>(position))
                        : left.at(static_cast<std::size_t>(-position));
  }

  friend bool operator==(const Line&, const Line&) = default;
};

}  // namespace lexsemi
