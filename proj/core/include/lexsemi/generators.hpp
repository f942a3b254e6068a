#pragma once

// Seeded random instances for property checks and benchmarks.

#include <cstddef>
#include <random>

#include "lexsemi/algebra.hpp"
#include "lexsemi/orderdsl.hpp"
#include "lexsemi/space.hpp"

namespace lexsemi {

using Rng = std::mt19937_64;

struct TermOptions {
  std::size_t max_atoms = 4;
  std::size_t max_length = 3;  // prefix, cycle and fin lengths
  Weight max_weight = 5;
  bool allow_posets = true;
};

// Any well-formed term, weights of 1 included.
OrderTerm random_term(Rng& rng, const TermOptions& options = {});

// Weight sequence with at least one weight >= 2 in its cycle.
ValueSeq random_infinite_seq(Rng& rng, std::size_t max_length = 3, Weight max_weight = 4);

// A single zeta atom with infinite products on both sides.
OrderTerm random_zeta_term(Rng& rng, std::size_t max_length = 3, Weight max_weight = 4);

// One omega, omega* or zeta atom whose weights are 2s mixed with 1s.
OrderTerm random_padded_two_term(Rng& rng);

// Valid point on the line with up to three left exceptions, a short right
// prefix and an all-ones, all-max or periodic tail.
Point random_point(const Line& line, Rng& rng);

// Weights in [1, max_weight], length in [1, max_length].
WeightedChain random_chain(Rng& rng, std::size_t max_length, Weight max_weight);

// Closure of random forward edges under a random vertex order; 1..max_n
// vertices.
Digraph random_digraph(Rng& rng, std::size_t max_n);

}  // namespace lexsemi
