#pragma once

// Condensation of a term by the relation "finitely many points between".
// Classes are finite, omega, omega* or zeta ordered; dense parts stay
// together as blocks indexed by the rationals.

#include <string>
#include <variant>
#include <vector>

#include "lexsemi/orderdsl.hpp"
#include "lexsemi/supernat.hpp"
#include "lexsemi/value_seq.hpp"

namespace lexsemi {

enum class ClassKind { kFinite, kOmega, kOmegaStar, kZeta };

struct CondensationClass {
  ClassKind kind = ClassKind::kFinite;
  // Number of positions; only meaningful for kFinite.
  std::size_t size = 0;
  SupernaturalPair pair;
  // Coordinates of the class. Finite values absorbed next to the origin are
  // folded into the right side.
  Line line;

  friend bool operator==(const CondensationClass&, const CondensationClass&) = default;
};

struct SingleBlock {
  CondensationClass cls;
  friend bool operator==(const SingleBlock&, const SingleBlock&) = default;
};

struct DenseBlock {
  // Canonical colors: sorted, deduplicated, chain posets as ChainColor,
  // other posets in canonical_form.
  std::vector<Color> colors;
  friend bool operator==(const DenseBlock&, const DenseBlock&) = default;
};

using SignatureBlock = std::variant<SingleBlock, DenseBlock>;

struct ClassificationSignature {
  std::vector<SignatureBlock> blocks;
  friend bool operator==(const ClassificationSignature&,
                         const ClassificationSignature&) = default;
};

std::vector<Color> canonical_colors(const std::vector<Color>& colors);

// Merges adjacent atoms whose boundary has finite intervals: fin+fin,
// fin+omega, omega*+fin, omega*+omega. Works on the atoms as written; no
// weight pruning and no signature rewriting.
std::vector<SignatureBlock> condense_blocks(const OrderTerm& t);

// Rewrites to fixpoint: Dense(C) Dense(C) -> Dense(C), and
// Dense(C) fin(n) Dense(C) -> Dense(C) when the chain color n is in C.
ClassificationSignature normalize_signature(std::vector<SignatureBlock> blocks);

// normalize_signature(condense_blocks(normalize(t))).
ClassificationSignature condense(const OrderTerm& t);

inline const SupernaturalPair& class_invariant(const CondensationClass& c) {
  return c.pair;
}

// "[zeta:(3*2^inf, 2^inf)] [dense:{2,3}] [fin:6]"; the empty signature
// prints as "[]".
std::string to_string(const ClassificationSignature& s);
std::string to_string(const SignatureBlock& b);

// Coordinates of a term that condenses to exactly one discrete class,
// computed on the atoms as written (weight-1 positions are kept). Throws
// DomainError otherwise.
Line line_of(const OrderTerm& t);

}  // namespace lexsemi
