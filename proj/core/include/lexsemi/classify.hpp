#pragma once

// Isomorphism decision for the lexicographic relations of two terms.
//
// The terms are isomorphic iff their normalized condensation signatures have
// the same length and match block by block: discrete classes through pair
// equivalence of their invariants, dense blocks through equality of their
// canonical color sets. Discrete and dense criteria are exact; the remaining
// gap is whether the two signature rewrite rules reach a unique normal form
// for every order of dense and discrete blocks. Soundness of each rule is
// established; completeness is conjectured, so negative verdicts involving
// dense blocks carry `normal_form_caveat`.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lexsemi/condense.hpp"
#include "lexsemi/orderdsl.hpp"
#include "lexsemi/supernat.hpp"

namespace lexsemi {

struct BlockMatch {
  std::size_t index = 0;
  // Witness for discrete classes; identity color bijection for dense blocks.
  std::variant<EquivWitness, std::vector<std::pair<Color, Color>>> evidence;
};

struct Mismatch {
  std::size_t index = 0;
  std::string reason;
};

struct Verdict {
  bool isomorphic = false;
  std::variant<std::vector<BlockMatch>, Mismatch> certificate;
  bool normal_form_caveat = false;
  ClassificationSignature left;
  ClassificationSignature right;
};

// Throws RegimeError when a poset-colored term is compared with a term that
// is not a single eta atom.
Verdict classify(const OrderTerm& a, const OrderTerm& b);

// Human-readable certificate, one line per block.
std::string to_string(const Verdict& v);

}  // namespace lexsemi
