#pragma once

// Term language for weighted countable linear orders: finite ordered sums of
// five atom kinds, each position carrying a weight (the size of the finite
// factor at that coordinate).
//
//   term   := atom ("+" atom)*
//   atom   := "fin" "[" ints? "]"
//           | "omega" "(" seq ")" | "omega*" "(" seq ")"
//           | "zeta" "(" seq ";" seq ")"        left (outward) ; right
//           | "eta" "{" color ("," color)* "}"
//   seq    := "[" ints? "]" ( "(" ints ")^w" )?
//   color  := int | "poset(" int ";" pair ("," pair)* ")"
//
// omega* and the left side of zeta are indexed outward: the first listed
// value sits immediately left of the origin.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lexsemi/posets.hpp"
#include "lexsemi/value_seq.hpp"

namespace lexsemi {

struct ChainColor {
  Weight n = 2;
  friend bool operator==(const ChainColor&, const ChainColor&) = default;
  friend auto operator<=>(const ChainColor&, const ChainColor&) = default;
};

struct PosetColor {
  FinPoset poset;
  friend bool operator==(const PosetColor&, const PosetColor&) = default;
  friend auto operator<=>(const PosetColor&, const PosetColor&) = default;
};

using Color = std::variant<ChainColor, PosetColor>;

struct FinChain {
  std::vector<Weight> values;
  friend bool operator==(const FinChain&, const FinChain&) = default;
};

struct OmegaAtom {
  ValueSeq seq;
  friend bool operator==(const OmegaAtom&, const OmegaAtom&) = default;
};

struct OmegaStarAtom {
  ValueSeq seq;
  friend bool operator==(const OmegaStarAtom&, const OmegaStarAtom&) = default;
};

struct ZetaAtom {
  ValueSeq left;
  ValueSeq right;
  friend bool operator==(const ZetaAtom&, const ZetaAtom&) = default;
};

// Countable dense order without endpoints in which every listed color class
// is dense.
struct EtaAtom {
  std::vector<Color> colors;
  friend bool operator==(const EtaAtom&, const EtaAtom&) = default;
};

using Atom = std::variant<FinChain, OmegaAtom, OmegaStarAtom, ZetaAtom, EtaAtom>;

struct OrderTerm {
  std::vector<Atom> atoms;

  // The one-point-free term fin[].
  static OrderTerm trivial() { return OrderTerm{{FinChain{}}}; }
  bool is_trivial() const;
  bool has_poset_colors() const;

  friend bool operator==(const OrderTerm&, const OrderTerm&) = default;
};

// Throws ParseError (syntax or semantic) with a 1-based line and column.
OrderTerm parse(std::string_view text);

// Canonical text; parse(print(t)) == t.
std::string print(const OrderTerm& t);
std::string print(const Color& c);

// Deletes weight-1 positions, collapses atoms whose tail has product 1 to
// their finite part, shortens prefixes by rotating cycles, reduces cycles to
// their primitive period, drops empty atoms. Idempotent.
OrderTerm normalize(const OrderTerm& t);

// Structured tree form; mirrors the grammar one node per production.
std::string to_json(const OrderTerm& t, int indent = -1);
// Throws ParseError on malformed trees (line/column refer to the JSON text).
OrderTerm from_json(std::string_view text);

}  // namespace lexsemi
