#pragma once

// Matrix units of triangular algebras over finite weighted chains, the
// standard embeddings between them, and the lexicographic product of
// digraph algebras. Everything is combinatorial: a unit is a pair of
// multi-indices and a linear combination is a map from units to
// coefficients.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexsemi/posets.hpp"
#include "lexsemi/value_seq.hpp"

namespace lexsemi {

using WeightedChain = std::vector<Weight>;
using MultiIndex = std::vector<Weight>;  // 1-based entries

struct MultiIndexUnit {
  MultiIndex i;
  MultiIndex j;
  friend bool operator==(const MultiIndexUnit&, const MultiIndexUnit&) = default;
  friend auto operator<=>(const MultiIndexUnit&, const MultiIndexUnit&) = default;
};

using FormalSum = std::map<MultiIndexUnit, long long>;

// Product of the weights.
std::size_t chain_size(const WeightedChain& f);

// All multi-indices in lexicographic order. Throws SizeLimitError above
// kMaxUnitsChain positions.
inline constexpr std::size_t kMaxUnitsChain = 100000;
std::vector<MultiIndex> multi_indices(const WeightedChain& f);

// Every (i, j) with i <= j lexicographically, ordered by (i, j). Throws
// DomainError for weights of 0 or an empty chain.
std::vector<MultiIndexUnit> matrix_units(const WeightedChain& f);

// Throws DomainError unless u is a unit of f.
void check_unit(const WeightedChain& f, const MultiIndexUnit& u);

// Positions (0-based, increasing) of f inside g, matched greedily from the
// left. Throws DomainError when f is not a subsequence of g.
std::vector<std::size_t> infer_inclusion(const WeightedChain& f, const WeightedChain& g);

// e_{i,j} -> sum over fillings s of the new positions of e_{(i,s),(j,s)},
// where `positions` says where the old coordinates go.
FormalSum embed(const WeightedChain& f, const WeightedChain& g,
                const std::vector<std::size_t>& positions, const MultiIndexUnit& u);
// Uses infer_inclusion.
FormalSum embed(const WeightedChain& f, const WeightedChain& g, const MultiIndexUnit& u);
// Linear extension.
FormalSum embed(const WeightedChain& f, const WeightedChain& g,
                const std::vector<std::size_t>& positions, const FormalSum& x);

// e_{i,j} e_{k,l} = e_{i,l} if j = k, else 0; extended bilinearly. Zero
// coefficients are dropped.
FormalSum multiply(const FormalSum& x, const FormalSum& y);
FormalSum unit_sum(const MultiIndexUnit& u);

// Reflexive, transitive, antisymmetric relation on {0, ..., n-1}.
class Digraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Digraph() = default;

  // Takes the reflexive-transitive closure. Throws DomainError on labels out
  // of range or a cycle through distinct vertices.
  static Digraph from_edges(std::size_t n, const std::vector<Edge>& edges);
  // Checks without repairing; throws DomainError when `edges` is not
  // already reflexive, transitive and antisymmetric.
  static Digraph from_closed_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }  // sorted
  bool has_edge(std::size_t a, std::size_t b) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// T_n: the total order 0 < 1 < ... < n-1.
Digraph chain_digraph(std::size_t n);

// Vertices are the units' multi-indices in lexicographic order; edges are
// the units.
Digraph units_digraph(const WeightedChain& f);

// Vertex (a, b) gets index a * |B| + b. Edges: ((a,b),(a,b')) for (b,b') in B
// and ((a,b),(a',b')) for (a,a') in A with a != a'. The result is checked to
// be closed.
Digraph star_product(const Digraph& a, const Digraph& b);

// Strict part as a poset on {1, ..., n}.
FinPoset to_poset(const Digraph& g);

// "(1,2)(2,3)"
MultiIndexUnit parse_unit(std::string_view text);
// "2,3"
WeightedChain parse_chain(std::string_view text);
// "chain:N" or "poset:N;1<2,1<3" (1-based labels)
Digraph parse_digraph(std::string_view text);

std::string to_string(const MultiIndexUnit& u);
std::string to_string(const FormalSum& x);
std::string to_string(const Digraph& g);

}  // namespace lexsemi
