#include "lexsemi/oracle.hpp"

#include <algorithm>

#include "lexsemi/error.hpp"
#include "lexsemi/posets.hpp"

namespace lexsemi {
namespace {

std::size_t product_size(const WeightedChain& f, std::size_t limit) {
  if (f.empty()) throw DomainError("chain must have at least one factor");
  std::size_t n = 1;
  for (Weight w : f) {
    if (w == 0) throw DomainError("chain weights must be positive");
    if (n > limit / w) {
      throw SizeLimitError("more than " + std::to_string(limit) + " points");
    }
    n *= w;
  }
  return n;
}

bool lex_leq(const std::vector<Weight>& a, const std::vector<Weight>& b) {
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] != b[t]) return a[t] < b[t];
  }
  return true;
}

bool is_total(const FiniteRelation& r) {
  return r.pairs.size() == r.n * (r.n + 1) / 2;
}

FinPoset as_poset(const FiniteRelation& r) {
  std::vector<FinPoset::Pair> strict;
  for (const auto& [a, b] : r.pairs) {
    if (a != b) strict.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
  }
  return FinPoset::from_pairs(r.n, strict);
}

}  // namespace

std::vector<FinitePoint> enumerate_points(const WeightedChain& f) {
  const std::size_t n = product_size(f, kMaxEnumeratedPoints);
  std::vector<FinitePoint> out;
  out.reserve(n);
  // Counting in mixed radix, last coordinate fastest.
  for (std::size_t r = 0; r < n; ++r) {
    FinitePoint p{std::vector<Weight>(f.size())};
    std::size_t rest = r;
    for (std::size_t t = f.size(); t-- > 0;) {
      p.coords[t] = rest % f[t] + 1;
      rest /= f[t];
    }
    out.push_back(std::move(p));
  }
  return out;
}

FiniteRelation build_relation(const WeightedChain& f) {
  product_size(f, kMaxRelationPoints);
  const std::vector<FinitePoint> pts = enumerate_points(f);
  FiniteRelation r{pts.size(), {}};
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      if (lex_leq(pts[a].coords, pts[b].coords)) r.pairs.emplace_back(a, b);
    }
  }
  return r;
}

FiniteRelation relation_of(const Digraph& g) {
  if (g.size() > kMaxRelationPoints) throw SizeLimitError("digraph too large");
  return FiniteRelation{g.size(), g.edges()};
}

void check_partial_order(const FiniteRelation& r) {
  std::vector<std::vector<char>> m(r.n, std::vector<char>(r.n, 0));
  for (const auto& [a, b] : r.pairs) {
    if (a >= r.n || b >= r.n) throw DomainError("pair out of range");
    m[a][b] = 1;
  }
  for (std::size_t a = 0; a < r.n; ++a) {
    if (!m[a][a]) throw DomainError("relation is not reflexive");
    for (std::size_t b = 0; b < r.n; ++b) {
      if (a != b && m[a][b] && m[b][a]) throw DomainError("relation is not antisymmetric");
      if (!m[a][b]) continue;
      for (std::size_t c = 0; c < r.n; ++c) {
        if (m[b][c] && !m[a][c]) throw DomainError("relation is not transitive");
      }
    }
  }
}

bool relation_iso(const FiniteRelation& a, const FiniteRelation& b) {
  if (a.n != b.n || a.pairs.size() != b.pairs.size()) return false;
  check_partial_order(a);
  check_partial_order(b);
  if (is_total(a) && is_total(b)) return true;
  if (a.n > kCanonicalFormLimit) {
    throw SizeLimitError("relations above " + std::to_string(kCanonicalFormLimit) +
                         " points are only compared when total");
  }
  return canonical_form(as_poset(a)) == canonical_form(as_poset(b));
}

Rational counted_fraction(const WeightedChain& f,
                          const std::map<std::size_t, Weight>& constraints) {
  const std::vector<FinitePoint> pts = enumerate_points(f);
  std::size_t hits = 0;
  for (const FinitePoint& p : pts) {
    bool match = true;
    for (const auto& [t, v] : constraints) {
      if (t >= f.size()) throw DomainError("constraint outside the chain");
      match = match && p.coords[t] == v;
    }
    hits += match ? 1 : 0;
  }
  return Rational(BigInt(hits), BigInt(pts.size()));
}

Rational counted_rank(const WeightedChain& f, const std::vector<Weight>& x) {
  if (x.size() != f.size()) throw DomainError("tuple length differs from the chain");
  const std::vector<FinitePoint> pts = enumerate_points(f);
  std::size_t below = 0;
  for (const FinitePoint& p : pts) {
    if (p.coords != x && lex_leq(p.coords, x)) ++below;
  }
  return Rational(BigInt(below), BigInt(pts.size()));
}

namespace {

enum class Shape { kFin, kOmega, kOmegaStar, kZeta, kEta };

Shape shape_of(const Atom& a) {
  switch (a.index()) {
    case 0: return Shape::kFin;
    case 1: return Shape::kOmega;
    case 2: return Shape::kOmegaStar;
    case 3: return Shape::kZeta;
    default: return Shape::kEta;
  }
}

void check_position(const OrderTerm& t, TermPosition x) {
  if (x.atom >= t.atoms.size()) throw DomainError("atom index out of range");
  const Atom& a = t.atoms[x.atom];
  switch (shape_of(a)) {
    case Shape::kFin: {
      const auto k = static_cast<std::int64_t>(std::get<FinChain>(a).values.size());
      if (x.index < 0 || x.index >= k) throw DomainError("position outside fin atom");
      break;
    }
    case Shape::kOmega:
      if (x.index < 0) throw DomainError("omega positions are >= 0");
      break;
    case Shape::kOmegaStar:
      if (x.index >= 0) throw DomainError("omega* positions are < 0");
      break;
    default:
      break;
  }
}

// Positions of the atom after x, or nullopt when infinitely many.
std::optional<std::size_t> after(const Atom& a, std::int64_t index) {
  switch (shape_of(a)) {
    case Shape::kFin:
      return std::get<FinChain>(a).values.size() - static_cast<std::size_t>(index) - 1;
    case Shape::kOmegaStar: return static_cast<std::size_t>(-index - 1);
    default: return std::nullopt;
  }
}

std::optional<std::size_t> before(const Atom& a, std::int64_t index) {
  switch (shape_of(a)) {
    case Shape::kFin:
    case Shape::kOmega: return static_cast<std::size_t>(index);
    default: return std::nullopt;
  }
}

std::optional<std::size_t> whole(const Atom& a) {
  if (shape_of(a) == Shape::kFin) return std::get<FinChain>(a).values.size();
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> interval_size(const OrderTerm& t, TermPosition x, TermPosition y) {
  check_position(t, x);
  check_position(t, y);
  if (x.atom > y.atom || (x.atom == y.atom && x.index >= y.index)) {
    throw DomainError("first position must precede the second");
  }
  if (x.atom == y.atom) {
    if (shape_of(t.atoms[x.atom]) == Shape::kEta) return std::nullopt;
    return static_cast<std::size_t>(y.index - x.index - 1);
  }
  std::optional<std::size_t> total = after(t.atoms[x.atom], x.index);
  auto add = [&](std::optional<std::size_t> part) {
    if (!total || !part) {
      total.reset();
    } else {
      *total += *part;
    }
  };
  for (std::size_t k = x.atom + 1; k < y.atom; ++k) add(whole(t.atoms[k]));
  add(before(t.atoms[y.atom], y.index));
  return total;
}

}  // namespace lexsemi
