#include "lexsemi/generators.hpp"

#include <algorithm>
#include <numeric>

namespace lexsemi {
namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Weight weight(Rng& rng, Weight max_weight) {
  return std::uniform_int_distribution<Weight>(1, max_weight)(rng);
}

std::vector<Weight> weights(Rng& rng, std::size_t n, Weight max_weight) {
  std::vector<Weight> out(n);
  for (Weight& w : out) w = weight(rng, max_weight);
  return out;
}

ValueSeq random_seq(Rng& rng, const TermOptions& o) {
  ValueSeq s;
  s.prefix = weights(rng, uniform(rng, 0, o.max_length), o.max_weight);
  if (uniform(rng, 0, 4) != 0) s.cycle = weights(rng, uniform(rng, 1, o.max_length), o.max_weight);
  return s;
}

Color random_color(Rng& rng, const TermOptions& o, bool posets) {
  if (posets && uniform(rng, 0, 2) == 0) {
    // Connected: every vertex above 1 gets a random lower neighbour.
    const std::size_t n = uniform(rng, 2, 5);
    std::vector<FinPoset::Pair> pairs;
    for (int v = 2; v <= static_cast<int>(n); ++v) {
      const int u = static_cast<int>(uniform(rng, 1, static_cast<std::size_t>(v - 1)));
      pairs.emplace_back(u, v);
    }
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 1);
    std::shuffle(label.begin(), label.end(), rng);
    return PosetColor{relabel(FinPoset::from_pairs(n, pairs), label)};
  }
  return ChainColor{std::max<Weight>(2, weight(rng, o.max_weight))};
}

}  // namespace

OrderTerm random_term(Rng& rng, const TermOptions& o) {
  if (o.allow_posets && uniform(rng, 0, 9) == 0) {
    EtaAtom eta;
    const std::size_t k = uniform(rng, 1, 3);
    for (std::size_t i = 0; i < k; ++i) eta.colors.push_back(random_color(rng, o, true));
    return OrderTerm{{eta}};
  }
  OrderTerm t;
  const std::size_t n = uniform(rng, 1, o.max_atoms);
  for (std::size_t i = 0; i < n; ++i) {
    switch (uniform(rng, 0, 4)) {
      case 0: t.atoms.push_back(FinChain{weights(rng, uniform(rng, 0, o.max_length), o.max_weight)}); break;
      case 1: t.atoms.push_back(OmegaAtom{random_seq(rng, o)}); break;
      case 2: t.atoms.push_back(OmegaStarAtom{random_seq(rng, o)}); break;
      case 3: t.atoms.push_back(ZetaAtom{random_seq(rng, o), random_seq(rng, o)}); break;
      default: {
        EtaAtom eta;
        const std::size_t k = uniform(rng, 1, 3);
        for (std::size_t j = 0; j < k; ++j) eta.colors.push_back(random_color(rng, o, false));
        t.atoms.push_back(eta);
      }
    }
  }
  return t;
}

ValueSeq random_infinite_seq(Rng& rng, std::size_t max_length, Weight max_weight) {
  ValueSeq s;
  s.prefix = weights(rng, uniform(rng, 0, max_length), max_weight);
  s.cycle = weights(rng, uniform(rng, 1, max_length), max_weight);
  s.cycle[uniform(rng, 0, s.cycle.size() - 1)] =
      std::uniform_int_distribution<Weight>(2, std::max<Weight>(2, max_weight))(rng);
  return s;
}

OrderTerm random_zeta_term(Rng& rng, std::size_t max_length, Weight max_weight) {
  return OrderTerm{{ZetaAtom{random_infinite_seq(rng, max_length, max_weight),
                             random_infinite_seq(rng, max_length, max_weight)}}};
}

OrderTerm random_padded_two_term(Rng& rng) {
  auto seq = [&] { return random_infinite_seq(rng, 4, 2); };
  switch (uniform(rng, 0, 2)) {
    case 0: return OrderTerm{{OmegaAtom{seq()}}};
    case 1: return OrderTerm{{OmegaStarAtom{seq()}}};
    default: return OrderTerm{{ZetaAtom{seq(), seq()}}};
  }
}

Point random_point(const Line& line, Rng& rng) {
  Point x{line, {}, {}, {}};
  const std::size_t exceptions = uniform(rng, 0, 3);
  for (std::size_t i = 0; i < exceptions; ++i) {
    const std::size_t k = uniform(rng, 1, 6);
    x.left[k] = weight(rng, line.left.at(k));
  }
  const std::size_t kind = uniform(rng, 0, 2);
  std::size_t m = uniform(rng, 0, 6);
  if (kind == 2) m = std::max(m, line.right.prefix.size());
  for (std::size_t k = 1; k <= m; ++k) x.right.push_back(weight(rng, line.right.at(k)));
  if (kind == 0) {
    x.tail = Tail{TailKind::kOnes, {}};
  } else if (kind == 1) {
    x.tail = Tail{TailKind::kMax, {}};
  } else {
    const std::size_t c = std::max<std::size_t>(1, line.right.cycle.size());
    const std::size_t length = c * uniform(rng, 1, 2);
    std::vector<Weight> v;
    for (std::size_t j = 1; j <= length; ++j) v.push_back(weight(rng, line.right.at(m + j)));
    x.tail = Tail{TailKind::kPeriodic, std::move(v)};
  }
  return canonical(std::move(x));
}

WeightedChain random_chain(Rng& rng, std::size_t max_length, Weight max_weight) {
  return weights(rng, uniform(rng, 1, max_length), max_weight);
}

Digraph random_digraph(Rng& rng, std::size_t max_n) {
  const std::size_t n = uniform(rng, 1, max_n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Digraph::Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (uniform(rng, 0, 2) == 0) edges.emplace_back(order[a], order[b]);
    }
  }
  return Digraph::from_edges(n, edges);
}

}  // namespace lexsemi
