#include "lexsemi/classify.hpp"

#include <sstream>

#include "lexsemi/error.hpp"

namespace lexsemi {
namespace {

bool single_eta(const OrderTerm& t) {
  return t.atoms.size() == 1 && std::holds_alternative<EtaAtom>(t.atoms[0]);
}

bool has_dense(const ClassificationSignature& s) {
  for (const auto& b : s.blocks) {
    if (std::holds_alternative<DenseBlock>(b)) return true;
  }
  return false;
}

std::string color_list(const std::vector<Color>& colors) {
  std::string out = "{";
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i) out += ',';
    out += print(colors[i]);
  }
  return out + "}";
}

}  // namespace

Verdict classify(const OrderTerm& a, const OrderTerm& b) {
  if ((a.has_poset_colors() || b.has_poset_colors()) &&
      !(single_eta(a) && single_eta(b))) {
    throw RegimeError(
        "poset-colored terms can only be compared with single eta terms");
  }
  Verdict v;
  v.left = condense(a);
  v.right = condense(b);

  const auto reject = [&](std::size_t index, std::string reason) {
    v.isomorphic = false;
    v.certificate = Mismatch{index, std::move(reason)};
    v.normal_form_caveat = has_dense(v.left) || has_dense(v.right);
    return v;
  };

  std::vector<BlockMatch> matches;
  const std::size_t common = std::min(v.left.blocks.size(), v.right.blocks.size());
  for (std::size_t i = 0; i < common; ++i) {
    const SignatureBlock& x = v.left.blocks[i];
    const SignatureBlock& y = v.right.blocks[i];
    if (x.index() != y.index()) {
      return reject(i, "block " + to_string(x) + " is " +
                           (std::holds_alternative<DenseBlock>(x) ? "dense" : "discrete") +
                           " but " + to_string(y) + " is not");
    }
    if (const auto* dx = std::get_if<DenseBlock>(&x)) {
      const auto& dy = std::get<DenseBlock>(y);
      if (dx->colors != dy.colors) {
        return reject(i, "dense color sets differ: " + color_list(dx->colors) +
                             " vs " + color_list(dy.colors));
      }
      std::vector<std::pair<Color, Color>> bijection;
      for (const Color& c : dx->colors) bijection.emplace_back(c, c);
      matches.push_back(BlockMatch{i, std::move(bijection)});
      continue;
    }
    const auto& cx = std::get<SingleBlock>(x).cls;
    const auto& cy = std::get<SingleBlock>(y).cls;
    const PairVerdict pv = pair_equiv(cx.pair, cy.pair);
    if (!pv.equivalent) {
      return reject(i, "class invariants " + to_string(cx.pair) + " and " +
                           to_string(cy.pair) + " are not equivalent");
    }
    matches.push_back(BlockMatch{i, *pv.witness});
  }
  if (v.left.blocks.size() != v.right.blocks.size()) {
    return reject(common, "signatures have " + std::to_string(v.left.blocks.size()) +
                              " and " + std::to_string(v.right.blocks.size()) +
                              " blocks");
  }
  v.isomorphic = true;
  v.certificate = std::move(matches);
  return v;
}

std::string to_string(const Verdict& v) {
  std::ostringstream out;
  out << (v.isomorphic ? "isomorphic" : "not isomorphic") << "\n";
  out << "  left:  " << to_string(v.left) << "\n";
  out << "  right: " << to_string(v.right) << "\n";
  if (const auto* matches = std::get_if<std::vector<BlockMatch>>(&v.certificate)) {
    for (const BlockMatch& m : *matches) {
      out << "  block " << m.index << ": ";
      if (const auto* w = std::get_if<EquivWitness>(&m.evidence)) {
        out << "pair witness (a,b) = (" << w->a << "," << w->b << ")";
      } else {
        out << "color bijection";
        for (const auto& [c, d] : std::get<1>(m.evidence)) {
          out << " " << print(c) << "->" << print(d);
        }
      }
      out << "\n";
    }
  } else {
    const Mismatch& m = std::get<Mismatch>(v.certificate);
    out << "  first difference at block " << m.index << ": " << m.reason << "\n";
    if (v.normal_form_caveat) {
      out << "  note: dense blocks present; negative verdict relies on "
             "completeness of the signature normal form\n";
    }
  }
  return out.str();
}

}  // namespace lexsemi
