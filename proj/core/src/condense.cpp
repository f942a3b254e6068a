#include "lexsemi/condense.hpp"

#include <algorithm>
#include <optional>

#include "lexsemi/error.hpp"

namespace lexsemi {
namespace {

CondensationClass make_class(ClassKind kind, Line line, std::size_t size = 0) {
  CondensationClass c;
  c.kind = kind;
  c.size = size;
  c.pair = SupernaturalPair{from_seq(line.right), from_seq(line.left)};
  c.line = std::move(line);
  return c;
}

const char* kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::kFinite: return "fin";
    case ClassKind::kOmega: return "omega";
    case ClassKind::kOmegaStar: return "omega*";
    case ClassKind::kZeta: return "zeta";
  }
  return "?";
}

bool color_set_contains_chain(const std::vector<Color>& colors, const BigInt& n) {
  return std::any_of(colors.begin(), colors.end(), [&](const Color& c) {
    const auto* chain = std::get_if<ChainColor>(&c);
    return chain && BigInt(chain->n) == n;
  });
}

}  // namespace

std::vector<Color> canonical_colors(const std::vector<Color>& colors) {
  std::vector<Color> out;
  for (const Color& c : colors) {
    if (const auto* p = std::get_if<PosetColor>(&c)) {
      if (p->poset.is_chain()) {
        out.push_back(ChainColor{p->poset.size()});
      } else {
        out.push_back(PosetColor{canonical_form(p->poset)});
      }
    } else {
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SignatureBlock> condense_blocks(const OrderTerm& t) {
  std::vector<SignatureBlock> out;
  const auto& atoms = t.atoms;
  std::size_t i = 0;
  while (i < atoms.size()) {
    const Atom& atom = atoms[i];
    if (const auto* e = std::get_if<EtaAtom>(&atom)) {
      out.push_back(DenseBlock{canonical_colors(e->colors)});
      ++i;
      continue;
    }
    if (const auto* z = std::get_if<ZetaAtom>(&atom)) {
      out.push_back(SingleBlock{make_class(ClassKind::kZeta, Line{z->left, z->right})});
      ++i;
      continue;
    }
    // A run  omega*? fin* omega?  condenses to one class.
    std::optional<ValueSeq> left;
    std::vector<Weight> middle;
    std::optional<ValueSeq> right;
    if (const auto* ws = std::get_if<OmegaStarAtom>(&atom)) {
      left = ws->seq;
      ++i;
    }
    while (i < atoms.size() && std::holds_alternative<FinChain>(atoms[i])) {
      const auto& values = std::get<FinChain>(atoms[i]).values;
      middle.insert(middle.end(), values.begin(), values.end());
      ++i;
    }
    if (i < atoms.size()) {
      if (const auto* w = std::get_if<OmegaAtom>(&atoms[i])) {
        right = w->seq;
        ++i;
      }
    }
    if (left && right) {
      ValueSeq r = *right;
      r.prefix.insert(r.prefix.begin(), middle.begin(), middle.end());
      out.push_back(SingleBlock{make_class(ClassKind::kZeta, Line{*left, std::move(r)})});
    } else if (right) {
      ValueSeq r = *right;
      r.prefix.insert(r.prefix.begin(), middle.begin(), middle.end());
      out.push_back(SingleBlock{make_class(ClassKind::kOmega, Line{{}, std::move(r)})});
    } else if (left) {
      ValueSeq l = *left;
      l.prefix.insert(l.prefix.begin(), middle.rbegin(), middle.rend());
      out.push_back(SingleBlock{make_class(ClassKind::kOmegaStar, Line{std::move(l), {}})});
    } else if (!middle.empty()) {
      const std::size_t size = middle.size();
      out.push_back(SingleBlock{
          make_class(ClassKind::kFinite, Line{{}, ValueSeq{std::move(middle), {}}}, size)});
    }
  }
  return out;
}

ClassificationSignature normalize_signature(std::vector<SignatureBlock> blocks) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < blocks.size() && !changed; ++i) {
      const auto* a = std::get_if<DenseBlock>(&blocks[i]);
      if (!a) continue;
      if (const auto* b = std::get_if<DenseBlock>(&blocks[i + 1]);
          b && a->colors == b->colors) {
        blocks.erase(blocks.begin() + i + 1);
        changed = true;
        continue;
      }
      if (i + 2 >= blocks.size()) continue;
      const auto* mid = std::get_if<SingleBlock>(&blocks[i + 1]);
      const auto* c = std::get_if<DenseBlock>(&blocks[i + 2]);
      if (mid && c && mid->cls.kind == ClassKind::kFinite && a->colors == c->colors &&
          color_set_contains_chain(a->colors, *mid->cls.pair.r.finite_value())) {
        blocks.erase(blocks.begin() + i + 1, blocks.begin() + i + 3);
        changed = true;
      }
    }
  }
  return ClassificationSignature{std::move(blocks)};
}

ClassificationSignature condense(const OrderTerm& t) {
  return normalize_signature(condense_blocks(normalize(t)));
}

std::string to_string(const SignatureBlock& b) {
  if (const auto* d = std::get_if<DenseBlock>(&b)) {
    std::string out = "[dense:{";
    for (std::size_t i = 0; i < d->colors.size(); ++i) {
      if (i) out += ',';
      out += print(d->colors[i]);
    }
    return out + "}]";
  }
  const CondensationClass& c = std::get<SingleBlock>(b).cls;
  if (c.kind == ClassKind::kFinite) {
    return "[fin:" + c.pair.r.finite_value()->str() + "]";
  }
  return std::string("[") + kind_name(c.kind) + ":" + to_string(c.pair) + "]";
}

std::string to_string(const ClassificationSignature& s) {
  if (s.blocks.empty()) return "[]";
  std::string out;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    if (i) out += ' ';
    out += to_string(s.blocks[i]);
  }
  return out;
}

Line line_of(const OrderTerm& t) {
  const std::vector<SignatureBlock> blocks = condense_blocks(t);
  if (blocks.empty()) return Line{};
  if (blocks.size() != 1 || !std::holds_alternative<SingleBlock>(blocks[0])) {
    throw DomainError(
        "points are defined only on terms forming a single discrete class; '" +
        print(t) + "' condenses to " + std::to_string(blocks.size()) + " block(s)");
  }
  return std::get<SingleBlock>(blocks[0]).cls.line;
}

}  // namespace lexsemi
