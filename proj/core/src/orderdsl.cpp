#include "lexsemi/orderdsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "lexsemi/error.hpp"

namespace lexsemi {
namespace {

constexpr Weight kMaxWeight = 1'000'000'000;

struct Token {
  enum class Kind { kIdent, kInt, kPunct, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  std::uint64_t value = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ == text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        t.kind = Token::Kind::kIdent;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
          t.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Token::Kind::kInt;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          t.text += advance();
          if (t.text.size() > 18) {
            throw ParseError(ParseError::Kind::kSyntax, t.line, t.column,
                             "integer literal too long");
          }
        }
        t.value = std::stoull(t.text);
      } else if (std::string_view("+[](){};,*^<").find(c) !=
                 std::string_view::npos) {
        t.kind = Token::Kind::kPunct;
        t.text = std::string(1, advance());
      } else {
        throw ParseError(ParseError::Kind::kSyntax, line_, column_,
                         std::string("unexpected character '") + c + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  OrderTerm term() {
    OrderTerm t;
    std::optional<Token> poset_at;
    do {
      const Token start = peek();
      t.atoms.push_back(atom());
      if (std::holds_alternative<EtaAtom>(t.atoms.back())) {
        for (const Color& c : std::get<EtaAtom>(t.atoms.back()).colors) {
          if (std::holds_alternative<PosetColor>(c) && !poset_at) {
            poset_at = start;
          }
        }
      }
    } while (accept("+"));
    if (peek().kind != Token::Kind::kEnd) syntax("expected '+' or end of input");
    if (poset_at && t.atoms.size() != 1) {
      throw ParseError(ParseError::Kind::kSemantic, poset_at->line,
                       poset_at->column,
                       "poset colors are only allowed in a term consisting "
                       "of a single eta atom");
    }
    return t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void syntax(const std::string& message) const {
    const Token& t = peek();
    throw ParseError(ParseError::Kind::kSyntax, t.line, t.column,
                     message + (t.kind == Token::Kind::kEnd
                                    ? " (found end of input)"
                                    : " (found '" + t.text + "')"));
  }
  [[noreturn]] static void semantic(const Token& at, const std::string& message) {
    throw ParseError(ParseError::Kind::kSemantic, at.line, at.column, message);
  }

  bool accept(std::string_view punct) {
    if (peek().kind == Token::Kind::kPunct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(std::string_view punct) {
    if (!accept(punct)) syntax("expected '" + std::string(punct) + "'");
  }

  const Token& integer_token() {
    if (peek().kind != Token::Kind::kInt) syntax("expected integer");
    return next();
  }

  Weight value() {
    const Token& t = integer_token();
    if (t.value == 0) semantic(t, "value 0 is not allowed; weights are >= 1");
    if (t.value > kMaxWeight) semantic(t, "value exceeds 10^9");
    return t.value;
  }

  // ints? up to (not including) the closing token.
  std::vector<Weight> values_until(std::string_view close) {
    std::vector<Weight> out;
    if (peek().kind == Token::Kind::kPunct && peek().text == close) return out;
    do {
      out.push_back(value());
    } while (accept(","));
    return out;
  }

  ValueSeq seq() {
    ValueSeq s;
    expect("[");
    s.prefix = values_until("]");
    expect("]");
    if (accept("(")) {
      if (peek().kind != Token::Kind::kInt) syntax("expected cycle values");
      s.cycle = values_until(")");
      expect(")");
      expect("^");
      if (peek().kind != Token::Kind::kIdent || peek().text != "w") {
        syntax("expected 'w' after '^'");
      }
      next();
    }
    return s;
  }

  Color color() {
    if (peek().kind == Token::Kind::kIdent && peek().text == "poset") {
      const Token at = next();
      expect("(");
      const Token& size_tok = integer_token();
      const std::uint64_t n = size_tok.value;
      if (n > kCanonicalFormLimit) {
        semantic(size_tok, "poset colors support at most " +
                               std::to_string(kCanonicalFormLimit) +
                               " elements");
      }
      expect(";");
      std::vector<FinPoset::Pair> pairs;
      do {
        const Token& lo = integer_token();
        expect("<");
        const Token& hi = integer_token();
        pairs.emplace_back(static_cast<int>(std::min<std::uint64_t>(lo.value, 1u << 20)),
                           static_cast<int>(std::min<std::uint64_t>(hi.value, 1u << 20)));
      } while (accept(","));
      expect(")");
      FinPoset p;
      try {
        p = FinPoset::from_pairs(n, pairs);
      } catch (const DomainError& e) {
        semantic(at, e.what());
      }
      if (n < 2) semantic(at, "a color needs at least 2 elements");
      if (!is_connected(p)) semantic(at, "poset color must be connected");
      return PosetColor{std::move(p)};
    }
    const Token& t = integer_token();
    if (t.value == 0) semantic(t, "value 0 is not allowed; weights are >= 1");
    if (t.value == 1) semantic(t, "a color needs at least 2 elements");
    if (t.value > kMaxWeight) semantic(t, "value exceeds 10^9");
    return ChainColor{t.value};
  }

  Atom atom() {
    if (peek().kind != Token::Kind::kIdent) syntax("expected atom");
    const Token head = next();
    if (head.text == "fin") {
      expect("[");
      FinChain f{values_until("]")};
      expect("]");
      return f;
    }
    if (head.text == "omega") {
      const bool star = accept("*");
      expect("(");
      ValueSeq s = seq();
      expect(")");
      if (star) return OmegaStarAtom{std::move(s)};
      return OmegaAtom{std::move(s)};
    }
    if (head.text == "zeta") {
      expect("(");
      ZetaAtom z;
      z.left = seq();
      expect(";");
      z.right = seq();
      expect(")");
      return z;
    }
    if (head.text == "eta") {
      expect("{");
      if (peek().kind == Token::Kind::kPunct && peek().text == "}") {
        semantic(head, "eta needs a nonempty color set");
      }
      EtaAtom e;
      do {
        e.colors.push_back(color());
      } while (accept(","));
      expect("}");
      return e;
    }
    pos_--;
    syntax("unknown atom '" + head.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<Weight>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string print_seq(const ValueSeq& s) {
  std::string out = "[" + join(s.prefix) + "]";
  if (!s.cycle.empty()) out += " (" + join(s.cycle) + ")^w";
  return out;
}

std::vector<Weight> drop_ones(const std::vector<Weight>& values) {
  std::vector<Weight> out;
  std::copy_if(values.begin(), values.end(), std::back_inserter(out),
               [](Weight w) { return w != 1; });
  return out;
}

// Shortest period p of the cycle (cycle = block^(size/p)).
std::vector<Weight> primitive_period(const std::vector<Weight>& cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) {
      periodic = cycle[i] == cycle[i - p];
    }
    if (periodic) return {cycle.begin(), cycle.begin() + p};
  }
  return cycle;
}

// 1-free sequence with minimal cycle and shortest prefix. Empty cycle when
// the tail has product 1.
ValueSeq prune(const ValueSeq& s) {
  ValueSeq out{drop_ones(s.prefix), drop_ones(s.cycle)};
  if (out.cycle.empty()) return out;
  out.cycle = primitive_period(out.cycle);
  while (!out.prefix.empty() && out.prefix.back() == out.cycle.back()) {
    out.prefix.pop_back();
    std::rotate(out.cycle.rbegin(), out.cycle.rbegin() + 1, out.cycle.rend());
  }
  return out;
}

std::vector<Weight> reversed(std::vector<Weight> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

void push_fin(std::vector<Atom>& out, std::vector<Weight> values) {
  if (!values.empty()) out.push_back(FinChain{std::move(values)});
}

}  // namespace

bool OrderTerm::is_trivial() const {
  return std::all_of(atoms.begin(), atoms.end(), [](const Atom& a) {
    const auto* f = std::get_if<FinChain>(&a);
    return f && f->values.empty();
  });
}

bool OrderTerm::has_poset_colors() const {
  for (const Atom& a : atoms) {
    if (const auto* e = std::get_if<EtaAtom>(&a)) {
      for (const Color& c : e->colors) {
        if (std::holds_alternative<PosetColor>(c)) return true;
      }
    }
  }
  return false;
}

OrderTerm parse(std::string_view text) { return Parser(text).term(); }

std::string print(const Color& c) {
  if (const auto* chain = std::get_if<ChainColor>(&c)) {
    return std::to_string(chain->n);
  }
  const FinPoset& p = std::get<PosetColor>(c).poset;
  std::string out = "poset(" + std::to_string(p.size()) + ";";
  bool first = true;
  for (auto [i, j] : p.covering_pairs()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(i) + "<" + std::to_string(j);
  }
  return out + ")";
}

std::string print(const OrderTerm& t) {
  std::string out;
  for (std::size_t i = 0; i < t.atoms.size(); ++i) {
    if (i) out += " + ";
    std::visit(
        [&](const auto& a) {
          using A = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<A, FinChain>) {
            out += "fin[" + join(a.values) + "]";
          } else if constexpr (std::is_same_v<A, OmegaAtom>) {
            out += "omega(" + print_seq(a.seq) + ")";
          } else if constexpr (std::is_same_v<A, OmegaStarAtom>) {
            out += "omega*(" + print_seq(a.seq) + ")";
          } else if constexpr (std::is_same_v<A, ZetaAtom>) {
            out += "zeta(" + print_seq(a.left) + " ; " + print_seq(a.right) + ")";
          } else {
            out += "eta{";
            for (std::size_t k = 0; k < a.colors.size(); ++k) {
              if (k) out += ',';
              out += print(a.colors[k]);
            }
            out += "}";
          }
        },
        t.atoms[i]);
  }
  return out;
}

OrderTerm normalize(const OrderTerm& t) {
  std::vector<Atom> out;
  for (const Atom& atom : t.atoms) {
    if (const auto* f = std::get_if<FinChain>(&atom)) {
      push_fin(out, drop_ones(f->values));
    } else if (const auto* w = std::get_if<OmegaAtom>(&atom)) {
      ValueSeq s = prune(w->seq);
      if (s.cycle.empty()) {
        push_fin(out, std::move(s.prefix));
      } else {
        out.push_back(OmegaAtom{std::move(s)});
      }
    } else if (const auto* ws = std::get_if<OmegaStarAtom>(&atom)) {
      ValueSeq s = prune(ws->seq);
      if (s.cycle.empty()) {
        push_fin(out, reversed(std::move(s.prefix)));
      } else {
        out.push_back(OmegaStarAtom{std::move(s)});
      }
    } else if (const auto* z = std::get_if<ZetaAtom>(&atom)) {
      ValueSeq left = prune(z->left);
      ValueSeq right = prune(z->right);
      const bool left_inf = !left.cycle.empty();
      const bool right_inf = !right.cycle.empty();
      if (left_inf && right_inf) {
        out.push_back(ZetaAtom{std::move(left), std::move(right)});
      } else if (left_inf) {
        out.push_back(OmegaStarAtom{std::move(left)});
        push_fin(out, std::move(right.prefix));
      } else if (right_inf) {
        push_fin(out, reversed(std::move(left.prefix)));
        out.push_back(OmegaAtom{std::move(right)});
      } else {
        std::vector<Weight> values = reversed(std::move(left.prefix));
        values.insert(values.end(), right.prefix.begin(), right.prefix.end());
        push_fin(out, std::move(values));
      }
    } else {
      out.push_back(atom);
    }
  }
  if (out.empty()) return OrderTerm::trivial();
  return OrderTerm{std::move(out)};
}

}  // namespace lexsemi
