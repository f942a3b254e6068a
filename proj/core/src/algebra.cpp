#include "lexsemi/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "lexsemi/error.hpp"

namespace lexsemi {

std::size_t chain_size(const WeightedChain& f) {
  std::size_t n = 1;
  for (Weight w : f) {
    if (w == 0) throw DomainError("chain weights must be positive");
    if (n > kMaxUnitsChain / w) {
      throw SizeLimitError("chain has more than " + std::to_string(kMaxUnitsChain) +
                           " positions");
    }
    n *= w;
  }
  return n;
}

std::vector<MultiIndex> multi_indices(const WeightedChain& f) {
  if (f.empty()) throw DomainError("chain must have at least one factor");
  const std::size_t n = chain_size(f);
  std::vector<MultiIndex> out;
  out.reserve(n);
  MultiIndex cur(f.size(), 1);
  for (std::size_t r = 0; r < n; ++r) {
    out.push_back(cur);
    for (std::size_t t = f.size(); t-- > 0;) {
      if (cur[t] < f[t]) {
        ++cur[t];
        break;
      }
      cur[t] = 1;
    }
  }
  return out;
}

std::vector<MultiIndexUnit> matrix_units(const WeightedChain& f) {
  const std::vector<MultiIndex> idx = multi_indices(f);
  std::vector<MultiIndexUnit> out;
  out.reserve(idx.size() * (idx.size() + 1) / 2);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a; b < idx.size(); ++b) out.push_back({idx[a], idx[b]});
  }
  return out;
}

void check_unit(const WeightedChain& f, const MultiIndexUnit& u) {
  if (u.i.size() != f.size() || u.j.size() != f.size()) {
    throw DomainError("unit " + to_string(u) + " has the wrong number of indices");
  }
  for (std::size_t t = 0; t < f.size(); ++t) {
    if (u.i[t] < 1 || u.i[t] > f[t] || u.j[t] < 1 || u.j[t] > f[t]) {
      throw DomainError("unit " + to_string(u) + " has an index out of range");
    }
  }
  if (u.j < u.i) throw DomainError("unit " + to_string(u) + " is below the diagonal");
}

std::vector<std::size_t> infer_inclusion(const WeightedChain& f, const WeightedChain& g) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (Weight w : f) {
    while (k < g.size() && g[k] != w) ++k;
    if (k == g.size()) throw DomainError("first chain is not a subchain of the second");
    out.push_back(k++);
  }
  return out;
}

namespace {

void check_positions(const WeightedChain& f, const WeightedChain& g,
                     const std::vector<std::size_t>& positions) {
  if (positions.size() != f.size()) throw DomainError("one position per factor required");
  for (std::size_t t = 0; t < positions.size(); ++t) {
    if (positions[t] >= g.size() || (t > 0 && positions[t] <= positions[t - 1]) ||
        g[positions[t]] != f[t]) {
      throw DomainError("positions do not describe an inclusion of ordered chains");
    }
  }
}

}  // namespace

FormalSum embed(const WeightedChain& f, const WeightedChain& g,
                const std::vector<std::size_t>& positions, const MultiIndexUnit& u) {
  check_positions(f, g, positions);
  check_unit(f, u);
  std::vector<std::size_t> fresh;
  for (std::size_t k = 0, t = 0; k < g.size(); ++k) {
    if (t < positions.size() && positions[t] == k) {
      ++t;
    } else {
      fresh.push_back(k);
    }
  }
  MultiIndexUnit base{MultiIndex(g.size(), 1), MultiIndex(g.size(), 1)};
  for (std::size_t t = 0; t < positions.size(); ++t) {
    base.i[positions[t]] = u.i[t];
    base.j[positions[t]] = u.j[t];
  }
  FormalSum out;
  // Odometer over the diagonal fillings of the new positions.
  while (true) {
    out[base] += 1;
    std::size_t t = fresh.size();
    while (t > 0) {
      const std::size_t k = fresh[t - 1];
      if (base.i[k] < g[k]) {
        ++base.i[k];
        ++base.j[k];
        break;
      }
      base.i[k] = base.j[k] = 1;
      --t;
    }
    if (t == 0) break;
  }
  return out;
}

FormalSum embed(const WeightedChain& f, const WeightedChain& g, const MultiIndexUnit& u) {
  return embed(f, g, infer_inclusion(f, g), u);
}

FormalSum embed(const WeightedChain& f, const WeightedChain& g,
                const std::vector<std::size_t>& positions, const FormalSum& x) {
  FormalSum out;
  for (const auto& [u, c] : x) {
    for (const auto& [v, d] : embed(f, g, positions, u)) out[v] += c * d;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

FormalSum multiply(const FormalSum& x, const FormalSum& y) {
  FormalSum out;
  for (const auto& [u, c] : x) {
    for (const auto& [v, d] : y) {
      if (u.j == v.i) out[MultiIndexUnit{u.i, v.j}] += c * d;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

FormalSum unit_sum(const MultiIndexUnit& u) { return FormalSum{{u, 1}}; }

bool Digraph::has_edge(std::size_t a, std::size_t b) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

Digraph Digraph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v) m[v][v] = 1;
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw DomainError("edge endpoint out of range");
    m[a][b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!m[a][k]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (m[k][b]) m[a][b] = 1;
      }
    }
  }
  Digraph g;
  g.n_ = n;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!m[a][b]) continue;
      if (a != b && m[b][a]) throw DomainError("digraph has a cycle");
      g.edges_.emplace_back(a, b);
    }
  }
  return g;
}

Digraph Digraph::from_closed_edges(std::size_t n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Digraph closed = from_edges(n, edges);
  if (closed.edges_ != edges) throw DomainError("edge set is not reflexive and transitive");
  return closed;
}

Digraph chain_digraph(std::size_t n) {
  std::vector<Digraph::Edge> e;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) e.emplace_back(a, b);
  }
  return Digraph::from_closed_edges(n, std::move(e));
}

Digraph units_digraph(const WeightedChain& f) {
  const std::vector<MultiIndex> idx = multi_indices(f);
  std::map<MultiIndex, std::size_t> rank;
  for (std::size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = r;
  std::vector<Digraph::Edge> e;
  for (const MultiIndexUnit& u : matrix_units(f)) e.emplace_back(rank[u.i], rank[u.j]);
  return Digraph::from_closed_edges(idx.size(), std::move(e));
}

Digraph star_product(const Digraph& a, const Digraph& b) {
  const std::size_t nb = b.size();
  std::vector<Digraph::Edge> e;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (const auto& [u, v] : b.edges()) e.emplace_back(x * nb + u, x * nb + v);
  }
  for (const auto& [x, y] : a.edges()) {
    if (x == y) continue;
    for (std::size_t u = 0; u < nb; ++u) {
      for (std::size_t v = 0; v < nb; ++v) e.emplace_back(x * nb + u, y * nb + v);
    }
  }
  return Digraph::from_closed_edges(a.size() * nb, std::move(e));
}

FinPoset to_poset(const Digraph& g) {
  std::vector<FinPoset::Pair> pairs;
  for (const auto& [a, b] : g.edges()) {
    if (a != b) pairs.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
  }
  return FinPoset::from_pairs(g.size(), pairs);
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseError::Kind::kSyntax, 1, pos_ + 1, message);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  Weight integer() {
    skip();
    Weight v = 0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == first) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }
  std::vector<Weight> integers() {
    std::vector<Weight> out{integer()};
    while (accept(',')) out.push_back(integer());
    return out;
  }
  void finish() {
    skip();
    if (pos_ != text_.size()) fail("trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<Weight>& v) {
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(v[t]);
  }
  return out;
}

}  // namespace

MultiIndexUnit parse_unit(std::string_view text) {
  Scanner s(text);
  MultiIndexUnit u;
  s.expect('(');
  u.i = s.integers();
  s.expect(')');
  s.expect('(');
  u.j = s.integers();
  s.expect(')');
  s.finish();
  return u;
}

WeightedChain parse_chain(std::string_view text) {
  Scanner s(text);
  WeightedChain f = s.integers();
  s.finish();
  return f;
}

Digraph parse_digraph(std::string_view text) {
  Scanner s(text);
  if (s.accept("chain")) {
    s.expect(':');
    const Weight n = s.integer();
    s.finish();
    if (n == 0 || n > 64) throw DomainError("chain size must be in 1..64");
    return chain_digraph(n);
  }
  if (!s.accept("poset")) s.fail("expected 'chain:' or 'poset:'");
  s.expect(':');
  const Weight n = s.integer();
  if (n == 0 || n > 64) throw DomainError("poset size must be in 1..64");
  std::vector<Digraph::Edge> e;
  if (s.accept(';')) {
    do {
      const Weight a = s.integer();
      s.expect('<');
      const Weight b = s.integer();
      if (a < 1 || b < 1 || a > n || b > n) throw DomainError("vertex label out of range");
      e.emplace_back(a - 1, b - 1);
    } while (s.accept(','));
  }
  s.finish();
  return Digraph::from_edges(n, e);
}

std::string to_string(const MultiIndexUnit& u) {
  return "(" + join(u.i) + ")(" + join(u.j) + ")";
}

std::string to_string(const FormalSum& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [u, c] : x) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += "e" + to_string(u);
  }
  return out;
}

std::string to_string(const Digraph& g) {
  std::string out = "digraph(" + std::to_string(g.size()) + ";";
  bool first = true;
  for (const auto& [a, b] : g.edges()) {
    if (a == b) continue;
    out += first ? "" : ",";
    first = false;
    out += std::to_string(a + 1) + "<" + std::to_string(b + 1);
  }
  return out + ")";
}

}  // namespace lexsemi
