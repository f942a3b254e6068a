#include <algorithm>
#include <future>
#include <json.hpp>
#include <sstream>

#include "lexsemi/autos.hpp"
#include "lexsemi/classify.hpp"
#include "lexsemi/condense.hpp"
#include "lexsemi/error.hpp"
#include "lexsemi/generators.hpp"
#include "lexsemi/oracle.hpp"
#include "lexsemi/space.hpp"

namespace lexsemi {
namespace {

constexpr std::size_t kSamplesKept = 5;

class Case {
 public:
  explicit Case(std::string name) { result_.name = std::move(name); }

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++result_.checks;
    if (ok) return;
    ++result_.failures;
    if (result_.samples.size() < kSamplesKept) result_.samples.push_back(describe());
  }

  CaseResult take() { return std::move(result_); }

 private:
  CaseResult result_;
};

Supernatural power(Prime p, std::uint32_t e) {
  return e == 3 ? Supernatural::prime_power(p, Exponent::infinite())
                : Supernatural::prime_power(p, Exponent(e));
}

// Every pair over primes {2, 3} with exponents 0, 1, 2, inf (index 3).
std::vector<SupernaturalPair> exponent_grid() {
  std::vector<SupernaturalPair> out;
  for (std::uint32_t code = 0; code < 256; ++code) {
    auto e = [&](int slot) { return (code >> (2 * slot)) & 3u; };
    out.push_back({power(2, e(0)) * power(3, e(1)), power(2, e(2)) * power(3, e(3))});
  }
  return out;
}

bool witness_valid(const SupernaturalPair& A, const SupernaturalPair& B,
                   const EquivWitness& w) {
  return gcd(w.a, w.b) == 1 && equals(mul(A.r, w.b), mul(B.r, w.a)) &&
         equals(mul(A.s, w.a), mul(B.s, w.b));
}

CaseResult pair_equiv_grid(std::uint64_t, const SuiteHooks& hooks) {
  Case c("pair-equiv-grid");
  auto decide = hooks.pair_equiv ? hooks.pair_equiv : pair_equiv;
  const std::vector<SupernaturalPair> grid = exponent_grid();
  for (const SupernaturalPair& A : grid) {
    for (const SupernaturalPair& B : grid) {
      const PairVerdict v = decide(A, B);
      const OracleVerdict o = pair_equiv_oracle(A, B, 500);
      const bool found = o.outcome == OracleVerdict::Outcome::kEquivalent;
      const bool witnessed = v.equivalent && v.witness && witness_valid(A, B, *v.witness);
      c.check(found == v.equivalent && (!v.equivalent || witnessed), [&] {
        return to_string(A) + " vs " + to_string(B) + ": decided " +
               (v.equivalent ? "equivalent" : "inequivalent") + ", search " +
               (found ? "found a witness" : "found none");
      });
    }
  }
  return c.take();
}

CaseResult oracle_restriction(std::uint64_t seed, const SuiteHooks&) {
  Case c("oracle-restriction");
  Rng rng(seed);
  const std::vector<SupernaturalPair> grid = exponent_grid();
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const SupernaturalPair& A = grid[pick(rng)];
    const SupernaturalPair& B = grid[pick(rng)];
    const auto x = pair_equiv_oracle(A, B, 40).outcome;
    const auto y = pair_equiv_oracle_unrestricted(A, B, 40).outcome;
    c.check(x == y, [&] { return to_string(A) + " vs " + to_string(B); });
  }
  return c.take();
}

CaseResult trichotomy(std::uint64_t seed, const SuiteHooks&) {
  Case c("trichotomy");
  Rng rng(seed);
  const Supernatural two = Supernatural::prime_power(2, Exponent::infinite());
  const Supernatural one;
  const std::vector<SupernaturalPair> classes = {{two, one}, {one, two}, {two, two}};
  std::vector<std::size_t> seen(classes.size(), 0);
  for (int i = 0; i < 50; ++i) {
    const OrderTerm t = random_padded_two_term(rng);
    const ClassificationSignature sig = condense(t);
    std::size_t hits = 0;
    if (sig.blocks.size() == 1 && std::holds_alternative<SingleBlock>(sig.blocks[0])) {
      const SupernaturalPair& P = std::get<SingleBlock>(sig.blocks[0]).cls.pair;
      for (std::size_t k = 0; k < classes.size(); ++k) {
        if (pair_equiv(P, classes[k]).equivalent) {
          ++hits;
          ++seen[k];
        }
      }
    }
    c.check(hits == 1, [&] { return print(t) + " lands in " + std::to_string(hits) + " classes"; });
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    c.check(seen[k] > 0, [&] { return "class " + to_string(classes[k]) + " never produced"; });
  }
  return c.take();
}

std::vector<Prime> weight_primes(const Line& line) {
  std::vector<Prime> out;
  for (const ValueSeq* s : {&line.left, &line.right}) {
    for (const auto* v : {&s->prefix, &s->cycle}) {
      for (Weight w : *v) {
        for (const auto& [p, e] : factorize(w)) out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CaseResult aut_rank_plans(std::uint64_t seed, const SuiteHooks&) {
  Case c("aut-rank");
  Rng rng(seed);
  for (int i = 0; i < 60; ++i) {
    const OrderTerm t = random_zeta_term(rng, 3, 6);
    const Line line = line_of(t);
    std::size_t plans = 0;
    for (Prime p : weight_primes(line)) {
      try {
        recoding_plan(line, p);
        ++plans;
      } catch (const NotDivisibleError&) {
      }
    }
    const SupernaturalPair P{from_seq(line.right), from_seq(line.left)};
    c.check(plans == aut_rank(P), [&] { return print(t); });
  }
  return c.take();
}

CaseResult generator(std::uint64_t seed, const SuiteHooks&) {
  Case c("generator");
  Rng rng(seed);
  for (int i = 0; i < 12; ++i) {
    const Line line = line_of(random_zeta_term(rng, 2, 6));
    const SupernaturalPair P{from_seq(line.right), from_seq(line.left)};
    for (Prime p : shared_infinite_primes(P)) {
      for (std::int64_t steps : {1, 2, -1}) {
        const RecodingPlan plan = recoding_plan(line, p, steps);
        try {
          const AutomorphismConstant k = measured_constant(plan, 20, seed + i);
          c.check(k == expected_constant(plan), [&] {
            return "p=" + std::to_string(p) + " steps=" + std::to_string(steps) +
                   " measured " + to_string(k.c);
          });
        } catch (const InconsistentRatioError& e) {
          c.check(false, [&] { return std::string(e.what()); });
        }
      }
      const RecodingPlan forward = recoding_plan(line, p, 1);
      const RecodingPlan inverse = recoding_plan(line, p, -1);
      for (int j = 0; j < 20; ++j) {
        const Point x = random_point(line, rng);
        const Point y = random_point(line, rng);
        const Point ax = act(forward, x);
        const Point ay = act(forward, y);
        c.check(act(inverse, ax) == x, [&] { return "inverse fails at " + to_string(x); });
        c.check(lex_compare(x, y) == lex_compare(ax, ay),
                [&] { return "order changes for " + to_string(x) + ", " + to_string(y); });
      }
    }
  }
  return c.take();
}

CaseResult d_calibration(std::uint64_t seed, const SuiteHooks&) {
  Case c("d-calibration");
  Rng rng(seed);
  for (int i = 0; i < 20; ++i) {
    const Line line = line_of(random_zeta_term(rng));
    c.check(d_value(all_ones_point(line)) == 0, [] { return std::string("d(1) != 0"); });
    c.check(d_value(top_point(line)) == 1, [] { return std::string("d(x_*) != 1"); });
    for (int j = 0; j < 50; ++j) {
      const Point x = random_point(line, rng);
      const Point y = random_point(line, rng);
      const LexOrder o = lex_compare(x, y);
      const Rational dx = d_value(x);
      const Rational dy = d_value(y);
      bool ok = true;
      if (o == LexOrder::kEqual) {
        ok = dx == dy;
      } else {
        const Point& lo = o == LexOrder::kLess ? x : y;
        const Point& hi = o == LexOrder::kLess ? y : x;
        const Rational dlo = d_value(lo);
        const Rational dhi = d_value(hi);
        if (dlo == dhi) {
          try {
            ok = gap_partner(lo) == hi;
          } catch (const NoPartnerError&) {
            ok = false;
          }
        } else {
          ok = dlo < dhi;
        }
      }
      c.check(ok, [&] { return to_string(x) + " vs " + to_string(y); });
    }
  }
  return c.take();
}

CaseResult d_truncation(std::uint64_t seed, const SuiteHooks&) {
  Case c("d-truncation");
  Rng rng(seed);
  for (int i = 0; i < 60; ++i) {
    const WeightedChain f = random_chain(rng, 4, 4);
    const WeightedChain g = random_chain(rng, 3, 4);
    const Line line{ValueSeq{g, {2}}, ValueSeq{f, {2}}};
    std::vector<Weight> x;
    for (Weight w : f) x.push_back(std::uniform_int_distribution<Weight>(1, w)(rng));
    Point right_only{line, {}, x, {}};
    c.check(d_value(right_only) == counted_rank(f, x), [&] { return to_string(right_only); });

    // Left coordinates -|g| .. -1 read as a tuple, farthest first.
    std::vector<Weight> y;
    WeightedChain outward(g.rbegin(), g.rend());
    for (Weight w : outward) y.push_back(std::uniform_int_distribution<Weight>(1, w)(rng));
    Point left_only{line, {}, {}, {}};
    for (std::size_t k = 1; k <= g.size(); ++k) left_only.left[k] = y[g.size() - k];
    left_only = canonical(left_only);
    const Rational expected = counted_rank(outward, y) * chain_size(g);
    c.check(d_value(left_only) == expected, [&] { return to_string(left_only); });
  }
  return c.take();
}

CaseResult cylinder_fraction(std::uint64_t seed, const SuiteHooks&) {
  Case c("cylinder-fraction");
  Rng rng(seed);
  for (int i = 0; i < 60; ++i) {
    const WeightedChain f = random_chain(rng, 4, 4);
    const bool right = i % 2 == 0;
    const Line line = right ? Line{ValueSeq{{}, {2}}, ValueSeq{f, {2}}}
                            : Line{ValueSeq{f, {2}}, ValueSeq{{}, {2}}};
    Cylinder cyl;
    std::map<std::size_t, Weight> constraints;
    for (std::size_t t = 0; t < f.size(); ++t) {
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) continue;
      const Weight v = std::uniform_int_distribution<Weight>(1, f[t])(rng);
      constraints[t] = v;
      const auto k = static_cast<std::int64_t>(t + 1);
      cyl.constraints[right ? k : -k] = v;
    }
    c.check(cylinder_measure(line, cyl) == counted_fraction(f, constraints),
            [&] { return "chain of length " + std::to_string(f.size()); });
  }
  return c.take();
}

std::vector<WeightedChain> small_chains() {
  std::vector<WeightedChain> out;
  const Weight ws[] = {2, 3, 4};
  for (Weight a : ws) out.push_back({a});
  for (Weight a : ws)
    for (Weight b : ws) out.push_back({a, b});
  for (Weight a : ws)
    for (Weight b : ws)
      for (Weight d : ws) out.push_back({a, b, d});
  std::erase_if(out, [](const WeightedChain& f) {
    Weight n = 1;
    for (Weight w : f) n *= w;
    return n > 24;
  });
  return out;
}

CaseResult classify_finite(std::uint64_t, const SuiteHooks&) {
  Case c("classify-finite");
  const std::vector<WeightedChain> chains = small_chains();
  std::vector<FiniteRelation> rel;
  for (const WeightedChain& f : chains) rel.push_back(build_relation(f));
  for (std::size_t a = 0; a < chains.size(); ++a) {
    for (std::size_t b = 0; b < chains.size(); ++b) {
      const OrderTerm ta{{FinChain{chains[a]}}};
      const OrderTerm tb{{FinChain{chains[b]}}};
      const bool got = classify(ta, tb).isomorphic;
      const bool truth = relation_iso(rel[a], rel[b]);
      c.check(got == truth, [&] { return print(ta) + " vs " + print(tb); });
    }
  }
  return c.take();
}

// F inside G inside H with random extra factors; n_H <= 24.
struct Tower {
  WeightedChain f, g, h;
  std::vector<std::size_t> fg, gh;
};

Tower random_tower(Rng& rng) {
  while (true) {
    Tower t;
    t.h = random_chain(rng, 4, 3);
    if (chain_size(t.h) > 24) continue;
    std::vector<char> in_g(t.h.size()), in_f(t.h.size());
    for (std::size_t k = 0; k < t.h.size(); ++k) {
      in_g[k] = std::uniform_int_distribution<int>(0, 2)(rng) != 0;
      in_f[k] = in_g[k] && std::uniform_int_distribution<int>(0, 1)(rng) != 0;
    }
    for (std::size_t k = 0; k < t.h.size(); ++k) {
      if (in_g[k]) {
        if (in_f[k]) {
          t.fg.push_back(t.g.size());
          t.f.push_back(t.h[k]);
        }
        t.gh.push_back(k);
        t.g.push_back(t.h[k]);
      }
    }
    if (!t.f.empty()) return t;
  }
}

bool triangular(const FormalSum& x) {
  return std::all_of(x.begin(), x.end(), [](const auto& kv) { return !(kv.first.j < kv.first.i); });
}

CaseResult embed_laws(std::uint64_t seed, const SuiteHooks&) {
  Case c("embed-laws");
  Rng rng(seed);
  for (int i = 0; i < 25; ++i) {
    const Tower t = random_tower(rng);
    std::vector<std::size_t> fh;
    for (std::size_t k : t.fg) fh.push_back(t.gh[k]);
    const std::vector<MultiIndexUnit> units = matrix_units(t.f);
    for (const MultiIndexUnit& u : units) {
      const FormalSum direct = embed(t.f, t.h, fh, u);
      const FormalSum composed = embed(t.g, t.h, t.gh, embed(t.f, t.g, t.fg, unit_sum(u)));
      c.check(direct == composed && triangular(direct),
              [&] { return "functoriality at " + to_string(u); });
      for (const MultiIndexUnit& v : units) {
        const FormalSum lhs = embed(t.f, t.h, fh, multiply(unit_sum(u), unit_sum(v)));
        const FormalSum rhs = multiply(embed(t.f, t.h, fh, u), embed(t.f, t.h, fh, v));
        c.check(lhs == rhs,
                [&] { return "multiplicativity at " + to_string(u) + " * " + to_string(v); });
      }
    }
  }
  return c.take();
}

CaseResult star_laws(std::uint64_t seed, const SuiteHooks&) {
  Case c("star-laws");
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    const Digraph a = random_digraph(rng, 4);
    const Digraph b = random_digraph(rng, 4);
    const Digraph d = random_digraph(rng, 4);
    c.check(star_product(star_product(a, b), d) == star_product(a, star_product(b, d)),
            [&] { return to_string(a) + " * " + to_string(b) + " * " + to_string(d); });
    c.check(star_product(chain_digraph(1), a) == a, [&] { return "T_1 * " + to_string(a); });
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const Digraph s = star_product(chain_digraph(m), chain_digraph(n));
      c.check(relation_iso(relation_of(s), build_relation({static_cast<Weight>(m * n)})),
              [&] { return "T_" + std::to_string(m) + " * T_" + std::to_string(n); });
    }
  }
  for (int i = 0; i < 30; ++i) {
    const WeightedChain f = random_chain(rng, 3, 3);
    Digraph iterated = chain_digraph(f[0]);
    for (std::size_t t = 1; t < f.size(); ++t) iterated = star_product(iterated, chain_digraph(f[t]));
    c.check(units_digraph(f) == iterated, [&] { return std::string("units digraph"); });
    const FiniteRelation built = build_relation(f);
    c.check(relation_of(iterated).pairs == built.pairs,
            [&] { return std::string("iterated star vs built relation"); });
  }
  return c.take();
}

OrderTerm atom_of_shape(int shape) {
  const ValueSeq twos{{}, {2}};
  switch (shape) {
    case 0: return OrderTerm{{FinChain{{2, 3}}}};
    case 1: return OrderTerm{{OmegaAtom{twos}}};
    case 2: return OrderTerm{{OmegaStarAtom{twos}}};
    case 3: return OrderTerm{{ZetaAtom{twos, twos}}};
    default: return OrderTerm{{EtaAtom{{ChainColor{2}}}}};
  }
}

// Last position of the atom that has one, else some position.
std::int64_t last_index(const Atom& a) {
  switch (a.index()) {
    case 0: return static_cast<std::int64_t>(std::get<FinChain>(a).values.size()) - 1;
    case 2: return -1;
    default: return 5;
  }
}

std::int64_t first_index(const Atom& a) {
  switch (a.index()) {
    case 2: return -5;
    case 3: return -5;
    default: return 0;
  }
}

CaseResult merge_table(std::uint64_t, const SuiteHooks&) {
  Case c("merge-table");
  for (int left = 0; left < 5; ++left) {
    for (int right = 0; right < 5; ++right) {
      OrderTerm t = atom_of_shape(left);
      t.atoms.push_back(atom_of_shape(right).atoms[0]);
      const TermPosition x{0, last_index(t.atoms[0])};
      const TermPosition y{1, first_index(t.atoms[1])};
      const bool finite = interval_size(t, x, y).has_value();
      const std::size_t expected = finite ? 1 : 2;
      const std::size_t got = condense_blocks(t).size();
      c.check(got == expected, [&] {
        return print(t) + ": " + std::to_string(got) + " blocks, interval " +
               (finite ? "finite" : "infinite");
      });
    }
  }
  return c.take();
}

CaseResult parser_roundtrip(std::uint64_t seed, const SuiteHooks&) {
  Case c("parser-roundtrip");
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const OrderTerm t = random_term(rng);
    const std::string text = print(t);
    bool ok = false;
    try {
      ok = parse(text) == t && from_json(to_json(t)) == t &&
           normalize(normalize(t)) == normalize(t);
    } catch (const Error&) {
      ok = false;
    }
    c.check(ok, [&] { return text; });
  }
  return c.take();
}

using CaseFn = CaseResult (*)(std::uint64_t, const SuiteHooks&);

const std::vector<std::pair<std::string, CaseFn>>& registry() {
  static const std::vector<std::pair<std::string, CaseFn>> cases = {
      {"pair-equiv-grid", pair_equiv_grid},
      {"oracle-restriction", oracle_restriction},
      {"trichotomy", trichotomy},
      {"aut-rank", aut_rank_plans},
      {"generator", generator},
      {"d-calibration", d_calibration},
      {"d-truncation", d_truncation},
      {"cylinder-fraction", cylinder_fraction},
      {"classify-finite", classify_finite},
      {"embed-laws", embed_laws},
      {"star-laws", star_laws},
      {"merge-table", merge_table},
      {"parser-roundtrip", parser_roundtrip},
  };
  return cases;
}

}  // namespace

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const CaseResult& c : cases) n += c.failures;
  return n;
}

std::string Report::text() const {
  std::ostringstream out;
  out << "seed " << seed << "\n";
  for (const CaseResult& c : cases) {
    out << (c.failures == 0 ? "PASS " : "FAIL ") << c.name << ": " << c.checks << " checks, "
        << c.failures << " failures\n";
    for (const std::string& s : c.samples) out << "  " << s << "\n";
  }
  out << "total failures: " << failures() << "\n";
  return out.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["cases"] = nlohmann::ordered_json::array();
  for (const CaseResult& c : cases) {
    j["cases"].push_back({{"name", c.name},
                          {"checks", c.checks},
                          {"failures", c.failures},
                          {"passed", c.failures == 0},
                          {"samples", c.samples}});
  }
  j["failures"] = failures();
  j["passed"] = failures() == 0;
  return j.dump(2);
}

std::vector<std::string> suite_case_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

Report run_suite(std::uint64_t seed, const SuiteHooks& hooks,
                 const std::optional<std::string>& only) {
  std::vector<std::future<CaseResult>> running;
  for (const auto& [name, fn] : registry()) {
    if (only && *only != name) continue;
    running.push_back(std::async(std::launch::async, fn, seed, std::cref(hooks)));
  }
  if (running.empty()) throw DomainError("unknown suite case '" + only.value_or("") + "'");
  Report report{seed, {}};
  for (auto& f : running) report.cases.push_back(f.get());
  return report;
}

}  // namespace lexsemi
