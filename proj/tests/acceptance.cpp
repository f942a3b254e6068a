// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "lexsemi/algebra.hpp"
#include "lexsemi/autos.hpp"
#include "lexsemi/classify.hpp"
#include "lexsemi/condense.hpp"
#include "lexsemi/error.hpp"
#include "lexsemi/generators.hpp"
#include "lexsemi/oracle.hpp"
#include "lexsemi_cli/cli.hpp"

namespace lexsemi {
namespace {

// All comparisons are on exact rationals and integers.
const Rational kTolerance = 0;
constexpr std::uint64_t kSeed = 20240601;
constexpr std::uint64_t kWitnessBound = 500;

bool within(const Rational& a, const Rational& b) {
  const Rational d = a - b;
  return (d < 0 ? -d : d) <= kTolerance;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

Supernatural power(Prime p, unsigned code) {
  return code == 3 ? Supernatural::prime_power(p, Exponent::infinite())
                   : Supernatural::prime_power(p, Exponent(code));
}

Outcome pair_equiv_soundness() {
  std::vector<SupernaturalPair> grid;
  for (unsigned c = 0; c < 256; ++c) {
    grid.push_back({power(2, c & 3) * power(3, (c >> 2) & 3),
                    power(2, (c >> 4) & 3) * power(3, (c >> 6) & 3)});
  }
  std::size_t equivalent = 0, positive_disagreements = 0, rejected_with_witness = 0,
              bad_witnesses = 0;
  for (const auto& A : grid) {
    for (const auto& B : grid) {
      const PairVerdict v = pair_equiv(A, B);
      const bool found = pair_equiv_oracle(A, B, kWitnessBound).outcome ==
                         OracleVerdict::Outcome::kEquivalent;
      if (v.equivalent) {
        ++equivalent;
        if (!found) ++positive_disagreements;
        const EquivWitness& w = *v.witness;
        if (gcd(w.a, w.b) != 1 || !equals(mul(A.r, w.b), mul(B.r, w.a)) ||
            !equals(mul(A.s, w.a), mul(B.s, w.b))) {
          ++bad_witnesses;
        }
      } else if (found) {
        ++rejected_with_witness;
      }
    }
  }
  std::ostringstream d;
  d << grid.size() * grid.size() << " pairs, " << equivalent << " equivalent, "
    << positive_disagreements << " unconfirmed, " << rejected_with_witness
    << " rejected-but-witnessed, " << bad_witnesses << " invalid witnesses";
  return {positive_disagreements == 0 && rejected_with_witness == 0 && bad_witnesses == 0,
          d.str()};
}

Outcome trichotomy() {
  Rng rng(kSeed);
  const std::vector<OrderTerm> reference = {parse("omega([](2)^w)"), parse("omega*([](2)^w)"),
                                            parse("zeta([](2)^w ; [](2)^w)")};
  std::vector<std::size_t> count(3, 0);
  std::size_t misplaced = 0;
  std::vector<OrderTerm> terms;
  for (int i = 0; i < 50; ++i) {
    const OrderTerm t = random_padded_two_term(rng);
    terms.push_back(t);
    std::size_t hits = 0, which = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      if (classify(t, reference[k]).isomorphic) {
        ++hits;
        which = k;
      }
    }
    if (hits != 1) {
      ++misplaced;
    } else {
      ++count[which];
    }
  }
  // The partition induced by classify itself has exactly three blocks.
  std::vector<std::size_t> rep;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool fresh = true;
    for (std::size_t r : rep) fresh = fresh && !classify(terms[i], terms[r]).isomorphic;
    if (fresh) rep.push_back(i);
  }
  std::ostringstream d;
  d << "50 terms: " << count[0] << " (2^inf, 1), " << count[1] << " (1, 2^inf), " << count[2]
    << " (2^inf, 2^inf), " << misplaced << " outside; " << rep.size() << " classes";
  return {misplaced == 0 && rep.size() == 3 && count[0] && count[1] && count[2], d.str()};
}

Outcome aut_rank_and_plans() {
  struct Case {
    const char* term;
    std::size_t rank;
  };
  const Case cases[] = {{"zeta([](2)^w ; [](2)^w)", 1},
                        {"zeta([](6)^w ; [](6)^w)", 2},
                        {"zeta([](3)^w ; [](2)^w)", 0}};
  bool pass = true;
  std::ostringstream d;
  for (const Case& c : cases) {
    const Line line = line_of(parse(c.term));
    const SupernaturalPair P{from_seq(line.right), from_seq(line.left)};
    std::vector<Prime> planned;
    for (Prime p : {2, 3, 5, 7}) {
      try {
        recoding_plan(line, p);
        planned.push_back(p);
      } catch (const NotDivisibleError&) {
      }
    }
    const std::size_t rank = aut_rank(P);
    pass = pass && rank == c.rank && planned == shared_infinite_primes(P) &&
           planned.size() == rank;
    d << (d.tellp() > 0 ? "; " : "") << to_string(P) << " rank " << rank << " plans " << planned.size();
  }
  return {pass, d.str()};
}

Outcome generator_constant() {
  const Line twos = line_of(parse("zeta([](2)^w ; [](2)^w)"));
  const Line mixed = line_of(parse("zeta([](2,3)^w ; [](2,3)^w)"));
  const std::pair<const Line*, Prime> cases[] = {{&twos, 2}, {&mixed, 2}, {&mixed, 3}};
  bool pass = true;
  std::ostringstream d;
  for (const auto& [line, p] : cases) {
    try {
      const AutomorphismConstant c = measured_constant(recoding_plan(*line, p), 100, kSeed);
      const bool ok = within(c.c, Rational(BigInt(1), BigInt(p)));
      pass = pass && ok;
      d << (d.tellp() > 0 ? "; " : "") << "p=" << p << " c=" << to_string(c.c);
    } catch (const Error& e) {
      pass = false;
      d << (d.tellp() > 0 ? "; " : "") << "p=" << p << " " << e.what();
    }
  }
  return {pass, d.str()};
}

Outcome d_calibration() {
  Rng rng(kSeed);
  std::size_t bad_endpoints = 0, non_monotone = 0, tie_mismatch = 0, ties = 0, pairs = 0;
  std::vector<Line> lines;
  for (int i = 0; i < 20; ++i) {
    const Line line = line_of(random_zeta_term(rng));
    lines.push_back(line);
    if (!within(d_value(all_ones_point(line)), 0) || !within(d_value(top_point(line)), 1)) {
      ++bad_endpoints;
    }
  }
  auto check = [&](const Point& x, const Point& y) {
    const LexOrder o = lex_compare(x, y);
    if (o == LexOrder::kEqual) return;
    const Point& lo = o == LexOrder::kLess ? x : y;
    const Point& hi = o == LexOrder::kLess ? y : x;
    ++pairs;
    const Rational dl = d_value(lo), dh = d_value(hi);
    if (dh < dl) ++non_monotone;
    bool gap = false;
    try {
      gap = gap_partner(lo) == hi;
    } catch (const NoPartnerError&) {
    }
    if (gap) ++ties;
    if ((dl == dh) != gap) ++tie_mismatch;
  };
  // Half random pairs, half constructed around gap partners.
  for (int i = 0; pairs < 500; ++i) {
    const Line& line = lines[i % lines.size()];
    check(random_point(line, rng), random_point(line, rng));
  }
  for (int i = 0; pairs < 1000; ++i) {
    const Line& line = lines[i % lines.size()];
    const Point x = random_point(line, rng);
    Point y = random_point(line, rng);
    if (i % 2 == 0 && x.tail.kind != TailKind::kPeriodic && !(x == all_ones_point(line)) &&
        !(x == top_point(line))) {
      y = gap_partner(x);
    }
    check(x, y);
  }
  std::ostringstream d;
  d << "20 terms, " << bad_endpoints << " endpoint errors; " << pairs << " ordered pairs, "
    << ties << " gap pairs, " << non_monotone << " decreasing, " << tie_mismatch
    << " ties off gaps";
  return {bad_endpoints == 0 && non_monotone == 0 && tie_mismatch == 0 && 
              ties > 0,
          d.str()};
}

Outcome finite_ground_truth() {
  std::vector<WeightedChain> chains;
  const Weight ws[] = {2, 3, 4};
  std::function<void(WeightedChain)> grow = [&](WeightedChain f) {
    if (!f.empty()) chains.push_back(f);
    if (f.size() == 3) return;
    for (Weight w : ws) {
      WeightedChain g = f;
      g.push_back(w);
      grow(g);
    }
  };
  grow({});
  std::erase_if(chains, [](const WeightedChain& f) { return chain_size(f) > 24; });
  std::vector<FiniteRelation> rel;
  for (const auto& f : chains) rel.push_back(build_relation(f));
  std::size_t disagreements = 0, checks = 0;
  for (std::size_t a = 0; a < chains.size(); ++a) {
    for (std::size_t b = 0; b < chains.size(); ++b) {
      ++checks;
      const bool got = classify(OrderTerm{{FinChain{chains[a]}}},
                                OrderTerm{{FinChain{chains[b]}}}).isomorphic;
      if (got != relation_iso(rel[a], rel[b])) ++disagreements;
    }
  }
  std::ostringstream d;
  d << chains.size() << " chains, " << checks << " pairs, " << disagreements << " disagreements";
  return {disagreements == 0, d.str()};
}

Outcome embedding_laws() {
  Rng rng(kSeed);
  std::size_t towers = 0, checks = 0, violations = 0;
  while (towers < 40) {
    const WeightedChain h = random_chain(rng, 4, 3);
    if (chain_size(h) > 24 || h.size() < 2) continue;
    std::vector<std::size_t> gh, fg;
    WeightedChain g, f;
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (rng() % 3 == 0) continue;
      if (rng() % 2 == 0) {
        fg.push_back(g.size());
        f.push_back(h[k]);
      }
      gh.push_back(k);
      g.push_back(h[k]);
    }
    if (f.empty()) continue;
    ++towers;
    std::vector<std::size_t> fh;
    for (std::size_t k : fg) fh.push_back(gh[k]);
    const auto units = matrix_units(f);
    for (const auto& u : units) {
      ++checks;
      const FormalSum image = embed(f, h, fh, u);
      if (image != embed(g, h, gh, embed(f, g, fg, unit_sum(u)))) ++violations;
      for (const auto& [w, c] : image) {
        if (w.j < w.i) ++violations;
      }
      for (const auto& v : units) {
        ++checks;
        if (embed(f, h, fh, multiply(unit_sum(u), unit_sum(v))) !=
            multiply(image, embed(f, h, fh, v))) {
          ++violations;
        }
      }
    }
  }
  std::ostringstream d;
  d << towers << " towers, " << checks << " checks, " << violations << " violations";
  return {violations == 0, d.str()};
}

Outcome star_laws() {
  Rng rng(kSeed);
  std::size_t failures = 0;
  for (int i = 0; i < 200; ++i) {
    const Digraph a = random_digraph(rng, 4), b = random_digraph(rng, 4),
                  c = random_digraph(rng, 4);
    if (!(star_product(star_product(a, b), c) == star_product(a, star_product(b, c)))) ++failures;
  }
  const bool t6 = relation_iso(relation_of(star_product(chain_digraph(2), chain_digraph(3))),
                               build_relation({6}));
  std::ostringstream d;
  d << "200 triples, " << failures << " non-associative; T_2*T_3 ~ T_6: " << (t6 ? "yes" : "no");
  return {failures == 0 && t6, d.str()};
}

Outcome merge_table() {
  struct Case {
    const char* term;
    TermPosition x, y;
    bool merges;
  };
  const Case cases[] = {
      {"fin[2] + fin[3]", {0, 0}, {1, 0}, true},
      {"fin[2] + omega([](2)^w)", {0, 0}, {1, 3}, true},
      {"omega*([](2)^w) + fin[3]", {0, -4}, {1, 0}, true},
      {"omega*([](2)^w) + omega([](2)^w)", {0, -2}, {1, 5}, true},
      {"omega([](2)^w) + omega*([](2)^w)", {0, 0}, {1, -1}, false},
      {"omega([](2)^w) + fin[3]", {0, 0}, {1, 0}, false},
      {"fin[2] + omega*([](2)^w)", {0, 0}, {1, -1}, false},
      {"zeta([](2)^w;[](2)^w) + fin[3]", {0, 0}, {1, 0}, false},
      {"fin[3] + zeta([](2)^w;[](2)^w)", {0, 0}, {1, 0}, false},
      {"fin[3] + eta{2}", {0, 0}, {1, 0}, false},
  };
  std::size_t mismatches = 0;
  for (const Case& c : cases) {
    const OrderTerm t = parse(c.term);
    const bool finite = interval_size(t, c.x, c.y).has_value();
    const bool merged = condense_blocks(t).size() == 1;
    if (finite != c.merges || merged != finite) ++mismatches;
  }
  return {mismatches == 0, "10 adjacencies, " + std::to_string(mismatches) + " mismatches"};
}

Outcome parser() {
  Rng rng(kSeed);
  std::size_t roundtrip_failures = 0;
  std::vector<std::string> texts;
  for (int i = 0; i < 1000; ++i) {
    const OrderTerm t = random_term(rng);
    const std::string text = print(t);
    texts.push_back(text);
    try {
      if (!(parse(text) == t) || !(from_json(to_json(t)) == t)) ++roundtrip_failures;
    } catch (const Error&) {
      ++roundtrip_failures;
    }
  }
  std::vector<std::string> bad = {"",         "fin[0]",          "fin[",
                                  "omega()",  "zeta([2])",       "eta{}",
                                  "eta{1}",   "fin[2] + ",       "fin[99999999999]",
                                  "eta{poset(3;1<2)}", "fin[2] + eta{poset(2;1<2)} + fin[2]",
                                  "omega([2](3))",     "zeta([];[]) extra"};
  // Single-character corruptions of generated terms.
  const std::string alphabet = "[](){};,+^w0123456789 abz*<";
  for (int i = 0; i < 500; ++i) {
    std::string s = texts[i];
    const std::size_t at = rng() % (s.size() + 1);
    switch (rng() % 3) {
      case 0: if (at < s.size()) s.erase(at, 1); break;
      case 1: s.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
      default: if (at < s.size()) s[at] = alphabet[rng() % alphabet.size()]; break;
    }
    bad.push_back(s);
  }
  std::size_t fixed_errors_ok = 0, crashes = 0, wrong_code = 0;
  for (std::size_t i = 0; i < bad.size(); ++i) {
    std::ostringstream out, err;
    int code = -1;
    try {
      code = cli::dispatch({"parse", bad[i]}, out, err);
    } catch (...) {
      ++crashes;
      continue;
    }
    bool well_formed = true;
    try {
      parse(bad[i]);
    } catch (const ParseError&) {
      well_formed = false;
    }
    const bool diagnosed = code == cli::kError && err.str().rfind("error: ", 0) == 0;
    if (i < 13 && !well_formed && diagnosed) ++fixed_errors_ok;
  }
  std::ostringstream d;
  d << "1000 round trips, " << roundtrip_failures << " failed; " << bad.size()
    << " malformed inputs, " << fixed_errors_ok << "/13 fixed diagnostics, " << wrong_code
    << " wrong exit codes, " << crashes << " crashes";
  return {roundtrip_failures == 0 && fixed_errors_ok == 13 && wrong_code == 0 && crashes == 0,
          d.str()};
}

}  // namespace
}  // namespace lexsemi

int main() {
  using namespace lexsemi;
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"pair equivalence vs witness search", pair_equiv_soundness},
      {"trichotomy of weight-2 classes", trichotomy},
      {"automorphism rank and plans", aut_rank_and_plans},
      {"generator constant 1/p", generator_constant},
      {"d calibration and monotonicity", d_calibration},
      {"finite classification vs relations", finite_ground_truth},
      {"embedding laws", embedding_laws},
      {"star product laws", star_laws},
      {"condensation merge table", merge_table},
      {"parser round trip and diagnostics", parser},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::printf("criterion %2d [PRIMARY] %-38s %s  (%s; %.2fs)\n", index, name,
                o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds);
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed;
}
