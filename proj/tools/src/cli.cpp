#include "lexsemi_cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "lexsemi/algebra.hpp"
#include "lexsemi/autos.hpp"
#include "lexsemi/classify.hpp"
#include "lexsemi/condense.hpp"
#include "lexsemi/error.hpp"
#include "lexsemi/oracle.hpp"
#include "lexsemi/orderdsl.hpp"
#include "lexsemi/space.hpp"
#include "lexsemi/supernat.hpp"

namespace lexsemi::cli {
namespace {

std::string read_source(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw Error("cannot read " + arg);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  }
  return arg;
}

OrderTerm load_term(const std::string& arg) { return parse(read_source(arg)); }

// aut-rank accepts a term or a pair literal such as "(2^inf, 2^inf)".
SupernaturalPair load_pair_or_term(const std::string& arg) {
  const std::string text = read_source(arg);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '(') return parse_pair(text);
  const Line line = line_of(parse(text));
  return SupernaturalPair{from_seq(line.right), from_seq(line.left)};
}

std::vector<std::size_t> parse_positions(const std::string& text) {
  std::vector<std::size_t> out;
  for (Weight w : parse_chain(text)) out.push_back(static_cast<std::size_t>(w));
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lexicographic semigroupoid invariants and isomorphism", "lexsemi"};
  app.require_subcommand(1);
  std::function<int()> run;

  auto* parse_cmd = app.add_subcommand("parse", "Parse a term and print it back");
  std::string term_a;
  bool as_json = false;
  bool normalized = false;
  parse_cmd->add_option("term", term_a, "Term file or text")->required();
  parse_cmd->add_flag("--json", as_json, "Print the structured tree");
  parse_cmd->add_flag("--normalize", normalized, "Normalize before printing");
  parse_cmd->callback([&] {
    run = [&] {
      OrderTerm t = load_term(term_a);
      if (normalized) t = normalize(t);
      out << (as_json ? to_json(t, 2) : print(t)) << "\n";
      return kSuccess;
    };
  });

  auto* condense_cmd = app.add_subcommand("condense", "Print the classification signature");
  condense_cmd->add_option("term", term_a, "Term file or text")->required();
  condense_cmd->callback([&] {
    run = [&] {
      out << to_string(condense(load_term(term_a))) << "\n";
      return kSuccess;
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Decide isomorphism of two terms");
  std::string term_b;
  classify_cmd->add_option("a", term_a, "First term")->required();
  classify_cmd->add_option("b", term_b, "Second term")->required();
  classify_cmd->callback([&] {
    run = [&] {
      const Verdict v = classify(load_term(term_a), load_term(term_b));
      out << to_string(v);
      return v.isomorphic ? kSuccess : kNegative;
    };
  });

  auto* pair_cmd = app.add_subcommand("pair-equiv", "Decide equivalence of supernatural pairs");
  pair_cmd->add_option("a", term_a, "First pair, e.g. \"(2^inf, 3)\"")->required();
  pair_cmd->add_option("b", term_b, "Second pair")->required();
  pair_cmd->callback([&] {
    run = [&] {
      const PairVerdict v = pair_equiv(parse_pair(term_a), parse_pair(term_b));
      if (!v.equivalent) {
        out << "not equivalent\n";
        return kNegative;
      }
      out << "equivalent: a = " << v.witness->a << ", b = " << v.witness->b << "\n";
      return kSuccess;
    };
  });

  auto* rank_cmd = app.add_subcommand("aut-rank", "Rank of the automorphism group");
  bool list_primes = false;
  rank_cmd->add_option("term", term_a, "Single-class term or pair")->required();
  rank_cmd->add_flag("--primes", list_primes, "Also list the generating primes");
  rank_cmd->callback([&] {
    run = [&] {
      const SupernaturalPair P = load_pair_or_term(term_a);
      out << aut_rank(P) << "\n";
      if (list_primes) {
        for (Prime p : shared_infinite_primes(P)) out << p << "\n";
      }
      return kSuccess;
    };
  });

  auto* d_cmd = app.add_subcommand("d-value", "Exact d value of a point");
  std::string point_text;
  d_cmd->add_option("term", term_a, "Single-class term")->required();
  d_cmd->add_option("--point", point_text, "point{...}")->required();
  d_cmd->callback([&] {
    run = [&] {
      const Line line = line_of(load_term(term_a));
      out << to_string(d_value(parse_point(point_text, line))) << "\n";
      return kSuccess;
    };
  });

  auto* act_cmd = app.add_subcommand("act", "Apply the generator for a prime to a point");
  Prime prime = 0;
  std::int64_t steps = 1;
  act_cmd->add_option("term", term_a, "Single-class term")->required();
  act_cmd->add_option("--prime", prime, "Prime generator")->required();
  act_cmd->add_option("--point", point_text, "point{...}")->required();
  act_cmd->add_option("--steps", steps, "Number of applications; negative inverts");
  act_cmd->callback([&] {
    run = [&] {
      const Line line = line_of(load_term(term_a));
      const RecodingPlan plan = recoding_plan(line, prime, steps);
      const Point x = parse_point(point_text, line);
      const Point y = act(plan, x);
      const Rational dx = d_value(x);
      const Rational dy = d_value(y);
      out << to_string(y) << "\n";
      if (dx == 0) {
        out << "d: 0 -> " << to_string(dy) << "\n";
      } else {
        out << "d ratio: " << to_string(dy / dx) << "\n";
      }
      return kSuccess;
    };
  });

  auto* algebra_cmd = app.add_subcommand("algebra", "Matrix-unit embeddings and star products");
  algebra_cmd->require_subcommand(1);
  auto* embed_cmd = algebra_cmd->add_subcommand("embed", "Image of a matrix unit");
  std::string from_text, to_text, unit_text, positions_text;
  embed_cmd->add_option("--from", from_text, "Source chain, e.g. \"2\"")->required();
  embed_cmd->add_option("--to", to_text, "Target chain, e.g. \"2,3\"")->required();
  embed_cmd->add_option("--unit", unit_text, "Unit, e.g. \"(1)(2)\"")->required();
  embed_cmd->add_option("--positions", positions_text,
                        "0-based target positions of the source factors");
  embed_cmd->callback([&] {
    run = [&] {
      const WeightedChain f = parse_chain(from_text);
      const WeightedChain g = parse_chain(to_text);
      const MultiIndexUnit u = parse_unit(unit_text);
      const std::vector<std::size_t> pos =
          positions_text.empty() ? infer_inclusion(f, g) : parse_positions(positions_text);
      for (const auto& [v, c] : embed(f, g, pos, u)) {
        out << (c == 1 ? "" : std::to_string(c) + "*") << to_string(v) << "\n";
      }
      return kSuccess;
    };
  });
  auto* star_cmd = algebra_cmd->add_subcommand("star", "Star product of two digraphs");
  std::string a_text, b_text;
  star_cmd->add_option("--a", a_text, "chain:N or poset:N;i<j,...")->required();
  star_cmd->add_option("--b", b_text, "chain:N or poset:N;i<j,...")->required();
  star_cmd->callback([&] {
    run = [&] {
      out << to_string(star_product(parse_digraph(a_text), parse_digraph(b_text))) << "\n";
      return kSuccess;
    };
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "Run the brute-force cross-check suite");
  std::uint64_t seed = 1;
  std::string case_name;
  bool oracle_json = false;
  oracle_cmd->add_option("--seed", seed, "Random seed");
  oracle_cmd->add_option("--case", case_name, "Run a single case");
  oracle_cmd->add_flag("--json", oracle_json, "Machine-readable summary");
  oracle_cmd->callback([&] {
    run = [&] {
      const Report r = run_suite(seed, {}, case_name.empty() ? std::nullopt
                                                             : std::optional(case_name));
      out << (oracle_json ? r.json() + "\n" : r.text());
      return r.failures() == 0 ? kSuccess : kNegative;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  try {
    return run();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace lexsemi::cli
