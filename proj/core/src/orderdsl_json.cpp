#include <json.hpp>

#include "lexsemi/error.hpp"
#include "lexsemi/orderdsl.hpp"

namespace lexsemi {
namespace {

using json = nlohmann::ordered_json;

json seq_json(const ValueSeq& s) {
  return json{{"prefix", s.prefix}, {"cycle", s.cycle}};
}

json color_json(const Color& c) {
  if (const auto* chain = std::get_if<ChainColor>(&c)) return chain->n;
  const FinPoset& p = std::get<PosetColor>(c).poset;
  json pairs = json::array();
  for (auto [i, j] : p.covering_pairs()) pairs.push_back({i, j});
  return json{{"poset", {{"n", p.size()}, {"pairs", pairs}}}};
}

[[noreturn]] void bad(const std::string& message) {
  throw ParseError(ParseError::Kind::kSemantic, 1, 1, "json: " + message);
}

std::vector<Weight> values_from(const json& j) {
  if (!j.is_array()) bad("expected an array of values");
  std::vector<Weight> out;
  for (const json& v : j) {
    if (!v.is_number_unsigned() || v.get<Weight>() == 0) {
      bad("values must be integers >= 1");
    }
    out.push_back(v.get<Weight>());
  }
  return out;
}

ValueSeq seq_from(const json& j) {
  if (!j.is_object() || !j.contains("prefix")) bad("expected {prefix, cycle}");
  ValueSeq s;
  s.prefix = values_from(j.at("prefix"));
  if (j.contains("cycle")) s.cycle = values_from(j.at("cycle"));
  return s;
}

}  // namespace

std::string to_json(const OrderTerm& t, int indent) {
  json atoms = json::array();
  for (const Atom& atom : t.atoms) {
    std::visit(
        [&](const auto& a) {
          using A = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<A, FinChain>) {
            atoms.push_back({{"fin", a.values}});
          } else if constexpr (std::is_same_v<A, OmegaAtom>) {
            atoms.push_back({{"omega", seq_json(a.seq)}});
          } else if constexpr (std::is_same_v<A, OmegaStarAtom>) {
            atoms.push_back({{"omega*", seq_json(a.seq)}});
          } else if constexpr (std::is_same_v<A, ZetaAtom>) {
            atoms.push_back(
                {{"zeta", {{"left", seq_json(a.left)}, {"right", seq_json(a.right)}}}});
          } else {
            json colors = json::array();
            for (const Color& c : a.colors) colors.push_back(color_json(c));
            atoms.push_back({{"eta", colors}});
          }
        },
        atom);
  }
  return json{{"term", atoms}}.dump(indent);
}

OrderTerm from_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseError::Kind::kSyntax, 1, e.byte, e.what());
  }
  if (!root.is_object() || !root.contains("term") || !root["term"].is_array() ||
      root["term"].empty()) {
    bad("expected {\"term\": [atoms...]}");
  }
  OrderTerm t;
  try {
  for (const json& node : root["term"]) {
    if (!node.is_object() || node.size() != 1) bad("each atom is a one-key object");
    const auto& [key, body] = *node.items().begin();
    if (key == "fin") {
      t.atoms.push_back(FinChain{values_from(body)});
    } else if (key == "omega") {
      t.atoms.push_back(OmegaAtom{seq_from(body)});
    } else if (key == "omega*") {
      t.atoms.push_back(OmegaStarAtom{seq_from(body)});
    } else if (key == "zeta") {
      if (!body.is_object()) bad("zeta needs {left, right}");
      t.atoms.push_back(ZetaAtom{seq_from(body.at("left")), seq_from(body.at("right"))});
    } else if (key == "eta") {
      if (!body.is_array() || body.empty()) bad("eta needs a nonempty color set");
      EtaAtom e;
      for (const json& c : body) {
        if (c.is_number_unsigned()) {
          if (c.get<Weight>() < 2) bad("a color needs at least 2 elements");
          e.colors.push_back(ChainColor{c.get<Weight>()});
        } else if (c.is_object() && c.contains("poset")) {
          const json& p = c["poset"];
          std::vector<FinPoset::Pair> pairs;
          for (const json& pr : p.at("pairs")) {
            pairs.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
          }
          const auto n = p.at("n").get<std::size_t>();
          if (n < 2 || n > kCanonicalFormLimit) bad("poset color size out of range");
          FinPoset poset;
          try {
            poset = FinPoset::from_pairs(n, pairs);
          } catch (const DomainError& err) {
            bad(err.what());
          }
          if (!is_connected(poset)) bad("poset color must be connected");
          e.colors.push_back(PosetColor{std::move(poset)});
        } else {
          bad("unrecognized color");
        }
      }
      t.atoms.push_back(std::move(e));
    } else {
      bad("unknown atom kind '" + key + "'");
    }
  }
  } catch (const json::exception& e) {
    bad(e.what());
  }
  if (t.has_poset_colors() && t.atoms.size() != 1) {
    bad("poset colors are only allowed in a single eta atom");
  }
  return t;
}

}  // namespace lexsemi
