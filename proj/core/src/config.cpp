#include "cookiedim/config.hpp"

#include <algorithm>
#include <utility>

#include "cookiedim/errors.hpp"
#include "cookiedim/toml_lite.hpp"

namespace cookiedim {

namespace {

using nlohmann::json;

double get_number(const json& obj, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError("missing key '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError("key '" + key + "' must be a number");
  return v.get<double>();
}

std::int64_t get_integer(const json& obj, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError("missing key '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number_integer())
    throw ConfigError("key '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string get_string(const json& obj, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError("missing key '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError("key '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<int> get_int_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw ConfigError(what + " must be an array");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer())
      throw ConfigError(what + " entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

ContractingMap load_branch(const json& b,
                           const std::vector<ContractingMap>& earlier) {
  std::string kind = get_string(b, "kind");
  if (kind == "affine")
    return ContractingMap::affine(get_number(b, "slope"),
                                  get_number(b, "offset"));
  if (kind == "moebius") {
    if (b.contains("p"))
      return ContractingMap::moebius(get_number(b, "p"), get_number(b, "q"),
                                     get_number(b, "r"));
    return ContractingMap::moebius_full(get_number(b, "a"), get_number(b, "b"),
                                        get_number(b, "c"), get_number(b, "d"));
  }
  if (kind == "moebius_constraints")
    return moebius_from_constraints(get_number(b, "x0"), get_number(b, "y0"),
                                    get_number(b, "d0"), get_number(b, "x1"),
                                    get_number(b, "y1"));
  if (kind == "reflect_of") {
    auto idx = get_integer(b, "of");
    if (idx < 0 || idx >= static_cast<std::int64_t>(earlier.size()))
      throw ConfigError("reflect_of index " + std::to_string(idx) +
                        " does not name an earlier branch");
    return reflect(earlier[static_cast<std::size_t>(idx)]);
  }
  throw ConfigError("unknown branch kind '" + kind + "'");
}

CookieCutter load_system(const json& sys) {
  if (!sys.contains("branch") || !sys.at("branch").is_array() ||
      sys.at("branch").empty())
    throw ConfigError("a system needs at least one [[system.branch]]");
  std::vector<ContractingMap> branches;
  for (const json& b : sys.at("branch"))
    branches.push_back(load_branch(b, branches));
  std::string label =
      sys.contains("label") ? get_string(sys, "label") : std::string{};
  return CookieCutter(std::move(branches), std::move(label));
}

Poly load_poly(const json& obj, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError("missing key '" + key + "'");
  const json& v = obj.at(key);
  Poly p;
  if (v.is_number()) {
    p.coeffs = {v.get<double>()};
    return p;
  }
  if (!v.is_array() || v.empty())
    throw ConfigError("key '" + key +
                      "' must be a number or a coefficient list");
  for (const json& e : v) {
    if (!e.is_number())
      throw ConfigError("coefficients of '" + key + "' must be numbers");
    p.coeffs.push_back(e.get<double>());
  }
  return p;
}

BranchTemplate load_branch_template(const json& b) {
  BranchTemplate bt;
  std::string kind = get_string(b, "kind");
  if (kind == "affine") {
    bt.moebius = false;
    bt.coeffs = {load_poly(b, "slope"), load_poly(b, "offset")};
  } else if (kind == "moebius") {
    bt.moebius = true;
    bt.coeffs = {load_poly(b, "a"), load_poly(b, "b"), load_poly(b, "c"),
                 load_poly(b, "d")};
  } else {
    throw ConfigError("unknown sweep branch kind '" + kind + "'");
  }
  return bt;
}

}  // namespace

SystemFamily load_system_family(const json& doc) {
  if (!doc.contains("system") || !doc.at("system").is_array() ||
      doc.at("system").empty())
    throw ConfigError("config needs at least one [[system]] table");
  std::vector<CookieCutter> systems;
  for (const json& s : doc.at("system")) systems.push_back(load_system(s));
  return SystemFamily(std::move(systems));
}

bool has_sequence(const json& doc) { return doc.contains("sequence"); }

SymbolSequence load_sequence(const json& doc) {
  if (!has_sequence(doc)) throw ConfigError("config has no [sequence] table");
  const json& s = doc.at("sequence");

  auto finish = [&](std::vector<Block> blocks) {
    int max_letter = 0;
    for (const Block& b : blocks)
      for (int w : b.word) max_letter = std::max(max_letter, w);
    int alphabet = s.contains("alphabet")
                       ? static_cast<int>(get_integer(s, "alphabet"))
                       : max_letter + 1;
    return SymbolSequence(std::move(blocks), alphabet);
  };

  if (s.contains("letters")) {
    std::vector<int> letters = get_int_list(s.at("letters"), "letters");
    std::vector<Block> blocks;
    blocks.push_back({std::move(letters), 1});
    return finish(std::move(blocks));
  }

  if (s.contains("block")) {
    if (!s.at("block").is_array())
      throw ConfigError("[[sequence.block]] must be a table array");
    std::vector<Block> blocks;
    for (const json& b : s.at("block")) {
      Block blk;
      if (!b.contains("word"))
        throw ConfigError("a sequence block needs a word");
      blk.word = get_int_list(b.at("word"), "word");
      blk.repeat = b.contains("repeat") ? get_integer(b, "repeat") : 1;
      blocks.push_back(std::move(blk));
    }
    return finish(std::move(blocks));
  }

  if (s.contains("rule")) {
    const json& r = s.at("rule");
    if (!r.contains("words") || !r.at("words").is_array())
      throw ConfigError("[sequence.rule] needs a words array");
    std::vector<std::vector<int>> words;
    int max_letter = 0;
    for (const json& w : r.at("words")) {
      words.push_back(get_int_list(w, "rule word"));
      for (int x : words.back()) max_letter = std::max(max_letter, x);
    }
    std::string growth = get_string(r, "growth");
    GrowthRule g;
    if (growth == "geometric")
      g = GrowthRule::Geometric;
    else if (growth == "supergeometric")
      g = GrowthRule::Supergeometric;
    else
      throw ConfigError("growth must be 'geometric' or 'supergeometric'");
    int alphabet = s.contains("alphabet")
                       ? static_cast<int>(get_integer(s, "alphabet"))
                       : max_letter + 1;
    return rule_sequence(words, g, get_number(r, "gamma"),
                         static_cast<int>(get_integer(r, "j_max")), alphabet);
  }

  throw ConfigError(
      "[sequence] needs letters, [[sequence.block]] entries, or a "
      "[sequence.rule] table");
}

SweepSpec load_sweep(const json& doc) {
  SweepSpec spec;
  if (!doc.contains("range") || !doc.at("range").is_array() ||
      doc.at("range").size() != 2)
    throw ConfigError("sweep config needs range = [lo, hi]");
  spec.family.a_lo = doc.at("range").at(0).get<double>();
  spec.family.a_hi = doc.at("range").at(1).get<double>();
  if (!(spec.family.a_lo < spec.family.a_hi))
    throw ConfigError("sweep range must satisfy lo < hi");
  if (doc.contains("grid"))
    spec.grid_size = static_cast<int>(get_integer(doc, "grid"));
  if (doc.contains("threshold")) spec.threshold = get_number(doc, "threshold");

  if (!doc.contains("family") || !doc.at("family").is_array() ||
      doc.at("family").empty())
    throw ConfigError("sweep config needs at least one [[family]] table");
  for (const json& f : doc.at("family")) {
    SystemTemplate st;
    st.label = f.contains("label") ? get_string(f, "label") : std::string{};
    if (!f.contains("branch") || !f.at("branch").is_array() ||
        f.at("branch").empty())
      throw ConfigError("a sweep family needs [[family.branch]] entries");
    for (const json& b : f.at("branch"))
      st.branches.push_back(load_branch_template(b));
    spec.family.systems.push_back(std::move(st));
  }
  return spec;
}

SystemFamily load_system_family_file(const std::string& path) {
  return load_system_family(parse_toml_file(path));
}

SweepSpec load_sweep_file(const std::string& path) {
  return load_sweep(parse_toml_file(path));
}

}  // namespace cookiedim
