#include "subsum/presets.hpp"

#include <map>

namespace subsum {

namespace {

const char* kUnitSquare =
    R"json({"kind":"axis_interleave","x":{"kind":"geometric","c":"1","q":"1/2"},"y":{"kind":"geometric","c":"1","q":"1/2"}})json";
const char* kGuthrieNymann = R"json({"kind":"multigeometric","s":["3","2"],"q":"1/4"})json";
const char* kTernaryCantor = R"json({"kind":"geometric","c":"2","q":"1/3"})json";

std::string prefixed_square(const std::string& pairs, int depth) {
  return std::string(R"json({"command":"render","format":"svg","depth":)json") +
         std::to_string(depth) + R"json(,"spec":{"kind":"prefix2","terms":)json" + pairs +
         R"json(,"then":)json" + kUnitSquare + "}}";
}

std::string diagonal_union(const std::string& diag_series, int depth) {
  return std::string(R"json({"command":"render","format":"svg","depth":)json") +
         std::to_string(depth) +
         R"json(,"spec":{"kind":"diagonal_sum","parts":[)json" + kUnitSquare +
         R"json(,{"kind":"pair_list","terms":[["-1","1"]]},{"kind":"pair_generator","x":)json" +
         diag_series + R"json(,"y":)json" + diag_series + "}]}}";
}

std::string translated_strip(const std::string& shift_pair, int depth) {
  return std::string(R"json({"command":"render","format":"svg","depth":)json") +
         std::to_string(depth) + R"json(,"spec":{"kind":"prefix2","terms":[)json" + shift_pair +
         R"json(],"then":{"kind":"axis_interleave","x":{"kind":"geometric","c":"1","q":"1/2"},"y":)json" +
         kGuthrieNymann + "}}}";
}

std::vector<Preset> build_registry() {
  std::vector<Preset> r;
  const std::string v = "1";

  r.push_back({"fig1a", v, "unit square with four (1,1) translations prepended",
               prefixed_square(R"json([["1","1"],["1","1"],["1","1"],["1","1"]])json", 12)});
  r.push_back({"fig1b", v, "unit square with (1,1) x2 and (-1,1) x2 prepended",
               prefixed_square(R"json([["1","1"],["1","1"],["-1","1"],["-1","1"]])json", 12)});
  r.push_back({"fig1c", v, "unit square with (2/3,2/3) x2 and (-1,1) x2 prepended",
               prefixed_square(
                   R"json([["2/3","2/3"],["2/3","2/3"],["-1","1"],["-1","1"]])json", 12)});
  r.push_back({"fig1d", v, "unit square with (-2/3,2/3) and (2/3,2/3) x3 prepended",
               prefixed_square(
                   R"json([["-2/3","2/3"],["2/3","2/3"],["2/3","2/3"],["2/3","2/3"]])json", 12)});
  r.push_back({"fig2a", v,
               "square + one (-1,1) shift + diagonal copy of the ternary Cantor set",
               diagonal_union(kTernaryCantor, 14)});
  r.push_back({"fig2b", v,
               "square + one (-1,1) shift + diagonal copy of the (3,2;1/4) Cantorval",
               diagonal_union(kGuthrieNymann, 14)});
  r.push_back({"fig3a", v, "interval x Cantorval strip united with its (1,1) translate",
               translated_strip(R"json(["1","1"])json", 13)});
  r.push_back({"fig3b", v, "interval x Cantorval strip united with its (1,1/3) translate",
               translated_strip(R"json(["1","1/3"])json", 13)});
  r.push_back({"fig3c", v, "interval x Cantorval strip united with its (1,1/6) translate",
               translated_strip(R"json(["1","1/6"])json", 13)});

  r.push_back({"example-12cantor", v,
               "collision statistics for the pair (1/2^n, 1/3^n); unique second-axis "
               "representations force a Cantor set",
               R"json({"command":"explore-pq","p":"1/2","q":"1/3","depth":12})json"});
  r.push_back({"example-pcut-L", v,
               "cut verification for P={0,1,2,9}, a=3^-n (an L-Cantorval as a cut)",
               R"json({"command":"pcut-verify","depth":4,"params":{"P":["0","1","2","9"],"a":{"kind":"geometric","c":"1","q":"1/3"},"base":6,"yscale":"1"}})json"});
  r.push_back({"example-pcut-L-render", v,
               "planar cover of the P={0,1,2,9} cut construction",
               R"json({"command":"render","format":"svg","depth":16,"spec":{"kind":"pcut","P":["0","1","2","9"],"a":{"kind":"geometric","c":"1","q":"1/3"},"base":6,"yscale":"1"}})json"});
  r.push_back({"example-counterexample-5", v,
               "spectre of the depth-3 subsums of (1/4^n, 1/5^n); (1/4,1/25) is excluded",
               R"json({"command":"spectre","depth":3,"spec":{"kind":"pair_generator","x":{"kind":"geometric","c":"1","q":"1/4"},"y":{"kind":"geometric","c":"1","q":"1/5"}}})json"});
  r.push_back({"example-sqrt2", v,
               "classification of the slowly convergent (1/sqrt(2))^n in Q(sqrt(2))",
               R"json({"command":"classify","depth":12,"spec":{"kind":"geometric","c":"1","q":"1/2*sqrt(2)"}})json"});

  r.push_back({"square-grid-1/4", v, "spectre of the 5x5 lattice of the unit square",
               R"json({"command":"spectre","grid":{"shape":"square","spacing":"1/4"}})json"});
  r.push_back({"disk-grid-1/8", v, "spectre of the unit-disk lattice at spacing 1/8",
               R"json({"command":"spectre","grid":{"shape":"disk","spacing":"1/8","radius":"1"}})json"});
  r.push_back({"triangle-grid-1/8", v, "spectre of the unit-triangle lattice at spacing 1/8",
               R"json({"command":"spectre","grid":{"shape":"triangle","spacing":"1/8"}})json"});
  r.push_back({"sierpinski-3", v, "spectre of the level-3 carpet lattice",
               R"json({"command":"spectre","grid":{"shape":"sierpinski","level":3}})json"});
  r.push_back({"cantor-3", v, "center of distances of the level-3 ternary approximant",
               R"json({"command":"center","grid":{"shape":"cantor","level":3}})json"});

  r.push_back({"guthrie-nymann", v, "classification of the (3,2;1/4) Cantorval",
               std::string(R"json({"command":"classify","depth":12,"spec":)json") +
                   kGuthrieNymann + "}"});
  r.push_back({"ternary-cantor", v, "depth-10 cover of the ternary Cantor set",
               std::string(R"json({"command":"cover1d","depth":10,"spec":)json") + kTernaryCantor +
                   "}"});
  r.push_back({"unit-interval", v, "depth-12 cover of the unit interval",
               R"json({"command":"cover1d","depth":12,"spec":{"kind":"geometric","c":"1","q":"1/2"}})json"});
  return r;
}

const std::map<std::string, std::string>& alias_map() {
  static const std::map<std::string, std::string> aliases = {
      {"fig1", "fig1a"}, {"fig2", "fig1b"}, {"fig3", "fig1c"},
      {"fig4", "fig1d"}, {"fig5", "fig2a"}, {"fig6", "fig2b"},
      {"fig7", "fig3a"}, {"fig8", "fig3b"}, {"fig9", "fig3c"},
  };
  return aliases;
}

}  // namespace

const std::vector<Preset>& preset_registry() {
  static const std::vector<Preset> registry = build_registry();
  return registry;
}

std::optional<RunConfig> load_preset(const std::string& name) {
  std::string resolved = name;
  auto alias = alias_map().find(name);
  if (alias != alias_map().end()) resolved = alias->second;
  for (const Preset& p : preset_registry()) {
    if (p.name == resolved) {
      RunConfig cfg = parse_config(p.config);
      cfg.preset_name = p.name;
      return cfg;
    }
  }
  return std::nullopt;
}

}  // namespace subsum
