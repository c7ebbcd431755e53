#include <doctest.h>

#include <sstream>

#include "subsum/presets.hpp"
#include "subsum/runner.hpp"

using namespace subsum;

namespace {

std::string run_text(const RunConfig& cfg) {
  std::ostringstream os;
  run_command(cfg, os);
  return os.str();
}

}  // namespace

TEST_CASE("series JSON parsing worked examples") {
  const Series1D g = series1d_from_json(Json::parse(
      R"({"kind":"geometric","c":"1","q":"1/2"})"));
  CHECK(g.term(3) == Scalar::parse("1/8"));

  const Series1D m = series1d_from_json(Json::parse(
      R"({"kind":"multigeometric","s":["3","2"],"q":"1/4"})"));
  CHECK(m.term(1) == Scalar::parse("3/4"));

  const Series2D ai = series2d_from_json(Json::parse(
      R"({"kind":"axis_interleave","x":{"kind":"geometric","c":"1","q":"1/2"},
          "y":{"kind":"geometric","c":"1","q":"1/2"}})"));
  CHECK(ai.term(1) == Point2{Scalar::parse("1/2"), Scalar::parse("0")});
}

TEST_CASE("config validation errors") {
  // decimal literals are rejected
  CHECK_THROWS_AS(series1d_from_json(Json::parse(
                      R"({"kind":"geometric","c":"1","q":"0.5"})")),
                  ConfigError);
  // JSON numbers are not exact literals
  CHECK_THROWS_AS(series1d_from_json(Json::parse(
                      R"({"kind":"geometric","c":"1","q":0.5})")),
                  ConfigError);
  // unknown kind
  CHECK_THROWS_AS(series1d_from_json(Json::parse(R"({"kind":"zeta"})")), ConfigError);
  // unknown keys are rejected
  CHECK_THROWS_AS(series1d_from_json(Json::parse(
                      R"({"kind":"geometric","c":"1","q":"1/2","extra":1})")),
                  ConfigError);
  // mixed radicands across one document
  CHECK_THROWS_AS(series1d_from_json(Json::parse(
                      R"({"kind":"finite_list","terms":["sqrt(2)","sqrt(3)"]})")),
                  ConfigError);
  // malformed top-level config
  CHECK_THROWS_AS(parse_config("not json"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"command":"warp"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"command":"cover1d"})"), ConfigError);
}

TEST_CASE("every registered preset parses and runs in budget") {
  for (const Preset& p : preset_registry()) {
    INFO(p.name);
    auto cfg = load_preset(p.name);
    REQUIRE(cfg.has_value());
    if (cfg->command == "render") cfg->out_dir = "preset_render_out";
    std::ostringstream os;
    CHECK(run_command(*cfg, os) == kExitOk);
  }
}

TEST_CASE("figure aliases resolve") {
  for (const char* alias : {"fig1", "fig5", "fig9"}) CHECK(load_preset(alias).has_value());
  CHECK(load_preset("fig1")->preset_name == "fig1a");
  CHECK_FALSE(load_preset("not-a-preset").has_value());
}

TEST_CASE("identical configs produce identical bytes") {
  const char* config =
      R"({"command":"cover1d","depth":9,"spec":{"kind":"multigeometric","s":["3","2"],"q":"1/4"}})";
  CHECK(run_text(parse_config(config)) == run_text(parse_config(config)));
}

TEST_CASE("runner exit codes") {
  RunConfig bad = parse_config(
      R"({"command":"cover1d","depth":18,"budget":64,"spec":{"kind":"geometric","c":"1","q":"1/3"}})");
  std::ostringstream os, err;
  CHECK(run_command_safe(bad, os, err) == kExitBudget);

  // invalid pcut params surface as config errors
  RunConfig invalid = parse_config(
      R"({"command":"pcut-verify","depth":2,"params":{"P":["1","2"],"a":{"kind":"geometric","c":"1","q":"1/2"}}})");
  CHECK(run_command_safe(invalid, os, err) == kExitConfig);
}

TEST_CASE("spectre and center commands accept explicit points") {
  RunConfig cfg = parse_config(
      R"({"command":"spectre","points":["0","1"]})");
  CHECK(run_text(cfg) == "# spectre vectors\n-1\n0\n1\n");
  RunConfig center = parse_config(
      R"({"command":"center","points":["0","1","2"]})");
  CHECK(run_text(center) == "# center of distances\n0\n1\n");
}

TEST_CASE("series JSON round trip") {
  const char* text =
      R"({"kind":"prefix","terms":["1","2/3"],"then":{"kind":"geometric","c":"2","q":"1/3"}})";
  const Series1D s = series1d_from_json(Json::parse(text));
  const Series1D back = series1d_from_json(series_to_json(s));
  CHECK(back.same_structure(s));
}
