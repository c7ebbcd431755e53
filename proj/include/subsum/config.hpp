#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "subsum/render.hpp"
#include "subsum/scalar.hpp"
#include "subsum/series.hpp"
#include "subsum/spectre.hpp"

namespace subsum {

using Json = nlohmann::json;

/// Exact series parsers for the JSON spec objects, e.g.
///   {"kind":"geometric","c":"1","q":"1/2"}
///   {"kind":"multigeometric","s":["3","2"],"q":"1/4"}
///   {"kind":"axis_interleave","x":{...},"y":{...}}
/// Scalar literals are strings; decimal floats are rejected; unknown keys are
/// rejected; all sqrt radicands in one document must agree.
Series1D series1d_from_json(const Json& j);
Series2D series2d_from_json(const Json& j);
Json series_to_json(const Series1D& spec);
Json series_to_json(const Series2D& spec);
PcutParams pcut_params_from_json(const Json& j);

/// Validated run configuration: exactly one command plus its inputs.
struct RunConfig {
  std::string command;
  std::optional<Series1D> spec1d;
  std::optional<Series2D> spec2d;
  std::optional<PcutParams> pcut;
  std::vector<Scalar> psum_coeffs;          // psum
  std::optional<Series1D> psum_weights;     // psum
  std::optional<GridSet> grid;              // spectre / center
  std::optional<std::vector<Scalar>> points1;
  std::optional<std::vector<Point2>> points2;
  std::uint64_t depth = 8;
  std::string out_dir;
  std::string format = "text";              // svg | pgm | text
  EnumLimits limits;
  std::uint32_t width = 800;
  std::uint32_t height = 800;
  std::optional<Viewport> viewport;
  std::optional<Scalar> pq_p, pq_q;         // explore-pq
  std::uint64_t prop_count = 500;           // check-props
  std::uint64_t seed = 1;
  std::string preset_name;
};

RunConfig parse_config(const std::string& text);
RunConfig parse_config_json(const Json& j);

}  // namespace subsum
