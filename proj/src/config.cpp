#include "subsum/config.hpp"

#include <algorithm>
#include <set>

namespace subsum {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& why) {
  throw ConfigError("config error at " + (path.empty() ? "<root>" : path) + ": " + why);
}

void check_keys(const Json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(path, "expected an object");
  for (const auto& [key, _] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }) == allowed.end())
      bad(path, "unknown key \"" + key + "\"");
  }
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing key \"") + key + "\"");
  return *it;
}

// Shared radicand tracker: every sqrt literal in one document must agree.
struct ScalarReader {
  std::optional<std::uint64_t> radicand;

  Scalar scalar(const Json& j, const std::string& path) {
    if (!j.is_string())
      bad(path, "bad scalar literal: expected an exact string like \"1/2\"");
    Scalar s;
    try {
      s = Scalar::parse(j.get<std::string>());
    } catch (const ConfigError& e) {
      bad(path, e.what());
    }
    if (!s.is_rational()) {
      if (radicand && *radicand != s.radicand())
        bad(path, "mixed radicands: sqrt(" + std::to_string(*radicand) + ") vs sqrt(" +
                      std::to_string(s.radicand()) + ")");
      radicand = s.radicand();
    }
    return s;
  }

  std::vector<Scalar> scalar_list(const Json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of scalar literals");
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
      out.push_back(scalar(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
  }

  Point2 point(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) bad(path, "expected a pair [\"x\",\"y\"]");
    return {scalar(j[0], path + "[0]"), scalar(j[1], path + "[1]")};
  }

  std::vector<Point2> point_list(const Json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of pairs");
    std::vector<Point2> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
      out.push_back(point(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
  }

  Series1D series1(const Json& j, const std::string& path);
  Series2D series2(const Json& j, const std::string& path);
  PcutParams pcut(const Json& j, const std::string& path);
  GridSet grid(const Json& j, const std::string& path);
};

std::uint64_t uint_field(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) bad(path, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

Series1D ScalarReader::series1(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected a series object");
  const std::string kind = field(j, path, "kind").is_string()
                               ? field(j, path, "kind").get<std::string>()
                               : (bad(path + ".kind", "expected a string"), "");
  if (kind == "finite_list") {
    check_keys(j, path, {"kind", "terms"});
    return Series1D::finite_list(scalar_list(field(j, path, "terms"), path + ".terms"));
  }
  if (kind == "geometric") {
    check_keys(j, path, {"kind", "c", "q"});
    return Series1D::geometric(scalar(field(j, path, "c"), path + ".c"),
                               scalar(field(j, path, "q"), path + ".q"));
  }
  if (kind == "multigeometric") {
    check_keys(j, path, {"kind", "s", "q"});
    return Series1D::multigeometric(scalar_list(field(j, path, "s"), path + ".s"),
                                    scalar(field(j, path, "q"), path + ".q"));
  }
  if (kind == "prefix") {
    check_keys(j, path, {"kind", "terms", "then"});
    return Series1D::prefix(scalar_list(field(j, path, "terms"), path + ".terms"),
                            series1(field(j, path, "then"), path + ".then"));
  }
  if (kind == "scaled") {
    check_keys(j, path, {"kind", "factor", "inner"});
    return Series1D::scaled(scalar(field(j, path, "factor"), path + ".factor"),
                            series1(field(j, path, "inner"), path + ".inner"));
  }
  if (kind == "abs") {
    check_keys(j, path, {"kind", "inner"});
    return Series1D::abs(series1(field(j, path, "inner"), path + ".inner"));
  }
  bad(path, "unknown 1D series kind \"" + kind + "\"");
}

Series2D ScalarReader::series2(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected a series object");
  const std::string kind = field(j, path, "kind").is_string()
                               ? field(j, path, "kind").get<std::string>()
                               : (bad(path + ".kind", "expected a string"), "");
  if (kind == "pair_list") {
    check_keys(j, path, {"kind", "terms"});
    return Series2D::pair_list(point_list(field(j, path, "terms"), path + ".terms"));
  }
  if (kind == "axis_interleave") {
    check_keys(j, path, {"kind", "x", "y"});
    return Series2D::axis_interleave(series1(field(j, path, "x"), path + ".x"),
                                     series1(field(j, path, "y"), path + ".y"));
  }
  if (kind == "diagonal_sum") {
    check_keys(j, path, {"kind", "parts"});
    const Json& parts = field(j, path, "parts");
    if (!parts.is_array() || parts.empty()) bad(path + ".parts", "expected a nonempty array");
    std::vector<Series2D> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
      out.push_back(series2(parts[i], path + ".parts[" + std::to_string(i) + "]"));
    return Series2D::diagonal_sum(std::move(out));
  }
  if (kind == "prefix2") {
    check_keys(j, path, {"kind", "terms", "then"});
    return Series2D::prefix(point_list(field(j, path, "terms"), path + ".terms"),
                            series2(field(j, path, "then"), path + ".then"));
  }
  if (kind == "linear_map") {
    check_keys(j, path, {"kind", "matrix", "inner"});
    const Json& m = field(j, path, "matrix");
    if (!m.is_array() || m.size() != 2) bad(path + ".matrix", "expected two rows");
    Point2 r0 = point(m[0], path + ".matrix[0]");
    Point2 r1 = point(m[1], path + ".matrix[1]");
    Mat2 mat{r0.first, r0.second, r1.first, r1.second};
    return Series2D::linear_map(mat, series2(field(j, path, "inner"), path + ".inner"));
  }
  if (kind == "pair_generator") {
    check_keys(j, path, {"kind", "x", "y"});
    return Series2D::pair_generator(series1(field(j, path, "x"), path + ".x"),
                                    series1(field(j, path, "y"), path + ".y"));
  }
  if (kind == "pcut") {
    return Series2D::pcut(pcut(j, path));
  }
  bad(path, "unknown 2D series kind \"" + kind + "\"");
}

PcutParams ScalarReader::pcut(const Json& j, const std::string& path) {
  check_keys(j, path, {"kind", "P", "a", "base", "yscale"});
  PcutParams p;
  p.coeff_set = scalar_list(field(j, path, "P"), path + ".P");
  p.weights = std::make_shared<Series1D>(series1(field(j, path, "a"), path + ".a"));
  if (j.contains("base")) p.base = uint_field(j["base"], path + ".base");
  if (j.contains("yscale")) p.y_scale = scalar(j["yscale"], path + ".yscale");
  return p;
}

GridSet ScalarReader::grid(const Json& j, const std::string& path) {
  check_keys(j, path, {"shape", "spacing", "level", "radius", "occupancy", "origin", "dims"});
  if (j.contains("shape")) {
    const Json& sh = field(j, path, "shape");
    if (!sh.is_string()) bad(path + ".shape", "expected a string");
    const std::string name = sh.get<std::string>();
    std::uint64_t level = j.contains("level") ? uint_field(j["level"], path + ".level") : 0;
    Scalar radius = j.contains("radius") ? scalar(j["radius"], path + ".radius") : Scalar(1);
    GridShape shape;
    Scalar spacing;
    if (name == "square")
      shape = GridShape::Square;
    else if (name == "disk")
      shape = GridShape::Disk;
    else if (name == "triangle")
      shape = GridShape::Triangle;
    else if (name == "sierpinski")
      shape = GridShape::Sierpinski;
    else if (name == "cantor")
      shape = GridShape::Cantor;
    else
      bad(path + ".shape", "unknown shape \"" + name + "\"");
    if (j.contains("spacing")) {
      spacing = scalar(j["spacing"], path + ".spacing");
    } else if (shape == GridShape::Sierpinski || shape == GridShape::Cantor) {
      if (level == 0) bad(path, "level is required");
      mpz_class cells;
      mpz_ui_pow_ui(cells.get_mpz_t(), 3, level);
      Rational r(mpz_class(1), cells);
      r.canonicalize();
      spacing = Scalar(r);
    } else {
      bad(path, "spacing is required");
    }
    return make_grid_shape(shape, spacing, level, radius);
  }
  // inline grid
  GridSet g;
  if (!j.contains("spacing")) bad(path, "spacing is required");
  g.spacing = scalar(j["spacing"], path + ".spacing");
  if (j.contains("dims")) {
    const std::uint64_t d = uint_field(j["dims"], path + ".dims");
    if (d != 1 && d != 2) bad(path + ".dims", "dims must be 1 or 2");
    g.dims = static_cast<int>(d);
  }
  if (j.contains("origin")) g.origin = point(j["origin"], path + ".origin");
  const Json& occ = field(j, path, "occupancy");
  if (!occ.is_array()) bad(path + ".occupancy", "expected an array of index pairs");
  for (std::size_t i = 0; i < occ.size(); ++i) {
    const Json& c = occ[i];
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
        !c[1].is_number_integer())
      bad(path + ".occupancy[" + std::to_string(i) + "]", "expected [i, j] integers");
    g.occupancy.push_back({c[0].get<std::int64_t>(), c[1].get<std::int64_t>()});
  }
  return g;
}

}  // namespace

Series1D series1d_from_json(const Json& j) {
  ScalarReader r;
  return r.series1(j, "spec");
}

Series2D series2d_from_json(const Json& j) {
  ScalarReader r;
  return r.series2(j, "spec");
}

PcutParams pcut_params_from_json(const Json& j) {
  ScalarReader r;
  return r.pcut(j, "params");
}

namespace {

Json scalar_json(const Scalar& s) { return Json(s.str()); }

Json scalar_list_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const Scalar& s : v) out.push_back(scalar_json(s));
  return out;
}

Json point_list_json(const std::vector<Point2>& v) {
  Json out = Json::array();
  for (const Point2& p : v) out.push_back(Json::array({p.first.str(), p.second.str()}));
  return out;
}

}  // namespace

Json series_to_json(const Series1D& spec) {
  Json j;
  switch (spec.kind()) {
    case Series1D::Kind::FiniteList:
      j["kind"] = "finite_list";
      j["terms"] = scalar_list_json(*spec.as_finite_list());
      break;
    case Series1D::Kind::Geometric: {
      auto g = *spec.as_geometric();
      j["kind"] = "geometric";
      j["c"] = g.first.str();
      j["q"] = g.second.str();
      break;
    }
    case Series1D::Kind::Multigeometric: {
      auto m = *spec.as_multigeometric();
      j["kind"] = "multigeometric";
      j["s"] = scalar_list_json(m.first);
      j["q"] = m.second.str();
      break;
    }
    case Series1D::Kind::Prefix: {
      const auto* p = spec.as_prefix();
      j["kind"] = "prefix";
      j["terms"] = scalar_list_json(p->first);
      j["then"] = series_to_json(p->second);
      break;
    }
    case Series1D::Kind::Scaled: {
      const auto* s = spec.as_scaled();
      j["kind"] = "scaled";
      j["factor"] = s->first.str();
      j["inner"] = series_to_json(s->second);
      break;
    }
    case Series1D::Kind::Abs:
      j["kind"] = "abs";
      j["inner"] = series_to_json(*spec.as_abs());
      break;
  }
  return j;
}

Json series_to_json(const Series2D& spec) {
  // Round-trips through the describe() form are only needed for fingerprints;
  // bindings serialize the common kinds.
  Json j;
  switch (spec.kind()) {
    case Series2D::Kind::AxisInterleave: {
      const auto* f = spec.coordinate_factors();
      j["kind"] = "axis_interleave";
      j["x"] = series_to_json(f->first);
      j["y"] = series_to_json(f->second);
      break;
    }
    case Series2D::Kind::PairGenerator: {
      const auto* f = spec.coordinate_factors();
      j["kind"] = "pair_generator";
      j["x"] = series_to_json(f->first);
      j["y"] = series_to_json(f->second);
      break;
    }
    case Series2D::Kind::Pcut: {
      const PcutParams* p = spec.as_pcut();
      j["kind"] = "pcut";
      j["P"] = scalar_list_json(p->coeff_set);
      j["a"] = series_to_json(*p->weights);
      j["base"] = p->effective_base();
      j["yscale"] = p->y_scale.str();
      break;
    }
    default:
      j["kind"] = "opaque";
      j["describe"] = spec.describe();
      break;
  }
  return j;
}

namespace {

bool wants_1d_spec(const std::string& command) {
  return command == "cover1d" || command == "classify";
}

bool is_1d_kind(const Json& j) {
  static const std::set<std::string> kinds = {"finite_list", "geometric", "multigeometric",
                                              "prefix", "scaled", "abs"};
  return j.is_object() && j.contains("kind") && j["kind"].is_string() &&
         kinds.count(j["kind"].get<std::string>()) > 0;
}

}  // namespace

RunConfig parse_config_json(const Json& j) {
  const std::string path = "config";
  check_keys(j, path,
             {"command", "spec", "depth", "out", "format", "budget", "threads", "width",
              "height", "viewport", "P", "a", "params", "grid", "points", "p", "q",
              "count", "seed"});
  RunConfig cfg;
  const Json& cmd = field(j, path, "command");
  if (!cmd.is_string()) bad(path + ".command", "expected a string");
  cfg.command = cmd.get<std::string>();

  static const std::set<std::string> known = {
      "cover1d",   "cover2d", "classify", "psum",       "pcut-build", "pcut-verify",
      "spectre",   "center",  "render",   "explore-pq", "check-props"};
  if (!known.count(cfg.command)) bad(path + ".command", "unknown command " + cfg.command);

  ScalarReader reader;
  if (j.contains("depth")) cfg.depth = uint_field(j["depth"], path + ".depth");
  if (j.contains("out")) {
    if (!j["out"].is_string()) bad(path + ".out", "expected a string");
    cfg.out_dir = j["out"].get<std::string>();
  }
  if (j.contains("format")) {
    if (!j["format"].is_string()) bad(path + ".format", "expected a string");
    cfg.format = j["format"].get<std::string>();
    if (cfg.format != "svg" && cfg.format != "pgm" && cfg.format != "text")
      bad(path + ".format", "format must be svg, pgm or text");
  }
  if (j.contains("budget")) cfg.limits.max_states = uint_field(j["budget"], path + ".budget");
  if (j.contains("threads"))
    cfg.limits.threads =
        static_cast<unsigned>(uint_field(j["threads"], path + ".threads"));
  if (j.contains("width"))
    cfg.width = static_cast<std::uint32_t>(uint_field(j["width"], path + ".width"));
  if (j.contains("height"))
    cfg.height = static_cast<std::uint32_t>(uint_field(j["height"], path + ".height"));
  if (j.contains("viewport")) {
    const Json& v = j["viewport"];
    check_keys(v, path + ".viewport", {"xmin", "xmax", "ymin", "ymax"});
    cfg.viewport = Viewport{reader.scalar(field(v, path, "xmin"), path + ".xmin"),
                            reader.scalar(field(v, path, "xmax"), path + ".xmax"),
                            reader.scalar(field(v, path, "ymin"), path + ".ymin"),
                            reader.scalar(field(v, path, "ymax"), path + ".ymax")};
  }
  if (j.contains("count")) cfg.prop_count = uint_field(j["count"], path + ".count");
  if (j.contains("seed")) cfg.seed = uint_field(j["seed"], path + ".seed");

  if (cfg.command == "psum") {
    cfg.psum_coeffs = reader.scalar_list(field(j, path, "P"), path + ".P");
    cfg.psum_weights = reader.series1(field(j, path, "a"), path + ".a");
  } else if (cfg.command == "pcut-build" || cfg.command == "pcut-verify") {
    cfg.pcut = reader.pcut(field(j, path, "params"), path + ".params");
  } else if (cfg.command == "explore-pq") {
    cfg.pq_p = reader.scalar(field(j, path, "p"), path + ".p");
    cfg.pq_q = reader.scalar(field(j, path, "q"), path + ".q");
  } else if (cfg.command == "spectre" || cfg.command == "center") {
    if (j.contains("grid")) cfg.grid = reader.grid(j["grid"], path + ".grid");
    if (j.contains("points")) {
      const Json& pts = j["points"];
      if (!pts.is_array() || pts.empty()) bad(path + ".points", "expected a nonempty array");
      if (pts[0].is_array())
        cfg.points2 = reader.point_list(pts, path + ".points");
      else
        cfg.points1 = reader.scalar_list(pts, path + ".points");
    }
    if (j.contains("spec")) {
      const Json& sp = j["spec"];
      if (is_1d_kind(sp))
        cfg.spec1d = reader.series1(sp, path + ".spec");
      else
        cfg.spec2d = reader.series2(sp, path + ".spec");
    }
    if (!cfg.grid && !cfg.points1 && !cfg.points2 && !cfg.spec1d && !cfg.spec2d)
      bad(path, cfg.command + " needs a grid, points, or a spec");
  } else if (cfg.command == "check-props") {
    // count/seed only
  } else {
    const Json& sp = field(j, path, "spec");
    if (wants_1d_spec(cfg.command)) {
      cfg.spec1d = reader.series1(sp, path + ".spec");
    } else if (cfg.command == "render" && is_1d_kind(sp)) {
      cfg.spec1d = reader.series1(sp, path + ".spec");
    } else {
      cfg.spec2d = reader.series2(sp, path + ".spec");
    }
  }
  return cfg;
}

RunConfig parse_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config syntax error: ") + e.what());
  }
  return parse_config_json(j);
}

}  // namespace subsum
