#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "subsum/presets.hpp"
#include "subsum/runner.hpp"

namespace {

struct CliOptions {
  std::string config_file;
  std::string preset;
  std::int64_t depth = -1;
  std::string out_dir;
  std::string format;
  std::uint64_t budget = 0;
  unsigned threads = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw subsum::ConfigError("cannot read config file " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// Resolution order: preset or config file, then flag overrides, then the
// SUBSUM_BUDGET environment default.
subsum::RunConfig resolve(const CliOptions& opts, const std::string& command) {
  subsum::RunConfig cfg;
  if (!opts.preset.empty()) {
    auto preset = subsum::load_preset(opts.preset);
    if (!preset) throw subsum::ConfigError("unknown preset " + opts.preset);
    cfg = *preset;
  } else if (!opts.config_file.empty()) {
    cfg = subsum::parse_config(read_file(opts.config_file));
  } else {
    throw subsum::ConfigError("either --config or --preset is required");
  }
  if (!command.empty() && command != cfg.command) {
    if (opts.preset.empty())
      throw subsum::ConfigError("config command " + cfg.command +
                                " does not match subcommand " + command);
    cfg.command = command;  // presets may be re-targeted, e.g. render -> cover2d
  }
  if (opts.depth >= 0) cfg.depth = static_cast<std::uint64_t>(opts.depth);
  if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
  if (!opts.format.empty()) cfg.format = opts.format;
  if (opts.budget > 0) {
    cfg.limits.max_states = opts.budget;
  } else if (const char* env = std::getenv("SUBSUM_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) cfg.limits.max_states = v;
  }
  if (opts.threads > 0) cfg.limits.threads = opts.threads;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subsum: certified covers of sets of subsums, planar cuts, and spectra"};
  app.require_subcommand(0, 1);

  CliOptions opts;
  app.add_option("--config", opts.config_file, "run configuration JSON file");
  app.add_option("--preset", opts.preset, "named preset from the registry");
  app.add_option("--depth", opts.depth, "enumeration depth override");
  app.add_option("--out", opts.out_dir, "artifact output directory");
  app.add_option("--format", opts.format, "output format: svg, pgm or text")
      ->check(CLI::IsMember({"svg", "pgm", "text"}));
  app.add_option("--budget", opts.budget, "deduplicated-state budget override");
  app.add_option("--threads", opts.threads, "worker threads for enumerations");

  static const char* commands[] = {"cover1d",     "cover2d", "classify", "psum",
                                   "pcut-build",  "pcut-verify", "spectre",  "center",
                                   "render",      "explore-pq",  "check-props"};
  for (const char* name : commands) app.add_subcommand(name)->fallthrough();

  bool list_presets = false;
  CLI::App* presets_cmd = app.add_subcommand("presets", "list the preset registry");
  presets_cmd->callback([&] { list_presets = true; });

  CLI11_PARSE(app, argc, argv);

  if (list_presets) {
    for (const subsum::Preset& p : subsum::preset_registry())
      std::cout << p.name << " (v" << p.version << "): " << p.note << "\n";
    return subsum::kExitOk;
  }

  std::string command;
  for (const CLI::App* sub : app.get_subcommands())
    if (sub->get_name() != "presets") command = sub->get_name();

  try {
    const subsum::RunConfig cfg = resolve(opts, command);
    return subsum::run_command_safe(cfg, std::cout, std::cerr);
  } catch (const subsum::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return subsum::kExitConfig;
  } catch (const subsum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return subsum::kExitFailure;
  }
}
