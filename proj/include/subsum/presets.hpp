#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subsum/config.hpp"

namespace subsum {

/// Named, versioned run configurations for the built-in example
/// constructions and figures.
struct Preset {
  std::string name;
  std::string version;
  std::string note;
  std::string config;  // RunConfig JSON
};

const std::vector<Preset>& preset_registry();

/// Resolves aliases (fig1..fig9 map onto fig1a..fig3c) and parses the
/// registered config. Returns nullopt for unknown names.
std::optional<RunConfig> load_preset(const std::string& name);

}  // namespace subsum
