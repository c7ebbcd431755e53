#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "subsum/cover1d.hpp"
#include "subsum/cover2d.hpp"

namespace subsum {

enum class ImageFormat { Svg, Pgm };

struct Viewport {
  Scalar xmin, xmax, ymin, ymax;
};

struct RenderOptions {
  std::uint32_t width = 800;
  std::uint32_t height = 800;
  ImageFormat format = ImageFormat::Svg;
  std::optional<Viewport> viewport;  // default: hull of the cover
};

/// Deterministic image bytes. Every box becomes a filled rectangle; exact
/// coordinates are rounded outward to the pixel grid, so the drawing never
/// hides covered area. Interval covers render as full-height bars.
std::string render_cover(const BoxCover& cover, const RenderOptions& opts);
std::string render_cover(const IntervalCover& cover, const RenderOptions& opts);

}  // namespace subsum
