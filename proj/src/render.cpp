#include "subsum/render.hpp"

#include <algorithm>
#include <sstream>

namespace subsum {

namespace {

struct PixelBox {
  long x0, x1, y0, y1;  // half-open pixel ranges
};

long clamp_px(const mpz_class& v, long hi) {
  if (v < 0) return 0;
  if (v > hi) return hi;
  return v.get_si();
}

// Outward-rounded pixel range of [lo, hi] across `px` pixels over
// [vmin, vmax]; nullopt when the box misses the viewport entirely.
std::optional<std::pair<long, long>> pixel_range(const Scalar& lo, const Scalar& hi,
                                                 const Scalar& vmin, const Scalar& vmax,
                                                 std::uint32_t px) {
  if (hi < vmin || vmax < lo) return std::nullopt;
  const Scalar span = vmax - vmin;
  const Scalar scale = Scalar(static_cast<long>(px)) / span;
  long p0 = clamp_px(((lo - vmin) * scale).floor(), static_cast<long>(px));
  long p1 = clamp_px(((hi - vmin) * scale).ceil(), static_cast<long>(px));
  if (p1 <= p0) p1 = std::min<long>(p0 + 1, static_cast<long>(px));
  if (p1 <= p0) p0 = p1 - 1;  // box clamped at the right edge
  return std::make_pair(p0, p1);
}

Viewport effective_viewport(const std::optional<Viewport>& given,
                            const std::optional<Box>& hull) {
  if (given) {
    if (!(given->xmin < given->xmax) || !(given->ymin < given->ymax))
      throw DomainError("ViewportDegenerate: empty viewport");
    return *given;
  }
  if (!hull) return {Scalar(0), Scalar(1), Scalar(0), Scalar(1)};
  Viewport v{hull->xlo, hull->xhi, hull->ylo, hull->yhi};
  if (!(v.xmin < v.xmax)) {
    v.xmin -= Scalar(1, 2);
    v.xmax += Scalar(1, 2);
  }
  if (!(v.ymin < v.ymax)) {
    v.ymin -= Scalar(1, 2);
    v.ymax += Scalar(1, 2);
  }
  return v;
}

std::vector<PixelBox> rasterize(const std::vector<Box>& boxes, const Viewport& vp,
                                const RenderOptions& opts) {
  std::vector<PixelBox> out;
  out.reserve(boxes.size());
  for (const Box& b : boxes) {
    auto xr = pixel_range(b.xlo, b.xhi, vp.xmin, vp.xmax, opts.width);
    if (!xr) continue;
    // flip y: image rows grow downward
    auto yr = pixel_range(vp.ymax - b.yhi, vp.ymax - b.ylo, Scalar(0), vp.ymax - vp.ymin,
                          opts.height);
    if (!yr) continue;
    out.push_back({xr->first, xr->second, yr->first, yr->second});
  }
  return out;
}

std::string emit_svg(const std::vector<PixelBox>& boxes, const RenderOptions& opts) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width
     << "\" height=\"" << opts.height << "\" viewBox=\"0 0 " << opts.width << " "
     << opts.height << "\">\n";
  os << "<rect width=\"" << opts.width << "\" height=\"" << opts.height
     << "\" fill=\"#ffffff\"/>\n";
  for (const PixelBox& b : boxes) {
    os << "<rect x=\"" << b.x0 << "\" y=\"" << b.y0 << "\" width=\"" << (b.x1 - b.x0)
       << "\" height=\"" << (b.y1 - b.y0) << "\" fill=\"#20304f\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string emit_pgm(const std::vector<PixelBox>& boxes, const RenderOptions& opts) {
  std::ostringstream os;
  os << "P5\n" << opts.width << " " << opts.height << "\n255\n";
  std::string pixels(static_cast<std::size_t>(opts.width) * opts.height,
                     static_cast<char>(0xff));
  for (const PixelBox& b : boxes)
    for (long y = b.y0; y < b.y1; ++y)
      for (long x = b.x0; x < b.x1; ++x)
        pixels[static_cast<std::size_t>(y) * opts.width + static_cast<std::size_t>(x)] =
            static_cast<char>(0x00);
  return os.str() + pixels;
}

std::string render_boxes(const std::vector<Box>& boxes, const std::optional<Box>& hull,
                         const RenderOptions& opts) {
  if (opts.width == 0 || opts.height == 0)
    throw DomainError("ViewportDegenerate: zero pixel dimensions");
  const Viewport vp = effective_viewport(opts.viewport, hull);
  std::vector<PixelBox> px = rasterize(boxes, vp, opts);
  return opts.format == ImageFormat::Svg ? emit_svg(px, opts) : emit_pgm(px, opts);
}

}  // namespace

std::string render_cover(const BoxCover& cover, const RenderOptions& opts) {
  std::optional<Box> hull;
  if (!cover.empty()) hull = cover.hull();
  return render_boxes(cover.boxes(), hull, opts);
}

std::string render_cover(const IntervalCover& cover, const RenderOptions& opts) {
  std::vector<Box> boxes;
  std::optional<Box> hull;
  Scalar ylo(0), yhi(1);
  if (opts.viewport) {
    ylo = opts.viewport->ymin;
    yhi = opts.viewport->ymax;
  }
  for (const Interval& iv : cover.intervals()) boxes.push_back({iv.lo, iv.hi, ylo, yhi});
  if (!cover.empty())
    hull = Box{cover.hull().lo, cover.hull().hi, ylo, yhi};
  return render_boxes(boxes, hull, opts);
}

}  // namespace subsum
