#include "subsum/cover2d.hpp"

#include <algorithm>
#include <sstream>

namespace subsum {

namespace {

bool box_less(const Box& a, const Box& b) {
  if (a.xlo != b.xlo) return a.xlo < b.xlo;
  if (a.ylo != b.ylo) return a.ylo < b.ylo;
  if (a.xhi != b.xhi) return a.xhi < b.xhi;
  return a.yhi < b.yhi;
}

bool box_eq(const Box& a, const Box& b) {
  return a.xlo == b.xlo && a.xhi == b.xhi && a.ylo == b.ylo && a.yhi == b.yhi;
}

}  // namespace

BoxCover::BoxCover(std::vector<Box> boxes, std::uint64_t depth, std::string fingerprint)
    : boxes_(std::move(boxes)), depth_(depth), fingerprint_(std::move(fingerprint)) {
  std::sort(boxes_.begin(), boxes_.end(), box_less);
  boxes_.erase(std::unique(boxes_.begin(), boxes_.end(), box_eq), boxes_.end());
}

bool BoxCover::contains(const Point2& p) const {
  for (const Box& b : boxes_)
    if (b.contains(p)) return true;
  return false;
}

Box BoxCover::hull() const {
  if (boxes_.empty()) throw DomainError("empty cover has no hull");
  Box h = boxes_.front();
  for (const Box& b : boxes_) {
    if (b.xlo < h.xlo) h.xlo = b.xlo;
    if (h.xhi < b.xhi) h.xhi = b.xhi;
    if (b.ylo < h.ylo) h.ylo = b.ylo;
    if (h.yhi < b.yhi) h.yhi = b.yhi;
  }
  return h;
}

std::string BoxCover::serialize() const {
  std::ostringstream os;
  for (const Box& b : boxes_)
    os << b.xlo << " " << b.xhi << " " << b.ylo << " " << b.yhi << "\n";
  return os.str();
}

BoxCover cover2d(const Series2D& spec, std::uint64_t depth, const EnumLimits& limits) {
  std::vector<Point2> sums = partial_sums(spec, depth, limits);
  const TailBounds2 tail = spec.tail_bounds(depth);
  std::vector<Box> boxes;
  boxes.reserve(sums.size());
  for (const Point2& s : sums)
    boxes.push_back({s.first + tail.x.lo, s.first + tail.x.hi, s.second + tail.y.lo,
                     s.second + tail.y.hi});
  return BoxCover(std::move(boxes), depth, spec_fingerprint(spec.describe()));
}

IntervalCover project_axis(const BoxCover& cover, Axis axis) {
  if (cover.empty()) throw DomainError("EmptyCover: projection needs a nonempty cover");
  std::vector<Interval> ivs;
  ivs.reserve(cover.size());
  for (const Box& b : cover.boxes()) {
    if (axis == Axis::X)
      ivs.push_back({b.xlo, b.xhi});
    else
      ivs.push_back({b.ylo, b.yhi});
  }
  return IntervalCover(std::move(ivs), cover.depth(), cover.fingerprint());
}

IntervalCover cut_outer(const BoxCover& cover, Axis axis, const Scalar& value) {
  std::vector<Interval> ivs;
  for (const Box& b : cover.boxes()) {
    if (axis == Axis::Y) {
      if (b.ylo <= value && value <= b.yhi) ivs.push_back({b.xlo, b.xhi});
    } else {
      if (b.xlo <= value && value <= b.xhi) ivs.push_back({b.ylo, b.yhi});
    }
  }
  return IntervalCover(std::move(ivs), cover.depth(), cover.fingerprint());
}

std::vector<Point2> enumerate_points(const Series2D& spec, std::uint64_t depth,
                                     const EnumLimits& limits) {
  return partial_sums(spec, depth, limits);
}

bool check_symmetry(const std::vector<Point2>& points, const Point2& center) {
  const auto less = [](const Point2& a, const Point2& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  };
  std::vector<Point2> sorted = points;
  std::sort(sorted.begin(), sorted.end(), less);
  const Point2 twice{center.first * Scalar(2), center.second * Scalar(2)};
  for (const Point2& p : sorted) {
    const Point2 mirror = twice - p;
    if (!std::binary_search(sorted.begin(), sorted.end(), mirror, less)) return false;
  }
  return true;
}

}  // namespace subsum
