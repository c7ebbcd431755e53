#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subsum/cover1d.hpp"
#include "subsum/scalar.hpp"
#include "subsum/series.hpp"

namespace subsum {

struct Box {
  Scalar xlo, xhi, ylo, yhi;
  bool contains(const Point2& p) const {
    return xlo <= p.first && p.first <= xhi && ylo <= p.second && p.second <= yhi;
  }
};

/// Deduplicated list of axis-aligned closed boxes; an outer approximation of
/// the planar achievement set. Boxes are kept unmerged (only projections and
/// cuts are merged), sorted for deterministic output.
class BoxCover {
public:
  BoxCover() = default;
  BoxCover(std::vector<Box> boxes, std::uint64_t depth, std::string fingerprint);

  const std::vector<Box>& boxes() const { return boxes_; }
  std::uint64_t depth() const { return depth_; }
  const std::string& fingerprint() const { return fingerprint_; }
  bool empty() const { return boxes_.empty(); }
  std::size_t size() const { return boxes_.size(); }
  bool contains(const Point2& p) const;
  Box hull() const;

  /// One "xlo xhi ylo yhi" line per box.
  std::string serialize() const;

private:
  std::vector<Box> boxes_;
  std::uint64_t depth_ = 0;
  std::string fingerprint_;
};

/// Outer cover at the given depth: subset sums of the first `depth` terms,
/// padded by the per-coordinate tail splits.
BoxCover cover2d(const Series2D& spec, std::uint64_t depth, const EnumLimits& limits = {});

enum class Axis { X, Y };

/// Merged interval cover of the projection onto an axis.
IntervalCover project_axis(const BoxCover& cover, Axis axis);

/// Outer approximation of the cut at `axis == value`: the other-axis ranges
/// of all boxes whose `axis` range contains the value, merged. Boundary
/// touching counts; the result may be empty.
IntervalCover cut_outer(const BoxCover& cover, Axis axis, const Scalar& value);

/// Exact set of depth-n subset sums.
std::vector<Point2> enumerate_points(const Series2D& spec, std::uint64_t depth,
                                     const EnumLimits& limits = {});

/// True iff 2*center - p is in the set for every point p.
bool check_symmetry(const std::vector<Point2>& points, const Point2& center);

}  // namespace subsum
