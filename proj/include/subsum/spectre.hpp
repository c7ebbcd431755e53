#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsum/enumerate.hpp"
#include "subsum/scalar.hpp"
#include "subsum/series.hpp"

namespace subsum {

/// Spectre of a set A: vectors x with y+x in A or y-x in A for every y in A.
/// Always contains 0 and is closed under negation.
struct SpectreResult1 {
  std::vector<Scalar> vectors;  // sorted
  std::string ambient;
};

struct SpectreResult2 {
  std::vector<Point2> vectors;  // sorted lexicographically
  std::string ambient;
};

SpectreResult1 spectre_of_finite_set(const std::vector<Scalar>& points);
SpectreResult2 spectre_of_finite_set(const std::vector<Point2>& points);

/// Definition check for a single candidate vector.
bool spectre_contains(const std::vector<Scalar>& points, const Scalar& v);
bool spectre_contains(const std::vector<Point2>& points, const Point2& v);

/// Lattice-occupancy set: point value = origin + spacing * coordinate.
struct GridSet {
  int dims = 2;  // 1 or 2; 1D uses the first coordinate only
  Scalar spacing;
  Point2 origin{Scalar(0), Scalar(0)};
  std::vector<std::array<std::int64_t, 2>> occupancy;

  std::vector<Scalar> points1() const;
  std::vector<Point2> points2() const;

  /// Header "spacing origin_x origin_y", then one "i j" pair per line.
  std::string serialize() const;
  static GridSet deserialize(const std::string& text, int dims = 2);
};

/// Exact spectre of the grid point set, evaluated with bitset rows over the
/// lattice. Semantically identical to spectre_of_finite_set of the points.
SpectreResult2 spectre_of_grid(const GridSet& grid);
SpectreResult1 spectre_of_grid_1d(const GridSet& grid);

enum class GridShape { Square, Disk, Triangle, Sierpinski, Cantor };

/// Lattice models of the named shapes:
///   square      lattice points of [0,1]^2, spacing 1/m
///   disk        points with x^2 + y^2 <= radius^2, exact test
///   triangle    x, y >= 0, x + y <= 1, spacing 1/m
///   sierpinski  level-L carpet points i/3^L whose base-3 digit strings never
///               carry digit 1 in both coordinates at the same position
///   cantor      1D: depth-L subset sums of 2/3^n
GridSet make_grid_shape(GridShape shape, const Scalar& spacing, std::uint64_t level = 0,
                        const Scalar& radius = Scalar(1));

/// Pass iff every term with index <= depth lies in the spectre of the set of
/// depth-limited subset sums (checked by the membership definition).
struct TermsInSpectreReport {
  bool pass = true;
  std::uint64_t failed_index = 0;
  std::string detail;
};

TermsInSpectreReport terms_in_spectre_report(const Series1D& spec, std::uint64_t depth,
                                             const EnumLimits& limits = {});
TermsInSpectreReport terms_in_spectre_report(const Series2D& spec, std::uint64_t depth,
                                             const EnumLimits& limits = {});

/// Exact center of distances of a 1D grid set.
std::vector<Scalar> center_of_distances_grid(const GridSet& grid);

}  // namespace subsum
