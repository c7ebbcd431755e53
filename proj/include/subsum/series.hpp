#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subsum/scalar.hpp"

namespace subsum {

/// Signed tail split: lo = sum of negative parts of the tail terms,
/// hi = sum of positive parts. Always lo <= 0 <= hi, and every subsum of the
/// tail lies in [lo, hi].
struct TailBounds {
  Scalar lo;
  Scalar hi;
  Scalar total() const { return lo + hi; }
};

struct TailBounds2 {
  TailBounds x;
  TailBounds y;
};

/// 2x2 matrix with exact entries, row-major.
struct Mat2 {
  Scalar m00, m01, m10, m11;
  Point2 apply(const Point2& p) const {
    return {m00 * p.first + m01 * p.second, m10 * p.first + m11 * p.second};
  }
  Scalar det() const { return m00 * m11 - m01 * m10; }
};

class Series1D;

/// Parameters of the planar construction whose y = 0 cut is the set of
/// P-sums of `weights`: blocks of k terms, one positive y "leader" followed
/// by k-1 negative y terms carrying the P-scaled weights.
struct PcutParams {
  std::vector<Scalar> coeff_set;              // sorted, 0 included
  std::shared_ptr<const Series1D> weights;    // |a_n| nonincreasing, nonzero
  std::uint64_t base = 0;                     // 0 -> default k + 2
  Scalar y_scale = Scalar(1);

  std::uint64_t k() const { return coeff_set.size(); }
  std::uint64_t effective_base() const { return base == 0 ? k() + 2 : base; }
};

/// Symbolic description of an absolutely convergent series in R with exact
/// per-term access and closed-form tail bounds.
class Series1D {
public:
  enum class Kind { FiniteList, Geometric, Multigeometric, Prefix, Scaled, Abs };

  static Series1D finite_list(std::vector<Scalar> terms);
  /// term n = c * q^n for n >= 1; requires 0 < q < 1.
  static Series1D geometric(Scalar c, Scalar q);
  /// term n = s[(n-1) mod k] * q^ceil(n/k); requires 0 < q < 1, k >= 1.
  static Series1D multigeometric(std::vector<Scalar> s, Scalar q);
  static Series1D prefix(std::vector<Scalar> terms, Series1D then);
  static Series1D scaled(Scalar factor, Series1D inner);
  static Series1D abs(Series1D inner);

  /// Exact n-th term, n >= 1. FiniteList yields 0 beyond its length.
  Scalar term(std::uint64_t n) const;

  /// Exact tail split after the first n terms, n >= 0.
  TailBounds tail_bounds(std::uint64_t n) const;

  /// Exact sum of the whole series.
  Scalar total() const { return tail_bounds(0).total(); }

  Kind kind() const;

  /// Index m such that every term beyond m is zero, when that is structural.
  std::optional<std::uint64_t> finite_support() const;

  /// Termwise absolute value, rewritten structurally (|c*q^n| = |c|*q^n, ...).
  Series1D abs_normalized() const;

  /// (s, q) when the spec is plain Multigeometric.
  std::optional<std::pair<std::vector<Scalar>, Scalar>> as_multigeometric() const;
  /// (c, q) when the spec is plain Geometric.
  std::optional<std::pair<Scalar, Scalar>> as_geometric() const;
  const std::vector<Scalar>* as_finite_list() const;
  /// (terms, inner) when the spec is Prefix.
  const std::pair<std::vector<Scalar>, Series1D>* as_prefix() const;
  /// (factor, inner) when the spec is Scaled.
  const std::pair<Scalar, Series1D>* as_scaled() const;
  const Series1D* as_abs() const;

  /// Canonical structural description, used for fingerprints and equality.
  std::string describe() const;

  bool same_structure(const Series1D& o) const { return describe() == o.describe(); }

private:
  struct Node;
  explicit Series1D(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Symbolic description of an absolutely convergent series in R^2.
class Series2D {
public:
  enum class Kind {
    PairList,
    AxisInterleave,
    DiagonalSum,
    Prefix,
    LinearMap,
    PairGenerator,
    Pcut
  };

  static Series2D pair_list(std::vector<Point2> terms);
  /// (x1,0),(0,y1),(x2,0),(0,y2),...
  static Series2D axis_interleave(Series1D xs, Series1D ys);
  /// Diagonal enumeration over the parts: part 1 term 1, part 2 term 1,
  /// part 1 term 2, part 3 term 1, part 2 term 2, part 1 term 3, ...
  static Series2D diagonal_sum(std::vector<Series2D> parts);
  static Series2D prefix(std::vector<Point2> terms, Series2D then);
  static Series2D linear_map(Mat2 m, Series2D inner);
  /// Pairs the n-th terms: (x_n, y_n).
  static Series2D pair_generator(Series1D xs, Series1D ys);
  static Series2D pcut(PcutParams params);

  Point2 term(std::uint64_t n) const;
  TailBounds2 tail_bounds(std::uint64_t n) const;
  Point2 total() const {
    TailBounds2 t = tail_bounds(0);
    return {t.x.total(), t.y.total()};
  }

  Kind kind() const;
  const PcutParams* as_pcut() const;
  /// Coordinate factors when the spec is AxisInterleave or PairGenerator.
  const std::pair<Series1D, Series1D>* coordinate_factors() const;

  std::string describe() const;

private:
  struct Node;
  explicit Series2D(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Kakeya-style convergence verdict for positive, eventually nonincreasing
/// series. Mixed carries the first per-index verdicts for diagnostics.
struct ConvergenceClass {
  enum class Kind { SlowEverywhere, FastFromIndex, Mixed };
  Kind kind = Kind::Mixed;
  std::uint64_t fast_from = 0;  // valid for FastFromIndex
  // (index, is_slow) for the first indices; filled for Mixed.
  std::vector<std::pair<std::uint64_t, bool>> verdicts;
  std::string note;
};

/// Decides slow/fast convergence. Terms must be positive and nonincreasing
/// from some certifiable index; a certifiably non-monotone or signed spec
/// yields Mixed with a diagnostic, and an unanalyzable spec throws
/// DomainError ("NotEventuallyMonotone").
ConvergenceClass classify_convergence(const Series1D& spec);

/// Least N such that term(n) <= tail(n) for every n > N, when certifiable.
std::optional<std::uint64_t> slow_tail_from(const Series1D& spec);
/// Least N such that term(n) > tail(n) for every n >= N, when certifiable.
std::optional<std::uint64_t> fast_tail_from(const Series1D& spec);

}  // namespace subsum
