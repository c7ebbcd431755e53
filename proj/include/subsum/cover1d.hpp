#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsum/enumerate.hpp"
#include "subsum/scalar.hpp"
#include "subsum/series.hpp"

namespace subsum {

struct Interval {
  Scalar lo;
  Scalar hi;
  bool contains(const Scalar& v) const { return lo <= v && v <= hi; }
};

/// Sorted union of disjoint closed intervals; an outer approximation of the
/// achievement set of the spec it was built from. Touching intervals merge.
class IntervalCover {
public:
  IntervalCover() = default;
  IntervalCover(std::vector<Interval> intervals, std::uint64_t depth,
                std::string fingerprint);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::uint64_t depth() const { return depth_; }
  const std::string& fingerprint() const { return fingerprint_; }

  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }
  bool contains(const Scalar& v) const;
  Interval hull() const;
  Scalar total_length() const;

  /// One "lo hi" line per interval; identical input -> identical bytes.
  std::string serialize() const;
  static IntervalCover deserialize(const std::string& text);

private:
  std::vector<Interval> intervals_;
  std::uint64_t depth_ = 0;
  std::string fingerprint_;
};

/// Sorts and merges overlapping or touching intervals.
std::vector<Interval> merge_intervals(std::vector<Interval> intervals);

/// Short stable hash of a spec description, tying covers to their specs.
std::string spec_fingerprint(const std::string& description);

/// Outer cover of the achievement set at the given depth: every subset sum
/// of the first `depth` terms, padded by the exact tail split.
IntervalCover cover1d(const Series1D& spec, std::uint64_t depth,
                      const EnumLimits& limits = {});

/// Bounded components of hull(cover) minus cover, as open intervals.
std::vector<Interval> gaps(const IntervalCover& cover);

/// The classification evidence: machine-checkable and revalidated
/// independently of the code path that produced it.
struct Certificate {
  enum class Kind {
    None,
    FinitePoints,        // exact point list
    SlowTail,            // term(n) <= tail(n) for all n > from
    FastTail,            // term(n) > tail(n) for all n >= from
    MultigeometricRatio, // q < 1/|Sigma|, Sigma = subset sums of the block
    Registry             // literature entry matched structurally
  };
  Kind kind = Kind::None;
  std::uint64_t from = 0;             // SlowTail / FastTail
  Scalar tail_at_from;                // SlowTail: r_from
  std::vector<Scalar> points;         // FinitePoints
  std::vector<Scalar> sigma;          // MultigeometricRatio
  Scalar ratio;                       // MultigeometricRatio: q
  std::string registry_name;          // Registry
  std::string registry_structure;     // Registry: matched description

  /// Recheck the evidence against the spec with independent arithmetic.
  bool validate(const Series1D& spec) const;
};

struct CoverStats {
  std::uint64_t depth = 0;
  std::uint64_t interval_count = 0;
  Scalar total_length;
  Interval hull;
};

struct GNClassification {
  enum class Verdict { Finite, FiniteUnionIntervals, Cantor, KnownCantorval, Undetermined };
  Verdict verdict = Verdict::Undetermined;
  std::string cantorval_name;  // KnownCantorval
  Certificate certificate;
  std::optional<CoverStats> stats;  // Undetermined
  std::string note;
};

/// Known Cantorval registry entry: a multigeometric block and ratio.
struct CantorvalEntry {
  std::string name;
  std::vector<Scalar> s;
  Scalar q;
};

const std::vector<CantorvalEntry>& cantorval_registry();
void register_cantorval(CantorvalEntry entry);

/// Guthrie-Nymann type classification with explicit certificates. Signed
/// specs are classified through their termwise absolute value.
GNClassification classify_gn(const Series1D& spec, std::uint64_t depth_budget = 12,
                             const EnumLimits& limits = {});

/// Exact description of the achievement set where the classification
/// criteria apply.
struct ExactSet1D {
  enum class Kind { Intervals, FinitePoints, CantorCode, NotCertified };
  Kind kind = Kind::NotCertified;
  std::vector<Interval> intervals;  // exact finite union (slow tail)
  std::vector<Scalar> points;       // FiniteList
  struct Cantor {
    std::uint64_t fast_from = 0;
    std::vector<Scalar> base_sums;          // partial sums at depth fast_from-1
    std::uint64_t disjoint_checked_depth = 0;
  } cantor;
  std::string reason;
};

ExactSet1D exact_set1d(const Series1D& spec, const EnumLimits& limits = {});

/// Outer cover of the set of P-sums at coefficient depth `depth`.
IntervalCover psum_cover(const std::vector<Scalar>& coeff_set, const Series1D& weights,
                         std::uint64_t depth, const EnumLimits& limits = {});

/// Index subsets are bitmasks over {1..depth} (bit i-1 <-> index i).
struct CollisionReport {
  std::uint64_t depth = 0;
  // distinct subsets whose padded intervals intersect
  std::vector<std::pair<std::uint64_t, std::uint64_t>> potential;
  // distinct subsets with exactly equal partial sums
  std::vector<std::pair<std::uint64_t, std::uint64_t>> exact;
  // indices n <= depth with term(n) == tail(n) exactly
  std::vector<std::uint64_t> tail_matches;
  bool unique_at_depth() const { return potential.empty() && exact.empty(); }
};

CollisionReport representation_collisions(const Series1D& spec, std::uint64_t depth,
                                          const EnumLimits& limits = {});

/// Exact center of distances of a finite set of reals.
std::vector<Scalar> center_of_distances(const std::vector<Scalar>& points);

/// sup_{x in from} dist(x, to), exact. Throws DomainError on empty input.
Scalar one_sided_hausdorff(const IntervalCover& from, const IntervalCover& to);

}  // namespace subsum
