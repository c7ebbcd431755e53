#pragma once

#include <vector>

#include "subsum/errors.hpp"
#include "subsum/scalar.hpp"
#include "subsum/series.hpp"

namespace subsum {

/// Deduplicated set of all subset sums of `terms`, sorted. Zero terms do not
/// change the set and are skipped. Throws BudgetExceeded when the
/// deduplicated state count passes limits.max_states. With limits.threads>1
/// the subset space is partitioned across workers; the merge is a set union,
/// so the result does not depend on the schedule.
std::vector<Scalar> subset_sums(const std::vector<Scalar>& terms, const EnumLimits& limits);
std::vector<Point2> subset_sums(const std::vector<Point2>& terms, const EnumLimits& limits);

/// Subset sums of the first `depth` terms of a spec.
std::vector<Scalar> partial_sums(const Series1D& spec, std::uint64_t depth,
                                 const EnumLimits& limits);
std::vector<Point2> partial_sums(const Series2D& spec, std::uint64_t depth,
                                 const EnumLimits& limits);

/// Deduplicated values sum_{n<=depth} c_n * a_n over all coefficient choices
/// c_n in P, sorted.
std::vector<Scalar> coefficient_sums(const std::vector<Scalar>& coeff_set,
                                     const Series1D& weights, std::uint64_t depth,
                                     const EnumLimits& limits);

}  // namespace subsum
