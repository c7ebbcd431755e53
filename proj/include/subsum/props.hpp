#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace subsum {

struct PropResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0; }
};

/// Randomized checks of the spectre laws: zero membership, negation closure,
/// containment in A u (-A), translation invariance, linear equivariance,
/// intersection/union and decreasing-chain containments, the componentwise
/// implication, and the distance projection into the center of distances.
std::vector<PropResult> run_spectre_properties(std::uint64_t cases, std::uint64_t seed);

/// Tail-split telescoping, interleave indexing, and the slow-iff-q>=1/2 law
/// for geometric specs.
std::vector<PropResult> run_series_properties(std::uint64_t cases, std::uint64_t seed);

/// Cover nesting/soundness, gap disjointness, psum/cover agreement for
/// P = {0,1}, planar containment and symmetry, and center-of-distances
/// invariances.
std::vector<PropResult> run_cover_properties(std::uint64_t cases, std::uint64_t seed);

bool all_passed(const std::vector<PropResult>& results);
std::string format_results(const std::vector<PropResult>& results);

}  // namespace subsum
