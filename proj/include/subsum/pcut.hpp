#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subsum/cover1d.hpp"
#include "subsum/cover2d.hpp"
#include "subsum/series.hpp"

namespace subsum {

/// The planar sequence whose y = 0 cut is the set of P-sums of the weights:
/// block n (n >= 0) holds a zero-x leader with y = yscale*base^-n followed by
/// the P-scaled weight terms with the opposite y. Throws InvalidP /
/// NonmonotoneA (as DomainError) on bad parameters.
Series2D build_pcut_sequence(const PcutParams& params);

/// Exact membership witness: for the coefficient list q (entries drawn from
/// P, indices 1..m) returns w = sum q_n a_n and an index set A with
/// sum_A x = w and sum_A y = 0, both exact identities.
struct PsumWitness {
  Scalar value;
  std::vector<std::uint64_t> indices;  // sorted, 1-based
};

PsumWitness psum_witness(const PcutParams& params, const std::vector<Scalar>& coeffs);

/// Block-structure condition on an index set: in every block either the
/// leader plus exactly one follower is present, or nothing is.
struct BlockCheck {
  bool valid = true;
  std::uint64_t block = 0;
  std::string reason;
};

BlockCheck check_block_structure(const std::vector<std::uint64_t>& indices,
                                 std::uint64_t k);

/// Finite-depth verification of the cut identity, over the first
/// `depth_blocks` blocks (k * depth_blocks terms).
struct PcutReport {
  std::uint64_t depth_blocks = 0;
  std::uint64_t zero_y_subsets = 0;       // subsets with exact zero y-sum
  bool all_block_valid = false;           // each passes check_block_structure
  bool all_sums_are_psums = false;        // each x-sum is a depth-m P-sum
  Scalar hausdorff_cut_to_psum;           // exact one-sided distances
  Scalar hausdorff_psum_to_cut;
  Scalar tail_radius;                     // r_m of the weights
  Scalar certified_bound;                 // max(|min P|, max P) * r_m
  bool within_bound = false;
  std::uint64_t witnesses_checked = 0;
  bool witnesses_in_cut = false;
  std::string summary() const;
  bool pass() const {
    return all_block_valid && all_sums_are_psums && within_bound && witnesses_in_cut;
  }
};

PcutReport verify_pcut_cut(const PcutParams& params, std::uint64_t depth_blocks,
                           const EnumLimits& limits = {});

}  // namespace subsum
