#include "subsum/pcut.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

namespace subsum {

Series2D build_pcut_sequence(const PcutParams& params) { return Series2D::pcut(params); }

PsumWitness psum_witness(const PcutParams& params, const std::vector<Scalar>& coeffs) {
  const Series2D spec = build_pcut_sequence(params);  // validates params
  const std::uint64_t k = params.k();
  PsumWitness w;
  w.value = Scalar(0);
  if (k == 1) {
    for (const Scalar& c : coeffs)
      if (!c.is_zero()) throw DomainError("CoefficientNotInP");
    return w;
  }
  std::vector<Scalar> nonzero;
  for (const Scalar& p : params.coeff_set)
    if (!p.is_zero()) nonzero.push_back(p);

  for (std::size_t n0 = 0; n0 < coeffs.size(); ++n0) {
    const std::uint64_t n = n0 + 1;
    const Scalar& c = coeffs[n0];
    if (c.is_zero()) continue;
    auto it = std::find(nonzero.begin(), nonzero.end(), c);
    if (it == nonzero.end()) throw DomainError("CoefficientNotInP");
    // leader of block n-1 plus the follower carrying p_{i-1} = c
    const std::uint64_t i = static_cast<std::uint64_t>(it - nonzero.begin()) + 2;
    w.indices.push_back(k * (n - 1) + 1);
    w.indices.push_back(k * (n - 1) + i);
    w.value += c * params.weights->term(n);
  }
  std::sort(w.indices.begin(), w.indices.end());

  // exactness check of the construction
  Scalar xsum(0), ysum(0);
  for (std::uint64_t idx : w.indices) {
    const Point2 t = spec.term(idx);
    xsum += t.first;
    ysum += t.second;
  }
  if (xsum != w.value || !ysum.is_zero())
    throw VerificationError("psum_witness: exact identity failed");
  return w;
}

BlockCheck check_block_structure(const std::vector<std::uint64_t>& indices,
                                 std::uint64_t k) {
  if (k < 2) throw DomainError("block structure needs k >= 2");
  std::map<std::uint64_t, std::pair<bool, std::uint64_t>> blocks;  // leader, followers
  for (std::uint64_t idx : indices) {
    const std::uint64_t block = (idx - 1) / k;
    const std::uint64_t pos = (idx - 1) % k + 1;
    auto& b = blocks[block];
    if (pos == 1)
      b.first = true;
    else
      ++b.second;
  }
  for (const auto& [block, b] : blocks) {
    if (b.first && b.second != 1)
      return {false, block,
              b.second == 0 ? "leader without follower" : "leader with several followers"};
    if (!b.first && b.second > 0) return {false, block, "followers without leader"};
  }
  return {};
}

namespace {

// All subsets of the first k*m terms with exact zero y-sum, via DFS over
// per-block choices with the remaining-range prune.
struct ZeroYScan {
  const Series2D& spec;
  std::uint64_t k, m;
  std::vector<Point2> terms;
  std::vector<std::uint64_t> current;
  std::vector<std::vector<std::uint64_t>> found;
  std::uint64_t budget;

  void run() {
    dfs(0, Scalar(0));
  }

  void dfs(std::uint64_t block, const Scalar& ysum) {
    if (block == m) {
      if (ysum.is_zero()) {
        found.push_back(current);
        if (found.size() > budget) throw BudgetExceeded(budget);
      }
      return;
    }
    const std::uint64_t base = block * k;
    const std::uint64_t choices = 1ull << k;
    for (std::uint64_t mask = 0; mask < choices; ++mask) {
      Scalar y = ysum;
      std::size_t pushed = 0;
      for (std::uint64_t j = 0; j < k; ++j) {
        if (mask & (1ull << j)) {
          current.push_back(base + j + 1);
          y += terms[base + j].second;
          ++pushed;
        }
      }
      dfs(block + 1, y);
      for (std::size_t i = 0; i < pushed; ++i) current.pop_back();
    }
  }
};

}  // namespace

std::string PcutReport::summary() const {
  std::ostringstream os;
  os << "blocks " << depth_blocks << "\n";
  os << "zero-y subsets " << zero_y_subsets << "\n";
  os << "block-structure valid " << (all_block_valid ? "yes" : "no") << "\n";
  os << "x-sums are depth-m P-sums " << (all_sums_are_psums ? "yes" : "no") << "\n";
  os << "hausdorff cut->psum " << hausdorff_cut_to_psum << "\n";
  os << "hausdorff psum->cut " << hausdorff_psum_to_cut << "\n";
  os << "tail radius r_m " << tail_radius << "\n";
  os << "certified bound " << certified_bound << "\n";
  os << "within bound " << (within_bound ? "yes" : "no") << "\n";
  os << "witnesses " << witnesses_checked << " in cut "
     << (witnesses_in_cut ? "yes" : "no") << "\n";
  return os.str();
}

PcutReport verify_pcut_cut(const PcutParams& params, std::uint64_t depth_blocks,
                           const EnumLimits& limits) {
  const Series2D spec = build_pcut_sequence(params);
  const std::uint64_t k = params.k();
  PcutReport report;
  report.depth_blocks = depth_blocks;
  report.tail_radius = Scalar(0);
  report.certified_bound = Scalar(0);
  report.hausdorff_cut_to_psum = Scalar(0);
  report.hausdorff_psum_to_cut = Scalar(0);

  if (k == 1) {
    // S({0}, a) = {0} and every term is (0,0); nothing to scan.
    report.zero_y_subsets = 1;
    report.all_block_valid = true;
    report.all_sums_are_psums = true;
    report.within_bound = true;
    report.witnesses_checked = 1;
    report.witnesses_in_cut = true;
    return report;
  }

  const std::uint64_t term_count = k * depth_blocks;
  if (term_count > 26 || (1ull << term_count) > limits.max_states * 16)
    throw BudgetExceeded(limits.max_states);

  std::vector<Point2> terms;
  for (std::uint64_t n = 1; n <= term_count; ++n) terms.push_back(spec.term(n));

  // (a) exhaustive zero-y scan: block validity and depth-m P-sum membership
  ZeroYScan scan{spec, k, depth_blocks, terms, {}, {}, limits.max_states};
  scan.run();
  report.zero_y_subsets = scan.found.size();

  std::vector<Scalar> psums =
      coefficient_sums(params.coeff_set, *params.weights, depth_blocks, limits);
  std::unordered_set<Scalar, ScalarHash> psum_set(psums.begin(), psums.end());

  report.all_block_valid = true;
  report.all_sums_are_psums = true;
  for (const auto& subset : scan.found) {
    if (!check_block_structure(subset, k).valid) report.all_block_valid = false;
    Scalar xsum(0);
    for (std::uint64_t idx : subset) xsum += terms[idx - 1].first;
    if (!psum_set.count(xsum)) report.all_sums_are_psums = false;
  }

  // (b) cover agreement with the certified tail bound
  const BoxCover planar = cover2d(spec, term_count, limits);
  const IntervalCover cut = cut_outer(planar, Axis::Y, Scalar(0));
  const IntervalCover psc = psum_cover(params.coeff_set, *params.weights, depth_blocks, limits);
  report.tail_radius = params.weights->tail_bounds(depth_blocks).total();
  Scalar pmax = params.coeff_set.back();
  Scalar pmin_abs = params.coeff_set.front().abs();
  report.certified_bound = (pmax < pmin_abs ? pmin_abs : pmax) * report.tail_radius;
  if (!cut.empty() && !psc.empty()) {
    report.hausdorff_cut_to_psum = one_sided_hausdorff(cut, psc);
    report.hausdorff_psum_to_cut = one_sided_hausdorff(psc, cut);
    report.within_bound = report.hausdorff_cut_to_psum <= report.certified_bound &&
                          report.hausdorff_psum_to_cut <= report.certified_bound;
  }

  // (c) witness inclusion for a sample of coefficient lists
  report.witnesses_in_cut = true;
  std::vector<std::vector<Scalar>> samples;
  samples.push_back({});                                    // empty -> 0
  for (const Scalar& c : params.coeff_set) samples.push_back({c});
  for (const Scalar& c1 : params.coeff_set)
    for (const Scalar& c2 : params.coeff_set) samples.push_back({c1, c2});
  if (depth_blocks >= 3) {
    std::vector<Scalar> corner(depth_blocks, params.coeff_set.back());
    samples.push_back(corner);
  }
  for (const auto& coeffs : samples) {
    if (coeffs.size() > depth_blocks) continue;
    const PsumWitness w = psum_witness(params, coeffs);
    ++report.witnesses_checked;
    if (!cut.contains(w.value)) report.witnesses_in_cut = false;
  }
  return report;
}

}  // namespace subsum
