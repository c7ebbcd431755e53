#include "subsum/cover1d.hpp"

#include <algorithm>
#include <sstream>

namespace subsum {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

}  // namespace

std::string spec_fingerprint(const std::string& description) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : description) {
    h ^= c;
    h *= kFnvPrime;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::vector<Interval> merge_intervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  std::vector<Interval> out;
  for (Interval& iv : intervals) {
    if (iv.hi < iv.lo) throw DomainError("interval with hi < lo");
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = iv.hi;
    } else {
      out.push_back(std::move(iv));
    }
  }
  return out;
}

IntervalCover::IntervalCover(std::vector<Interval> intervals, std::uint64_t depth,
                             std::string fingerprint)
    : intervals_(merge_intervals(std::move(intervals))),
      depth_(depth),
      fingerprint_(std::move(fingerprint)) {}

bool IntervalCover::contains(const Scalar& v) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), v,
                             [](const Scalar& x, const Interval& iv) { return x < iv.lo; });
  if (it == intervals_.begin()) return false;
  return v <= std::prev(it)->hi;
}

Interval IntervalCover::hull() const {
  if (intervals_.empty()) throw DomainError("empty cover has no hull");
  return {intervals_.front().lo, intervals_.back().hi};
}

Scalar IntervalCover::total_length() const {
  Scalar len(0);
  for (const Interval& iv : intervals_) len += iv.hi - iv.lo;
  return len;
}

std::string IntervalCover::serialize() const {
  std::ostringstream os;
  for (const Interval& iv : intervals_) os << iv.lo << " " << iv.hi << "\n";
  return os.str();
}

IntervalCover IntervalCover::deserialize(const std::string& text) {
  std::istringstream is(text);
  std::vector<Interval> ivs;
  std::string lo, hi;
  while (is >> lo >> hi) ivs.push_back({Scalar::parse(lo), Scalar::parse(hi)});
  return IntervalCover(std::move(ivs), 0, "");
}

IntervalCover cover1d(const Series1D& spec, std::uint64_t depth, const EnumLimits& limits) {
  std::vector<Scalar> sums = partial_sums(spec, depth, limits);
  const TailBounds tail = spec.tail_bounds(depth);
  std::vector<Interval> ivs;
  ivs.reserve(sums.size());
  for (const Scalar& s : sums) ivs.push_back({s + tail.lo, s + tail.hi});
  return IntervalCover(std::move(ivs), depth, spec_fingerprint(spec.describe()));
}

std::vector<Interval> gaps(const IntervalCover& cover) {
  if (cover.empty()) throw DomainError("EmptyCover: gaps need a nonempty cover");
  std::vector<Interval> out;
  const auto& ivs = cover.intervals();
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i)
    out.push_back({ivs[i].hi, ivs[i + 1].lo});
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

// Locate the block-periodic core (geometric or multigeometric) behind
// Prefix/Scaled/Abs wrappers. Returns (start offset, period) or nullopt.
std::optional<std::pair<std::uint64_t, std::uint64_t>> periodic_core(Series1D spec) {
  std::uint64_t offset = 0;
  for (;;) {
    switch (spec.kind()) {
      case Series1D::Kind::Geometric:
        return std::make_pair(offset, std::uint64_t{1});
      case Series1D::Kind::Multigeometric:
        return std::make_pair(offset, spec.as_multigeometric()->first.size());
      case Series1D::Kind::Prefix: {
        const auto* pv = spec.as_prefix();
        offset += pv->first.size();
        spec = pv->second;
        break;
      }
      case Series1D::Kind::Scaled:
        spec = spec.as_scaled()->second;
        break;
      case Series1D::Kind::Abs:
        spec = spec.abs_normalized();
        break;
      case Series1D::Kind::FiniteList:
        return std::nullopt;
    }
  }
}

bool verdict_at(const Series1D& spec, std::uint64_t n, bool want_slow) {
  const Scalar x = spec.term(n);
  const Scalar r = spec.tail_bounds(n).total();
  return want_slow ? x <= r : x > r;
}

// Check the defining inequality directly on a window past `from`, then check
// one full period of the core at two consecutive block levels.
bool validate_tail_verdicts(const Series1D& spec, std::uint64_t from, bool want_slow) {
  auto core = periodic_core(spec);
  if (!core) return false;
  const auto [start, period] = *core;
  const std::uint64_t direct_end = std::max(from, start) + 2 * period;
  for (std::uint64_t n = from + 1; n <= direct_end; ++n)
    if (!verdict_at(spec, n, want_slow)) return false;
  // periodicity witness: the two blocks after direct_end agree as well
  for (std::uint64_t n = direct_end + 1; n <= direct_end + 2 * period; ++n)
    if (!verdict_at(spec, n, want_slow)) return false;
  return true;
}

std::vector<Scalar> finite_point_set(const Series1D& spec, const EnumLimits& limits) {
  auto support = spec.finite_support();
  if (!support) throw DomainError("spec is not finitely supported");
  return partial_sums(spec, *support, limits);
}

}  // namespace

bool Certificate::validate(const Series1D& spec) const {
  switch (kind) {
    case Kind::None:
      return false;
    case Kind::FinitePoints: {
      if (!spec.finite_support()) return false;
      return finite_point_set(spec, EnumLimits{}) == points;
    }
    case Kind::SlowTail: {
      if (!validate_tail_verdicts(spec, from, /*want_slow=*/true)) return false;
      return spec.tail_bounds(from).total() == tail_at_from;
    }
    case Kind::FastTail:
      if (from == 0) return false;
      return validate_tail_verdicts(spec, from - 1, /*want_slow=*/false);
    case Kind::MultigeometricRatio: {
      auto mg = spec.as_multigeometric();
      if (!mg) return false;
      if (mg->second != ratio) return false;
      std::vector<Scalar> block_sums = subset_sums(mg->first, EnumLimits{});
      if (block_sums != sigma) return false;
      const Scalar inv(1, static_cast<unsigned long>(sigma.size()));
      return sigma.size() >= 2 && ratio < Scalar(inv);
    }
    case Kind::Registry: {
      auto mg = spec.as_multigeometric();
      if (!mg) return false;
      for (const CantorvalEntry& e : cantorval_registry())
        if (e.name == registry_name && e.s == mg->first && e.q == mg->second) return true;
      return false;
    }
  }
  return false;
}

namespace {

std::vector<CantorvalEntry>& registry_storage() {
  static std::vector<CantorvalEntry> entries = {
      {"Guthrie-Nymann", {Scalar(3), Scalar(2)}, Scalar(1, 4)},
  };
  return entries;
}

}  // namespace

const std::vector<CantorvalEntry>& cantorval_registry() { return registry_storage(); }

void register_cantorval(CantorvalEntry entry) {
  registry_storage().push_back(std::move(entry));
}

GNClassification classify_gn(const Series1D& spec, std::uint64_t depth_budget,
                             const EnumLimits& limits) {
  GNClassification out;

  if (spec.finite_support()) {
    out.verdict = GNClassification::Verdict::Finite;
    out.certificate.kind = Certificate::Kind::FinitePoints;
    out.certificate.points = finite_point_set(spec, limits);
    return out;
  }

  const Series1D aspec = spec.abs_normalized();

  if (auto slow = slow_tail_from(aspec)) {
    out.verdict = GNClassification::Verdict::FiniteUnionIntervals;
    out.certificate.kind = Certificate::Kind::SlowTail;
    out.certificate.from = *slow;
    out.certificate.tail_at_from = aspec.tail_bounds(*slow).total();
    return out;
  }
  if (auto fast = fast_tail_from(aspec)) {
    out.verdict = GNClassification::Verdict::Cantor;
    out.certificate.kind = Certificate::Kind::FastTail;
    out.certificate.from = *fast;
    return out;
  }
  if (auto mg = aspec.as_multigeometric()) {
    std::vector<Scalar> sigma = subset_sums(mg->first, limits);
    if (sigma.size() >= 2) {
      const Scalar inv(1, static_cast<unsigned long>(sigma.size()));
      if (mg->second < inv) {
        out.verdict = GNClassification::Verdict::Cantor;
        out.certificate.kind = Certificate::Kind::MultigeometricRatio;
        out.certificate.sigma = std::move(sigma);
        out.certificate.ratio = mg->second;
        return out;
      }
    }
    for (const CantorvalEntry& e : cantorval_registry()) {
      if (e.s == mg->first && e.q == mg->second) {
        out.verdict = GNClassification::Verdict::KnownCantorval;
        out.cantorval_name = e.name;
        out.certificate.kind = Certificate::Kind::Registry;
        out.certificate.registry_name = e.name;
        out.certificate.registry_structure = aspec.describe();
        return out;
      }
    }
  }

  out.verdict = GNClassification::Verdict::Undetermined;
  out.note = "no applicable criterion; reporting cover statistics";
  std::uint64_t depth = 0;
  IntervalCover best;
  for (std::uint64_t d = 1; d <= depth_budget; ++d) {
    try {
      best = cover1d(aspec, d, limits);
      depth = d;
    } catch (const BudgetExceeded&) {
      break;
    }
  }
  if (depth > 0) {
    CoverStats stats;
    stats.depth = depth;
    stats.interval_count = best.size();
    stats.total_length = best.total_length();
    stats.hull = best.hull();
    out.stats = stats;
  }
  return out;
}

ExactSet1D exact_set1d(const Series1D& spec, const EnumLimits& limits) {
  ExactSet1D out;
  if (spec.finite_support()) {
    out.kind = ExactSet1D::Kind::FinitePoints;
    out.points = finite_point_set(spec, limits);
    return out;
  }
  if (auto slow = slow_tail_from(spec)) {
    const TailBounds tail = spec.tail_bounds(*slow);
    std::vector<Scalar> sums = partial_sums(spec, *slow, limits);
    std::vector<Interval> ivs;
    ivs.reserve(sums.size());
    for (const Scalar& s : sums) ivs.push_back({s, s + tail.total()});
    out.kind = ExactSet1D::Kind::Intervals;
    out.intervals = merge_intervals(std::move(ivs));
    return out;
  }
  if (auto fast = fast_tail_from(spec)) {
    out.kind = ExactSet1D::Kind::CantorCode;
    out.cantor.fast_from = *fast;
    out.cantor.base_sums = partial_sums(spec, *fast - 1, limits);
    // fast tail: the per-branch refinement intervals stay pairwise disjoint
    std::uint64_t verified = 0;
    for (std::uint64_t j = 1; j <= 12; ++j) {
      std::vector<Scalar> terms;
      for (std::uint64_t i = 0; i < j; ++i) terms.push_back(spec.term(*fast + i));
      std::vector<Scalar> sums;
      try {
        sums = subset_sums(terms, limits);
      } catch (const BudgetExceeded&) {
        break;
      }
      const TailBounds tail = spec.tail_bounds(*fast - 1 + j);
      std::vector<Interval> ivs;
      for (const Scalar& s : sums) ivs.push_back({s + tail.lo, s + tail.hi});
      if (merge_intervals(ivs).size() != sums.size()) break;
      verified = j;
    }
    out.cantor.disjoint_checked_depth = verified;
    return out;
  }
  out.kind = ExactSet1D::Kind::NotCertified;
  try {
    out.reason = classify_convergence(spec).note;
  } catch (const DomainError& e) {
    out.reason = e.what();
  }
  if (out.reason.empty()) out.reason = "mixed convergence verdicts";
  return out;
}

IntervalCover psum_cover(const std::vector<Scalar>& coeff_set, const Series1D& weights,
                         std::uint64_t depth, const EnumLimits& limits) {
  if (coeff_set.empty()) throw DomainError("P must be nonempty");
  bool has_zero = false;
  for (const Scalar& c : coeff_set)
    if (c.is_zero()) has_zero = true;
  if (!has_zero) throw DomainError("P must contain 0");
  std::vector<Scalar> values = coefficient_sums(coeff_set, weights, depth, limits);
  Scalar pmin = coeff_set.front(), pmax = coeff_set.front();
  for (const Scalar& c : coeff_set) {
    if (c < pmin) pmin = c;
    if (pmax < c) pmax = c;
  }
  // Tail range of sum_{n>depth} c_n a_n with c_n in [pmin, pmax]; for
  // positive weights this is [pmin * r_m, pmax * r_m].
  const TailBounds t = weights.tail_bounds(depth);
  const Scalar tail_lo = pmin * t.hi + pmax * t.lo;
  const Scalar tail_hi = pmax * t.hi + pmin * t.lo;
  std::vector<Interval> ivs;
  ivs.reserve(values.size());
  for (const Scalar& v : values) ivs.push_back({v + tail_lo, v + tail_hi});
  std::string fp = spec_fingerprint("psum:" + weights.describe());
  return IntervalCover(std::move(ivs), depth, std::move(fp));
}

CollisionReport representation_collisions(const Series1D& spec, std::uint64_t depth,
                                          const EnumLimits& limits) {
  if (depth > 24) throw BudgetExceeded(limits.max_states);
  const std::uint64_t count = 1ull << depth;
  if (count > limits.max_states) throw BudgetExceeded(limits.max_states);

  std::vector<Scalar> terms;
  for (std::uint64_t n = 1; n <= depth; ++n) terms.push_back(spec.term(n));

  // sums[mask] via lowest-set-bit recurrence
  std::vector<Scalar> sums(count);
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    const std::uint64_t low = mask & (~mask + 1);
    const unsigned bit = static_cast<unsigned>(__builtin_ctzll(low));
    sums[mask] = sums[mask ^ low] + terms[bit];
  }

  std::vector<std::uint64_t> order(count);
  for (std::uint64_t i = 0; i < count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
    if (sums[a] != sums[b]) return sums[a] < sums[b];
    return a < b;
  });

  const TailBounds tail = spec.tail_bounds(depth);
  const Scalar width = tail.hi - tail.lo;

  CollisionReport report;
  report.depth = depth;
  for (std::uint64_t i = 0; i < count; ++i) {
    for (std::uint64_t j = i + 1; j < count; ++j) {
      if (sums[order[j]] - sums[order[i]] > width) break;
      auto pair = std::minmax(order[i], order[j]);
      report.potential.emplace_back(pair.first, pair.second);
      if (sums[order[i]] == sums[order[j]])
        report.exact.emplace_back(pair.first, pair.second);
      if (report.potential.size() > limits.max_states)
        throw BudgetExceeded(limits.max_states);
    }
  }
  std::sort(report.potential.begin(), report.potential.end());
  std::sort(report.exact.begin(), report.exact.end());

  for (std::uint64_t n = 1; n <= depth; ++n)
    if (spec.term(n) == spec.tail_bounds(n).total()) report.tail_matches.push_back(n);
  return report;
}

std::vector<Scalar> center_of_distances(const std::vector<Scalar>& points) {
  if (points.empty()) throw DomainError("EmptySet: center of distances needs points");
  std::vector<Scalar> result;
  bool first = true;
  for (const Scalar& y : points) {
    std::vector<Scalar> dist;
    dist.reserve(points.size());
    for (const Scalar& z : points) dist.push_back((y - z).abs());
    std::sort(dist.begin(), dist.end());
    dist.erase(std::unique(dist.begin(), dist.end()), dist.end());
    if (first) {
      result = std::move(dist);
      first = false;
    } else {
      std::vector<Scalar> merged;
      std::set_intersection(result.begin(), result.end(), dist.begin(), dist.end(),
                            std::back_inserter(merged));
      result = std::move(merged);
    }
    if (result.empty()) break;
  }
  return result;
}

namespace {

Scalar distance_to_cover(const Scalar& x, const IntervalCover& cover) {
  const auto& ivs = cover.intervals();
  auto it = std::upper_bound(ivs.begin(), ivs.end(), x,
                             [](const Scalar& v, const Interval& iv) { return v < iv.lo; });
  Scalar best;
  bool have = false;
  if (it != ivs.end()) {
    best = it->lo - x;
    have = true;
  }
  if (it != ivs.begin()) {
    const Interval& prev = *std::prev(it);
    Scalar d = x <= prev.hi ? Scalar(0) : x - prev.hi;
    if (!have || d < best) best = d;
  }
  return best;
}

}  // namespace

Scalar one_sided_hausdorff(const IntervalCover& from, const IntervalCover& to) {
  if (from.empty() || to.empty())
    throw DomainError("EmptyCover: Hausdorff distance needs nonempty covers");
  std::vector<Scalar> candidates;
  for (const Interval& iv : from.intervals()) {
    candidates.push_back(iv.lo);
    candidates.push_back(iv.hi);
  }
  for (const Interval& g : gaps(to)) {
    Scalar mid = (g.lo + g.hi) / Scalar(2);
    if (from.contains(mid)) candidates.push_back(mid);
  }
  Scalar best(0);
  for (const Scalar& c : candidates) {
    Scalar d = distance_to_cover(c, to);
    if (best < d) best = d;
  }
  return best;
}

}  // namespace subsum
