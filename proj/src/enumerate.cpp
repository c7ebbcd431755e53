#include "subsum/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

namespace subsum {

namespace {

template <class V>
struct ValueTraits;

template <>
struct ValueTraits<Scalar> {
  using Hash = ScalarHash;
  static bool is_zero(const Scalar& v) { return v.is_zero(); }
  static bool less(const Scalar& a, const Scalar& b) { return a < b; }
};

template <>
struct ValueTraits<Point2> {
  using Hash = Point2Hash;
  static bool is_zero(const Point2& v) { return v.first.is_zero() && v.second.is_zero(); }
  static bool less(const Point2& a, const Point2& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

template <class V>
using Set = std::unordered_set<V, typename ValueTraits<V>::Hash>;

template <class V>
void grow(Set<V>& states, const V& t, std::uint64_t budget) {
  std::vector<V> added;
  added.reserve(states.size());
  for (const V& s : states) added.push_back(s + t);
  for (V& v : added) states.insert(std::move(v));
  if (states.size() > budget) throw BudgetExceeded(budget);
}

template <class V>
std::vector<V> sorted(Set<V>&& states) {
  std::vector<V> out(states.begin(), states.end());
  std::sort(out.begin(), out.end(), ValueTraits<V>::less);
  return out;
}

template <class V>
std::vector<V> subset_sums_impl(const std::vector<V>& raw_terms, const EnumLimits& lim) {
  std::vector<V> terms;
  terms.reserve(raw_terms.size());
  for (const V& t : raw_terms)
    if (!ValueTraits<V>::is_zero(t)) terms.push_back(t);

  Set<V> states;
  states.insert(V{});
  const unsigned threads = std::min<unsigned>(lim.threads, 64);
  if (threads <= 1 || terms.size() < 12) {
    for (const V& t : terms) grow(states, t, lim.max_states);
    return sorted(std::move(states));
  }

  // Seed on a short prefix, split the seeds round-robin, let each worker run
  // the remaining terms, and union the results. Each worker's set is a
  // subset of the final union, so the per-worker budget check is sound; the
  // merged set gets the exact check.
  std::size_t split = 0;
  while ((1u << split) < threads * 4 && split < 8 && split < terms.size() - 1) ++split;
  for (std::size_t i = 0; i < split; ++i) grow(states, terms[i], lim.max_states);
  std::vector<V> seeds = sorted(std::move(states));

  std::vector<Set<V>> locals(threads);
  std::vector<std::thread> workers;
  std::atomic<bool> over{false};
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        Set<V>& local = locals[w];
        for (std::size_t i = w; i < seeds.size(); i += threads) local.insert(seeds[i]);
        for (std::size_t i = split; i < terms.size(); ++i) {
          grow(local, terms[i], lim.max_states);
          if (over.load(std::memory_order_relaxed)) return;
        }
      } catch (const BudgetExceeded&) {
        over.store(true, std::memory_order_relaxed);
      }
    });
  }
  for (auto& t : workers) t.join();
  if (over.load()) throw BudgetExceeded(lim.max_states);

  Set<V> merged;
  for (auto& local : locals) {
    for (const V& v : local) merged.insert(v);
    if (merged.size() > lim.max_states) throw BudgetExceeded(lim.max_states);
  }
  return sorted(std::move(merged));
}

}  // namespace

std::vector<Scalar> subset_sums(const std::vector<Scalar>& terms, const EnumLimits& limits) {
  return subset_sums_impl(terms, limits);
}

std::vector<Point2> subset_sums(const std::vector<Point2>& terms, const EnumLimits& limits) {
  return subset_sums_impl(terms, limits);
}

std::vector<Scalar> partial_sums(const Series1D& spec, std::uint64_t depth,
                                 const EnumLimits& limits) {
  std::vector<Scalar> terms;
  terms.reserve(depth);
  for (std::uint64_t n = 1; n <= depth; ++n) terms.push_back(spec.term(n));
  return subset_sums(terms, limits);
}

std::vector<Point2> partial_sums(const Series2D& spec, std::uint64_t depth,
                                 const EnumLimits& limits) {
  std::vector<Point2> terms;
  terms.reserve(depth);
  for (std::uint64_t n = 1; n <= depth; ++n) terms.push_back(spec.term(n));
  return subset_sums(terms, limits);
}

std::vector<Scalar> coefficient_sums(const std::vector<Scalar>& coeff_set,
                                     const Series1D& weights, std::uint64_t depth,
                                     const EnumLimits& limits) {
  if (coeff_set.empty()) throw DomainError("coefficient set must be nonempty");
  std::unordered_set<Scalar, ScalarHash> states;
  states.insert(Scalar(0));
  for (std::uint64_t n = 1; n <= depth; ++n) {
    const Scalar a = weights.term(n);
    std::unordered_set<Scalar, ScalarHash> next;
    for (const Scalar& s : states)
      for (const Scalar& c : coeff_set) next.insert(s + c * a);
    if (next.size() > limits.max_states) throw BudgetExceeded(limits.max_states);
    states = std::move(next);
  }
  std::vector<Scalar> out(states.begin(), states.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace subsum
