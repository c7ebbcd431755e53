#include "subsum/props.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "subsum/cover1d.hpp"
#include "subsum/cover2d.hpp"
#include "subsum/spectre.hpp"

namespace subsum {

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  std::int64_t pick(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
  }
  bool chance(double p) { return std::uniform_real_distribution<>(0, 1)(gen) < p; }

  Scalar rational() { return Scalar(static_cast<long>(pick(-12, 12)),
                                    static_cast<unsigned long>(pick(1, 8))); }

  Scalar scalar(bool allow_root = false) {
    Scalar s = rational();
    if (allow_root && chance(0.2))
      s += Scalar(Rational(0), Rational(static_cast<long>(pick(-3, 3))), 2);
    return s;
  }

  Scalar positive_unit() {  // rational in (0,1)
    long den = static_cast<long>(pick(2, 12));
    long num = static_cast<long>(pick(1, den - 1));
    return Scalar(num, static_cast<unsigned long>(den));
  }

  std::vector<Scalar> set1(std::size_t max_size, bool allow_root = false) {
    std::size_t n = static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(max_size)));
    std::vector<Scalar> v;
    while (v.size() < n) {
      Scalar s = scalar(allow_root);
      if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
    }
    std::sort(v.begin(), v.end());
    return v;
  }

  std::vector<Point2> set2(std::size_t max_size, bool allow_root = false) {
    std::size_t n = static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(max_size)));
    std::vector<Point2> v;
    while (v.size() < n) {
      Point2 p{scalar(allow_root), scalar(allow_root)};
      if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
    }
    std::sort(v.begin(), v.end(), [](const Point2& a, const Point2& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    });
    return v;
  }

  Mat2 invertible() {
    for (;;) {
      Mat2 m{rational(), rational(), rational(), rational()};
      if (!m.det().is_zero()) return m;
    }
  }

  Series1D series1(int depth_budget = 2) {
    switch (depth_budget > 0 ? pick(0, 5) : pick(0, 2)) {
      case 0: {
        std::vector<Scalar> terms;
        const std::int64_t n = pick(0, 5);
        for (std::int64_t i = 0; i < n; ++i) terms.push_back(scalar());
        return Series1D::finite_list(std::move(terms));
      }
      case 1: {
        Scalar c = scalar();
        if (c.is_zero()) c = Scalar(1);
        return Series1D::geometric(c, positive_unit());
      }
      case 2: {
        std::vector<Scalar> s;
        const std::int64_t n = pick(1, 4);
        for (std::int64_t i = 0; i < n; ++i) s.push_back(scalar());
        return Series1D::multigeometric(std::move(s), positive_unit());
      }
      case 3: {
        std::vector<Scalar> head;
        const std::int64_t n = pick(0, 3);
        for (std::int64_t i = 0; i < n; ++i) head.push_back(scalar());
        return Series1D::prefix(std::move(head), series1(depth_budget - 1));
      }
      case 4: {
        Scalar f = scalar();
        if (f.is_zero()) f = Scalar(-1);
        return Series1D::scaled(f, series1(depth_budget - 1));
      }
      default:
        return Series1D::abs(series1(depth_budget - 1));
    }
  }

  Series1D positive_series1() {
    if (chance(0.5)) {
      Scalar c(static_cast<long>(pick(1, 6)));
      return Series1D::geometric(c, positive_unit());
    }
    std::vector<Scalar> s;
    const std::int64_t n = pick(1, 4);
    for (std::int64_t i = 0; i < n; ++i)
      s.push_back(Scalar(static_cast<long>(pick(1, 9))));
    return Series1D::multigeometric(std::move(s), positive_unit());
  }

  Series2D series2(int depth_budget = 2) {
    switch (depth_budget > 0 ? pick(0, 4) : pick(0, 2)) {
      case 0: {
        std::vector<Point2> terms;
        const std::int64_t n = pick(0, 5);
        for (std::int64_t i = 0; i < n; ++i) terms.push_back({scalar(), scalar()});
        return Series2D::pair_list(std::move(terms));
      }
      case 1:
        return Series2D::axis_interleave(series1(1), series1(1));
      case 2:
        return Series2D::pair_generator(series1(1), series1(1));
      case 3: {
        std::vector<Point2> head;
        const std::int64_t n = pick(0, 3);
        for (std::int64_t i = 0; i < n; ++i) head.push_back({scalar(), scalar()});
        return Series2D::prefix(std::move(head), series2(depth_budget - 1));
      }
      default: {
        std::vector<Series2D> parts;
        const std::int64_t n = pick(1, 3);
        for (std::int64_t i = 0; i < n; ++i) parts.push_back(series2(0));
        return Series2D::diagonal_sum(std::move(parts));
      }
    }
  }
};

using Check = std::function<std::optional<std::string>(Rng&)>;

PropResult run_prop(const std::string& name, std::uint64_t cases, std::uint64_t seed,
                    const Check& check) {
  PropResult r;
  r.name = name;
  r.cases = cases;
  Rng rng(seed ^ std::hash<std::string>{}(name));
  for (std::uint64_t i = 0; i < cases; ++i) {
    std::optional<std::string> fail = check(rng);
    if (fail) {
      ++r.failures;
      if (r.first_failure.empty())
        r.first_failure = "case " + std::to_string(i) + ": " + *fail;
    }
  }
  return r;
}

bool contains1(const std::vector<Scalar>& sorted, const Scalar& v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool point_less(const Point2& a, const Point2& b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second < b.second;
}

std::vector<Point2> sorted_points(std::vector<Point2> v) {
  std::sort(v.begin(), v.end(), point_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// exact squared-distance membership test for the planar center of distances
bool squared_distance_in_center(const std::vector<Point2>& points, const Scalar& d2) {
  for (const Point2& y : points) {
    bool found = false;
    for (const Point2& z : points) {
      const Scalar dx = y.first - z.first;
      const Scalar dy = y.second - z.second;
      if (dx * dx + dy * dy == d2) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

std::vector<PropResult> run_spectre_properties(std::uint64_t cases, std::uint64_t seed) {
  std::vector<PropResult> out;

  out.push_back(run_prop("spectre-zero-and-negation", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    if (rng.chance(0.5)) {
      auto a = rng.set1(10, true);
      auto s = spectre_of_finite_set(a).vectors;
      if (!contains1(s, Scalar(0))) return "missing zero";
      for (const Scalar& v : s)
        if (!contains1(s, -v)) return "not negation closed at " + v.str();
    } else {
      auto a = rng.set2(8, true);
      auto s = spectre_of_finite_set(a).vectors;
      if (!std::binary_search(s.begin(), s.end(), Point2{Scalar(0), Scalar(0)}, point_less))
        return "missing zero";
      for (const Point2& v : s)
        if (!std::binary_search(s.begin(), s.end(), -v, point_less))
          return "not negation closed";
    }
    return std::nullopt;
  }));

  out.push_back(run_prop("spectre-contained-in-A-union-negA", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    auto a = rng.set2(8);
    if (!std::binary_search(a.begin(), a.end(), Point2{Scalar(0), Scalar(0)}, point_less)) {
      a.push_back({Scalar(0), Scalar(0)});
      a = sorted_points(std::move(a));
    }
    auto s = spectre_of_finite_set(a).vectors;
    for (const Point2& v : s) {
      const bool in_a = std::binary_search(a.begin(), a.end(), v, point_less);
      const bool in_neg = std::binary_search(a.begin(), a.end(), -v, point_less);
      if (!in_a && !in_neg) return "vector outside A u (-A)";
    }
    return std::nullopt;
  }));

  out.push_back(run_prop("spectre-translation-invariance", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    auto a = rng.set2(8);
    const Point2 q{rng.scalar(), rng.scalar()};
    std::vector<Point2> shifted;
    shifted.reserve(a.size());
    for (const Point2& p : a) shifted.push_back(p + q);
    if (spectre_of_finite_set(a).vectors != spectre_of_finite_set(shifted).vectors)
      return "spectre changed under translation";
    return std::nullopt;
  }));

  out.push_back(run_prop("spectre-linear-equivariance", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    auto a = rng.set2(7);
    const Mat2 f = rng.invertible();
    std::vector<Point2> image;
    image.reserve(a.size());
    for (const Point2& p : a) image.push_back(f.apply(p));
    auto lhs = spectre_of_finite_set(sorted_points(std::move(image))).vectors;
    std::vector<Point2> rhs;
    for (const Point2& v : spectre_of_finite_set(a).vectors) rhs.push_back(f.apply(v));
    rhs = sorted_points(std::move(rhs));
    if (lhs != rhs) return "S(F(A)) != F(S(A))";
    return std::nullopt;
  }));

  out.push_back(run_prop("spectre-intersection-union", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    const std::int64_t parts = rng.pick(2, 4);
    std::vector<std::vector<Point2>> family;
    std::vector<Point2> all;
    for (std::int64_t i = 0; i < parts; ++i) {
      family.push_back(rng.set2(6));
      all.insert(all.end(), family.back().begin(), family.back().end());
    }
    all = sorted_points(std::move(all));
    std::vector<Point2> common = spectre_of_finite_set(family[0]).vectors;
    for (std::size_t i = 1; i < family.size(); ++i) {
      auto s = spectre_of_finite_set(family[i]).vectors;
      std::vector<Point2> merged;
      std::set_intersection(common.begin(), common.end(), s.begin(), s.end(),
                            std::back_inserter(merged), point_less);
      common = std::move(merged);
    }
    for (const Point2& v : common)
      if (!spectre_contains(all, v)) return "intersection escapes S(union)";
    return std::nullopt;
  }));

  out.push_back(run_prop("spectre-decreasing-chain", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    std::vector<Point2> b1 = rng.set2(8);
    std::vector<Point2> b2 = b1, b3;
    while (b2.size() > 1 && rng.chance(0.5))
      b2.erase(b2.begin() + static_cast<std::ptrdiff_t>(
                   rng.pick(0, static_cast<std::int64_t>(b2.size()) - 1)));
    b3 = b2;
    while (b3.size() > 1 && rng.chance(0.5))
      b3.erase(b3.begin() + static_cast<std::ptrdiff_t>(
                   rng.pick(0, static_cast<std::int64_t>(b3.size()) - 1)));
    std::vector<Point2> common = spectre_of_finite_set(b1).vectors;
    for (const auto* b : {&b2, &b3}) {
      auto s = spectre_of_finite_set(*b).vectors;
      std::vector<Point2> merged;
      std::set_intersection(common.begin(), common.end(), s.begin(), s.end(),
                            std::back_inserter(merged), point_less);
      common = std::move(merged);
    }
    for (const Point2& v : common)
      if (!spectre_contains(b3, v)) return "chain intersection escapes S(B3)";
    return std::nullopt;
  }));

  out.push_back(run_prop("spectre-componentwise", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    std::vector<Point2> terms;
    const std::int64_t n = rng.pick(1, 6);
    for (std::int64_t i = 0; i < n; ++i) terms.push_back({rng.scalar(), rng.scalar()});
    auto points = subset_sums(terms, EnumLimits{});
    std::vector<Scalar> xs, ys;
    for (const Point2& p : points) {
      xs.push_back(p.first);
      ys.push_back(p.second);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (const Point2& v : spectre_of_finite_set(points).vectors) {
      if (!spectre_contains(xs, v.first)) return "x-component escapes S(E(x))";
      if (!spectre_contains(ys, v.second)) return "y-component escapes S(E(y))";
    }
    return std::nullopt;
  }));

  out.push_back(run_prop("spectre-distance-projection", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    if (rng.chance(0.5)) {
      auto a = rng.set1(9);
      auto center = center_of_distances(a);
      for (const Scalar& v : spectre_of_finite_set(a).vectors)
        if (!contains1(center, v.abs())) return "|x| escapes C(A)";
    } else {
      auto a = rng.set2(7);
      for (const Point2& v : spectre_of_finite_set(a).vectors) {
        const Scalar d2 = v.first * v.first + v.second * v.second;
        if (!squared_distance_in_center(a, d2)) return "d(x,0) escapes C(A)";
      }
    }
    return std::nullopt;
  }));

  return out;
}

std::vector<PropResult> run_series_properties(std::uint64_t cases, std::uint64_t seed) {
  std::vector<PropResult> out;

  out.push_back(run_prop("series-tail-telescoping-1d", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    Series1D s = rng.series1();
    const std::uint64_t n = static_cast<std::uint64_t>(rng.pick(0, 12));
    const TailBounds outer = s.tail_bounds(n);
    const TailBounds inner = s.tail_bounds(n + 1);
    const Scalar t = s.term(n + 1);
    const Scalar neg = t.sign() < 0 ? t : Scalar(0);
    const Scalar pos = t.sign() > 0 ? t : Scalar(0);
    if (outer.lo != inner.lo + neg || outer.hi != inner.hi + pos)
      return "tail split does not telescope at n=" + std::to_string(n);
    return std::nullopt;
  }));

  out.push_back(run_prop("series-tail-telescoping-2d", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    Series2D s = rng.series2();
    const std::uint64_t n = static_cast<std::uint64_t>(rng.pick(0, 12));
    const TailBounds2 outer = s.tail_bounds(n);
    const TailBounds2 inner = s.tail_bounds(n + 1);
    const Point2 t = s.term(n + 1);
    const auto neg = [](const Scalar& v) { return v.sign() < 0 ? v : Scalar(0); };
    const auto pos = [](const Scalar& v) { return v.sign() > 0 ? v : Scalar(0); };
    if (outer.x.lo != inner.x.lo + neg(t.first) || outer.x.hi != inner.x.hi + pos(t.first))
      return "x tail split does not telescope";
    if (outer.y.lo != inner.y.lo + neg(t.second) || outer.y.hi != inner.y.hi + pos(t.second))
      return "y tail split does not telescope";
    return std::nullopt;
  }));

  out.push_back(run_prop("series-interleave-indexing", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    Series1D xs = rng.series1(1), ys = rng.series1(1);
    Series2D s = Series2D::axis_interleave(xs, ys);
    const std::uint64_t k = static_cast<std::uint64_t>(rng.pick(1, 10));
    const Point2 odd = s.term(2 * k - 1);
    const Point2 even = s.term(2 * k);
    if (odd.first != xs.term(k) || !odd.second.is_zero()) return "odd index mismatch";
    if (!even.first.is_zero() || even.second != ys.term(k)) return "even index mismatch";
    return std::nullopt;
  }));

  out.push_back(run_prop("series-geometric-slow-iff-q-half", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    const Scalar q = rng.positive_unit();
    const Scalar c(static_cast<long>(rng.pick(1, 5)));
    Series1D g = Series1D::geometric(c, q);
    const bool slow =
        classify_convergence(g).kind == ConvergenceClass::Kind::SlowEverywhere;
    const bool expected = Scalar(2) * q >= Scalar(1);
    if (slow != expected) return "verdict disagrees with q >= 1/2 at q=" + q.str();
    // depth-50 brute comparison with independently computed tails
    Scalar power = q;
    const Scalar ratio = q / (Scalar(1) - q);
    for (int n = 1; n <= 50; ++n) {
      const Scalar x = c * power;
      const Scalar r = x * ratio;
      if ((x <= r) != expected) return "index verdict mismatch at n=" + std::to_string(n);
      power *= q;
    }
    return std::nullopt;
  }));

  return out;
}

std::vector<PropResult> run_cover_properties(std::uint64_t cases, std::uint64_t seed) {
  std::vector<PropResult> out;

  out.push_back(run_prop("cover1d-nesting", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    Series1D s = rng.series1();
    const std::uint64_t d = static_cast<std::uint64_t>(rng.pick(0, 7));
    const IntervalCover coarse = cover1d(s, d);
    const IntervalCover fine = cover1d(s, d + 1);
    for (const Interval& iv : fine.intervals()) {
      bool inside = false;
      for (const Interval& parent : coarse.intervals())
        if (parent.lo <= iv.lo && iv.hi <= parent.hi) {
          inside = true;
          break;
        }
      if (!inside) return "refined interval escapes the coarse cover";
    }
    return std::nullopt;
  }));

  out.push_back(run_prop("cover1d-soundness", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    Series1D s = rng.series1();
    const std::uint64_t d = static_cast<std::uint64_t>(rng.pick(0, 6));
    const std::uint64_t extra = static_cast<std::uint64_t>(rng.pick(1, 4));
    const IntervalCover cover = cover1d(s, d);
    for (const Scalar& v : partial_sums(s, d + extra, EnumLimits{}))
      if (!cover.contains(v)) return "deep subsum escapes the cover";
    return std::nullopt;
  }));

  out.push_back(run_prop("cover1d-gaps-disjoint", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    Series1D s = rng.series1();
    const std::uint64_t d = static_cast<std::uint64_t>(rng.pick(0, 6));
    const IntervalCover cover = cover1d(s, d);
    const auto holes = gaps(cover);
    for (const Scalar& v : partial_sums(s, d + 3, EnumLimits{}))
      for (const Interval& g : holes)
        if (g.lo < v && v < g.hi) return "subsum landed in a gap";
    return std::nullopt;
  }));

  out.push_back(run_prop("psum-01-equals-cover1d", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    Series1D s = rng.positive_series1();
    const std::uint64_t d = static_cast<std::uint64_t>(rng.pick(0, 6));
    const IntervalCover a = psum_cover({Scalar(0), Scalar(1)}, s, d);
    const IntervalCover b = cover1d(s, d);
    if (a.intervals().size() != b.intervals().size()) return "interval count differs";
    for (std::size_t i = 0; i < a.intervals().size(); ++i)
      if (a.intervals()[i].lo != b.intervals()[i].lo ||
          a.intervals()[i].hi != b.intervals()[i].hi)
        return "interval " + std::to_string(i) + " differs";
    return std::nullopt;
  }));

  out.push_back(run_prop("cover2d-containment", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    Series2D s = rng.series2();
    const std::uint64_t d = static_cast<std::uint64_t>(rng.pick(0, 5));
    const std::uint64_t extra = static_cast<std::uint64_t>(rng.pick(1, 4));
    const BoxCover cover = cover2d(s, d);
    for (const Point2& p : enumerate_points(s, d + extra))
      if (!cover.contains(p)) return "deep planar subsum escapes the cover";
    return std::nullopt;
  }));

  out.push_back(run_prop("cover2d-nesting", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    Series2D s = rng.series2();
    const std::uint64_t d = static_cast<std::uint64_t>(rng.pick(0, 5));
    const BoxCover coarse = cover2d(s, d);
    const BoxCover fine = cover2d(s, d + 1);
    for (const Box& b : fine.boxes()) {
      bool inside = false;
      for (const Box& parent : coarse.boxes())
        if (parent.xlo <= b.xlo && b.xhi <= parent.xhi && parent.ylo <= b.ylo &&
            b.yhi <= parent.yhi) {
          inside = true;
          break;
        }
      if (!inside) return "refined box escapes the coarse cover";
    }
    return std::nullopt;
  }));

  out.push_back(run_prop("cover2d-symmetry-half-sum", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    Series2D s = rng.series2();
    const std::uint64_t d = static_cast<std::uint64_t>(rng.pick(0, 7));
    auto points = enumerate_points(s, d);
    Point2 total{Scalar(0), Scalar(0)};
    for (std::uint64_t n = 1; n <= d; ++n) total = total + s.term(n);
    const Point2 center{total.first / Scalar(2), total.second / Scalar(2)};
    if (!check_symmetry(points, center)) return "half-sum symmetry failed";
    return std::nullopt;
  }));

  out.push_back(run_prop("pair-generator-diagonal-graph", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    Series1D xs = rng.series1(1);
    Series2D s = Series2D::pair_generator(xs, xs);
    const std::uint64_t d = static_cast<std::uint64_t>(rng.pick(0, 8));
    for (const Point2& p : enumerate_points(s, d))
      if (p.first != p.second) return "point off the diagonal";
    return std::nullopt;
  }));

  out.push_back(run_prop("center-of-distances-invariance", cases, seed,
                         [](Rng& rng) -> std::optional<std::string> {
    auto a = rng.set1(9);
    auto c = center_of_distances(a);
    if (!contains1(c, Scalar(0))) return "center misses zero";
    const Scalar t = rng.scalar();
    std::vector<Scalar> shifted;
    shifted.reserve(a.size());
    for (const Scalar& v : a) shifted.push_back(v + t);
    if (center_of_distances(shifted) != c) return "center changed under translation";
    return std::nullopt;
  }));

  return out;
}

bool all_passed(const std::vector<PropResult>& results) {
  for (const PropResult& r : results)
    if (!r.pass()) return false;
  return true;
}

std::string format_results(const std::vector<PropResult>& results) {
  std::ostringstream os;
  for (const PropResult& r : results) {
    os << (r.pass() ? "PASS" : "FAIL") << " " << r.name << " (" << r.cases << " cases";
    if (!r.pass()) os << ", " << r.failures << " failures; " << r.first_failure;
    os << ")\n";
  }
  return os.str();
}

}  // namespace subsum
