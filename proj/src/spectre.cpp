#include "subsum/spectre.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace subsum {

namespace {

bool point_less(const Point2& a, const Point2& b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second < b.second;
}

template <class V, class Less>
std::vector<V> sorted_unique(std::vector<V> v, Less less) {
  std::sort(v.begin(), v.end(), less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <class V, class Less>
bool member(const std::vector<V>& sorted, const V& v, Less less) {
  return std::binary_search(sorted.begin(), sorted.end(), v, less);
}

// S(A) is contained in (A - y) u (y - A) for every y, so candidates from the
// y with the smallest difference set suffice.
template <class V, class Less>
std::vector<V> spectre_impl(std::vector<V> points, Less less) {
  if (points.empty()) throw DomainError("EmptySet: spectre needs a nonempty set");
  points = sorted_unique(std::move(points), less);

  std::vector<V> best_candidates;
  std::size_t scan_limit = points.size() <= 512 ? points.size() : 1;
  for (std::size_t i = 0; i < scan_limit; ++i) {
    std::vector<V> cand;
    cand.reserve(2 * points.size());
    for (const V& p : points) {
      cand.push_back(p - points[i]);
      cand.push_back(points[i] - p);
    }
    cand = sorted_unique(std::move(cand), less);
    if (best_candidates.empty() || cand.size() < best_candidates.size())
      best_candidates = std::move(cand);
  }

  std::vector<V> result;
  for (const V& x : best_candidates) {
    bool ok = true;
    for (const V& y : points) {
      if (!member(points, y + x, less) && !member(points, y - x, less)) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(x);
  }
  return result;  // sorted since candidates were sorted
}

}  // namespace

bool spectre_contains(const std::vector<Scalar>& points, const Scalar& v) {
  std::vector<Scalar> sorted = sorted_unique(points, std::less<Scalar>{});
  for (const Scalar& y : sorted)
    if (!member(sorted, y + v, std::less<Scalar>{}) &&
        !member(sorted, y - v, std::less<Scalar>{}))
      return false;
  return true;
}

bool spectre_contains(const std::vector<Point2>& points, const Point2& v) {
  std::vector<Point2> sorted = sorted_unique(points, point_less);
  for (const Point2& y : sorted)
    if (!member(sorted, y + v, point_less) && !member(sorted, y - v, point_less))
      return false;
  return true;
}

SpectreResult1 spectre_of_finite_set(const std::vector<Scalar>& points) {
  SpectreResult1 r;
  r.vectors = spectre_impl(points, std::less<Scalar>{});
  r.ambient = "difference-set candidates of " + std::to_string(points.size()) + " points";
  return r;
}

SpectreResult2 spectre_of_finite_set(const std::vector<Point2>& points) {
  SpectreResult2 r;
  r.vectors = spectre_impl(points, point_less);
  r.ambient = "difference-set candidates of " + std::to_string(points.size()) + " points";
  return r;
}

// ---------------------------------------------------------------------------
// Grids

std::vector<Scalar> GridSet::points1() const {
  std::vector<Scalar> out;
  out.reserve(occupancy.size());
  for (const auto& c : occupancy)
    out.push_back(origin.first + spacing * Scalar(static_cast<long>(c[0])));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point2> GridSet::points2() const {
  std::vector<Point2> out;
  out.reserve(occupancy.size());
  for (const auto& c : occupancy)
    out.push_back({origin.first + spacing * Scalar(static_cast<long>(c[0])),
                   origin.second + spacing * Scalar(static_cast<long>(c[1]))});
  std::sort(out.begin(), out.end(), point_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string GridSet::serialize() const {
  std::ostringstream os;
  os << spacing << " " << origin.first << " " << origin.second << "\n";
  for (const auto& c : occupancy) os << c[0] << " " << c[1] << "\n";
  return os.str();
}

GridSet GridSet::deserialize(const std::string& text, int dims) {
  std::istringstream is(text);
  std::string spacing, ox, oy;
  if (!(is >> spacing >> ox >> oy)) throw ConfigError("grid header expected");
  GridSet g;
  g.dims = dims;
  g.spacing = Scalar::parse(spacing);
  g.origin = {Scalar::parse(ox), Scalar::parse(oy)};
  std::int64_t i, j;
  while (is >> i >> j) g.occupancy.push_back({i, j});
  return g;
}

namespace {

// Row-major bitset over the occupancy bounding box.
struct GridBits {
  std::int64_t minx = 0, miny = 0;
  std::int64_t width = 0, height = 0;
  std::size_t stride = 0;
  std::vector<std::uint64_t> bits;

  static GridBits build(const std::vector<std::array<std::int64_t, 2>>& occ) {
    GridBits g;
    g.minx = occ.front()[0];
    g.miny = occ.front()[1];
    std::int64_t maxx = g.minx, maxy = g.miny;
    for (const auto& c : occ) {
      g.minx = std::min(g.minx, c[0]);
      g.miny = std::min(g.miny, c[1]);
      maxx = std::max(maxx, c[0]);
      maxy = std::max(maxy, c[1]);
    }
    g.width = maxx - g.minx + 1;
    g.height = maxy - g.miny + 1;
    if (g.width * g.height > (std::int64_t{1} << 28))
      throw BudgetExceeded(std::uint64_t{1} << 28);
    g.stride = static_cast<std::size_t>((g.width + 63) / 64);
    g.bits.assign(g.stride * static_cast<std::size_t>(g.height), 0);
    for (const auto& c : occ) g.set(c[0] - g.minx, c[1] - g.miny);
    return g;
  }

  void set(std::int64_t x, std::int64_t y) {
    bits[static_cast<std::size_t>(y) * stride + static_cast<std::size_t>(x >> 6)] |=
        1ull << (x & 63);
  }
  bool get(std::int64_t x, std::int64_t y) const {
    if (x < 0 || x >= width || y < 0 || y >= height) return false;
    return bits[static_cast<std::size_t>(y) * stride + static_cast<std::size_t>(x >> 6)] &
           (1ull << (x & 63));
  }

  // occ-row shifted so that result bit c = row bit (c + dx), masked to the box
  void shifted_row(std::int64_t y, std::int64_t dx, std::vector<std::uint64_t>& out) const {
    std::fill(out.begin(), out.end(), 0);
    if (y < 0 || y >= height) return;
    const std::uint64_t* src = &bits[static_cast<std::size_t>(y) * stride];
    for (std::int64_t c = 0; c < width; ++c) {
      const std::int64_t s = c + dx;
      if (s < 0 || s >= width) continue;
      if (src[s >> 6] & (1ull << (s & 63)))
        out[static_cast<std::size_t>(c >> 6)] |= 1ull << (c & 63);
    }
  }
};

}  // namespace

SpectreResult2 spectre_of_grid(const GridSet& grid) {
  if (grid.occupancy.empty()) throw DomainError("EmptySet: spectre needs occupancy");
  const GridBits g = GridBits::build(grid.occupancy);

  // candidate lattice vectors from one fixed occupied cell
  const auto p0 = grid.occupancy.front();
  std::vector<std::array<std::int64_t, 2>> cand;
  cand.reserve(2 * grid.occupancy.size());
  for (const auto& p : grid.occupancy) {
    cand.push_back({p[0] - p0[0], p[1] - p0[1]});
    cand.push_back({p0[0] - p[0], p0[1] - p[1]});
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::vector<std::uint64_t> plus(g.stride), minus(g.stride);
  std::vector<std::array<std::int64_t, 2>> accepted;
  for (const auto& v : cand) {
    bool ok = true;
    for (std::int64_t y = 0; y < g.height && ok; ++y) {
      const std::uint64_t* row = &g.bits[static_cast<std::size_t>(y) * g.stride];
      bool row_empty = true;
      for (std::size_t w = 0; w < g.stride; ++w) row_empty &= row[w] == 0;
      if (row_empty) continue;
      g.shifted_row(y + v[1], v[0], plus);
      g.shifted_row(y - v[1], -v[0], minus);
      for (std::size_t w = 0; w < g.stride; ++w)
        if (row[w] & ~(plus[w] | minus[w])) {
          ok = false;
          break;
        }
    }
    if (ok) accepted.push_back(v);
  }

  SpectreResult2 r;
  r.ambient = "lattice differences over a " + std::to_string(g.width) + "x" +
              std::to_string(g.height) + " box";
  r.vectors.reserve(accepted.size());
  for (const auto& v : accepted)
    r.vectors.push_back({grid.spacing * Scalar(static_cast<long>(v[0])),
                         grid.spacing * Scalar(static_cast<long>(v[1]))});
  std::sort(r.vectors.begin(), r.vectors.end(), point_less);
  return r;
}

SpectreResult1 spectre_of_grid_1d(const GridSet& grid) {
  if (grid.dims != 1) throw DomainError("1D spectre needs a 1D grid");
  GridSet flat = grid;
  for (auto& c : flat.occupancy) c[1] = 0;
  SpectreResult2 planar = spectre_of_grid(flat);
  SpectreResult1 r;
  r.ambient = planar.ambient;
  for (const Point2& v : planar.vectors) r.vectors.push_back(v.first);
  std::sort(r.vectors.begin(), r.vectors.end());
  return r;
}

// ---------------------------------------------------------------------------
// Shapes

namespace {

// spacing must be 1/m for a positive integer m
std::int64_t unit_steps(const Scalar& spacing) {
  if (spacing.sign() <= 0 || !spacing.is_rational())
    throw DomainError("SpacingMismatch: spacing must be a positive rational");
  Scalar inv = Scalar(1) / spacing;
  if (inv.rational_part().get_den() != 1)
    throw DomainError("SpacingMismatch: spacing must divide the unit length");
  mpz_class m = inv.rational_part().get_num();
  if (!m.fits_slong_p() || m.get_si() <= 0)
    throw DomainError("SpacingMismatch: spacing out of range");
  return m.get_si();
}

bool sierpinski_member(std::uint64_t i, std::uint64_t j, std::uint64_t level) {
  for (std::uint64_t t = 0; t < level; ++t) {
    if (i % 3 == 1 && j % 3 == 1) return false;
    i /= 3;
    j /= 3;
  }
  return true;
}

}  // namespace

GridSet make_grid_shape(GridShape shape, const Scalar& spacing, std::uint64_t level,
                        const Scalar& radius) {
  GridSet g;
  g.spacing = spacing;
  switch (shape) {
    case GridShape::Square: {
      const std::int64_t m = unit_steps(spacing);
      for (std::int64_t i = 0; i <= m; ++i)
        for (std::int64_t j = 0; j <= m; ++j) g.occupancy.push_back({i, j});
      return g;
    }
    case GridShape::Triangle: {
      const std::int64_t m = unit_steps(spacing);
      for (std::int64_t i = 0; i <= m; ++i)
        for (std::int64_t j = 0; j + i <= m; ++j) g.occupancy.push_back({i, j});
      return g;
    }
    case GridShape::Disk: {
      if (spacing.sign() <= 0) throw DomainError("SpacingMismatch: spacing must be positive");
      if (radius.sign() <= 0) throw DomainError("disk radius must be positive");
      const std::int64_t reach = ((radius / spacing).floor()).get_si();
      const Scalar r2 = radius * radius;
      for (std::int64_t i = -reach; i <= reach; ++i)
        for (std::int64_t j = -reach; j <= reach; ++j) {
          const Scalar x = spacing * Scalar(static_cast<long>(i));
          const Scalar y = spacing * Scalar(static_cast<long>(j));
          if (x * x + y * y <= r2) g.occupancy.push_back({i, j});
        }
      return g;
    }
    case GridShape::Sierpinski: {
      if (level == 0) throw DomainError("sierpinski level must be at least 1");
      mpz_class cells;
      mpz_ui_pow_ui(cells.get_mpz_t(), 3, level);
      // spacing must be m/3^L for a positive integer m
      Scalar stepcount = spacing * Scalar(Rational(cells));
      if (!stepcount.is_rational() || stepcount.rational_part().get_den() != 1 ||
          stepcount.sign() <= 0)
        throw DomainError("SpacingMismatch: sierpinski spacing must be m/3^level");
      const std::int64_t m = stepcount.rational_part().get_num().get_si();
      const std::int64_t n = cells.get_si();
      for (std::int64_t i = 0; i * m < n; ++i)
        for (std::int64_t j = 0; j * m < n; ++j)
          if (sierpinski_member(static_cast<std::uint64_t>(i * m),
                                static_cast<std::uint64_t>(j * m), level))
            g.occupancy.push_back({i, j});
      return g;
    }
    case GridShape::Cantor: {
      if (level == 0) throw DomainError("cantor level must be at least 1");
      mpz_class cells;
      mpz_ui_pow_ui(cells.get_mpz_t(), 3, level);
      Rational expected(mpz_class(1), cells);
      expected.canonicalize();
      if (!spacing.is_rational() || spacing.rational_part() != expected)
        throw DomainError("SpacingMismatch: cantor spacing must be 3^-level");
      g.dims = 1;
      // subset sums of 2*3^{level-n}, n = 1..level, in units of 3^-level
      std::vector<std::int64_t> sums{0};
      std::int64_t step = 2;
      for (std::uint64_t n = 0; n < level; ++n) {
        const std::size_t sz = sums.size();
        for (std::size_t i = 0; i < sz; ++i) sums.push_back(sums[i] + step);
        step *= 3;
      }
      std::sort(sums.begin(), sums.end());
      sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
      for (std::int64_t s : sums) g.occupancy.push_back({s, 0});
      return g;
    }
  }
  throw DomainError("unknown grid shape");
}

// ---------------------------------------------------------------------------
// Terms-in-spectre

TermsInSpectreReport terms_in_spectre_report(const Series1D& spec, std::uint64_t depth,
                                             const EnumLimits& limits) {
  TermsInSpectreReport r;
  std::vector<Scalar> points = partial_sums(spec, depth, limits);
  for (std::uint64_t n = 1; n <= depth; ++n) {
    if (!spectre_contains(points, spec.term(n))) {
      r.pass = false;
      r.failed_index = n;
      r.detail = "term " + spec.term(n).str() + " escapes the spectre";
      return r;
    }
  }
  return r;
}

TermsInSpectreReport terms_in_spectre_report(const Series2D& spec, std::uint64_t depth,
                                             const EnumLimits& limits) {
  TermsInSpectreReport r;
  std::vector<Point2> points = partial_sums(spec, depth, limits);
  for (std::uint64_t n = 1; n <= depth; ++n) {
    const Point2 t = spec.term(n);
    if (!spectre_contains(points, t)) {
      r.pass = false;
      r.failed_index = n;
      r.detail = "term (" + t.first.str() + "," + t.second.str() + ") escapes the spectre";
      return r;
    }
  }
  return r;
}

std::vector<Scalar> center_of_distances_grid(const GridSet& grid) {
  if (grid.dims != 1) throw DomainError("center_of_distances_grid needs a 1D grid");
  if (grid.occupancy.empty()) throw DomainError("EmptySet: center of distances");
  std::vector<std::int64_t> coords;
  coords.reserve(grid.occupancy.size());
  for (const auto& c : grid.occupancy) coords.push_back(c[0]);
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  std::vector<std::int64_t> result;
  bool first = true;
  for (std::int64_t y : coords) {
    std::vector<std::int64_t> dist;
    dist.reserve(coords.size());
    for (std::int64_t z : coords) dist.push_back(std::llabs(y - z));
    std::sort(dist.begin(), dist.end());
    dist.erase(std::unique(dist.begin(), dist.end()), dist.end());
    if (first) {
      result = std::move(dist);
      first = false;
    } else {
      std::vector<std::int64_t> merged;
      std::set_intersection(result.begin(), result.end(), dist.begin(), dist.end(),
                            std::back_inserter(merged));
      result = std::move(merged);
    }
    if (result.empty()) break;
  }
  std::vector<Scalar> out;
  out.reserve(result.size());
  for (std::int64_t d : result)
    out.push_back(grid.spacing * Scalar(static_cast<long>(d)));
  return out;
}

}  // namespace subsum
