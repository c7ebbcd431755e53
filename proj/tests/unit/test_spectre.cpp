#include <doctest.h>

#include <algorithm>

#include "subsum/props.hpp"
#include "subsum/spectre.hpp"

using namespace subsum;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

bool has(const std::vector<Point2>& v, const char* x, const char* y) {
  return std::find(v.begin(), v.end(), Point2{S(x), S(y)}) != v.end();
}

// brute oracle straight from the definition over all difference candidates
template <class V>
std::vector<V> brute_spectre(const std::vector<V>& points) {
  std::vector<V> cand;
  for (const V& a : points)
    for (const V& b : points) cand.push_back(a - b);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<V> out;
  for (const V& x : cand) {
    bool ok = true;
    for (const V& y : points) {
      const V plus = y + x;
      const V minus = y - x;
      if (std::find(points.begin(), points.end(), plus) == points.end() &&
          std::find(points.begin(), points.end(), minus) == points.end()) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("spectre of tiny sets") {
  CHECK(spectre_of_finite_set(std::vector<Point2>{{S("0"), S("0")}}).vectors ==
        std::vector<Point2>{{S("0"), S("0")}});
  CHECK(spectre_of_finite_set(std::vector<Scalar>{S("0"), S("1")}).vectors ==
        std::vector<Scalar>{S("-1"), S("0"), S("1")});
  CHECK_THROWS_AS(spectre_of_finite_set(std::vector<Scalar>{}), DomainError);
}

TEST_CASE("square grid 1/4 gives the nine-vector cross") {
  const GridSet g = make_grid_shape(GridShape::Square, S("1/4"));
  const SpectreResult2 r = spectre_of_grid(g);
  REQUIRE(r.vectors.size() == 9);
  for (const char* t : {"-1/2", "-1/4", "0", "1/4", "1/2"}) {
    CHECK(has(r.vectors, t, "0"));
    CHECK(has(r.vectors, "0", t));
  }
  // brute oracle agreement on materialized points
  CHECK(r.vectors == brute_spectre(g.points2()));
}

TEST_CASE("grid spectre equals the finite-set spectre") {
  for (const GridSet& g :
       {make_grid_shape(GridShape::Square, S("1/3")),
        make_grid_shape(GridShape::Disk, S("1/2")),
        make_grid_shape(GridShape::Triangle, S("1/4")),
        make_grid_shape(GridShape::Sierpinski, S("1/9"), 2)}) {
    CHECK(spectre_of_grid(g).vectors == spectre_of_finite_set(g.points2()).vectors);
  }
}

TEST_CASE("disk and triangle lattices have trivial spectre") {
  const SpectreResult2 disk =
      spectre_of_grid(make_grid_shape(GridShape::Disk, S("1/8")));
  CHECK(disk.vectors == std::vector<Point2>{{S("0"), S("0")}});
  const SpectreResult2 tri =
      spectre_of_grid(make_grid_shape(GridShape::Triangle, S("1/8")));
  CHECK(tri.vectors == std::vector<Point2>{{S("0"), S("0")}});
}

TEST_CASE("level-2 carpet lattice already excludes (2/3,0)") {
  const GridSet g = make_grid_shape(GridShape::Sierpinski, S("1/9"), 2);
  const SpectreResult2 r = spectre_of_grid(g);
  CHECK_FALSE(has(r.vectors, "2/3", "0"));
  CHECK(has(r.vectors, "0", "0"));
}

TEST_CASE("make_grid_shape worked examples") {
  CHECK(make_grid_shape(GridShape::Square, S("1/2")).occupancy.size() == 9);
  const GridSet cantor2 = make_grid_shape(GridShape::Cantor, S("1/9"), 2);
  CHECK(cantor2.points1() ==
        std::vector<Scalar>{S("0"), S("2/9"), S("2/3"), S("8/9")});
  const GridSet disk = make_grid_shape(GridShape::Disk, S("1"));
  CHECK(disk.occupancy.size() == 5);
  CHECK_THROWS_AS(make_grid_shape(GridShape::Square, S("2/7")), DomainError);
  CHECK_THROWS_AS(make_grid_shape(GridShape::Cantor, S("1/8"), 2), DomainError);
  CHECK_THROWS_AS(make_grid_shape(GridShape::Sierpinski, S("1/4"), 2), DomainError);
}

TEST_CASE("sierpinski membership follows the digit rule") {
  const GridSet g = make_grid_shape(GridShape::Sierpinski, S("1/27"), 3);
  CHECK(g.occupancy.size() == 512);  // 8^3 corner points
  for (const auto& c : g.occupancy) {
    std::int64_t i = c[0], j = c[1];
    bool allowed = true;
    for (int t = 0; t < 3; ++t) {
      if (i % 3 == 1 && j % 3 == 1) allowed = false;
      i /= 3;
      j /= 3;
    }
    CHECK(allowed);
  }
}

TEST_CASE("terms_in_spectre_report") {
  SUBCASE("passes on visible specs") {
    const Series1D g = Series1D::geometric(S("1"), S("2/3"));
    CHECK(terms_in_spectre_report(g, 10).pass);
    const Series2D s = Series2D::pair_generator(Series1D::geometric(S("1"), S("1/4")),
                                                Series1D::geometric(S("1"), S("1/5")));
    CHECK(terms_in_spectre_report(s, 10).pass);
  }
  SUBCASE("the (1/4, 1/25) vector is excluded at depth 3") {
    const Series2D s = Series2D::pair_generator(Series1D::geometric(S("1"), S("1/4")),
                                                Series1D::geometric(S("1"), S("1/5")));
    const auto points = partial_sums(s, 3, EnumLimits{});
    CHECK_FALSE(spectre_contains(points, Point2{S("1/4"), S("1/25")}));
    const auto vectors = spectre_of_finite_set(points).vectors;
    CHECK_FALSE(has(vectors, "1/4", "1/25"));
  }
}

TEST_CASE("center_of_distances_grid worked examples") {
  const GridSet one = make_grid_shape(GridShape::Cantor, S("1/3"), 1);
  CHECK(center_of_distances_grid(one) == std::vector<Scalar>{S("0"), S("2/3")});
  const GridSet three = make_grid_shape(GridShape::Cantor, S("1/27"), 3);
  const auto c = center_of_distances_grid(three);
  for (const char* d : {"2/3", "2/9", "2/27"})
    CHECK(std::find(c.begin(), c.end(), S(d)) != c.end());
  GridSet solo;
  solo.dims = 1;
  solo.spacing = S("1");
  solo.occupancy = {{0, 0}};
  CHECK(center_of_distances_grid(solo) == std::vector<Scalar>{S("0")});
}

TEST_CASE("grid text round trip") {
  const GridSet g = make_grid_shape(GridShape::Triangle, S("1/2"));
  const GridSet back = GridSet::deserialize(g.serialize());
  CHECK(back.spacing == g.spacing);
  CHECK(back.occupancy == g.occupancy);
}

TEST_CASE("spectre property suites stay green") {
  for (const PropResult& r : run_spectre_properties(60, 5)) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.failures == 0);
  }
}
