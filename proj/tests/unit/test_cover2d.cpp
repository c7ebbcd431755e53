#include <doctest.h>

#include <algorithm>

#include "subsum/cover2d.hpp"
#include "subsum/render.hpp"

using namespace subsum;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

Series1D geom(const char* c, const char* q) {
  return Series1D::geometric(S(c), S(q));
}

Series2D unit_square() {
  return Series2D::axis_interleave(geom("1", "1/2"), geom("1", "1/2"));
}

Series2D quarter_fifth() {
  return Series2D::pair_generator(geom("1", "1/4"), geom("1", "1/5"));
}

}  // namespace

TEST_CASE("cover2d worked examples") {
  SUBCASE("depth 0 is the tail box") {
    const BoxCover c = cover2d(quarter_fifth(), 0);
    REQUIRE(c.size() == 1);
    CHECK(c.boxes()[0].xlo == S("0"));
    CHECK(c.boxes()[0].xhi == S("1/3"));
    CHECK(c.boxes()[0].ylo == S("0"));
    CHECK(c.boxes()[0].yhi == S("1/4"));
  }
  SUBCASE("unit square at depth 2 covers [0,1]^2") {
    const BoxCover c = cover2d(unit_square(), 2);
    const IntervalCover px = project_axis(c, Axis::X);
    const IntervalCover py = project_axis(c, Axis::Y);
    REQUIRE(px.size() == 1);
    CHECK(px.intervals()[0].lo == S("0"));
    CHECK(px.intervals()[0].hi == S("1"));
    REQUIRE(py.size() == 1);
    CHECK(py.intervals()[0].lo == S("0"));
    CHECK(py.intervals()[0].hi == S("1"));
  }
  SUBCASE("pair generator (1/4^n, 1/5^n) at depth 1: two disjoint boxes") {
    const BoxCover c = cover2d(quarter_fifth(), 1);
    REQUIRE(c.size() == 2);
    CHECK(c.boxes()[0].xlo == S("0"));
    CHECK(c.boxes()[0].xhi == S("1/12"));
    CHECK(c.boxes()[0].ylo == S("0"));
    CHECK(c.boxes()[0].yhi == S("1/20"));
    CHECK(c.boxes()[1].xlo == S("1/4"));
    CHECK(c.boxes()[1].xhi == S("1/3"));
    CHECK(c.boxes()[1].ylo == S("1/5"));
    CHECK(c.boxes()[1].yhi == S("1/4"));
  }
}

TEST_CASE("projection equals the coordinate cover for factored specs") {
  // depth 2m of the interleave vs depth m of the factors, exactly
  const IntervalCover direct = cover1d(geom("1", "1/2"), 1);
  const IntervalCover projected = project_axis(cover2d(unit_square(), 2), Axis::X);
  REQUIRE(direct.size() == projected.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(direct.intervals()[i].lo == projected.intervals()[i].lo);
    CHECK(direct.intervals()[i].hi == projected.intervals()[i].hi);
  }
  const IntervalCover py = project_axis(cover2d(quarter_fifth(), 1), Axis::Y);
  REQUIRE(py.size() == 2);
  CHECK(py.intervals()[0].lo == S("0"));
  CHECK(py.intervals()[0].hi == S("1/20"));
  CHECK(py.intervals()[1].lo == S("1/5"));
  CHECK(py.intervals()[1].hi == S("1/4"));
}

TEST_CASE("partial sums of an interleave factor exactly") {
  // the 2D depth-2m sums are the cartesian product of the 1D depth-m sums
  const auto sums2 = enumerate_points(unit_square(), 6);
  const auto sx = partial_sums(geom("1", "1/2"), 3, EnumLimits{});
  REQUIRE(sums2.size() == sx.size() * sx.size());
  for (const Scalar& a : sx)
    for (const Scalar& b : sx)
      CHECK(std::binary_search(sums2.begin(), sums2.end(), Point2{a, b},
                               [](const Point2& l, const Point2& r) {
                                 if (l.first != r.first) return l.first < r.first;
                                 return l.second < r.second;
                               }));
}

TEST_CASE("cut_outer worked examples") {
  SUBCASE("cut at x = 1/4 of the depth-2 (1/4^n,1/5^n) cover") {
    const IntervalCover cut = cut_outer(cover2d(quarter_fifth(), 2), Axis::X, S("1/4"));
    REQUIRE(cut.size() == 1);
    CHECK(cut.contains(S("1/5")));
    CHECK_FALSE(cut.contains(S("1/25")));
  }
  SUBCASE("cut outside the hull is empty") {
    const IntervalCover cut = cut_outer(cover2d(quarter_fifth(), 2), Axis::X, S("7"));
    CHECK(cut.empty());
  }
  SUBCASE("boundary touching counts") {
    const BoxCover c = cover2d(quarter_fifth(), 1);
    const IntervalCover cut = cut_outer(c, Axis::Y, S("1/4"));  // top edge of a box
    CHECK(!cut.empty());
  }
}

TEST_CASE("enumerate_points worked examples") {
  SUBCASE("diagonal pairs") {
    const Series2D diag =
        Series2D::pair_generator(geom("1", "1/2"), geom("1", "1/2"));
    const auto pts = enumerate_points(diag, 2);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == Point2{S("0"), S("0")});
    CHECK(pts[1] == Point2{S("1/4"), S("1/4")});
    CHECK(pts[2] == Point2{S("1/2"), S("1/2")});
    CHECK(pts[3] == Point2{S("3/4"), S("3/4")});
  }
  SUBCASE("pcut block-0 prefix") {
    PcutParams p;
    p.coeff_set = {S("0"), S("1")};
    p.weights = std::make_shared<Series1D>(geom("1", "1/2"));
    const auto pts = enumerate_points(Series2D::pcut(p), 2);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == Point2{S("0"), S("0")});
    CHECK(pts[1] == Point2{S("0"), S("1")});
    CHECK(pts[2] == Point2{S("1/2"), S("-1")});
    CHECK(pts[3] == Point2{S("1/2"), S("0")});
  }
  SUBCASE("depth 0") {
    const auto pts = enumerate_points(unit_square(), 0);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == Point2{S("0"), S("0")});
  }
}

TEST_CASE("check_symmetry about the half partial total") {
  const Series2D diag = Series2D::pair_generator(geom("1", "1/2"), geom("1", "1/2"));
  const auto pts = enumerate_points(diag, 2);
  CHECK(check_symmetry(pts, {S("3/8"), S("3/8")}));
  CHECK_FALSE(check_symmetry(pts, {S("0"), S("0")}));
}

TEST_CASE("render determinism and outward rounding") {
  RenderOptions opts;
  opts.width = 200;
  opts.height = 200;
  const BoxCover cover = cover2d(unit_square(), 4);
  const std::string a = render_cover(cover, opts);
  const std::string b = render_cover(cover, opts);
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);

  opts.format = ImageFormat::Pgm;
  const std::string pgm = render_cover(cover, opts);
  CHECK(pgm.substr(0, 3) == "P5\n");
  CHECK(pgm.size() > 200 * 200);

  // empty cover renders a valid all-background image (no filled pixel)
  const std::string blank = render_cover(BoxCover{}, opts);
  CHECK(blank.size() > 200 * 200);
  CHECK(blank.find('\0') == std::string::npos);

  RenderOptions bad;
  bad.width = 0;
  CHECK_THROWS_AS(render_cover(cover, bad), DomainError);
}

TEST_CASE("box serialization format") {
  const BoxCover c = cover2d(quarter_fifth(), 1);
  CHECK(c.serialize() == "0 1/12 0 1/20\n1/4 1/3 1/5 1/4\n");
}
