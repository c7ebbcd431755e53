#include <doctest.h>

#include "subsum/props.hpp"
#include "subsum/series.hpp"

using namespace subsum;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

Series1D geom(const char* c, const char* q) {
  return Series1D::geometric(S(c), S(q));
}

Series1D gn_sequence() { return Series1D::multigeometric({S("3"), S("2")}, S("1/4")); }

}  // namespace

TEST_CASE("term_at worked examples") {
  CHECK(geom("1", "1/2").term(3) == S("1/8"));
  // (3,2;1/4): 3/4, 1/2, 3/16, 2/16, ...
  CHECK(gn_sequence().term(1) == S("3/4"));
  CHECK(gn_sequence().term(2) == S("1/2"));
  CHECK(gn_sequence().term(3) == S("3/16"));
  CHECK(gn_sequence().term(4) == S("1/8"));
  // finite lists yield zero beyond their support
  CHECK(Series1D::finite_list({S("1"), S("-1")}).term(5) == S("0"));
}

TEST_CASE("tail bounds in closed form") {
  SUBCASE("geometric full tail") {
    const TailBounds t = geom("1", "1/2").tail_bounds(0);
    CHECK(t.lo == S("0"));
    CHECK(t.hi == S("1"));
  }
  SUBCASE("multigeometric mid-block, against a 60-term sum plus remainder") {
    const Series1D s = gn_sequence();
    const TailBounds t = s.tail_bounds(2);
    CHECK(t.lo == S("0"));
    CHECK(t.hi == S("5/12"));
    // oracle: sixty explicit terms plus the closed geometric remainder of the
    // remaining full blocks
    Scalar sum(0);
    for (int n = 3; n <= 62; ++n) sum += s.term(n);
    // terms 63,64 close the block with factor (1/4)^32; the rest is the full
    // block sum scaled by (1/4)^32
    Scalar block_rest = (S("3") + S("2")) * S("1/4") / (S("1") - S("1/4"));
    Scalar q_pow(1);
    for (int i = 0; i < 32; ++i) q_pow *= S("1/4");
    sum += s.term(63) + s.term(64) + block_rest * q_pow;
    CHECK(sum == t.hi);
  }
  SUBCASE("finite list with signed terms") {
    const Series1D s = Series1D::finite_list({S("1"), S("-1")});
    const TailBounds t = s.tail_bounds(1);
    CHECK(t.lo == S("-1"));
    CHECK(t.hi == S("0"));
  }
  SUBCASE("abs and scaled wrappers") {
    const Series1D s = Series1D::scaled(S("-2"), geom("1", "1/2"));
    const TailBounds t = s.tail_bounds(0);
    CHECK(t.lo == S("-2"));
    CHECK(t.hi == S("0"));
    const TailBounds ta = Series1D::abs(s).tail_bounds(0);
    CHECK(ta.lo == S("0"));
    CHECK(ta.hi == S("2"));
  }
}

TEST_CASE("classify_convergence worked examples") {
  CHECK(classify_convergence(geom("1", "1/2")).kind ==
        ConvergenceClass::Kind::SlowEverywhere);
  const ConvergenceClass fast = classify_convergence(geom("1", "1/4"));
  CHECK(fast.kind == ConvergenceClass::Kind::FastFromIndex);
  CHECK(fast.fast_from == 1);
  const ConvergenceClass mixed = classify_convergence(gn_sequence());
  CHECK(mixed.kind == ConvergenceClass::Kind::Mixed);
  REQUIRE(mixed.verdicts.size() >= 2);
  CHECK(mixed.verdicts[0] == std::pair<std::uint64_t, bool>{1, true});   // 3/4 <= 11/12
  CHECK(mixed.verdicts[1] == std::pair<std::uint64_t, bool>{2, false});  // 1/2 > 5/12
}

TEST_CASE("slow and fast tail indices") {
  CHECK(slow_tail_from(geom("1", "1/2")) == 0);
  CHECK(!slow_tail_from(geom("1", "1/4")));
  CHECK(fast_tail_from(geom("1", "1/4")) == 1);
  CHECK(!fast_tail_from(gn_sequence()));
  // fast tail behind one slow prefix term: 2, 1/4, 1/16, ...
  const Series1D pref = Series1D::prefix({S("2")}, geom("1", "1/4"));
  CHECK(fast_tail_from(pref) == 2);
  CHECK(classify_convergence(pref).kind == ConvergenceClass::Kind::FastFromIndex);
}

TEST_CASE("monotonicity preconditions") {
  // signed terms: mixed with a diagnostic rather than a verdict
  CHECK(classify_convergence(Series1D::scaled(S("-1"), geom("1", "1/2"))).kind ==
        ConvergenceClass::Kind::Mixed);
  // increasing block: certifiably not nonincreasing
  CHECK(classify_convergence(Series1D::multigeometric({S("1"), S("2")}, S("1/2"))).kind ==
        ConvergenceClass::Kind::Mixed);
  // finite support
  CHECK(classify_convergence(Series1D::finite_list({S("1")})).kind ==
        ConvergenceClass::Kind::Mixed);
}

TEST_CASE("axis interleave emits the exact pattern") {
  const Series2D s = Series2D::axis_interleave(geom("1", "1/2"), geom("1", "1/2"));
  CHECK(s.term(1) == Point2{S("1/2"), S("0")});
  CHECK(s.term(2) == Point2{S("0"), S("1/2")});
  CHECK(s.term(3) == Point2{S("1/4"), S("0")});
  CHECK(s.term(4) == Point2{S("0"), S("1/4")});
}

TEST_CASE("diagonal enumeration order") {
  // parts A, B, C; diagonal order: A1 | B1 A2 | C1 B2 A3 | C2 B3 A4 ...
  const Series2D a = Series2D::pair_list({{S("1"), S("0")}, {S("2"), S("0")},
                                          {S("3"), S("0")}});
  const Series2D b = Series2D::pair_list({{S("0"), S("1")}, {S("0"), S("2")}});
  const Series2D c = Series2D::pair_list({{S("-1"), S("-1")}});
  const Series2D d = Series2D::diagonal_sum({a, b, c});
  CHECK(d.term(1) == Point2{S("1"), S("0")});   // A1
  CHECK(d.term(2) == Point2{S("0"), S("1")});   // B1
  CHECK(d.term(3) == Point2{S("2"), S("0")});   // A2
  CHECK(d.term(4) == Point2{S("-1"), S("-1")}); // C1
  CHECK(d.term(5) == Point2{S("0"), S("2")});   // B2
  CHECK(d.term(6) == Point2{S("3"), S("0")});   // A3
}

TEST_CASE("pcut terms follow the block construction") {
  SUBCASE("P = {0,1,2,9}, a = 3^-n") {
    PcutParams p;
    p.coeff_set = {S("0"), S("1"), S("2"), S("9")};
    p.weights = std::make_shared<Series1D>(geom("1", "1/3"));
    const Series2D s = Series2D::pcut(p);
    CHECK(s.term(1) == Point2{S("0"), S("1")});
    CHECK(s.term(2) == Point2{S("1/3"), S("-1")});
    CHECK(s.term(3) == Point2{S("2/3"), S("-1")});
    CHECK(s.term(4) == Point2{S("3"), S("-1")});
    CHECK(s.term(5) == Point2{S("0"), S("1/6")});  // base k+2 = 6
  }
  SUBCASE("P = {0,1}, a = 1/2^n: block 1") {
    PcutParams p;
    p.coeff_set = {S("0"), S("1")};
    p.weights = std::make_shared<Series1D>(geom("1", "1/2"));
    const Series2D s = Series2D::pcut(p);
    CHECK(s.term(3) == Point2{S("0"), S("1/4")});
    CHECK(s.term(4) == Point2{S("1/4"), S("-1/4")});
  }
  SUBCASE("P = {0} collapses to the zero sequence") {
    PcutParams p;
    p.coeff_set = {S("0")};
    p.weights = std::make_shared<Series1D>(geom("1", "1/2"));
    const Series2D s = Series2D::pcut(p);
    CHECK(s.term(1) == Point2{S("0"), S("0")});
    CHECK(s.term(17) == Point2{S("0"), S("0")});
  }
  SUBCASE("parameter validation") {
    PcutParams bad;
    bad.coeff_set = {S("1"), S("0")};  // unsorted
    bad.weights = std::make_shared<Series1D>(geom("1", "1/2"));
    CHECK_THROWS_AS(Series2D::pcut(bad), DomainError);
    PcutParams nozero;
    nozero.coeff_set = {S("1"), S("2")};
    nozero.weights = bad.weights;
    CHECK_THROWS_AS(Series2D::pcut(nozero), DomainError);
    PcutParams finite_weights;
    finite_weights.coeff_set = {S("0"), S("1")};
    finite_weights.weights =
        std::make_shared<Series1D>(Series1D::finite_list({S("1")}));
    CHECK_THROWS_AS(Series2D::pcut(finite_weights), DomainError);
  }
}

TEST_CASE("series property suites stay green") {
  for (const PropResult& r : run_series_properties(120, 17)) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.failures == 0);
  }
}
