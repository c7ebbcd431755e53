#include <doctest.h>

#include <algorithm>

#include "subsum/cover1d.hpp"
#include "subsum/props.hpp"

using namespace subsum;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

Series1D geom(const char* c, const char* q) {
  return Series1D::geometric(S(c), S(q));
}

Series1D gn_sequence() { return Series1D::multigeometric({S("3"), S("2")}, S("1/4")); }

// brute subset-sum oracle, independent of the enumeration module
std::vector<Scalar> brute_sums(const Series1D& s, unsigned depth) {
  std::vector<Scalar> out;
  for (std::uint64_t mask = 0; mask < (1ull << depth); ++mask) {
    Scalar sum(0);
    for (unsigned i = 0; i < depth; ++i)
      if (mask & (1ull << i)) sum += s.term(i + 1);
    out.push_back(sum);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_cover(const IntervalCover& cover, std::initializer_list<const char*> lohi) {
  REQUIRE(cover.size() * 2 == lohi.size());
  auto it = lohi.begin();
  for (const Interval& iv : cover.intervals()) {
    CHECK(iv.lo == S(*it++));
    CHECK(iv.hi == S(*it++));
  }
}

}  // namespace

TEST_CASE("cover1d worked examples") {
  check_cover(cover1d(geom("2", "1/3"), 1), {"0", "1/3", "2/3", "1"});
  check_cover(cover1d(geom("1", "1/2"), 3), {"0", "1"});
  check_cover(cover1d(gn_sequence(), 2),
              {"0", "5/12", "1/2", "7/6", "5/4", "5/3"});
}

TEST_CASE("cover soundness against the brute oracle") {
  for (const Series1D& s : {geom("2", "1/3"), geom("1", "1/2"), gn_sequence()}) {
    const IntervalCover cover = cover1d(s, 4);
    for (const Scalar& v : brute_sums(s, 8)) CHECK(cover.contains(v));
  }
}

TEST_CASE("gaps worked examples") {
  const auto g1 = gaps(cover1d(geom("2", "1/3"), 1));
  REQUIRE(g1.size() == 1);
  CHECK(g1[0].lo == S("1/3"));
  CHECK(g1[0].hi == S("2/3"));
  CHECK(gaps(cover1d(geom("1", "1/2"), 3)).empty());
  const auto g2 = gaps(cover1d(gn_sequence(), 2));
  REQUIRE(g2.size() == 2);
  CHECK(g2[0].lo == S("5/12"));
  CHECK(g2[0].hi == S("1/2"));
  CHECK(g2[1].lo == S("7/6"));
  CHECK(g2[1].hi == S("5/4"));
  CHECK_THROWS_AS(gaps(IntervalCover{}), DomainError);
}

TEST_CASE("exact_set1d on the three regimes") {
  const ExactSet1D interval = exact_set1d(geom("1", "1/2"));
  REQUIRE(interval.kind == ExactSet1D::Kind::Intervals);
  REQUIRE(interval.intervals.size() == 1);
  CHECK(interval.intervals[0].lo == S("0"));
  CHECK(interval.intervals[0].hi == S("1"));

  const ExactSet1D cantor = exact_set1d(geom("1", "1/4"));
  REQUIRE(cantor.kind == ExactSet1D::Kind::CantorCode);
  CHECK(cantor.cantor.fast_from == 1);
  CHECK(cantor.cantor.disjoint_checked_depth == 12);

  const ExactSet1D finite = exact_set1d(Series1D::finite_list({S("1"), S("2")}));
  REQUIRE(finite.kind == ExactSet1D::Kind::FinitePoints);
  CHECK(finite.points == std::vector<Scalar>{S("0"), S("1"), S("2"), S("3")});

  CHECK(exact_set1d(gn_sequence()).kind == ExactSet1D::Kind::NotCertified);
}

TEST_CASE("classify_gn verdicts and certificates") {
  SUBCASE("ratio certificate for (1,1,1,1;1/6)") {
    const Series1D s =
        Series1D::multigeometric({S("1"), S("1"), S("1"), S("1")}, S("1/6"));
    const GNClassification gn = classify_gn(s);
    CHECK(gn.verdict == GNClassification::Verdict::Cantor);
    REQUIRE(gn.certificate.kind == Certificate::Kind::MultigeometricRatio);
    CHECK(gn.certificate.sigma ==
          std::vector<Scalar>{S("0"), S("1"), S("2"), S("3"), S("4")});
    CHECK(gn.certificate.validate(s));
  }
  SUBCASE("slow tail for q = 1/2") {
    const GNClassification gn = classify_gn(geom("1", "1/2"));
    CHECK(gn.verdict == GNClassification::Verdict::FiniteUnionIntervals);
    REQUIRE(gn.certificate.kind == Certificate::Kind::SlowTail);
    CHECK(gn.certificate.from == 0);
    CHECK(gn.certificate.validate(geom("1", "1/2")));
  }
  SUBCASE("fast tail for q = 1/4") {
    const GNClassification gn = classify_gn(geom("1", "1/4"));
    CHECK(gn.verdict == GNClassification::Verdict::Cantor);
    REQUIRE(gn.certificate.kind == Certificate::Kind::FastTail);
    CHECK(gn.certificate.validate(geom("1", "1/4")));
  }
  SUBCASE("registry entry") {
    const GNClassification gn = classify_gn(gn_sequence());
    CHECK(gn.verdict == GNClassification::Verdict::KnownCantorval);
    CHECK(gn.cantorval_name == "Guthrie-Nymann");
    CHECK(gn.certificate.validate(gn_sequence()));
  }
  SUBCASE("finite") {
    const GNClassification gn = classify_gn(Series1D::finite_list({S("1"), S("2")}));
    CHECK(gn.verdict == GNClassification::Verdict::Finite);
    CHECK(gn.certificate.validate(Series1D::finite_list({S("1"), S("2")})));
  }
  SUBCASE("signed specs classify through the absolute series") {
    const Series1D y =
        Series1D::multigeometric({S("1"), S("-1"), S("-1"), S("-1")}, S("1/6"));
    const GNClassification gn = classify_gn(y);
    CHECK(gn.verdict == GNClassification::Verdict::Cantor);
    CHECK(gn.certificate.kind == Certificate::Kind::MultigeometricRatio);
  }
}

TEST_CASE("tampered certificates fail validation") {
  GNClassification gn = classify_gn(geom("1", "1/4"));
  Certificate cert = gn.certificate;
  CHECK(cert.validate(geom("1", "1/4")));
  CHECK_FALSE(cert.validate(geom("1", "1/2")));  // wrong spec
  Certificate ratio;
  ratio.kind = Certificate::Kind::MultigeometricRatio;
  ratio.sigma = {S("0"), S("1")};
  ratio.ratio = S("1/6");
  CHECK_FALSE(ratio.validate(geom("1", "1/6")));  // not a multigeometric spec
  Certificate registry;
  registry.kind = Certificate::Kind::Registry;
  registry.registry_name = "Guthrie-Nymann";
  CHECK_FALSE(registry.validate(geom("1", "1/4")));
}

TEST_CASE("psum_cover worked examples") {
  check_cover(psum_cover({S("0"), S("1")}, geom("2", "1/3"), 1),
              {"0", "1/3", "2/3", "1"});
  check_cover(psum_cover({S("0"), S("1"), S("2")}, geom("2", "1/3"), 1), {"0", "2"});
  check_cover(psum_cover({S("0"), S("1"), S("2"), S("9")}, geom("1", "1/3"), 1),
              {"0", "13/6", "3", "9/2"});
  CHECK_THROWS_AS(psum_cover({S("1")}, geom("1", "1/2"), 2), DomainError);
}

TEST_CASE("representation collisions") {
  SUBCASE("fast geometric has no exact collisions at depth 8") {
    const CollisionReport r = representation_collisions(geom("1", "1/4"), 8);
    CHECK(r.exact.empty());
    CHECK(r.potential.empty());
    CHECK(r.tail_matches.empty());
    // brute oracle over all 2^8 subset pairs
    std::vector<Scalar> sums = brute_sums(geom("1", "1/4"), 8);
    CHECK(sums.size() == 256);  // all distinct
  }
  SUBCASE("q = 1/2 potential collision between {1} and {2,3}") {
    const CollisionReport r = representation_collisions(geom("1", "1/2"), 3);
    const std::uint64_t m1 = 0b001, m23 = 0b110;
    const auto pair = std::make_pair(std::min(m1, m23), std::max(m1, m23));
    CHECK(std::find(r.potential.begin(), r.potential.end(), pair) != r.potential.end());
    // x_n = r_n exactly for every n in the dyadic case
    CHECK(r.tail_matches == std::vector<std::uint64_t>{1, 2, 3});
  }
  SUBCASE("terms (1/sqrt(2))^n: no tail equality, r_n = (1+sqrt(2)) x_n") {
    const Series1D s = Series1D::geometric(S("1"), S("1/2*sqrt(2)"));
    const CollisionReport r = representation_collisions(s, 10);
    CHECK(r.tail_matches.empty());
    for (int n = 1; n <= 10; ++n)
      CHECK(s.tail_bounds(n).total() == (S("1") + S("sqrt(2)")) * s.term(n));
  }
}

TEST_CASE("center_of_distances worked examples") {
  CHECK(center_of_distances({S("0")}) == std::vector<Scalar>{S("0")});
  CHECK(center_of_distances({S("0"), S("1"), S("2")}) ==
        std::vector<Scalar>{S("0"), S("1")});
  const auto c = center_of_distances({S("0"), S("2/9"), S("2/3"), S("8/9")});
  CHECK(std::find(c.begin(), c.end(), S("2/3")) != c.end());
  CHECK(std::find(c.begin(), c.end(), S("2/9")) != c.end());
  CHECK_THROWS_AS(center_of_distances({}), DomainError);
}

TEST_CASE("one-sided Hausdorff distance on hand-built covers") {
  const IntervalCover a({{S("0"), S("1")}, {S("2"), S("3")}}, 0, "");
  const IntervalCover b({{S("0"), S("3")}}, 0, "");
  CHECK(one_sided_hausdorff(a, b) == S("0"));
  CHECK(one_sided_hausdorff(b, a) == S("1/2"));  // midpoint of the (1,2) gap
  const IntervalCover c({{S("10"), S("11")}}, 0, "");
  CHECK(one_sided_hausdorff(c, a) == S("8"));  // right endpoint to 3
}

TEST_CASE("serialization is canonical and parses back") {
  const IntervalCover cover = cover1d(gn_sequence(), 2);
  const std::string text = cover.serialize();
  CHECK(text == "0 5/12\n1/2 7/6\n5/4 5/3\n");
  const IntervalCover back = IntervalCover::deserialize(text);
  REQUIRE(back.size() == cover.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back.intervals()[i].lo == cover.intervals()[i].lo);
    CHECK(back.intervals()[i].hi == cover.intervals()[i].hi);
  }
}

TEST_CASE("budget cap raises") {
  EnumLimits tiny;
  tiny.max_states = 16;
  CHECK_THROWS_AS(cover1d(geom("1", "1/3"), 10, tiny), BudgetExceeded);
}

TEST_CASE("cover property suites stay green") {
  for (const PropResult& r : run_cover_properties(100, 23)) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.failures == 0);
  }
}
