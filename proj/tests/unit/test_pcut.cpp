#include <doctest.h>

#include <algorithm>

#include "subsum/pcut.hpp"

using namespace subsum;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

PcutParams gn_params() {
  PcutParams p;
  p.coeff_set = {S("0"), S("1"), S("2"), S("9")};
  p.weights = std::make_shared<Series1D>(Series1D::geometric(S("1"), S("1/3")));
  return p;
}

PcutParams binary_params(const char* q) {
  PcutParams p;
  p.coeff_set = {S("0"), S("1")};
  p.weights = std::make_shared<Series1D>(Series1D::geometric(S("1"), S(q)));
  return p;
}

}  // namespace

TEST_CASE("psum_witness worked examples") {
  SUBCASE("empty coefficient list") {
    const PsumWitness w = psum_witness(gn_params(), {});
    CHECK(w.value == S("0"));
    CHECK(w.indices.empty());
  }
  SUBCASE("q = (9, 0, 2) over P = {0,1,2,9}") {
    const PsumWitness w = psum_witness(gn_params(), {S("9"), S("0"), S("2")});
    CHECK(w.value == S("83/27"));
    CHECK(w.indices == std::vector<std::uint64_t>{1, 4, 9, 11});
    // direct summation oracle
    const Series2D spec = build_pcut_sequence(gn_params());
    Scalar xs(0), ys(0);
    for (std::uint64_t i : w.indices) {
      xs += spec.term(i).first;
      ys += spec.term(i).second;
    }
    CHECK(xs == S("83/27"));
    CHECK(ys == S("0"));
  }
  SUBCASE("q = (1) over P = {0,1}, a = 1/2^n") {
    const PsumWitness w = psum_witness(binary_params("1/2"), {S("1")});
    CHECK(w.value == S("1/2"));
    CHECK(w.indices == std::vector<std::uint64_t>{1, 2});
  }
  SUBCASE("coefficient outside P") {
    CHECK_THROWS_AS(psum_witness(binary_params("1/2"), {S("7")}), DomainError);
  }
}

TEST_CASE("check_block_structure worked examples") {
  CHECK(check_block_structure({1, 4}, 4).valid);
  const BlockCheck missing = check_block_structure({1}, 4);
  CHECK_FALSE(missing.valid);
  CHECK(missing.block == 0);
  const BlockCheck orphan = check_block_structure({2, 3}, 4);
  CHECK_FALSE(orphan.valid);
  CHECK(orphan.block == 0);
  CHECK(check_block_structure({}, 4).valid);
  CHECK(check_block_structure({5, 6, 9, 12}, 4).valid);  // blocks 1 and 2
  CHECK_FALSE(check_block_structure({1, 2, 3}, 4).valid);
  CHECK_THROWS_AS(check_block_structure({1}, 1), DomainError);
}

TEST_CASE("every exact zero-y subset is block-valid (exhaustive small scan)") {
  // P = {0,1}, a = 2/3^n, four blocks: 2^8 subsets
  PcutParams p;
  p.coeff_set = {S("0"), S("1")};
  p.weights = std::make_shared<Series1D>(Series1D::geometric(S("2"), S("1/3")));
  const PcutReport r = verify_pcut_cut(p, 4);
  CHECK(r.zero_y_subsets == 16);  // 2 choices per block (empty or leader+follower)
  CHECK(r.all_block_valid);
  CHECK(r.all_sums_are_psums);
  CHECK(r.within_bound);
  CHECK(r.witnesses_in_cut);
  CHECK(r.tail_radius == S("1/81"));
  CHECK(r.pass());
}

TEST_CASE("verify_pcut_cut for P = {0} is trivially exact") {
  PcutParams p;
  p.coeff_set = {S("0")};
  p.weights = std::make_shared<Series1D>(Series1D::geometric(S("1"), S("1/2")));
  CHECK(verify_pcut_cut(p, 4).pass());
}

TEST_CASE("y-scale invariance of the zero cut") {
  PcutParams a = binary_params("1/2");
  PcutParams b = binary_params("1/2");
  b.y_scale = S("-3/7");
  PcutParams c = binary_params("1/2");
  c.y_scale = S("1/6");
  const std::uint64_t depth = 8;  // four blocks
  const IntervalCover cut_a =
      cut_outer(cover2d(build_pcut_sequence(a), depth), Axis::Y, S("0"));
  for (const PcutParams& params : {b, c}) {
    const IntervalCover cut =
        cut_outer(cover2d(build_pcut_sequence(params), depth), Axis::Y, S("0"));
    REQUIRE(cut.size() == cut_a.size());
    for (std::size_t i = 0; i < cut.size(); ++i) {
      CHECK(cut.intervals()[i].lo == cut_a.intervals()[i].lo);
      CHECK(cut.intervals()[i].hi == cut_a.intervals()[i].hi);
    }
  }
}

TEST_CASE("witness x-sums reproduce the coefficient sums symbolically") {
  const PcutParams p = gn_params();
  const std::vector<std::vector<Scalar>> coeff_lists = {
      {S("1")}, {S("2"), S("9")}, {S("9"), S("9"), S("9")}, {S("0"), S("2")}};
  for (const auto& coeffs : coeff_lists) {
    const PsumWitness w = psum_witness(p, coeffs);
    Scalar expect(0);
    for (std::size_t n = 0; n < coeffs.size(); ++n)
      expect += coeffs[n] * p.weights->term(n + 1);
    CHECK(w.value == expect);
    CHECK(check_block_structure(w.indices, p.k()).valid);
  }
}

TEST_CASE("larger base is accepted, smaller is rejected") {
  PcutParams p = binary_params("1/2");
  p.base = 10;
  CHECK(verify_pcut_cut(p, 3).pass());
  p.base = 3;  // k + 2 = 4 required
  CHECK_THROWS_AS(build_pcut_sequence(p), DomainError);
}
