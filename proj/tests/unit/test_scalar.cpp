#include <doctest.h>

#include <random>

#include "subsum/scalar.hpp"

using namespace subsum;

namespace {

Scalar rnd_scalar(std::mt19937_64& g, std::uint64_t d) {
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  Rational a(num(g), den(g));
  a.canonicalize();
  Rational b(num(g), den(g));
  b.canonicalize();
  return Scalar(a, b, d);
}

// high-precision decimal oracle (512-bit floats, ~150 decimal digits)
int decimal_sign(const Scalar& s) {
  mpf_class a(s.rational_part(), 512);
  mpf_class b(s.root_coefficient(), 512);
  mpf_class root(s.radicand(), 512);
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  mpf_class v = a + b * root;
  return sgn(v);
}

}  // namespace

TEST_CASE("sign_quadratic on the worked examples") {
  CHECK(sign_quadratic(Scalar(Rational(0), Rational(0), 2)) == 0);
  // a > 0, b < 0: sign of a^2 - d b^2 = sign(1 - 9/8) < 0
  CHECK(sign_quadratic(Scalar(Rational(1), Rational(-3, 4), 2)) == -1);
  // sqrt(2) > 1
  CHECK(sign_quadratic(Scalar(Rational(-1), Rational(1), 2)) == 1);
}

TEST_CASE("sign agrees with a high-precision decimal oracle") {
  std::mt19937_64 g(20240811);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t d = (i % 3 == 0) ? 2 : (i % 3 == 1 ? 3 : 5);
    const Scalar s = rnd_scalar(g, d);
    if (s.is_zero()) continue;
    CHECK(s.sign() == decimal_sign(s));
  }
}

TEST_CASE("trichotomy and antisymmetry") {
  std::mt19937_64 g(7);
  for (int i = 0; i < 2000; ++i) {
    const Scalar s = rnd_scalar(g, 2);
    const int sg = s.sign();
    CHECK((sg == -1 || sg == 0 || sg == 1));
    CHECK((-s).sign() == -sg);
    CHECK((s - s).sign() == 0);
  }
}

TEST_CASE("ring axioms on random quadratic scalars") {
  std::mt19937_64 g(99);
  for (int i = 0; i < 500; ++i) {
    const Scalar a = rnd_scalar(g, 2), b = rnd_scalar(g, 2), c = rnd_scalar(g, 2);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("division inverts multiplication") {
  std::mt19937_64 g(4242);
  for (int i = 0; i < 300; ++i) {
    const Scalar a = rnd_scalar(g, 3);
    Scalar b = rnd_scalar(g, 3);
    if (b.is_zero()) b = Scalar(1, 7);
    CHECK(a * b / b == a);
  }
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DomainError);
}

TEST_CASE("mixed radicands are rejected, rationals mix freely") {
  const Scalar r2 = Scalar::sqrt_of(2);
  const Scalar r3 = Scalar::sqrt_of(3);
  CHECK_THROWS_AS(r2 + r3, ConfigError);
  CHECK(r2 + Scalar(1, 2) == Scalar(Rational(1, 2), Rational(1), 2));
  CHECK(r2 * r2 == Scalar(2));
  CHECK_THROWS_AS(Scalar::sqrt_of(12), ConfigError);  // 12 = 4*3 not square-free
  CHECK_THROWS_AS(Scalar::sqrt_of(0), ConfigError);
}

TEST_CASE("literal parsing round-trips and rejects decimals") {
  for (const char* text : {"0", "-7", "3/4", "-22/7", "1/2+1/3*sqrt(2)",
                           "-1/2-sqrt(5)", "sqrt(3)", "2*sqrt(7)", "1-1/2*sqrt(2)"}) {
    const Scalar s = Scalar::parse(text);
    CHECK(Scalar::parse(s.str()) == s);
  }
  CHECK(Scalar::parse("1/2+1/3*sqrt(2)") ==
        Scalar(Rational(1, 2), Rational(1, 3), 2));
  CHECK(Scalar::parse(" 2/4 ") == Scalar(1, 2));
  CHECK_THROWS_AS(Scalar::parse("0.5"), ConfigError);
  CHECK_THROWS_AS(Scalar::parse("1e-3"), ConfigError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ConfigError);
  CHECK_THROWS_AS(Scalar::parse("sqrt(2)+sqrt(3)"), ConfigError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ConfigError);
  CHECK_THROWS_AS(Scalar::parse(""), ConfigError);
}

TEST_CASE("floor and ceil are exact on quadratic values") {
  CHECK(Scalar::parse("7/2").floor() == 3);
  CHECK(Scalar::parse("-7/2").floor() == -4);
  CHECK(Scalar::parse("sqrt(2)").floor() == 1);
  CHECK(Scalar::parse("-sqrt(2)").floor() == -2);
  CHECK(Scalar::parse("sqrt(2)").ceil() == 2);
  CHECK(Scalar::parse("5-2*sqrt(2)").floor() == 2);  // 2.171...
  // value just below an integer: 99/70 > sqrt(2)
  CHECK((Scalar::parse("99/70") - Scalar::parse("sqrt(2)")).sign() == 1);
}

TEST_CASE("hash is stable under equal values") {
  const Scalar a = Scalar::parse("2/4");
  const Scalar b = Scalar(1, 2);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  // rational scalars built with an explicit radicand normalize to d = 1
  const Scalar c(Rational(1, 2), Rational(0), 7);
  CHECK(c == b);
  CHECK(c.hash() == b.hash());
}
