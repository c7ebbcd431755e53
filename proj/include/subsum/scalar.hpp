#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "subsum/errors.hpp"

namespace subsum {

using Rational = mpq_class;

/// Exact element of Q(sqrt(d)) for a square-free natural d, stored as
/// a + b*sqrt(d) with rationals in lowest terms. d == 1 encodes a plain
/// rational and forces b == 0, so equality and hashing are value-based.
///
/// A computation works over a single radicand: arithmetic between two
/// irrational scalars with different d throws ConfigError ("mixed
/// radicands"). A rational scalar combines with any radicand.
class Scalar {
public:
  Scalar() : d_(1) {}
  Scalar(long n) : a_(n), d_(1) {}
  Scalar(long num, unsigned long den) : a_(num, den), d_(1) { a_.canonicalize(); }
  explicit Scalar(Rational a) : a_(std::move(a)), d_(1) {}

  /// a + b*sqrt(d). Validates that d is square-free (d <= 10^12).
  Scalar(Rational a, Rational b, std::uint64_t d);

  static Scalar sqrt_of(std::uint64_t d) { return Scalar(Rational(0), Rational(1), d); }

  /// Exact literal parser: "p/q" or "p/q+r/s*sqrt(d)"; also accepts bare
  /// "sqrt(d)" terms and a leading sign. Decimal floats are rejected.
  static Scalar parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& root_coefficient() const { return b_; }
  std::uint64_t radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && (l.b_ == 0 || l.d_ == r.d_);
  }
  friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }
  friend bool operator<(const Scalar& l, const Scalar& r) { return (l - r).sign() < 0; }
  friend bool operator>(const Scalar& l, const Scalar& r) { return r < l; }
  friend bool operator<=(const Scalar& l, const Scalar& r) { return !(r < l); }
  friend bool operator>=(const Scalar& l, const Scalar& r) { return !(l < r); }

  /// Exact floor/ceil of the real value.
  mpz_class floor() const;
  mpz_class ceil() const;

  /// Non-authoritative double approximation (rendering hints, report text).
  double approx() const;

  /// Canonical literal; parse(str()) round-trips exactly.
  std::string str() const;

  std::size_t hash() const;

private:
  void canonicalize();

  Rational a_;
  Rational b_;
  std::uint64_t d_;
};

/// Sign of a + b*sqrt(d), decided exactly by case analysis on the signs of
/// a, b and a comparison of a^2 with d*b^2.
inline int sign_quadratic(const Scalar& s) { return s.sign(); }

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Planar point with exact coordinates.
using Point2 = std::pair<Scalar, Scalar>;

struct Point2Hash {
  std::size_t operator()(const Point2& p) const {
    std::size_t h = p.first.hash();
    return h ^ (p.second.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  }
};

inline Point2 operator+(const Point2& l, const Point2& r) {
  return {l.first + r.first, l.second + r.second};
}
inline Point2 operator-(const Point2& l, const Point2& r) {
  return {l.first - r.first, l.second - r.second};
}
inline Point2 operator-(const Point2& p) { return {-p.first, -p.second}; }

}  // namespace subsum
