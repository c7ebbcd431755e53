#include "subsum/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace subsum {

namespace {

bool is_square_free(std::uint64_t d) {
  if (d == 0) return false;
  if (d > 1000000000000ull) return false;  // desk-scale guard
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
    while (d % p == 0) d /= p;
  }
  return true;
}

std::size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = 1469598103934665603ull;
  const auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(mpz_sgn(p)) + 2);
  const std::size_t n = mpz_size(p);
  for (std::size_t i = 0; i < n; ++i) mix(mpz_getlimbn(p, i));
  return h;
}

std::size_t hash_mpq(const Rational& q) {
  std::size_t h = hash_mpz(q.get_num());
  return h ^ (hash_mpz(q.get_den()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

// Common radicand for a binary operation; rational operands adopt the other
// side's field.
std::uint64_t join_radicand(const Scalar& l, const Scalar& r) {
  if (l.root_coefficient() == 0) return r.radicand();
  if (r.root_coefficient() == 0) return l.radicand();
  if (l.radicand() != r.radicand())
    throw ConfigError("mixed radicands: sqrt(" + std::to_string(l.radicand()) +
                      ") vs sqrt(" + std::to_string(r.radicand()) + ")");
  return l.radicand();
}

}  // namespace

Scalar::Scalar(Rational a, Rational b, std::uint64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (!is_square_free(d_))
    throw ConfigError("radicand must be a square-free natural number, got " +
                      std::to_string(d));
  canonicalize();
}

void Scalar::canonicalize() {
  if (d_ == 1 && b_ != 0) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) d_ = 1;
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against d*b^2.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * static_cast<unsigned long>(d_);
  const int c = cmp(lhs, rhs);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = join_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = join_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const std::uint64_t d = join_radicand(*this, o);
  Rational a = a_ * o.a_ + b_ * o.b_ * static_cast<unsigned long>(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero scalar");
  const std::uint64_t d = join_radicand(*this, o);
  // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - d*b^2)
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * static_cast<unsigned long>(d);
  Scalar conj;
  conj.a_ = o.a_ / norm;
  conj.b_ = -o.b_ / norm;
  conj.d_ = d;
  d_ = d;
  return *this *= conj;
}

mpz_class Scalar::floor() const {
  mpz_class q;
  if (b_ == 0) {
    mpz_fdiv_q(q.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
    return q;
  }
  // Bracket sqrt(d) between lo/2^k and (lo+1)/2^k and tighten until the two
  // rational bounds on a + b*sqrt(d) share a floor. sqrt(d) is irrational
  // here, so this terminates.
  for (unsigned k = 16;; k *= 2) {
    mpz_class scaled = mpz_class(static_cast<unsigned long>(d_));
    scaled <<= 2 * k;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpz_class pow2 = 1;
    pow2 <<= k;
    Rational lo(root, pow2);
    Rational hi(mpz_class(root + 1), pow2);
    lo.canonicalize();
    hi.canonicalize();
    Rational vlo = a_ + b_ * (sgn(b_) > 0 ? lo : hi);
    Rational vhi = a_ + b_ * (sgn(b_) > 0 ? hi : lo);
    mpz_class flo, fhi;
    mpz_fdiv_q(flo.get_mpz_t(), vlo.get_num_mpz_t(), vlo.get_den_mpz_t());
    mpz_fdiv_q(fhi.get_mpz_t(), vhi.get_num_mpz_t(), vhi.get_den_mpz_t());
    if (flo == fhi) return flo;
    if (k > 4096) throw DomainError("floor of quadratic scalar did not converge");
  }
}

mpz_class Scalar::ceil() const {
  return -((-*this).floor());
}

double Scalar::approx() const {
  double v = a_.get_d();
  if (b_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::string Scalar::str() const {
  if (b_ == 0) return a_.get_str();
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  Rational babs = ::abs(b_);
  std::string coef = babs == 1 ? root : babs.get_str() + "*" + root;
  if (a_ == 0) return (sgn(b_) < 0 ? "-" : "") + coef;
  return a_.get_str() + (sgn(b_) < 0 ? "-" : "+") + coef;
}

std::size_t Scalar::hash() const {
  std::size_t h = hash_mpq(a_);
  h ^= hash_mpq(b_) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= d_ + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (s.substr(i, w.size()) == w) {
      i += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ConfigError("bad scalar literal \"" + std::string(s) + "\": " + why);
  }
};

std::string parse_digits(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected digits");
  if (c.i < c.s.size() && (c.s[c.i] == '.' || c.s[c.i] == 'e' || c.s[c.i] == 'E'))
    c.fail("decimal floats are not accepted");
  return std::string(c.s.substr(start, c.i - start));
}

Rational parse_rational(Cursor& c, bool neg) {
  std::string num = parse_digits(c);
  std::string den = "1";
  if (c.eat('/')) den = parse_digits(c);
  Rational r(num + "/" + den);
  if (r.get_den() == 0) c.fail("zero denominator");
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

std::uint64_t parse_radicand(Cursor& c) {
  std::string digits = parse_digits(c);
  if (!c.eat(')')) c.fail("expected ')' after sqrt radicand");
  mpz_class z(digits);
  if (!z.fits_ulong_p()) c.fail("radicand too large");
  return z.get_ui();
}

// term := rational [ '*' sqrt '(' nat ')' ] | sqrt '(' nat ')'
void parse_term(Cursor& c, bool neg, Rational& a, Rational& b, std::uint64_t& d) {
  const auto set_root = [&](const Rational& coef, std::uint64_t rad) {
    if (rad == 1) {
      a += coef;
      return;
    }
    if (d != 1 && d != rad) c.fail("mixed radicands in one literal");
    d = rad;
    b += coef;
  };
  if (c.eat_word("sqrt(")) {
    set_root(neg ? Rational(-1) : Rational(1), parse_radicand(c));
    return;
  }
  Rational r = parse_rational(c, neg);
  if (c.eat('*')) {
    if (!c.eat_word("sqrt(")) c.fail("expected sqrt( after '*'");
    set_root(r, parse_radicand(c));
  } else {
    a += r;
  }
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  Cursor c{text};
  Rational a(0), b(0);
  std::uint64_t d = 1;
  bool neg = c.eat('-');
  if (!neg) c.eat('+');
  parse_term(c, neg, a, b, d);
  while (!c.eof()) {
    if (c.eat('+'))
      parse_term(c, false, a, b, d);
    else if (c.eat('-'))
      parse_term(c, true, a, b, d);
    else
      c.fail("trailing characters");
  }
  return b == 0 ? Scalar(a) : Scalar(a, b, d);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace subsum
