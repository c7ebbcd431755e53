#include "subsum/series.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace subsum {

namespace {

Scalar pow_scalar(const Scalar& base, std::uint64_t e) {
  Scalar r(1);
  Scalar b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational pow_uint(std::uint64_t base, std::uint64_t e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), base, e);
  return Rational(z);
}

Scalar pos_part(const Scalar& s) { return s.sign() > 0 ? s : Scalar(0); }
Scalar neg_part(const Scalar& s) { return s.sign() < 0 ? s : Scalar(0); }

TailBounds parts_of_terms(const std::vector<Scalar>& terms, std::size_t from) {
  TailBounds t;
  for (std::size_t i = from; i < terms.size(); ++i) {
    t.lo += neg_part(terms[i]);
    t.hi += pos_part(terms[i]);
  }
  return t;
}

// sum over the tail of max(f * a_i, 0) given the exact split of sum a_i.
Scalar scaled_hi(const Scalar& f, const TailBounds& t) {
  return f.sign() >= 0 ? f * t.hi : f * t.lo;
}
Scalar scaled_lo(const Scalar& f, const TailBounds& t) {
  return f.sign() >= 0 ? f * t.lo : f * t.hi;
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Series1D

struct Series1D::Node {
  Kind kind;
  std::vector<Scalar> terms;        // FiniteList / Multigeometric s / Prefix head
  Scalar c;                         // Geometric c, Scaled factor
  Scalar q;                         // Geometric / Multigeometric ratio
  std::optional<Series1D> inner;    // Prefix / Scaled / Abs
  std::optional<std::pair<std::vector<Scalar>, Series1D>> prefix_view;
  std::optional<std::pair<Scalar, Series1D>> scaled_view;
};

Series1D Series1D::finite_list(std::vector<Scalar> terms) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::FiniteList;
  n->terms = std::move(terms);
  return Series1D(std::move(n));
}

Series1D Series1D::geometric(Scalar c, Scalar q) {
  require(q.sign() > 0 && (Scalar(1) - q).sign() > 0, "geometric ratio must lie in (0,1)");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Geometric;
  n->c = std::move(c);
  n->q = std::move(q);
  return Series1D(std::move(n));
}

Series1D Series1D::multigeometric(std::vector<Scalar> s, Scalar q) {
  require(!s.empty(), "multigeometric block must be nonempty");
  require(q.sign() > 0 && (Scalar(1) - q).sign() > 0,
          "multigeometric ratio must lie in (0,1)");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Multigeometric;
  n->terms = std::move(s);
  n->q = std::move(q);
  return Series1D(std::move(n));
}

Series1D Series1D::prefix(std::vector<Scalar> terms, Series1D then) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prefix;
  n->terms = std::move(terms);
  n->inner = std::move(then);
  n->prefix_view.emplace(n->terms, *n->inner);
  return Series1D(std::move(n));
}

Series1D Series1D::scaled(Scalar factor, Series1D inner) {
  require(!factor.is_zero(), "scale factor must be nonzero");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scaled;
  n->c = std::move(factor);
  n->inner = std::move(inner);
  n->scaled_view.emplace(n->c, *n->inner);
  return Series1D(std::move(n));
}

Series1D Series1D::abs(Series1D inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Abs;
  n->inner = std::move(inner);
  return Series1D(std::move(n));
}

Series1D::Kind Series1D::kind() const { return node_->kind; }

Scalar Series1D::term(std::uint64_t n) const {
  require(n >= 1, "term index starts at 1");
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::FiniteList:
      return n <= nd.terms.size() ? nd.terms[n - 1] : Scalar(0);
    case Kind::Geometric:
      return nd.c * pow_scalar(nd.q, n);
    case Kind::Multigeometric: {
      const std::uint64_t k = nd.terms.size();
      const std::uint64_t block = (n - 1) / k;
      const std::uint64_t pos = (n - 1) % k;
      return nd.terms[pos] * pow_scalar(nd.q, block + 1);
    }
    case Kind::Prefix:
      return n <= nd.terms.size() ? nd.terms[n - 1] : nd.inner->term(n - nd.terms.size());
    case Kind::Scaled:
      return nd.c * nd.inner->term(n);
    case Kind::Abs:
      return nd.inner->term(n).abs();
  }
  return Scalar(0);
}

TailBounds Series1D::tail_bounds(std::uint64_t n) const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::FiniteList:
      return parts_of_terms(nd.terms, static_cast<std::size_t>(
                                          std::min<std::uint64_t>(n, nd.terms.size())));
    case Kind::Geometric: {
      // sum_{i>n} c q^i = c q^{n+1} / (1-q)
      Scalar sum = nd.c * pow_scalar(nd.q, n + 1) / (Scalar(1) - nd.q);
      TailBounds t;
      (sum.sign() >= 0 ? t.hi : t.lo) = sum;
      return t;
    }
    case Kind::Multigeometric: {
      const std::uint64_t k = nd.terms.size();
      const std::uint64_t block = n / k;
      const std::uint64_t rem = n % k;
      const Scalar factor = pow_scalar(nd.q, block + 1);
      TailBounds t;
      for (std::size_t j = rem; j < k; ++j) {
        t.lo += neg_part(nd.terms[j]) * factor;
        t.hi += pos_part(nd.terms[j]) * factor;
      }
      // full blocks from block+1 on: factor sum q^{block+2} / (1-q)
      const Scalar rest = pow_scalar(nd.q, block + 2) / (Scalar(1) - nd.q);
      TailBounds blockparts = parts_of_terms(nd.terms, 0);
      t.lo += blockparts.lo * rest;
      t.hi += blockparts.hi * rest;
      return t;
    }
    case Kind::Prefix: {
      const std::uint64_t m = nd.terms.size();
      if (n >= m) return nd.inner->tail_bounds(n - m);
      TailBounds t = parts_of_terms(nd.terms, static_cast<std::size_t>(n));
      TailBounds it = nd.inner->tail_bounds(0);
      t.lo += it.lo;
      t.hi += it.hi;
      return t;
    }
    case Kind::Scaled: {
      TailBounds it = nd.inner->tail_bounds(n);
      if (nd.c.sign() >= 0) return {nd.c * it.lo, nd.c * it.hi};
      return {nd.c * it.hi, nd.c * it.lo};
    }
    case Kind::Abs: {
      TailBounds it = nd.inner->tail_bounds(n);
      return {Scalar(0), it.hi - it.lo};
    }
  }
  return {};
}

std::optional<std::uint64_t> Series1D::finite_support() const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::FiniteList:
      return nd.terms.size();
    case Kind::Geometric:
      return nd.c.is_zero() ? std::optional<std::uint64_t>(0) : std::nullopt;
    case Kind::Multigeometric: {
      for (const Scalar& s : nd.terms)
        if (!s.is_zero()) return std::nullopt;
      return 0;
    }
    case Kind::Prefix: {
      auto m = nd.inner->finite_support();
      if (!m) return std::nullopt;
      return nd.terms.size() + *m;
    }
    case Kind::Scaled:
    case Kind::Abs:
      return nd.inner->finite_support();
  }
  return std::nullopt;
}

Series1D Series1D::abs_normalized() const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::FiniteList: {
      std::vector<Scalar> t;
      t.reserve(nd.terms.size());
      for (const Scalar& s : nd.terms) t.push_back(s.abs());
      return finite_list(std::move(t));
    }
    case Kind::Geometric:
      return geometric(nd.c.abs(), nd.q);
    case Kind::Multigeometric: {
      std::vector<Scalar> t;
      t.reserve(nd.terms.size());
      for (const Scalar& s : nd.terms) t.push_back(s.abs());
      return multigeometric(std::move(t), nd.q);
    }
    case Kind::Prefix: {
      std::vector<Scalar> t;
      t.reserve(nd.terms.size());
      for (const Scalar& s : nd.terms) t.push_back(s.abs());
      return prefix(std::move(t), nd.inner->abs_normalized());
    }
    case Kind::Scaled:
      return scaled(nd.c.abs(), nd.inner->abs_normalized());
    case Kind::Abs:
      return nd.inner->abs_normalized();
  }
  return *this;
}

std::optional<std::pair<std::vector<Scalar>, Scalar>> Series1D::as_multigeometric() const {
  if (node_->kind != Kind::Multigeometric) return std::nullopt;
  return std::make_pair(node_->terms, node_->q);
}

std::optional<std::pair<Scalar, Scalar>> Series1D::as_geometric() const {
  if (node_->kind != Kind::Geometric) return std::nullopt;
  return std::make_pair(node_->c, node_->q);
}

const std::vector<Scalar>* Series1D::as_finite_list() const {
  return node_->kind == Kind::FiniteList ? &node_->terms : nullptr;
}

const std::pair<std::vector<Scalar>, Series1D>* Series1D::as_prefix() const {
  return node_->kind == Kind::Prefix ? &*node_->prefix_view : nullptr;
}

const std::pair<Scalar, Series1D>* Series1D::as_scaled() const {
  return node_->kind == Kind::Scaled ? &*node_->scaled_view : nullptr;
}

const Series1D* Series1D::as_abs() const {
  return node_->kind == Kind::Abs ? &*node_->inner : nullptr;
}

std::string Series1D::describe() const {
  std::ostringstream os;
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::FiniteList: {
      os << "finite_list(";
      for (std::size_t i = 0; i < nd.terms.size(); ++i)
        os << (i ? "," : "") << nd.terms[i];
      os << ")";
      break;
    }
    case Kind::Geometric:
      os << "geometric(c=" << nd.c << ",q=" << nd.q << ")";
      break;
    case Kind::Multigeometric: {
      os << "multigeometric(s=";
      for (std::size_t i = 0; i < nd.terms.size(); ++i)
        os << (i ? "," : "") << nd.terms[i];
      os << ";q=" << nd.q << ")";
      break;
    }
    case Kind::Prefix: {
      os << "prefix(";
      for (std::size_t i = 0; i < nd.terms.size(); ++i)
        os << (i ? "," : "") << nd.terms[i];
      os << ";" << nd.inner->describe() << ")";
      break;
    }
    case Kind::Scaled:
      os << "scaled(" << nd.c << ";" << nd.inner->describe() << ")";
      break;
    case Kind::Abs:
      os << "abs(" << nd.inner->describe() << ")";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Series2D

struct Series2D::Node {
  Kind kind;
  std::vector<Point2> pair_terms;                       // PairList / Prefix head
  std::optional<std::pair<Series1D, Series1D>> factors; // AxisInterleave / PairGenerator
  std::vector<Series2D> parts;                          // DiagonalSum
  std::optional<Series2D> inner;                        // Prefix / LinearMap
  std::optional<Mat2> mat;
  std::optional<PcutParams> pcut;
};

Series2D Series2D::pair_list(std::vector<Point2> terms) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::PairList;
  n->pair_terms = std::move(terms);
  return Series2D(std::move(n));
}

Series2D Series2D::axis_interleave(Series1D xs, Series1D ys) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::AxisInterleave;
  n->factors.emplace(std::move(xs), std::move(ys));
  return Series2D(std::move(n));
}

Series2D Series2D::diagonal_sum(std::vector<Series2D> parts) {
  require(!parts.empty(), "diagonal_sum needs at least one part");
  auto n = std::make_shared<Node>();
  n->kind = Kind::DiagonalSum;
  n->parts = std::move(parts);
  return Series2D(std::move(n));
}

Series2D Series2D::prefix(std::vector<Point2> terms, Series2D then) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prefix;
  n->pair_terms = std::move(terms);
  n->inner = std::move(then);
  return Series2D(std::move(n));
}

Series2D Series2D::linear_map(Mat2 m, Series2D inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::LinearMap;
  n->mat = std::move(m);
  n->inner = std::move(inner);
  return Series2D(std::move(n));
}

Series2D Series2D::pair_generator(Series1D xs, Series1D ys) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::PairGenerator;
  n->factors.emplace(std::move(xs), std::move(ys));
  return Series2D(std::move(n));
}

namespace {

bool weights_monotone_certified(const Series1D& a) {
  if (auto g = a.as_geometric()) return !g->first.is_zero();
  if (auto m = a.as_multigeometric()) {
    const auto& s = m->first;
    for (const Scalar& v : s)
      if (v.is_zero()) return false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i].abs() < s[i + 1].abs()) return false;
    // block seam: |s_k| q^b >= |s_1| q^{b+1}
    return s.back().abs() >= s.front().abs() * m->second;
  }
  if (auto sc = a.as_scaled()) return weights_monotone_certified(sc->second);
  if (auto ab = a.as_abs()) return weights_monotone_certified(*ab);
  return false;
}

}  // namespace

Series2D Series2D::pcut(PcutParams params) {
  const auto& P = params.coeff_set;
  if (P.empty()) throw DomainError("InvalidP: P must be nonempty");
  bool has_zero = false;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (P[i].is_zero()) has_zero = true;
    if (i + 1 < P.size() && !(P[i] < P[i + 1]))
      throw DomainError("InvalidP: P must be strictly sorted");
  }
  if (!has_zero) throw DomainError("InvalidP: P must contain 0");
  if (params.y_scale.is_zero()) throw DomainError("InvalidP: yscale must be nonzero");
  if (params.effective_base() < params.k() + 2)
    throw DomainError("InvalidP: base must be at least k+2");
  if (!params.weights) throw DomainError("InvalidP: missing weight sequence");
  if (params.k() > 1 && !weights_monotone_certified(*params.weights))
    throw DomainError("NonmonotoneA: |a_n| >= |a_{n+1}| > 0 could not be certified");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pcut;
  n->pcut = std::move(params);
  return Series2D(std::move(n));
}

Series2D::Kind Series2D::kind() const { return node_->kind; }

const PcutParams* Series2D::as_pcut() const {
  return node_->kind == Kind::Pcut ? &*node_->pcut : nullptr;
}

const std::pair<Series1D, Series1D>* Series2D::coordinate_factors() const {
  return node_->factors ? &*node_->factors : nullptr;
}

namespace {

// Diagonal enumeration bookkeeping: diagonal d = 2,3,... holds one term of
// parts u = min(M, d-1) down to 1, the term of part u being its (d-u)-th.
struct DiagPos {
  std::size_t part;       // 0-based
  std::uint64_t term;     // 1-based within the part
};

DiagPos diag_locate(std::uint64_t n, std::size_t M) {
  std::uint64_t d = 2;
  std::uint64_t remaining = n;
  for (;;) {
    const std::uint64_t cnt = std::min<std::uint64_t>(M, d - 1);
    if (remaining <= cnt) {
      const std::uint64_t u = cnt - remaining + 1;  // descending within diagonal
      return {static_cast<std::size_t>(u - 1), d - u};
    }
    remaining -= cnt;
    ++d;
  }
}

std::vector<std::uint64_t> diag_consumed(std::uint64_t n, std::size_t M) {
  std::vector<std::uint64_t> c(M, 0);
  std::uint64_t d = 2;
  std::uint64_t remaining = n;
  while (remaining > 0) {
    const std::uint64_t cnt = std::min<std::uint64_t>(M, d - 1);
    if (remaining >= cnt) {
      for (std::uint64_t u = 1; u <= cnt; ++u) ++c[u - 1];
      remaining -= cnt;
      ++d;
    } else {
      // partial diagonal, parts cnt, cnt-1, ..., cnt-remaining+1
      for (std::uint64_t p = 0; p < remaining; ++p) ++c[cnt - 1 - p];
      remaining = 0;
    }
  }
  return c;
}

// Pcut index decomposition (k >= 2): 1-based index -> (block, position 1..k).
struct PcutPos {
  std::uint64_t block;
  std::uint64_t pos;
};
PcutPos pcut_locate(std::uint64_t n, std::uint64_t k) {
  return {(n - 1) / k, (n - 1) % k + 1};
}

Rational base_power_inv(std::uint64_t base, std::uint64_t n) {
  Rational r(1);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), base, n);
  r = Rational(mpz_class(1), den);
  r.canonicalize();
  return r;
}

// sum_{m >= n} base^-m = base^{-(n-1)} / (base - 1), n >= 1
Rational base_tail(std::uint64_t base, std::uint64_t n) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), base, n - 1);
  den *= base - 1;
  Rational r(mpz_class(1), den);
  r.canonicalize();
  return r;
}

std::vector<Scalar> pcut_nonzero(const PcutParams& p) {
  std::vector<Scalar> nz;
  nz.reserve(p.k() - 1);
  for (const Scalar& v : p.coeff_set)
    if (!v.is_zero()) nz.push_back(v);
  return nz;
}

}  // namespace

Point2 Series2D::term(std::uint64_t n) const {
  require(n >= 1, "term index starts at 1");
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::PairList:
      return n <= nd.pair_terms.size() ? nd.pair_terms[n - 1] : Point2{Scalar(0), Scalar(0)};
    case Kind::AxisInterleave: {
      if (n % 2 == 1) return {nd.factors->first.term((n + 1) / 2), Scalar(0)};
      return {Scalar(0), nd.factors->second.term(n / 2)};
    }
    case Kind::DiagonalSum: {
      DiagPos p = diag_locate(n, nd.parts.size());
      return nd.parts[p.part].term(p.term);
    }
    case Kind::Prefix:
      return n <= nd.pair_terms.size() ? nd.pair_terms[n - 1]
                                       : nd.inner->term(n - nd.pair_terms.size());
    case Kind::LinearMap:
      return nd.mat->apply(nd.inner->term(n));
    case Kind::PairGenerator:
      return {nd.factors->first.term(n), nd.factors->second.term(n)};
    case Kind::Pcut: {
      const PcutParams& p = *nd.pcut;
      const std::uint64_t k = p.k();
      if (k == 1) return {Scalar(0), Scalar(0)};
      const PcutPos pos = pcut_locate(n, k);
      const Scalar b = p.y_scale * Scalar(base_power_inv(p.effective_base(), pos.block));
      if (pos.pos == 1) return {Scalar(0), b};
      const std::vector<Scalar> nz = pcut_nonzero(p);
      return {nz[pos.pos - 2] * p.weights->term(pos.block + 1), -b};
    }
  }
  return {Scalar(0), Scalar(0)};
}

TailBounds2 Series2D::tail_bounds(std::uint64_t n) const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::PairList: {
      TailBounds2 t;
      for (std::size_t i = static_cast<std::size_t>(
               std::min<std::uint64_t>(n, nd.pair_terms.size()));
           i < nd.pair_terms.size(); ++i) {
        t.x.lo += neg_part(nd.pair_terms[i].first);
        t.x.hi += pos_part(nd.pair_terms[i].first);
        t.y.lo += neg_part(nd.pair_terms[i].second);
        t.y.hi += pos_part(nd.pair_terms[i].second);
      }
      return t;
    }
    case Kind::AxisInterleave: {
      const std::uint64_t mx = (n + 1) / 2;
      const std::uint64_t my = n / 2;
      return {nd.factors->first.tail_bounds(mx), nd.factors->second.tail_bounds(my)};
    }
    case Kind::DiagonalSum: {
      std::vector<std::uint64_t> c = diag_consumed(n, nd.parts.size());
      TailBounds2 t;
      for (std::size_t u = 0; u < nd.parts.size(); ++u) {
        TailBounds2 p = nd.parts[u].tail_bounds(c[u]);
        t.x.lo += p.x.lo;
        t.x.hi += p.x.hi;
        t.y.lo += p.y.lo;
        t.y.hi += p.y.hi;
      }
      return t;
    }
    case Kind::Prefix: {
      const std::uint64_t m = nd.pair_terms.size();
      if (n >= m) return nd.inner->tail_bounds(n - m);
      TailBounds2 t = nd.inner->tail_bounds(0);
      for (std::size_t i = static_cast<std::size_t>(n); i < m; ++i) {
        t.x.lo += neg_part(nd.pair_terms[i].first);
        t.x.hi += pos_part(nd.pair_terms[i].first);
        t.y.lo += neg_part(nd.pair_terms[i].second);
        t.y.hi += pos_part(nd.pair_terms[i].second);
      }
      return t;
    }
    case Kind::LinearMap: {
      // Sound outer split: componentwise interval image of the inner split.
      TailBounds2 it = nd.inner->tail_bounds(n);
      const Mat2& m = *nd.mat;
      TailBounds2 t;
      t.x.lo = scaled_lo(m.m00, it.x) + scaled_lo(m.m01, it.y);
      t.x.hi = scaled_hi(m.m00, it.x) + scaled_hi(m.m01, it.y);
      t.y.lo = scaled_lo(m.m10, it.x) + scaled_lo(m.m11, it.y);
      t.y.hi = scaled_hi(m.m10, it.x) + scaled_hi(m.m11, it.y);
      return t;
    }
    case Kind::PairGenerator:
      return {nd.factors->first.tail_bounds(n), nd.factors->second.tail_bounds(n)};
    case Kind::Pcut: {
      const PcutParams& p = *nd.pcut;
      const std::uint64_t k = p.k();
      TailBounds2 t;
      if (k == 1) return t;
      const std::uint64_t block = n / k;
      const std::uint64_t rem = n % k;
      const std::vector<Scalar> nz = pcut_nonzero(p);
      // current block leftovers, exact per term
      const Scalar a_cur = p.weights->term(block + 1);
      const Scalar b_cur = p.y_scale * Scalar(base_power_inv(p.effective_base(), block));
      for (std::uint64_t j = rem + 1; j <= k; ++j) {
        if (j == 1) {
          t.y.lo += neg_part(b_cur);
          t.y.hi += pos_part(b_cur);
        } else {
          const Scalar x = nz[j - 2] * a_cur;
          t.x.lo += neg_part(x);
          t.x.hi += pos_part(x);
          t.y.lo += neg_part(-b_cur);
          t.y.hi += pos_part(-b_cur);
        }
      }
      // full blocks from block+1 on
      const TailBounds atail = p.weights->tail_bounds(block + 1);
      for (const Scalar& pv : nz) {
        t.x.lo += scaled_lo(pv, atail);
        t.x.hi += scaled_hi(pv, atail);
      }
      const Scalar g = p.y_scale * Scalar(base_tail(p.effective_base(), block + 1));
      // one leader (+g) and k-1 followers (-g) per block
      t.y.lo += neg_part(g) + neg_part(-g) * Scalar(static_cast<long>(k - 1));
      t.y.hi += pos_part(g) + pos_part(-g) * Scalar(static_cast<long>(k - 1));
      return t;
    }
  }
  return {};
}

std::string Series2D::describe() const {
  std::ostringstream os;
  const Node& nd = *node_;
  const auto pairs = [&os](const std::vector<Point2>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      os << (i ? "," : "") << "(" << v[i].first << "," << v[i].second << ")";
  };
  switch (nd.kind) {
    case Kind::PairList:
      os << "pair_list(";
      pairs(nd.pair_terms);
      os << ")";
      break;
    case Kind::AxisInterleave:
      os << "axis_interleave(" << nd.factors->first.describe() << ";"
         << nd.factors->second.describe() << ")";
      break;
    case Kind::DiagonalSum: {
      os << "diagonal_sum(";
      for (std::size_t i = 0; i < nd.parts.size(); ++i)
        os << (i ? ";" : "") << nd.parts[i].describe();
      os << ")";
      break;
    }
    case Kind::Prefix:
      os << "prefix2(";
      pairs(nd.pair_terms);
      os << ";" << nd.inner->describe() << ")";
      break;
    case Kind::LinearMap:
      os << "linear_map([" << nd.mat->m00 << "," << nd.mat->m01 << ";" << nd.mat->m10
         << "," << nd.mat->m11 << "];" << nd.inner->describe() << ")";
      break;
    case Kind::PairGenerator:
      os << "pair_generator(" << nd.factors->first.describe() << ";"
         << nd.factors->second.describe() << ")";
      break;
    case Kind::Pcut: {
      const PcutParams& p = *nd.pcut;
      os << "pcut(P=";
      for (std::size_t i = 0; i < p.coeff_set.size(); ++i)
        os << (i ? "," : "") << p.coeff_set[i];
      os << ";a=" << p.weights->describe() << ";base=" << p.effective_base()
         << ";yscale=" << p.y_scale << ")";
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Convergence classification

namespace {

enum class MonotoneCheck { Certified, Violated, Unknown };

MonotoneCheck certify_positive_nonincreasing(const Series1D& s) {
  switch (s.kind()) {
    case Series1D::Kind::Geometric: {
      auto g = *s.as_geometric();
      return g.first.sign() > 0 ? MonotoneCheck::Certified : MonotoneCheck::Violated;
    }
    case Series1D::Kind::Multigeometric: {
      auto m = *s.as_multigeometric();
      for (const Scalar& v : m.first)
        if (v.sign() <= 0) return MonotoneCheck::Violated;
      for (std::size_t i = 0; i + 1 < m.first.size(); ++i)
        if (m.first[i] < m.first[i + 1]) return MonotoneCheck::Violated;
      if (m.first.back() < m.first.front() * m.second) return MonotoneCheck::Violated;
      return MonotoneCheck::Certified;
    }
    case Series1D::Kind::Prefix: {
      const auto* pv = s.as_prefix();
      MonotoneCheck inner = certify_positive_nonincreasing(pv->second);
      if (inner != MonotoneCheck::Certified) return inner;
      const auto& head = pv->first;
      for (std::size_t i = 0; i < head.size(); ++i) {
        if (head[i].sign() <= 0) return MonotoneCheck::Violated;
        if (i + 1 < head.size() && head[i] < head[i + 1]) return MonotoneCheck::Violated;
      }
      if (!head.empty() && head.back() < pv->second.term(1)) return MonotoneCheck::Violated;
      return MonotoneCheck::Certified;
    }
    case Series1D::Kind::Scaled: {
      const auto* sv = s.as_scaled();
      if (sv->first.sign() < 0) return MonotoneCheck::Violated;
      return certify_positive_nonincreasing(sv->second);
    }
    case Series1D::Kind::Abs:
      return certify_positive_nonincreasing(s.abs_normalized());
    case Series1D::Kind::FiniteList:
      return MonotoneCheck::Violated;  // zeros beyond the support
  }
  return MonotoneCheck::Unknown;
}

bool index_is_slow(const Series1D& s, std::uint64_t n) {
  // positive terms: r_n equals the positive tail part
  return s.term(n) <= s.tail_bounds(n).total();
}

std::vector<std::pair<std::uint64_t, bool>> first_verdicts(const Series1D& s,
                                                           std::uint64_t count) {
  std::vector<std::pair<std::uint64_t, bool>> v;
  v.reserve(count);
  for (std::uint64_t n = 1; n <= count; ++n) v.emplace_back(n, index_is_slow(s, n));
  return v;
}

ConvergenceClass mixed(const Series1D& s, std::string note) {
  ConvergenceClass r;
  r.kind = ConvergenceClass::Kind::Mixed;
  r.verdicts = first_verdicts(s, 64);
  r.note = std::move(note);
  return r;
}

}  // namespace

ConvergenceClass classify_convergence(const Series1D& spec) {
  if (spec.finite_support())
    return mixed(spec, "finitely supported; slow/fast classification does not apply");

  switch (certify_positive_nonincreasing(spec)) {
    case MonotoneCheck::Violated:
      return mixed(spec, "terms are not certifiably positive and nonincreasing");
    case MonotoneCheck::Unknown:
      throw DomainError("NotEventuallyMonotone: cannot certify monotonicity");
    case MonotoneCheck::Certified:
      break;
  }

  switch (spec.kind()) {
    case Series1D::Kind::Geometric: {
      auto g = *spec.as_geometric();
      ConvergenceClass r;
      if (Scalar(2) * g.second >= Scalar(1)) {
        r.kind = ConvergenceClass::Kind::SlowEverywhere;
      } else {
        r.kind = ConvergenceClass::Kind::FastFromIndex;
        r.fast_from = 1;
      }
      return r;
    }
    case Series1D::Kind::Multigeometric: {
      const std::uint64_t k = spec.as_multigeometric()->first.size();
      bool all_slow = true, all_fast = true;
      for (std::uint64_t n = 1; n <= k; ++n)
        (index_is_slow(spec, n) ? all_fast : all_slow) = false;
      ConvergenceClass r;
      if (all_slow) {
        r.kind = ConvergenceClass::Kind::SlowEverywhere;
      } else if (all_fast) {
        r.kind = ConvergenceClass::Kind::FastFromIndex;
        r.fast_from = 1;
      } else {
        r = mixed(spec, "block-periodic mixed verdicts");
      }
      return r;
    }
    case Series1D::Kind::Prefix: {
      const auto* pv = spec.as_prefix();
      const std::uint64_t m = pv->first.size();
      ConvergenceClass inner = classify_convergence(pv->second);
      if (inner.kind == ConvergenceClass::Kind::SlowEverywhere) {
        bool all_slow = true;
        for (std::uint64_t n = 1; n <= m; ++n)
          if (!index_is_slow(spec, n)) all_slow = false;
        if (all_slow) {
          ConvergenceClass r;
          r.kind = ConvergenceClass::Kind::SlowEverywhere;
          return r;
        }
        return mixed(spec, "slow tail behind a partially fast prefix");
      }
      if (inner.kind == ConvergenceClass::Kind::FastFromIndex) {
        // least index from which every verdict is fast
        std::uint64_t from = m + inner.fast_from;
        while (from > 1 && !index_is_slow(spec, from - 1)) --from;
        ConvergenceClass r;
        r.kind = ConvergenceClass::Kind::FastFromIndex;
        r.fast_from = from;
        return r;
      }
      return mixed(spec, "mixed inner spec");
    }
    case Series1D::Kind::Scaled:
      return classify_convergence(spec.as_scaled()->second);
    case Series1D::Kind::Abs:
      return classify_convergence(spec.abs_normalized());
    case Series1D::Kind::FiniteList:
      break;  // unreachable, finite support handled above
  }
  return mixed(spec, "unclassified");
}

std::optional<std::uint64_t> slow_tail_from(const Series1D& spec) {
  if (spec.finite_support()) return std::nullopt;
  if (certify_positive_nonincreasing(spec) != MonotoneCheck::Certified)
    return std::nullopt;
  ConvergenceClass c = classify_convergence(spec);
  if (c.kind == ConvergenceClass::Kind::SlowEverywhere) return 0;
  if (c.kind == ConvergenceClass::Kind::FastFromIndex) return std::nullopt;
  switch (spec.kind()) {
    case Series1D::Kind::Prefix: {
      const auto* pv = spec.as_prefix();
      auto inner = slow_tail_from(pv->second);
      if (!inner) return std::nullopt;
      const std::uint64_t m = pv->first.size();
      std::uint64_t from = 0;
      for (std::uint64_t n = 1; n <= m + *inner; ++n)
        if (!index_is_slow(spec, n)) from = n;
      return from;
    }
    case Series1D::Kind::Scaled:
      return slow_tail_from(spec.as_scaled()->second);
    case Series1D::Kind::Abs:
      return slow_tail_from(spec.abs_normalized());
    default:
      return std::nullopt;  // multigeometric mixed verdicts repeat forever
  }
}

std::optional<std::uint64_t> fast_tail_from(const Series1D& spec) {
  if (spec.finite_support()) return std::nullopt;
  if (certify_positive_nonincreasing(spec) != MonotoneCheck::Certified)
    return std::nullopt;
  ConvergenceClass c = classify_convergence(spec);
  if (c.kind == ConvergenceClass::Kind::FastFromIndex) return c.fast_from;
  if (c.kind == ConvergenceClass::Kind::SlowEverywhere) return std::nullopt;
  switch (spec.kind()) {
    case Series1D::Kind::Prefix: {
      const auto* pv = spec.as_prefix();
      auto inner = fast_tail_from(pv->second);
      if (!inner) return std::nullopt;
      const std::uint64_t m = pv->first.size();
      std::uint64_t from = 1;
      for (std::uint64_t n = 1; n <= m + *inner; ++n)
        if (index_is_slow(spec, n)) from = n + 1;
      return from;
    }
    case Series1D::Kind::Scaled:
      return fast_tail_from(spec.as_scaled()->second);
    case Series1D::Kind::Abs:
      return fast_tail_from(spec.abs_normalized());
    default:
      return std::nullopt;
  }
}

}  // namespace subsum
