// Copyright 2026 The richelot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "richelot/upoly.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace richelot {

namespace {

// Below this many coefficient products the OpenMP kernel is not worth it.
constexpr std::size_t kParallelMulThreshold = 1 << 14;

void require_same(const Poly& a, const Poly& b) {
  require_same_field(a.field().get(), b.field().get());
}

Fq horner(const std::vector<Fq>& c, const Fq& at, const Fq& zero) {
  Fq acc = zero;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= at;
    acc += c[i];
  }
  return acc;
}

// Prime-field products accumulate as integers and reduce once per term.
std::vector<Fq> mul_coeffs_prime(const Poly& a, const Poly& b, std::size_t lo, std::size_t hi,
                                 const Field& f) {
  const std::uint64_t p = f->characteristic();
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Fq> out;
  out.reserve(hi - lo);
  for (std::size_t n = lo; n < hi; ++n) {
    const std::size_t i0 = n >= bc.size() ? n - bc.size() + 1 : 0;
    const std::size_t i1 = std::min(n, ac.size() - 1);
    std::uint64_t acc = 0;
    for (std::size_t i = i0; i <= i1; ++i) {
      acc = (acc + std::uint64_t{ac[i].coord(0)} * bc[n - i].coord(0)) % p;
    }
    out.push_back(f->from_int(static_cast<std::int64_t>(acc)));
  }
  return out;
}

Fq mul_coeff(const Poly& a, const Poly& b, std::size_t n) {
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t i0 = n >= bc.size() ? n - bc.size() + 1 : 0;
  const std::size_t i1 = std::min(n, ac.size() - 1);
  Fq acc = a.field()->zero();
  for (std::size_t i = i0; i <= i1; ++i) acc += ac[i] * bc[n - i];
  return acc;
}

Fq pth_root(const Fq& a) {
  const FieldCtx& ctx = *a.ctx();
  Fq r = a;
  for (unsigned i = 1; i < ctx.degree(); ++i) r = ctx.frobenius(r);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly basics

Poly::Poly(Field field) : field_(std::move(field)) {}

Poly::Poly(Field field, std::vector<Fq> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const Fq& c : c_) require_same_field(field_.get(), c.ctx());
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_ints(Field field, std::span<const std::int64_t> ascending) {
  std::vector<Fq> c;
  c.reserve(ascending.size());
  for (std::int64_t v : ascending) c.push_back(field->from_int(v));
  return Poly(std::move(field), std::move(c));
}

Poly Poly::constant(Field field, const Fq& c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(Field field, const Fq& c, std::size_t n) {
  std::vector<Fq> v(n + 1, field->zero());
  v[n] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::x(Field field) {
  const Fq one = field->one();
  return monomial(std::move(field), one, 1);
}

Poly Poly::from_roots(Field field, std::span<const Fq> roots) {
  Poly r = constant(field, field->one());
  for (const Fq& root : roots) r *= Poly(field, {-root, field->one()});
  return r;
}

Fq Poly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

Fq Poly::lead() const { return c_.empty() ? field_->zero() : c_.back(); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inv();
}

Fq Poly::operator()(const Fq& at) const {
  require_same_field(field_.get(), at.ctx());
  return horner(c_, at, field_->zero());
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Fq& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same(*this, rhs);
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), field_->zero());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same(*this, rhs);
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), field_->zero());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = parallel::mul(*this, rhs);
  return *this;
}

Poly& Poly::operator*=(const Fq& rhs) {
  require_same_field(field_.get(), rhs.ctx());
  for (Fq& c : c_) c *= rhs;
  trim();
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  require_same(a, b);
  return a.c_ == b.c_;
}

// ---------------------------------------------------------------------------
// Multiplication kernels

Poly serial::mul(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  const std::size_t n = a.coeffs().size() + b.coeffs().size() - 1;
  if (a.field()->degree() == 1) return Poly(a.field(), mul_coeffs_prime(a, b, 0, n, a.field()));
  std::vector<Fq> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(mul_coeff(a, b, i));
  return Poly(a.field(), std::move(out));
}

Poly parallel::mul(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  if (a.coeffs().size() * b.coeffs().size() < kParallelMulThreshold) return serial::mul(a, b);
  const std::size_t n = a.coeffs().size() + b.coeffs().size() - 1;
  const Field& f = a.field();
  std::vector<Fq> out(n, f->zero());
  const bool prime = f->degree() == 1;
  const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out[idx] = prime ? mul_coeffs_prime(a, b, idx, idx + 1, f)[0] : mul_coeff(a, b, idx);
  }
  return Poly(f, std::move(out));
}

// ---------------------------------------------------------------------------
// Division, gcd and friends

DivRem divrem(const Poly& f, const Poly& g) {
  require_same(f, g);
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field& field = f.field();
  if (f.degree() < g.degree()) return {Poly(field), f};
  std::vector<Fq> r = f.coeffs();
  std::vector<Fq> q(f.coeffs().size() - g.coeffs().size() + 1, field->zero());
  const Fq inv_lead = g.lead().inv();
  const std::size_t dg = g.coeffs().size() - 1;
  for (std::size_t i = r.size(); i-- > dg;) {
    if (r[i].is_zero()) continue;
    const Fq c = r[i] * inv_lead;
    q[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] -= c * g.coeffs()[j];
  }
  r.resize(dg);
  return {Poly(field, std::move(q)), Poly(field, std::move(r))};
}

Poly gcd(const Poly& f, const Poly& g) {
  require_same(f, g);
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly derivative(const Poly& f) {
  if (f.degree() < 1) return Poly(f.field());
  std::vector<Fq> d;
  d.reserve(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    d.push_back(f.coeffs()[i] * f.field()->from_int(static_cast<std::int64_t>(i)));
  }
  return Poly(f.field(), std::move(d));
}

Poly pow(const Poly& f, std::uint64_t e) {
  Poly result = Poly::constant(f.field(), f.field()->one());
  Poly base = f;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

namespace {
Poly truncate(Poly f, std::size_t n) {
  if (f.coeffs().size() <= n) return f;
  std::vector<Fq> c(f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(n));
  return Poly(f.field(), std::move(c));
}
}  // namespace

Poly pow_truncated(const Poly& f, std::uint64_t e, std::size_t n) {
  Poly result = truncate(Poly::constant(f.field(), f.field()->one()), n);
  Poly base = truncate(f, n);
  while (e) {
    if (e & 1) result = truncate(result * base, n);
    e >>= 1;
    if (e) base = truncate(base * base, n);
  }
  return result;
}

Poly powmod(const Poly& f, std::uint64_t e, const Poly& m) {
  Poly result = divrem(Poly::constant(f.field(), f.field()->one()), m).remainder;
  Poly base = divrem(f, m).remainder;
  while (e) {
    if (e & 1) result = divrem(result * base, m).remainder;
    e >>= 1;
    if (e) base = divrem(base * base, m).remainder;
  }
  return result;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree test of zero polynomial");
  return gcd(f, derivative(f)).degree() == 0;
}

std::vector<std::pair<Poly, unsigned>> squarefree_factorization(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of zero polynomial");
  const Field& field = f.field();
  const std::uint32_t p = field->characteristic();
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.degree() == 0) return out;

  auto pth_root_poly = [&](const Poly& c) {
    std::vector<Fq> r;
    for (std::size_t i = 0; i < c.coeffs().size(); i += p) r.push_back(pth_root(c.coeffs()[i]));
    return Poly(field, std::move(r));
  };

  const Poly fm = f.monic();
  const Poly d = derivative(fm);
  if (d.is_zero()) {
    for (auto& [g, e] : squarefree_factorization(pth_root_poly(fm))) out.emplace_back(g, e * p);
    return out;
  }
  Poly c = gcd(fm, d);
  Poly w = divrem(fm, c).quotient;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = divrem(w, y).quotient;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    ++i;
    w = std::move(y);
    c = divrem(c, w).quotient;
  }
  if (c.degree() > 0) {
    for (auto& [g, e] : squarefree_factorization(pth_root_poly(c.monic()))) out.emplace_back(g, e * p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

Poly embed(const Poly& f, const Embedding& emb) {
  require_same_field(f.field().get(), emb.source().get());
  std::vector<Fq> c;
  c.reserve(f.coeffs().size());
  for (const Fq& v : f.coeffs()) c.push_back(emb(v));
  return Poly(emb.target(), std::move(c));
}

// ---------------------------------------------------------------------------
// Root finding

namespace {
void check_root_search(const Poly& f, std::uint64_t bound) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  if (f.field()->order() > bound) {
    throw Error(ErrorCode::FieldTooLarge,
                f.field()->name() + " exceeds the exhaustive search bound " + std::to_string(bound));
  }
}
}  // namespace

std::vector<Fq> serial::roots_in_field(const Poly& f, std::uint64_t bound) {
  check_root_search(f, bound);
  const FieldCtx& ctx = *f.field();
  const Fq zero = ctx.zero();
  std::vector<Fq> roots;
  for (std::uint64_t idx = 0; idx < ctx.order(); ++idx) {
    const Fq r = ctx.element(idx);
    if (horner(f.coeffs(), r, zero).is_zero()) roots.push_back(r);
  }
  return roots;
}

std::vector<Fq> parallel::roots_in_field(const Poly& f, std::uint64_t bound) {
  check_root_search(f, bound);
  const FieldCtx& ctx = *f.field();
  const Fq zero = ctx.zero();
  const auto q = static_cast<std::int64_t>(ctx.order());
  std::vector<Fq> roots;
#pragma omp parallel
  {
    std::vector<Fq> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t idx = 0; idx < q; ++idx) {
      const Fq r = ctx.element(static_cast<std::uint64_t>(idx));
      if (horner(f.coeffs(), r, zero).is_zero()) local.push_back(r);
    }
#pragma omp critical
    roots.insert(roots.end(), local.begin(), local.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Fq> roots_in_field(const Poly& f, std::uint64_t bound) {
  return parallel::roots_in_field(f, bound);
}

std::vector<Fq> roots_in_field(const Poly& f, const Field& ctx, std::uint64_t bound) {
  if (f.field()->same_as(*ctx)) return roots_in_field(f, bound);
  if (ctx->order() > bound) {
    throw Error(ErrorCode::FieldTooLarge,
                ctx->name() + " exceeds the exhaustive search bound " + std::to_string(bound));
  }
  return roots_in_field(embed(f, Embedding(f.field(), ctx)), bound);
}

namespace {

// Least common multiple of the irreducible factor degrees, by distinct-degree
// factorization over the field of f.
unsigned splitting_degree(const Poly& f) {
  const std::uint64_t q = f.field()->order();
  const Poly x = Poly::x(f.field());
  Poly rest = f.monic();
  Poly h = x;
  unsigned l = 1;
  for (unsigned i = 1; rest.degree() >= 2 * static_cast<int>(i); ++i) {
    h = powmod(h, q, f);
    const Poly d = gcd(rest, h - x);
    if (d.degree() > 0) {
      l = std::lcm(l, i);
      rest = divrem(rest, d).quotient;
    }
  }
  if (rest.degree() > 0) l = std::lcm(l, static_cast<unsigned>(rest.degree()));
  return l;
}

}  // namespace

Field splitting_context(const Poly& f, unsigned max_degree, std::uint64_t bound) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "splitting field of zero polynomial");
  if (!is_squarefree(f)) throw Error(ErrorCode::NotSquarefree, "splitting field needs a squarefree polynomial");
  const Field& base = f.field();
  const unsigned k = base->degree();
  const std::uint32_t p = base->characteristic();
  const unsigned d = f.degree() <= 1 ? 1 : splitting_degree(f);
  long double size = 1;
  for (unsigned i = 0; i < k * d && size <= static_cast<long double>(bound); ++i) size *= p;
  if (k * d > max_degree || k * d > kMaxExtensionDegree || size > static_cast<long double>(bound)) {
    throw Error(ErrorCode::BoundExceeded,
                "no splitting field of degree <= " + std::to_string(max_degree) + " within size bound");
  }
  return d == 1 ? base : make_field(p, k * d);
}

std::string to_string(const Poly& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Fq& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    std::string s = to_string(c);
    bool negative = !s.empty() && s[0] == '-';
    if (negative) s.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool unit = s == "1";
    if (i == 0) {
      os << s;
    } else {
      if (!unit) os << s << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace richelot
