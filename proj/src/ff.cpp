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

#include "richelot/ff.hpp"

#include <algorithm>
#include <sstream>

namespace richelot {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::IncompatibleDegrees: return "IncompatibleDegrees";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::FixedBranchPoint: return "FixedBranchPoint";
    case ErrorCode::DegenerateQuotient: return "DegenerateQuotient";
    case ErrorCode::NotAnInvolution: return "NotAnInvolution";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::IdenticalBranchSets: return "IdenticalBranchSets";
    case ErrorCode::ConventionViolation: return "ConventionViolation";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::WrongGenus: return "WrongGenus";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

using ZpPoly = std::vector<std::uint32_t>;

std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(a * b % p);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  const std::size_t k = m.size() - 1;  // m is monic
  for (std::size_t i = r.size(); i-- > k;) {
    const std::uint32_t c = r[i];
    if (!c) continue;
    for (std::size_t j = 0; j <= k; ++j) {
      r[i - k + j] = static_cast<std::uint32_t>((r[i - k + j] + std::uint64_t{p - c} * m[j]) % p);
    }
  }
  r.resize(std::min(r.size(), k));
  trim(r);
  return r;
}

ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly& m, std::uint32_t p) {
  ZpPoly r{1};
  while (e) {
    if (e & 1) r = zp_mulmod(r, base, m, p);
    base = zp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    const std::uint32_t inv_lead = invmod(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint32_t c = mulmod(a.back(), inv_lead, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + std::uint64_t{p - c} * b[j]) % p);
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p) {
  const ZpPoly m(monic.begin(), monic.end());
  const unsigned k = static_cast<unsigned>(m.size() - 1);
  if (k == 1) return true;
  const ZpPoly x{0, 1};
  // x^(p^i) mod m for i = 0..k
  std::vector<ZpPoly> frob{x};
  for (unsigned i = 1; i <= k; ++i) frob.push_back(zp_powmod(frob.back(), p, m, p));
  auto minus_x = [&](ZpPoly a) {
    a.resize(std::max<std::size_t>(a.size(), 2), 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(frob[k]).empty()) return false;
  for (unsigned l : prime_divisors(k)) {
    const ZpPoly g = zp_gcd(m, minus_x(frob[k / l]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fq

unsigned Fq::degree() const noexcept { return ctx_ ? ctx_->degree() : 0; }

std::span<const std::uint32_t> Fq::coords() const noexcept {
  return {c_.data(), degree()};
}

std::uint64_t Fq::index() const noexcept {
  std::uint64_t idx = 0;
  for (unsigned i = degree(); i-- > 0;) idx = idx * ctx_->characteristic() + c_[i];
  return idx;
}

bool Fq::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool Fq::is_one() const noexcept {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

void require_same_field(const FieldCtx* a, const FieldCtx* b) {
  if (a == b) return;
  if (a == nullptr || b == nullptr || !a->same_as(*b)) {
    throw Error(ErrorCode::MixedFields, "operands belong to different fields");
  }
}

Fq Fq::operator-() const {
  Fq r = *this;
  const std::uint32_t p = ctx_->characteristic();
  for (unsigned i = 0; i < degree(); ++i) r.c_[i] = c_[i] ? p - c_[i] : 0;
  return r;
}

Fq& Fq::operator+=(const Fq& rhs) {
  require_same_field(ctx_, rhs.ctx_);
  const std::uint32_t p = ctx_->characteristic();
  for (unsigned i = 0; i < degree(); ++i) {
    const std::uint64_t s = std::uint64_t{c_[i]} + rhs.c_[i];
    c_[i] = static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  return *this;
}

Fq& Fq::operator-=(const Fq& rhs) {
  require_same_field(ctx_, rhs.ctx_);
  const std::uint32_t p = ctx_->characteristic();
  for (unsigned i = 0; i < degree(); ++i) {
    c_[i] = c_[i] >= rhs.c_[i] ? c_[i] - rhs.c_[i] : c_[i] + (p - rhs.c_[i]);
  }
  return *this;
}

Fq& Fq::operator*=(const Fq& rhs) {
  require_same_field(ctx_, rhs.ctx_);
  ctx_->mul_into(*this, rhs);
  return *this;
}

Fq& Fq::operator/=(const Fq& rhs) { return *this *= rhs.inv(); }

Fq Fq::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (degree() == 1) {
    Fq r = *this;
    r.c_[0] = invmod(c_[0], ctx_->characteristic());
    return r;
  }
  return pow(ctx_->order() - 2);
}

Fq Fq::pow(std::uint64_t e) const {
  Fq result = ctx_->one();
  Fq base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Fq& a, const Fq& b) {
  require_same_field(a.ctx_, b.ctx_);
  return a.c_ == b.c_;
}

std::strong_ordering operator<=>(const Fq& a, const Fq& b) {
  require_same_field(a.ctx_, b.ctx_);
  for (unsigned i = a.degree(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(Passkey, std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;
  std::uint64_t t = q_ - 1;
  while (t % 2 == 0) {
    t /= 2;
    ++ts_s_;
  }
  ts_t_ = t;
}

void FieldCtx::mul_into(Fq& a, const Fq& b) const {
  if (k_ == 1) {
    a.c_[0] = mulmod(a.c_[0], b.c_[0], p_);
    return;
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> t{};
  if (p_ < (1u << 28)) {
    // At most 16 products below 2^56 per slot: reduce once at the end.
    for (unsigned i = 0; i < k_; ++i) {
      const std::uint64_t x = a.c_[i];
      if (!x) continue;
      for (unsigned j = 0; j < k_; ++j) t[i + j] += x * b.c_[j];
    }
    for (unsigned i = 0; i < 2 * k_ - 1; ++i) t[i] %= p_;
    for (unsigned i = 2 * k_ - 1; i-- > k_;) {
      const std::uint64_t c = t[i] % p_;
      if (!c) continue;
      for (unsigned j = 0; j < k_; ++j) t[i - k_ + j] += (p_ - c) * modulus_[j];
    }
    for (unsigned i = 0; i < k_; ++i) a.c_[i] = static_cast<std::uint32_t>(t[i] % p_);
    return;
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (!a.c_[i]) continue;
    for (unsigned j = 0; j < k_; ++j) {
      t[i + j] = (t[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p_;
    }
  }
  for (unsigned i = 2 * k_ - 1; i-- > k_;) {
    const std::uint64_t c = t[i];
    if (!c) continue;
    for (unsigned j = 0; j < k_; ++j) {
      t[i - k_ + j] = (t[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
    }
  }
  for (unsigned i = 0; i < k_; ++i) a.c_[i] = static_cast<std::uint32_t>(t[i]);
}

Fq FieldCtx::zero() const {
  Fq r;
  r.ctx_ = this;
  return r;
}

Fq FieldCtx::one() const { return from_int(1); }

Fq FieldCtx::from_int(std::int64_t v) const {
  Fq r = zero();
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  r.c_[0] = static_cast<std::uint32_t>(m);
  return r;
}

Fq FieldCtx::from_coords(std::span<const std::int64_t> coords) const {
  if (coords.size() > k_) {
    throw Error(ErrorCode::InvalidInput, "too many coordinates for " + name());
  }
  Fq r = zero();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::int64_t m = coords[i] % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    r.c_[i] = static_cast<std::uint32_t>(m);
  }
  return r;
}

Fq FieldCtx::element(std::uint64_t index) const {
  Fq r = zero();
  for (unsigned i = 0; i < k_; ++i) {
    r.c_[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return r;
}

Fq FieldCtx::generator() const {
  if (k_ == 1) return from_int(-static_cast<std::int64_t>(modulus_[0]));
  Fq r = zero();
  r.c_[1] = 1;
  return r;
}

bool FieldCtx::is_square(const Fq& a) const {
  if (a.is_zero()) return true;
  return a.pow((q_ - 1) / 2).is_one();
}

std::optional<Fq> FieldCtx::sqrt(const Fq& a) const {
  require_same_field(this, a.ctx());
  if (a.is_zero()) return a;
  if (!is_square(a)) return std::nullopt;
  // Tonelli-Shanks
  Fq z = zero();
  z.c_ = ts_z_;
  unsigned m = ts_s_;
  Fq c = z.pow(ts_t_);
  Fq t = a.pow(ts_t_);
  Fq r = a.pow((ts_t_ + 1) / 2);
  while (!t.is_one()) {
    unsigned i = 0;
    Fq t2 = t;
    while (!t2.is_one()) {
      t2 *= t2;
      ++i;
    }
    Fq b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    m = i;
    c = b * b;
    t *= c;
    r *= b;
  }
  const Fq neg = -r;
  return neg < r ? neg : r;
}

bool FieldCtx::same_as(const FieldCtx& other) const noexcept {
  return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
}

std::string FieldCtx::name() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (k_ > 1) os << "^" << k_;
  return os.str();
}

Field make_field(std::uint32_t p, unsigned k,
                 std::optional<std::vector<std::uint32_t>> modulus) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1 || k > kMaxExtensionDegree) {
    throw Error(ErrorCode::UnsupportedField, "extension degree " + std::to_string(k) + " out of range");
  }
  long double size = 1;
  for (unsigned i = 0; i < k; ++i) size *= p;
  if (size >= static_cast<long double>(std::uint64_t{1} << 62)) {
    throw Error(ErrorCode::UnsupportedField, "field order exceeds 2^62");
  }

  std::vector<std::uint32_t> m;
  if (modulus) {
    m = *modulus;
    if (m.size() != k + 1 || m.back() != 1) {
      throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of degree " + std::to_string(k));
    }
    for (auto c : m) {
      if (c >= p) throw Error(ErrorCode::InvalidInput, "modulus coefficient out of range");
    }
    if (!is_irreducible_mod_p(m, p)) {
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    }
  } else {
    m.assign(k + 1, 0);
    m[k] = 1;
    if (k > 1) {
      // Walk monic candidates in index order; the first irreducible wins.
      for (std::uint64_t idx = 0;; ++idx) {
        std::uint64_t v = idx;
        for (unsigned i = 0; i < k; ++i) {
          m[i] = static_cast<std::uint32_t>(v % p);
          v /= p;
        }
        if (m[0] != 0 && is_irreducible_mod_p(m, p)) break;
      }
    }
  }

  auto ctx = std::make_shared<FieldCtx>(FieldCtx::Passkey{}, p, std::move(m));
  // Index-smallest quadratic non-residue for Tonelli-Shanks.
  for (std::uint64_t idx = 1; idx < ctx->order(); ++idx) {
    const Fq z = ctx->element(idx);
    if (!ctx->is_square(z)) {
      for (unsigned i = 0; i < ctx->degree(); ++i) ctx->ts_z_[i] = z.coord(i);
      break;
    }
  }
  return ctx;
}

// ---------------------------------------------------------------------------
// Embedding

Embedding::Embedding(Field source, Field target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_->characteristic() != target_->characteristic() ||
      target_->degree() % source_->degree() != 0) {
    throw Error(ErrorCode::IncompatibleDegrees,
                "cannot embed " + source_->name() + " into " + target_->name());
  }
  const unsigned k = source_->degree();
  Fq gen = target_->zero();
  if (k == 1) {
    gen = target_->from_int(source_->generator().coord(0));
  } else if (source_->same_as(*target_)) {
    gen = target_->generator();
  } else {
    if (target_->order() > kExhaustionBound) {
      throw Error(ErrorCode::FieldTooLarge, "embedding search in " + target_->name());
    }
    const auto& m = source_->modulus();
    bool found = false;
    for (std::uint64_t idx = 0; idx < target_->order() && !found; ++idx) {
      const Fq r = target_->element(idx);
      Fq acc = target_->zero();
      for (std::size_t i = m.size(); i-- > 0;) acc = acc * r + target_->from_int(m[i]);
      if (acc.is_zero()) {
        gen = r;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::IncompatibleDegrees, "no root of source modulus in target");
  }
  Fq power = target_->one();
  for (unsigned i = 0; i < k; ++i) {
    powers_.push_back(power);
    power *= gen;
  }
}

Fq Embedding::operator()(const Fq& a) const {
  require_same_field(source_.get(), a.ctx());
  Fq r = target_->zero();
  for (unsigned i = 0; i < source_->degree(); ++i) {
    if (a.coord(i)) r += target_->from_int(a.coord(i)) * powers_[i];
  }
  return r;
}

Fq embed(const Fq& a, const Field& target) {
  // The caller's field is not owned here; wrap it without taking ownership.
  const Field source(Field{}, a.ctx());
  return Embedding(source, target)(a);
}

std::string to_string(const Fq& a) {
  const FieldCtx* ctx = a.ctx();
  const std::int64_t p = ctx->characteristic();
  auto sym = [p](std::uint32_t c) {
    const std::int64_t v = c;
    return v > p / 2 ? v - p : v;
  };
  if (ctx->degree() == 1) return std::to_string(sym(a.coord(0)));
  std::ostringstream os;
  bool first = true;
  for (unsigned i = ctx->degree(); i-- > 0;) {
    std::int64_t c = sym(a.coord(i));
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) os << (i == 0 || mag != 1 ? "*" : "") << "a";
    if (i > 1) os << "^" << i;
    first = false;
  }
  if (first) return "0";
  const std::string s = os.str();
  return s.find_first_of("+-", 1) == std::string::npos ? s : "(" + s + ")";
}

}  // namespace richelot
