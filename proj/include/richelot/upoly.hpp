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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "richelot/ff.hpp"

namespace richelot {

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
class Poly {
 public:
  explicit Poly(Field field);
  Poly(Field field, std::vector<Fq> coeffs);

  static Poly from_ints(Field field, std::span<const std::int64_t> ascending);
  static Poly from_ints(Field field, std::initializer_list<std::int64_t> ascending) {
    return from_ints(std::move(field), std::span<const std::int64_t>(ascending.begin(), ascending.size()));
  }
  static Poly constant(Field field, const Fq& c);
  static Poly monomial(Field field, const Fq& c, std::size_t n);
  static Poly x(Field field);
  /// prod (x - r) over the given roots.
  static Poly from_roots(Field field, std::span<const Fq> roots);

  const Field& field() const noexcept { return field_; }
  const std::vector<Fq>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Coefficient of x^i; zero past the degree.
  Fq operator[](std::size_t i) const;
  Fq lead() const;
  Poly monic() const;

  Fq operator()(const Fq& at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Fq& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Fq& b) { return a *= b; }
  friend Poly operator*(const Fq& b, Poly a) { return a *= b; }

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void trim();

  Field field_;
  std::vector<Fq> c_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

DivRem divrem(const Poly& f, const Poly& g);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);
Poly derivative(const Poly& f);
inline Fq eval(const Poly& f, const Fq& at) { return f(at); }
Poly pow(const Poly& f, std::uint64_t e);
/// f^e mod x^n.
Poly pow_truncated(const Poly& f, std::uint64_t e, std::size_t n);
Poly powmod(const Poly& f, std::uint64_t e, const Poly& m);

bool is_squarefree(const Poly& f);

/// Square-free decomposition f = lead * prod g_i^{e_i} with the g_i monic,
/// squarefree and pairwise coprime. Handles p-th powers.
std::vector<std::pair<Poly, unsigned>> squarefree_factorization(const Poly& f);

/// Maps every coefficient through the embedding.
Poly embed(const Poly& f, const Embedding& emb);

/// Distinct roots of f lying in f's own field, by exhaustive evaluation,
/// sorted by index. Throws FieldTooLarge when the field exceeds `bound`.
std::vector<Fq> roots_in_field(const Poly& f, std::uint64_t bound = kExhaustionBound);
/// Roots of f inside `ctx`, which must contain f's field.
std::vector<Fq> roots_in_field(const Poly& f, const Field& ctx,
                               std::uint64_t bound = kExhaustionBound);

/// Smallest extension of f's field, of absolute degree at most max_degree
/// over F_p, over which the squarefree f splits into linear factors.
Field splitting_context(const Poly& f, unsigned max_degree,
                        std::uint64_t bound = kExhaustionBound);

std::string to_string(const Poly& f, std::string_view var = "x");

namespace serial {
Poly mul(const Poly& a, const Poly& b);
std::vector<Fq> roots_in_field(const Poly& f, std::uint64_t bound = kExhaustionBound);
}  // namespace serial

namespace parallel {
Poly mul(const Poly& a, const Poly& b);
std::vector<Fq> roots_in_field(const Poly& f, std::uint64_t bound = kExhaustionBound);
}  // namespace parallel

}  // namespace richelot
