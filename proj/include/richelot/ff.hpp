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

// Finite fields F_p and F_{p^k} = F_p[x]/(m(x)) for odd primes p < 2^31.
//
// Elements are stored as coordinate vectors in the power basis of the
// modulus. Every canonical choice in this file (default modulus, square
// root, embedding) is made by the "index" order: an element (or a monic
// polynomial with its leading 1 dropped) with coordinates c_0..c_{k-1} has
// index sum c_i p^i, and smaller index wins.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "richelot/error.hpp"

namespace richelot {

inline constexpr unsigned kMaxExtensionDegree = 16;

/// Largest field that exhaustive searches (root finding, embeddings) will
/// walk through element by element.
inline constexpr std::uint64_t kExhaustionBound = std::uint64_t{1} << 20;

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

class Fq {
 public:
  Fq() = default;

  const FieldCtx* ctx() const noexcept { return ctx_; }
  unsigned degree() const noexcept;
  std::uint32_t coord(unsigned i) const noexcept { return c_[i]; }
  std::span<const std::uint32_t> coords() const noexcept;
  std::uint64_t index() const noexcept;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Fq operator-() const;
  Fq& operator+=(const Fq& rhs);
  Fq& operator-=(const Fq& rhs);
  Fq& operator*=(const Fq& rhs);
  Fq& operator/=(const Fq& rhs);

  friend Fq operator+(Fq lhs, const Fq& rhs) { return lhs += rhs; }
  friend Fq operator-(Fq lhs, const Fq& rhs) { return lhs -= rhs; }
  friend Fq operator*(Fq lhs, const Fq& rhs) { return lhs *= rhs; }
  friend Fq operator/(Fq lhs, const Fq& rhs) { return lhs /= rhs; }

  Fq inv() const;
  Fq pow(std::uint64_t e) const;

  /// Equality and ordering require both sides to live in the same field.
  friend bool operator==(const Fq& a, const Fq& b);
  friend std::strong_ordering operator<=>(const Fq& a, const Fq& b);

 private:
  friend class FieldCtx;
  const FieldCtx* ctx_ = nullptr;
  std::array<std::uint32_t, kMaxExtensionDegree> c_{};
};

class FieldCtx {
  struct Passkey {};

 public:
  FieldCtx(Passkey, std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return q_; }
  /// Ascending coefficients, monic, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Fq zero() const;
  Fq one() const;
  Fq from_int(std::int64_t v) const;
  Fq from_coords(std::span<const std::int64_t> coords) const;
  /// Element with the given index; index < order().
  Fq element(std::uint64_t index) const;
  /// The class of x in F_p[x]/(m). For k = 1 this is the root of m.
  Fq generator() const;

  std::optional<Fq> sqrt(const Fq& a) const;
  bool is_square(const Fq& a) const;
  Fq frobenius(const Fq& a) const { return a.pow(p_); }

  bool same_as(const FieldCtx& other) const noexcept;
  /// "F_7", "F_3^2".
  std::string name() const;

  friend Field make_field(std::uint32_t p, unsigned k,
                          std::optional<std::vector<std::uint32_t>> modulus);

 private:
  friend class Fq;
  void mul_into(Fq& a, const Fq& b) const;

  std::uint32_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  // Tonelli-Shanks data: q - 1 = 2^s t, z a fixed non-residue.
  unsigned ts_s_ = 0;
  std::uint64_t ts_t_ = 0;
  std::array<std::uint32_t, kMaxExtensionDegree> ts_z_{};
};

/// Builds F_{p^k}. Without a modulus the index-smallest monic irreducible of
/// degree k is used. Throws NotPrime, EvenCharacteristic, ReducibleModulus or
/// UnsupportedField.
Field make_field(std::uint32_t p, unsigned k = 1,
                 std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

bool is_prime(std::uint64_t n) noexcept;

/// Rabin irreducibility test for a monic polynomial over F_p (ascending).
bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p);

inline std::optional<Fq> sqrt(const Fq& a) { return a.ctx()->sqrt(a); }

void require_same_field(const FieldCtx* a, const FieldCtx* b);

/// Ring embedding F_{p^k} -> F_{p^{km}} sending the source generator to the
/// index-smallest root of the source modulus in the target.
class Embedding {
 public:
  Embedding(Field source, Field target);

  const Field& source() const noexcept { return source_; }
  const Field& target() const noexcept { return target_; }
  Fq operator()(const Fq& a) const;

 private:
  Field source_;
  Field target_;
  std::vector<Fq> powers_;  // images of 1, g, g^2, ... g^{k-1}
};

Fq embed(const Fq& a, const Field& target);

/// Human-readable element: prime-field elements in the symmetric range
/// (-p/2, p/2], extension elements as a polynomial in the generator "a".
std::string to_string(const Fq& a);

}  // namespace richelot
