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

// Fractional-linear maps x -> (a x + b) / (c x + d) of the projective line.

#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "richelot/curves.hpp"
#include "richelot/ff.hpp"

namespace richelot {

/// An element of PGL_2, stored with canonical scaling: the first nonzero
/// entry in the order a, b, c, d equals 1.
class MobiusMap {
 public:
  /// Throws InvalidInput when ad - bc = 0.
  MobiusMap(Field field, Fq a, Fq b, Fq c, Fq d);

  static MobiusMap identity(const Field& field);
  static MobiusMap negation(const Field& field);   // x -> -x
  static MobiusMap reciprocal(const Field& field); // x -> 1/x
  /// The unique map sending src[i] to dst[i]; both triples must be distinct.
  static MobiusMap sending(const Field& field, const std::array<ProjPoint, 3>& src,
                           const std::array<ProjPoint, 3>& dst);

  const Field& field() const noexcept { return field_; }
  const Fq& a() const noexcept { return m_[0]; }
  const Fq& b() const noexcept { return m_[1]; }
  const Fq& c() const noexcept { return m_[2]; }
  const Fq& d() const noexcept { return m_[3]; }
  const std::array<Fq, 4>& entries() const noexcept { return m_; }

  bool is_identity() const;
  /// Order exactly 2 in PGL_2 (for odd p: trace zero).
  bool is_involution() const;

  MobiusMap inverse() const;
  /// (f * g)(x) = f(g(x)).
  friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g);

  ProjPoint operator()(const ProjPoint& pt) const;

  MobiusMap base_change(const Embedding& emb) const;

  friend bool operator==(const MobiusMap& x, const MobiusMap& y) { return x.m_ == y.m_; }
  friend std::strong_ordering operator<=>(const MobiusMap& x, const MobiusMap& y);

 private:
  Field field_;
  std::array<Fq, 4> m_;
};

inline ProjPoint apply_mobius(const MobiusMap& m, const ProjPoint& pt) { return m(pt); }

std::string to_string(const MobiusMap& m);

/// (z1, z2; z3, z4) = (z3 - z1)(z4 - z2) / ((z3 - z2)(z4 - z1)), with the
/// usual conventions at infinity. Points must be pairwise distinct.
Fq cross_ratio(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3, const ProjPoint& z4);

/// True when m permutes the (sorted) point set.
bool preserves(const MobiusMap& m, std::span<const ProjPoint> sorted_points);

/// Some Mobius map carrying point set `from` onto point set `to`, if one
/// exists. Both sets need at least three points and must live in one field.
std::optional<MobiusMap> find_equivalence(const Field& field, std::span<const ProjPoint> from,
                                          std::span<const ProjPoint> to);

/// Isomorphism of y^2 = f(x) curves over the algebraic closure, decided by
/// PGL_2-equivalence of the branch loci in a common splitting field.
bool isomorphic_over_closure(const HyperCurve& x, const HyperCurve& y,
                             unsigned max_degree = kDefaultMaxExtension);

}  // namespace richelot
