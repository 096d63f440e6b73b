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

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "richelot/ff.hpp"
#include "richelot/upoly.hpp"

namespace richelot {

/// Default cap on the absolute extension degree over F_p used when a
/// computation has to leave the field of definition.
inline constexpr unsigned kDefaultMaxExtension = 8;

/// A point of the projective line: finite x, or infinity.
class ProjPoint {
 public:
  static ProjPoint finite(const Fq& x) { return ProjPoint(x); }
  static ProjPoint infinity() { return ProjPoint(); }

  bool is_infinity() const noexcept { return !x_.has_value(); }
  const Fq& x() const { return *x_; }

  /// Finite points come first (by element index), infinity last.
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b);
  friend bool operator==(const ProjPoint& a, const ProjPoint& b);

 private:
  ProjPoint() = default;
  explicit ProjPoint(const Fq& x) : x_(x) {}
  std::optional<Fq> x_;
};

std::string to_string(const ProjPoint& pt);

/// Branch locus of y^2 = f(x) on P^1, over a field where f splits.
struct BranchDivisor {
  Field field;
  std::vector<Fq> finite_points;  // sorted
  bool includes_infinity = false;

  std::size_t size() const noexcept { return finite_points.size() + (includes_infinity ? 1 : 0); }
  std::vector<ProjPoint> points() const;
};

/// y^2 = f(x) with f squarefree of degree >= 3.
class HyperCurve {
 public:
  /// Throws NotSquarefree or DegreeTooSmall.
  explicit HyperCurve(Poly f);

  const Field& field() const noexcept { return f_.field(); }
  const Poly& f() const noexcept { return f_; }
  int genus() const noexcept { return genus_; }
  int degree() const noexcept { return f_.degree(); }

  HyperCurve base_change(const Embedding& emb) const;
  HyperCurve base_change(const Field& target) const;

  friend bool operator==(const HyperCurve& a, const HyperCurve& b) { return a.f_ == b.f_; }

 private:
  Poly f_;
  int genus_;
};

/// floor((d - 1) / 2) for a squarefree right-hand side of degree d.
constexpr int genus_from_degree(int d) noexcept { return (d - 1) / 2; }

/// All 2g+2 branch points, over the smallest splitting field of f whose
/// absolute degree is at most max_degree. Throws BoundExceeded.
BranchDivisor branch_divisor(const HyperCurve& c, unsigned max_degree = kDefaultMaxExtension);

/// Branch points of c that lie in the given field (which must contain c's field).
BranchDivisor branch_divisor_over(const HyperCurve& c, const Field& ctx);

std::string to_string(const HyperCurve& c, std::string_view y = "y", std::string_view x = "x");

}  // namespace richelot
