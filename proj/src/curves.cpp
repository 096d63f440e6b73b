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

#include "richelot/curves.hpp"

namespace richelot {

std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_infinity() || b.is_infinity()) {
    return static_cast<int>(a.is_infinity()) <=> static_cast<int>(b.is_infinity());
  }
  return a.x() <=> b.x();
}

bool operator==(const ProjPoint& a, const ProjPoint& b) { return (a <=> b) == 0; }

std::string to_string(const ProjPoint& pt) {
  return pt.is_infinity() ? std::string("inf") : to_string(pt.x());
}

std::vector<ProjPoint> BranchDivisor::points() const {
  std::vector<ProjPoint> out;
  out.reserve(size());
  for (const Fq& x : finite_points) out.push_back(ProjPoint::finite(x));
  if (includes_infinity) out.push_back(ProjPoint::infinity());
  return out;
}

HyperCurve::HyperCurve(Poly f) : f_(std::move(f)) {
  if (f_.degree() < 3) {
    throw Error(ErrorCode::DegreeTooSmall,
                "y^2 = f(x) needs deg f >= 3, got " + std::to_string(f_.degree()));
  }
  if (!is_squarefree(f_)) throw Error(ErrorCode::NotSquarefree, "f has a repeated root");
  genus_ = genus_from_degree(f_.degree());
}

HyperCurve HyperCurve::base_change(const Embedding& emb) const {
  return HyperCurve(embed(f_, emb));
}

HyperCurve HyperCurve::base_change(const Field& target) const {
  if (field()->same_as(*target)) return *this;
  return base_change(Embedding(field(), target));
}

BranchDivisor branch_divisor(const HyperCurve& c, unsigned max_degree) {
  const Field ctx = splitting_context(c.f(), max_degree);
  return branch_divisor_over(c, ctx);
}

BranchDivisor branch_divisor_over(const HyperCurve& c, const Field& ctx) {
  BranchDivisor b;
  b.field = ctx;
  b.finite_points = roots_in_field(c.f(), ctx);
  b.includes_infinity = c.degree() % 2 == 1;
  return b;
}

std::string to_string(const HyperCurve& c, std::string_view y, std::string_view x) {
  return std::string(y) + "^2 = " + to_string(c.f(), x);
}

}  // namespace richelot
