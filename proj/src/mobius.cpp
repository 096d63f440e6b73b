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

#include "richelot/mobius.hpp"

#include <algorithm>

namespace richelot {

namespace {

// Homogeneous coordinates (X : Z).
struct Hom {
  Fq x, z;
};

Hom lift(const Field& f, const ProjPoint& p) {
  if (p.is_infinity()) return {f->one(), f->zero()};
  return {p.x(), f->one()};
}

ProjPoint drop(const Hom& h) {
  if (h.z.is_zero()) return ProjPoint::infinity();
  return ProjPoint::finite(h.x / h.z);
}

Fq bracket(const Hom& u, const Hom& v) { return u.x * v.z - u.z * v.x; }

const FieldCtx* ctx_of(const ProjPoint& p) { return p.is_infinity() ? nullptr : p.x().ctx(); }

// Matrix sending (1:0), (0:1), (1:1) to p1, p2, p3.
std::array<Fq, 4> frame(const Field& f, const std::array<ProjPoint, 3>& pts) {
  const Hom v1 = lift(f, pts[0]), v2 = lift(f, pts[1]), v3 = lift(f, pts[2]);
  const Fq det = bracket(v1, v2);
  if (det.is_zero()) throw Error(ErrorCode::InvalidInput, "frame points are not distinct");
  const Fq l1 = bracket(v3, v2) / det;
  const Fq l2 = bracket(v1, v3) / det;
  return {l1 * v1.x, l2 * v2.x, l1 * v1.z, l2 * v2.z};
}

std::array<Fq, 4> matmul(const std::array<Fq, 4>& p, const std::array<Fq, 4>& q) {
  return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
          p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]};
}

std::array<Fq, 4> adjugate(const std::array<Fq, 4>& m) { return {m[3], -m[1], -m[2], m[0]}; }

}  // namespace

MobiusMap::MobiusMap(Field field, Fq a, Fq b, Fq c, Fq d)
    : field_(std::move(field)), m_{a, b, c, d} {
  for (const Fq& e : m_) require_same_field(field_.get(), e.ctx());
  if ((a * d - b * c).is_zero()) throw Error(ErrorCode::InvalidInput, "degenerate Mobius matrix");
  const auto first = std::find_if(m_.begin(), m_.end(), [](const Fq& e) { return !e.is_zero(); });
  const Fq scale = first->inv();
  for (Fq& e : m_) e *= scale;
}

MobiusMap MobiusMap::identity(const Field& f) {
  return MobiusMap(f, f->one(), f->zero(), f->zero(), f->one());
}

MobiusMap MobiusMap::negation(const Field& f) {
  return MobiusMap(f, f->one(), f->zero(), f->zero(), -f->one());
}

MobiusMap MobiusMap::reciprocal(const Field& f) {
  return MobiusMap(f, f->zero(), f->one(), f->one(), f->zero());
}

MobiusMap MobiusMap::sending(const Field& f, const std::array<ProjPoint, 3>& src,
                             const std::array<ProjPoint, 3>& dst) {
  const auto s = frame(f, src);
  const auto t = frame(f, dst);
  const auto m = matmul(t, adjugate(s));
  return MobiusMap(f, m[0], m[1], m[2], m[3]);
}

bool MobiusMap::is_identity() const {
  return b().is_zero() && c().is_zero() && a() == d();
}

bool MobiusMap::is_involution() const {
  return !is_identity() && (a() + d()).is_zero();
}

MobiusMap MobiusMap::inverse() const {
  const auto m = adjugate(m_);
  return MobiusMap(field_, m[0], m[1], m[2], m[3]);
}

MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
  require_same_field(f.field_.get(), g.field_.get());
  const auto m = matmul(f.m_, g.m_);
  return MobiusMap(f.field_, m[0], m[1], m[2], m[3]);
}

ProjPoint MobiusMap::operator()(const ProjPoint& pt) const {
  const Hom h = lift(field_, pt);
  return drop({a() * h.x + b() * h.z, c() * h.x + d() * h.z});
}

MobiusMap MobiusMap::base_change(const Embedding& emb) const {
  return MobiusMap(emb.target(), emb(a()), emb(b()), emb(c()), emb(d()));
}

std::strong_ordering operator<=>(const MobiusMap& x, const MobiusMap& y) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (auto cmp = x.m_[i] <=> y.m_[i]; cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const MobiusMap& m) {
  return "[" + to_string(m.a()) + ", " + to_string(m.b()) + "; " + to_string(m.c()) + ", " +
         to_string(m.d()) + "]";
}

Fq cross_ratio(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3, const ProjPoint& z4) {
  const FieldCtx* ctx = nullptr;
  for (const ProjPoint* p : {&z1, &z2, &z3, &z4}) {
    if (!ctx) ctx = ctx_of(*p);
  }
  if (!ctx) throw Error(ErrorCode::InvalidInput, "cross ratio needs finite points");
  const Field f(Field{}, ctx);
  const Hom h1 = lift(f, z1), h2 = lift(f, z2), h3 = lift(f, z3), h4 = lift(f, z4);
  const Fq den = bracket(h3, h2) * bracket(h4, h1);
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "cross ratio of coincident points");
  return bracket(h3, h1) * bracket(h4, h2) / den;
}

bool preserves(const MobiusMap& m, std::span<const ProjPoint> sorted_points) {
  return std::all_of(sorted_points.begin(), sorted_points.end(), [&](const ProjPoint& p) {
    return std::binary_search(sorted_points.begin(), sorted_points.end(), m(p));
  });
}

std::optional<MobiusMap> find_equivalence(const Field& field, std::span<const ProjPoint> from,
                                          std::span<const ProjPoint> to) {
  if (from.size() != to.size() || from.size() < 3) return std::nullopt;
  std::vector<ProjPoint> target(to.begin(), to.end());
  std::sort(target.begin(), target.end());
  const std::array<ProjPoint, 3> src{from[0], from[1], from[2]};
  const std::size_t n = target.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const auto m = MobiusMap::sending(field, src, {target[i], target[j], target[k]});
        const bool all = std::all_of(from.begin(), from.end(), [&](const ProjPoint& p) {
          return std::binary_search(target.begin(), target.end(), m(p));
        });
        if (all) return m;
      }
    }
  }
  return std::nullopt;
}

bool isomorphic_over_closure(const HyperCurve& x, const HyperCurve& y, unsigned max_degree) {
  if (x.genus() != y.genus()) return false;
  HyperCurve cx = x, cy = y;
  if (!x.field()->same_as(*y.field())) {
    if (y.field()->degree() % x.field()->degree() == 0) {
      cx = x.base_change(y.field());
    } else {
      cy = y.base_change(x.field());
    }
  }
  // Splitting field of the squarefree part of f_x f_y holds both branch loci.
  const Poly joint = cx.f() * divrem(cy.f(), gcd(cx.f(), cy.f())).quotient;
  const Field ctx = splitting_context(joint, max_degree);
  const auto bx = branch_divisor_over(cx, ctx).points();
  const auto by = branch_divisor_over(cy, ctx).points();
  return find_equivalence(ctx, bx, by).has_value();
}

}  // namespace richelot
