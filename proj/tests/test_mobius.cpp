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


#include <doctest.h>

#include "oracles.hpp"
#include "richelot/mobius.hpp"

using namespace richelot;

namespace {

ProjPoint fin(const Field& k, std::int64_t v) { return ProjPoint::finite(k->from_int(v)); }

ProjPoint random_point(oracle::Rng& rng, const Field& k) {
  const std::uint64_t i = rng.below(k->order() + 1);
  return i == k->order() ? ProjPoint::infinity() : ProjPoint::finite(k->element(i));
}

}  // namespace

TEST_CASE("standard maps") {
  const Field k = make_field(7);
  CHECK(MobiusMap::negation(k)(fin(k, 3)) == fin(k, 4));
  CHECK(MobiusMap::reciprocal(k)(ProjPoint::infinity()) == fin(k, 0));
  CHECK(MobiusMap::reciprocal(k)(fin(k, 0)) == ProjPoint::infinity());
  CHECK(MobiusMap::negation(k).is_involution());
  CHECK_FALSE(MobiusMap::identity(k).is_involution());
}

TEST_CASE("canonical scaling") {
  const Field k = make_field(7);
  const MobiusMap m(k, k->from_int(2), k->from_int(4), k->from_int(6), k->from_int(8));
  CHECK(m.a().is_one());
  CHECK(m == MobiusMap(k, k->one(), k->from_int(2), k->from_int(3), k->from_int(4)));
  const MobiusMap r(k, k->zero(), k->from_int(3), k->from_int(3), k->zero());
  CHECK(r == MobiusMap::reciprocal(k));
  CHECK_THROWS_AS(MobiusMap(k, k->one(), k->one(), k->one(), k->one()), Error);
}

TEST_CASE("group structure on random maps") {
  oracle::Rng rng(31);
  for (const Field& k : {make_field(7), make_field(3, 2), make_field(101)}) {
    for (int t = 0; t < 200; ++t) {
      const MobiusMap f = rng.mobius(k), g = rng.mobius(k), h = rng.mobius(k);
      const ProjPoint p = random_point(rng, k);
      CHECK((f * g)(p) == f(g(p)));
      CHECK((f * g) * h == f * (g * h));
      CHECK((f * f.inverse()).is_identity());
      CHECK(f.is_involution() == ((f * f).is_identity() && !f.is_identity()));
    }
  }
}

TEST_CASE("three points determine a map") {
  oracle::Rng rng(32);
  for (const Field& k : {make_field(11), make_field(5, 2)}) {
    for (int t = 0; t < 200; ++t) {
      std::array<ProjPoint, 3> src{random_point(rng, k), random_point(rng, k), random_point(rng, k)};
      std::array<ProjPoint, 3> dst{random_point(rng, k), random_point(rng, k), random_point(rng, k)};
      if (src[0] == src[1] || src[0] == src[2] || src[1] == src[2]) continue;
      if (dst[0] == dst[1] || dst[0] == dst[2] || dst[1] == dst[2]) continue;
      const MobiusMap m = MobiusMap::sending(k, src, dst);
      for (int i = 0; i < 3; ++i) CHECK(m(src[i]) == dst[i]);
    }
  }
}

TEST_CASE("cross ratio is invariant") {
  oracle::Rng rng(33);
  const Field k = make_field(31);
  for (int t = 0; t < 500; ++t) {
    std::vector<ProjPoint> z;
    for (int i = 0; i < 4; ++i) z.push_back(random_point(rng, k));
    bool distinct = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) distinct = distinct && !(z[i] == z[j]);
    if (!distinct) continue;
    const MobiusMap m = rng.mobius(k);
    CHECK(cross_ratio(z[0], z[1], z[2], z[3]) == cross_ratio(m(z[0]), m(z[1]), m(z[2]), m(z[3])));
    CHECK(cross_ratio(z[1], z[0], z[2], z[3]) == cross_ratio(z[0], z[1], z[2], z[3]).inv());
  }
}

TEST_CASE("equivalence of branch loci") {
  const Field k = make_field(7);
  const HyperCurve a(Poly::from_ints(k, {1, 0, 0, 0, 1}));
  const HyperCurve b(Poly::from_ints(k, {-1, 0, 0, 0, 1}));
  CHECK(isomorphic_over_closure(a, b));

  // j = 1728 against j = 0.
  CHECK_FALSE(isomorphic_over_closure(HyperCurve(Poly::from_ints(k, {0, -1, 0, 1})),
                                      HyperCurve(Poly::from_ints(k, {1, 0, 0, 1}))));

  oracle::Rng rng(34);
  const Field f = make_field(13);
  for (int t = 0; t < 20; ++t) {
    const std::vector<ProjPoint> pts = oracle::random_branch_set(rng, f, 2);
    const MobiusMap m = rng.mobius(f);
    std::vector<ProjPoint> img;
    for (const ProjPoint& p : pts) img.push_back(m(p));
    CHECK(isomorphic_over_closure(oracle::curve_through(f, pts), oracle::curve_through(f, img)));
    const auto e = find_equivalence(f, pts, img);
    REQUIRE(e.has_value());
    std::vector<ProjPoint> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    for (const ProjPoint& p : pts) CHECK(std::binary_search(sorted.begin(), sorted.end(), (*e)(p)));
  }
}
