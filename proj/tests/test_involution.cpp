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

#include <algorithm>

#include "oracles.hpp"
#include "richelot/involution.hpp"

using namespace richelot;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

HyperCurve curve(const Field& k, std::initializer_list<std::int64_t> c) { return HyperCurve(Poly::from_ints(k, c)); }

HyperCurve normal_form(const Field& k, const std::vector<std::int64_t>& params) {
  Poly f = Poly::from_ints(k, {-1, 0, 1});
  for (std::int64_t a : params) f *= Poly::from_ints(k, {-a, 0, 1});
  return HyperCurve(f);
}

bool contains(const std::vector<MobiusMap>& v, const MobiusMap& m) {
  return std::find(v.begin(), v.end(), m) != v.end();
}

std::vector<std::uint64_t> indices(const std::vector<Fq>& v) {
  std::vector<std::uint64_t> out;
  for (const Fq& a : v) out.push_back(a.index());
  return out;
}

}  // namespace

TEST_CASE("involutions of y^2 = x^8 + x^4 + 1") {
  const HyperCurve c = curve(make_field(11), {1, 0, 0, 0, 1, 0, 0, 0, 1});
  const BranchDivisor b = branch_divisor(c);
  const auto found = find_branch_involutions(b);
  CHECK(found.size() == 5);
  CHECK(contains(found, MobiusMap::negation(b.field)));
  CHECK(contains(found, MobiusMap::reciprocal(b.field)));
  for (const MobiusMap& m : found) {
    CHECK(m.is_involution());
    CHECK(lift_order(c.base_change(b.field), m) == 2);
    CHECK(lift_count(c.base_change(b.field), m) == 2);
  }
}

TEST_CASE("symmetric sextic over F_7") {
  const Field k = make_field(7);
  const HyperCurve c = normal_form(k, {4, 2});  // roots +-1, +-2, +-3
  CHECK(contains(find_branch_involutions(branch_divisor(c)), MobiusMap::negation(k)));
}

TEST_CASE("involution fixing a branch point") {
  const Field k = make_field(7);
  const HyperCurve c = curve(k, {0, 2, 0, -3, 0, 1});  // x (x^2 - 1)(x^2 - 2)
  const MobiusMap neg = MobiusMap::negation(k);
  CHECK(lift_order(c, neg) == 4);
  CHECK(code_of([&] { lift_count(c, neg); }) == ErrorCode::FixedBranchPoint);
  CHECK(code_of([&] { normalize_involution(c, neg); }) == ErrorCode::FixedBranchPoint);
  const BranchDivisor b = branch_divisor(c);
  CHECK_FALSE(contains(find_branch_involutions(b), neg.base_change(Embedding(k, b.field))));
  CHECK(contains(find_branch_involutions(b, InvolutionFilter::All), neg.base_change(Embedding(k, b.field))));
}

TEST_CASE("lift count on y^2 = x^8 - 1") {
  const Field k = make_field(7);
  const HyperCurve c = curve(k, {-1, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(lift_count(c, MobiusMap::negation(k)) == 2);
  CHECK(code_of([&] { normalize_involution(c, MobiusMap::identity(k)); }) == ErrorCode::NotAnInvolution);
}

TEST_CASE("normalization of a curve already in normal form") {
  const Field k = make_field(11);
  const HyperCurve c = normal_form(k, {2, 3});
  const InvolutionWitness w = normalize_involution(c, MobiusMap::negation(k));
  CHECK(indices(w.normal_params) == std::vector<std::uint64_t>{2, 3});
  CHECK(w.working_field->order() == 121);
  CHECK(w.fixed_points[0].x().is_zero());
  CHECK(w.fixed_points[1].is_infinity());

  const DecompositionWitness d = decompose(c, w);
  CHECK(d.genus_split == std::pair{1, 1});
  CHECK(d.c_sigma.degree() == 3);
  CHECK(d.c_tau.degree() == 4);
}

TEST_CASE("genus five over F_31 splits as 2 + 3") {
  const Field k = make_field(31);
  const HyperCurve c = normal_form(k, {2, 3, 4, 5, 6});
  const DecompositionWitness d = decompose(c, normalize_involution(c, MobiusMap::negation(k)));
  CHECK(d.genus_split == std::pair{2, 3});
  CHECK(d.c_sigma.genus() == 2);
  CHECK(d.c_tau.genus() == 3);
}

TEST_CASE("genus one quotient is degenerate") {
  const Field k = make_field(13);
  const HyperCurve c = normal_form(k, {4});
  const InvolutionWitness w = normalize_involution(c, MobiusMap::negation(k));
  CHECK(code_of([&] { decompose(c, w); }) == ErrorCode::DegenerateQuotient);
  CHECK(code_of([&] { analyze(c); }) == ErrorCode::WrongGenus);
}

TEST_CASE("irrational fixed points need a quadratic extension") {
  const Field k = make_field(11);
  // m: x -> 2/x has fixed points +-sqrt(2), outside F_11.
  const MobiusMap m(k, k->zero(), k->from_int(2), k->one(), k->zero());
  Poly f = Poly::constant(k, k->one());
  for (std::int64_t x : {1, 3, 4}) {
    const Fq a = k->from_int(x);
    f *= Poly(k, {-a, k->one()}) * Poly(k, {-(k->from_int(2) / a), k->one()});
  }
  const HyperCurve c(f);
  CHECK(code_of([&] { normalize_involution(c, m, {1}); }) == ErrorCode::BoundExceeded);
  const InvolutionWitness w = normalize_involution(c, m);
  CHECK(w.working_field->order() == 121);
  CHECK(w.normal_params.size() == 2);
}

TEST_CASE("normal form invariants are conjugation invariant") {
  oracle::Rng rng(41);
  for (const Field& k : {make_field(13), make_field(17), make_field(5, 2)}) {
    for (int t = 0; t < 15; ++t) {
      const int g = 2 + static_cast<int>(rng.below(2));
      const auto pts = oracle::symmetric_branch_set(rng, k, g);
      if (!pts) continue;
      const HyperCurve c = oracle::curve_through(k, *pts);
      const auto invs = find_branch_involutions(k, *pts);
      REQUIRE_FALSE(invs.empty());
      const MobiusMap& m = invs[0];
      const InvolutionWitness w = normalize_involution(c, m);
      const MobiusMap mw = m.base_change(Embedding(k, w.working_field));
      CHECK(w.conjugator * mw * w.conjugator.inverse() == MobiusMap::negation(w.working_field));
      for (const auto& [p, q] : w.pairing) {
        const ProjPoint cp = w.conjugator(p);
        const ProjPoint cq = w.conjugator(q);
        REQUIRE_FALSE(cp.is_infinity());
        CHECK(cq.x() == -cp.x());
        const Fq sq = cp.x() * cp.x();
        CHECK((sq.is_one() || std::find(w.normal_params.begin(), w.normal_params.end(), sq) != w.normal_params.end()));
      }

      // Moving the whole configuration by a random map leaves the invariants alone.
      const MobiusMap h = rng.mobius(k);
      std::vector<ProjPoint> moved;
      for (const ProjPoint& p : *pts) moved.push_back(h(p));
      const InvolutionWitness w2 = normalize_involution(oracle::curve_through(k, moved), h * m * h.inverse());
      std::vector<Fq> i1 = pairing_invariants(w.pairing), i2 = pairing_invariants(w2.pairing);
      REQUIRE(i1.size() == i2.size());
      if (w2.working_field->same_as(*w.working_field)) CHECK(i1 == i2);
    }
  }
}

TEST_CASE("pairing invariants are insensitive to labelling") {
  oracle::Rng rng(42);
  const Field k = make_field(23);
  for (int t = 0; t < 40; ++t) {
    const auto pts = oracle::symmetric_branch_set(rng, k, 3);
    if (!pts) continue;
    std::vector<std::pair<ProjPoint, ProjPoint>> pairing, swapped;
    for (std::size_t i = 0; i < pts->size(); i += 2) pairing.emplace_back((*pts)[i], (*pts)[i + 1]);
    for (const auto& [p, q] : pairing) swapped.push_back(rng.coin() ? std::pair{p, q} : std::pair{q, p});
    std::reverse(swapped.begin(), swapped.end());
    CHECK(pairing_invariants(pairing) == pairing_invariants(swapped));
  }
}

TEST_CASE("lift order matches the fixed point criterion") {
  oracle::Rng rng(43);
  for (const Field& k : {make_field(7), make_field(11), make_field(13)}) {
    for (int t = 0; t < 20; ++t) {
      const auto pts = oracle::symmetric_branch_set(rng, k, 2);
      if (!pts) continue;
      const HyperCurve c = oracle::curve_through(k, *pts);
      const BranchDivisor b = branch_divisor_over(c, k);
      for (const MobiusMap& m : find_branch_involutions(k, b.points(), InvolutionFilter::All)) {
        bool fixes = false;
        for (const ProjPoint& p : b.points()) fixes = fixes || m(p) == p;
        CHECK(lift_order(c, m) == (fixes ? 4 : 2));
      }
    }
  }
}

TEST_CASE("serial and parallel searches agree") {
  oracle::Rng rng(44);
  for (const Field& k : {make_field(13), make_field(3, 2), make_field(29)}) {
    for (int t = 0; t < 10; ++t) {
      const auto pts = rng.coin() ? oracle::symmetric_branch_set(rng, k, 3)
                                  : std::optional{oracle::random_branch_set(rng, k, 3)};
      if (!pts) continue;
      for (auto filter : {InvolutionFilter::FixedPointFree, InvolutionFilter::All}) {
        CHECK(serial::find_branch_involutions(k, *pts, filter) == parallel::find_branch_involutions(k, *pts, filter));
      }
    }
  }
}

TEST_CASE("search agrees with exhaustive enumeration of PGL_2") {
  oracle::Rng rng(45);
  for (const Field& k : {make_field(5), make_field(7), make_field(11), make_field(3, 2)}) {
    for (int t = 0; t < 6; ++t) {
      const int g = 2 + static_cast<int>(rng.below(2));
      if (static_cast<std::uint64_t>(2 * g + 2) > k->order() + 1) continue;
      const auto pts = rng.coin() ? oracle::symmetric_branch_set(rng, k, g)
                                  : std::optional{oracle::random_branch_set(rng, k, g)};
      if (!pts) continue;
      CHECK(find_branch_involutions(k, *pts) == oracle::involutions(k, *pts, true));
      CHECK(find_branch_involutions(k, *pts, InvolutionFilter::All) == oracle::involutions(k, *pts, false));
    }
  }
}

TEST_CASE("lift quotient genera agree with the quotient equations") {
  oracle::Rng rng(46);
  for (const Field& k : {make_field(13), make_field(17), make_field(19)}) {
    for (int t = 0; t < 10; ++t) {
      const int g = 2 + static_cast<int>(rng.below(3));
      const auto pts = oracle::symmetric_branch_set(rng, k, g);
      if (!pts) continue;
      const HyperCurve c = oracle::curve_through(k, *pts);
      const Analysis a = analyze(c);
      REQUIRE(a.decomposed());
      for (const WitnessEntry& e : a.witnesses) {
        const int gs = lift_quotient_genus(g, lift_fixed_fibres(e.involution, g, true));
        const int gt = lift_quotient_genus(g, lift_fixed_fibres(e.involution, g, false));
        CHECK(gs == e.decomposition.c_sigma.genus());
        CHECK(gt == e.decomposition.c_tau.genus());
        CHECK(gs + gt == g);
        for (const auto& [p, q] : e.involution.pairing) CHECK_FALSE(p == q);
      }
    }
  }
}

TEST_CASE("analysis of example curves") {
  const Analysis a = analyze(curve(make_field(11), {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(a.decomposed());
  CHECK(a.involutions.size() == 5);
  CHECK(a.rejected_fixed_branch == 0);
  CHECK(a.witnesses.size() == 5);
  REQUIRE(a.three_factor.size() == 2);
  for (const ThreeFactorWitness& t : a.three_factor) {
    CHECK(t.genera == std::array{1, 1, 1});
    for (std::size_t i = 0; i < 3; ++i) CHECK(a.factor(t, i).genus() == 1);
  }

  const Analysis generic = analyze(curve(make_field(13), {3, 1, 0, 0, 0, 0, 1}));
  CHECK_FALSE(generic.decomposed());
  CHECK(generic.involutions.empty());

  const Analysis quintic = analyze(curve(make_field(19), {1, 0, 0, 0, 0, 1}));
  CHECK_FALSE(quintic.decomposed());

  CHECK(code_of([&] { analyze(curve(make_field(11), {3, 1, 0, 0, 0, 0, 1})); }) == ErrorCode::BoundExceeded);
}

TEST_CASE("generic sextic has no involution over its splitting field") {
  const HyperCurve c = curve(make_field(13), {3, 1, 0, 0, 0, 0, 1});
  const BranchDivisor b = branch_divisor(c);
  CHECK(oracle::involutions(b.field, b.points(), false).empty());
}
