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
#include "richelot/upoly.hpp"

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

std::vector<Fq> roots_by_scan(const Poly& f) {
  std::vector<Fq> out;
  for (std::uint64_t i = 0; i < f.field()->order(); ++i) {
    const Fq z = f.field()->element(i);
    if (f(z).is_zero()) out.push_back(z);
  }
  return out;
}

}  // namespace

TEST_CASE("basic operations over F_7") {
  const Field k = make_field(7);
  const Poly x = Poly::x(k);
  const Poly one = Poly::constant(k, k->one());
  CHECK(gcd(x * x - one, x - one) == x - one);
  CHECK(pow(x * x * x - x, 3) == Poly::from_ints(k, {0, 0, 0, -1, 0, 3, 0, -3, 0, 1}));
  CHECK(derivative(pow(x, 7)).is_zero());
  CHECK(to_string(Poly::from_ints(make_field(11), {3, 0, -4, 0, 1}), "u") == "u^4 - 4*u^2 + 3");
  CHECK(code_of([&] { divrem(x, Poly(k)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("divrem over F_5") {
  const Field k = make_field(5);
  const DivRem qr = divrem(Poly::from_ints(k, {0, 0, 0, 0, 1}), Poly::from_ints(k, {1, 0, 1}));
  CHECK(qr.quotient == Poly::from_ints(k, {-1, 0, 1}));
  CHECK(qr.remainder == Poly::from_ints(k, {1}));
}

TEST_CASE("squarefree detection") {
  const Field k = make_field(7);
  CHECK(is_squarefree(Poly::from_ints(k, {-1, 0, 0, 0, 0, 0, 0, 0, 1})));
  CHECK_FALSE(is_squarefree(Poly::from_ints(k, {1, -1, -1, 1})));
  CHECK_FALSE(is_squarefree(Poly::from_ints(k, {1, 0, 0, 0, 0, 0, 0, 1})));  // (x + 1)^7
  CHECK(code_of([&] { is_squarefree(Poly(k)); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("squarefree factorization reconstructs the monic input") {
  oracle::Rng rng(11);
  for (const Field& k : {make_field(3), make_field(5), make_field(7), make_field(3, 2)}) {
    for (int t = 0; t < 100; ++t) {
      Poly f = Poly::constant(k, k->one());
      const int parts = 1 + static_cast<int>(rng.below(3));
      for (int i = 0; i < parts; ++i) f *= pow(rng.poly(k, 1 + static_cast<int>(rng.below(2))), 1 + rng.below(4));
      if (rng.coin()) f *= pow(rng.poly(k, 1), k->characteristic());
      Poly back = Poly::constant(k, k->one());
      for (const auto& [g, e] : squarefree_factorization(f)) {
        CHECK(is_squarefree(g));
        CHECK(g.lead().is_one());
        back *= pow(g, e);
      }
      CHECK(back == f.monic());
    }
  }
}

TEST_CASE("roots in the base field and in extensions") {
  const Field f7 = make_field(7), f49 = make_field(7, 2);
  const Poly f = Poly::from_ints(f7, {-1, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(roots_in_field(f) == std::vector<Fq>{f7->one(), f7->from_int(6)});
  CHECK(roots_in_field(f, f49).size() == 8);
  CHECK(code_of([&] { roots_in_field(f, f49, 10); }) == ErrorCode::FieldTooLarge);
}

TEST_CASE("splitting contexts") {
  const Field k = make_field(7);
  CHECK(splitting_context(Poly::from_ints(k, {-1, 0, 1}), 8)->order() == 7);
  CHECK(splitting_context(Poly::from_ints(k, {-1, 0, 0, 0, 0, 0, 0, 0, 1}), 8)->order() == 49);
  CHECK(splitting_context(Poly::from_ints(k, {-3, 0, 1}), 8)->order() == 49);
  CHECK(code_of([&] { splitting_context(Poly::from_ints(k, {-3, 0, 1}), 1); }) == ErrorCode::BoundExceeded);
  const Field f11 = make_field(11);
  CHECK(code_of([&] { splitting_context(Poly::from_ints(f11, {3, 1, 0, 0, 0, 0, 1}), 8); }) ==
        ErrorCode::BoundExceeded);
}

TEST_CASE("random squarefree polynomials split completely") {
  oracle::Rng rng(12);
  for (const Field& k : {make_field(5), make_field(7)}) {
    int checked = 0;
    while (checked < 40) {
      const Poly f = rng.poly(k, 2 + static_cast<int>(rng.below(5)));
      if (!is_squarefree(f)) continue;
      const Field s = splitting_context(f, 8);
      const Poly g = embed(f, Embedding(k, s));
      CHECK(roots_in_field(g).size() == static_cast<std::size_t>(f.degree()));
      ++checked;
    }
  }
}

TEST_CASE("division, gcd and powers on random inputs") {
  oracle::Rng rng(13);
  for (const Field& k : {make_field(7), make_field(3, 2), make_field(101), make_field(5, 3)}) {
    for (int t = 0; t < 250; ++t) {
      const Poly f = rng.poly(k, static_cast<int>(rng.below(12)));
      const Poly g = rng.poly(k, static_cast<int>(rng.below(6)));
      const DivRem qr = divrem(f, g);
      CHECK(qr.quotient * g + qr.remainder == f);
      CHECK(qr.remainder.degree() < g.degree());
      const Poly d = gcd(f, g);
      CHECK(divrem(f, d).remainder.is_zero());
      CHECK(divrem(g, d).remainder.is_zero());
      const std::uint64_t e = rng.below(9);
      const std::size_t n = rng.below(20);
      const Poly full = pow(f, e);
      std::vector<Fq> low(full.coeffs().begin(), full.coeffs().begin() + std::min<std::size_t>(n, full.coeffs().size()));
      CHECK(pow_truncated(f, e, n) == Poly(k, low));
      if (g.degree() > 0) CHECK(powmod(f, e, g) == divrem(full, g).remainder);
    }
  }
}

TEST_CASE("roots agree with exhaustive evaluation") {
  oracle::Rng rng(14);
  for (const Field& k : {make_field(13), make_field(3, 3), make_field(47, 2), make_field(2999)}) {
    for (int t = 0; t < 20; ++t) {
      const int deg = 1 + static_cast<int>(rng.below(6));
      std::vector<Fq> rs = rng.distinct(k, static_cast<std::size_t>(deg));
      Poly f = Poly::from_roots(k, rs);
      if (rng.coin()) f *= rng.poly(k, 2);
      CHECK(roots_in_field(f) == roots_by_scan(f));
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  oracle::Rng rng(15);
  const Field k = make_field(10007);
  for (int deg : {3, 40, 300}) {
    const Poly a = rng.poly(k, deg), b = rng.poly(k, deg + 17);
    CHECK(serial::mul(a, b) == parallel::mul(a, b));
    CHECK(serial::mul(a, b) == a * b);
  }
  const Field big = make_field(7, 6);
  const Poly f = Poly::from_roots(big, rng.distinct(big, 6));
  CHECK(serial::roots_in_field(f) == parallel::roots_in_field(f));
  CHECK(serial::roots_in_field(f).size() == 6);
}
