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

#include <set>

#include "oracles.hpp"
#include "richelot/ff.hpp"

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

// Index-smallest monic irreducible of degree k over F_p, by trial division
// against every monic polynomial of lower degree.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned k) {
  auto coeffs = [&](std::uint64_t idx, unsigned deg) {
    std::vector<std::int64_t> c(deg + 1, 0);
    for (unsigned i = 0; i < deg; ++i, idx /= p) c[i] = static_cast<std::int64_t>(idx % p);
    c[deg] = 1;
    return c;
  };
  auto divides = [&](std::vector<std::int64_t> d, std::vector<std::int64_t> f) {
    while (f.size() >= d.size()) {
      const std::int64_t lead = f.back();
      const std::size_t shift = f.size() - d.size();
      for (std::size_t i = 0; i < d.size(); ++i) f[shift + i] = oracle::mod(f[shift + i] - lead * d[i], p);
      f.pop_back();
    }
    for (std::int64_t v : f)
      if (v != 0) return false;
    return true;
  };
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    const auto f = coeffs(idx, k);
    bool irreducible = true;
    for (unsigned d = 1; d <= k / 2 && irreducible; ++d) {
      std::uint64_t qd = 1;
      for (unsigned i = 0; i < d; ++i) qd *= p;
      for (std::uint64_t j = 0; j < qd && irreducible; ++j) irreducible = !divides(coeffs(j, d), f);
    }
    if (irreducible) return {f.begin(), f.end()};
  }
  return {};
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const Field k = make_field(7);
  CHECK(k->order() == 7);
  CHECK(k->from_int(3).inv() == k->from_int(5));
  CHECK(*k->sqrt(k->from_int(2)) == k->from_int(3));
  CHECK_FALSE(k->sqrt(k->from_int(3)).has_value());
  CHECK(k->from_int(-1) == k->from_int(6));
  CHECK(to_string(k->from_int(3)) == "3");
  CHECK(to_string(k->from_int(4)) == "-3");
  CHECK(k->name() == "F_7");
}

TEST_CASE("field construction errors") {
  CHECK(code_of([] { make_field(2); }) == ErrorCode::EvenCharacteristic);
  CHECK(code_of([] { make_field(9); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_field(3, 2, std::vector<std::uint32_t>{2, 0, 1}); }) == ErrorCode::ReducibleModulus);
  CHECK(code_of([] { make_field(3, 17); }) == ErrorCode::UnsupportedField);
  const Field k = make_field(5);
  CHECK(code_of([&] { (void)k->zero().inv(); }) == ErrorCode::DivisionByZero);
  const Field l = make_field(7);
  CHECK(code_of([&] { (void)(k->one() + l->one()); }) == ErrorCode::MixedFields);
}

TEST_CASE("F_9 with modulus x^2 + 1") {
  const Field k = make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  CHECK(k->order() == 9);
  const Fq i = k->generator();
  CHECK(i * i == -k->one());
  CHECK(k->name() == "F_3^2");
  CHECK(make_field(3, 2)->modulus() == k->modulus());
}

TEST_CASE("default modulus is the index-smallest irreducible") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    for (unsigned deg : {2u, 3u, 4u}) {
      if (p >= 11 && deg == 4) continue;
      CAPTURE(p);
      CAPTURE(deg);
      CHECK(make_field(p, deg)->modulus() == smallest_irreducible(p, deg));
    }
  }
}

TEST_CASE("field axioms on random samples") {
  oracle::Rng rng(101);
  for (const Field& k : {make_field(7), make_field(3, 2), make_field(5, 3), make_field(31, 2), make_field(3, 7),
                         make_field(1000003)}) {
    CAPTURE(k->name());
    for (int t = 0; t < 1000; ++t) {
      const Fq a = rng.element(k), b = rng.element(k), c = rng.element(k);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == k->zero());
      if (!a.is_zero()) CHECK(a * a.inv() == k->one());
      CHECK(k->element(a.index()) == a);
    }
  }
}

TEST_CASE("prime field agrees with integer arithmetic") {
  oracle::Rng rng(7);
  const std::int64_t p = 1000003;
  const Field k = make_field(static_cast<std::uint32_t>(p));
  for (int t = 0; t < 1000; ++t) {
    const auto a = static_cast<std::int64_t>(rng.below(p));
    const auto b = static_cast<std::int64_t>(rng.below(p));
    CHECK((k->from_int(a) * k->from_int(b)).index() == static_cast<std::uint64_t>(a * b % p));
    CHECK((k->from_int(a) - k->from_int(b)).index() == static_cast<std::uint64_t>(oracle::mod(a - b, p)));
    CHECK(k->from_int(a).pow(static_cast<std::uint64_t>(b)).index() ==
          static_cast<std::uint64_t>(oracle::powmod(a, b, p)));
  }
}

TEST_CASE("Frobenius is additive and fixes exactly the prime field") {
  for (const Field& k : {make_field(3, 2), make_field(3, 7), make_field(5, 4), make_field(7, 3),
                         make_field(11, 3), make_field(13, 3), make_field(47, 2)}) {
    CAPTURE(k->name());
    REQUIRE(k->order() <= 3000);
    std::uint64_t fixed = 0;
    for (std::uint64_t i = 0; i < k->order(); ++i) {
      const Fq a = k->element(i);
      const Fq b = k->element((i * 31 + 5) % k->order());
      CHECK(k->frobenius(a + b) == k->frobenius(a) + k->frobenius(b));
      if (k->frobenius(a) == a) ++fixed;
    }
    CHECK(fixed == k->characteristic());
  }
}

TEST_CASE("square roots") {
  for (const Field& k : {make_field(7), make_field(13), make_field(17), make_field(3, 2), make_field(5, 3),
                         make_field(7, 2), make_field(41, 2)}) {
    CAPTURE(k->name());
    std::uint64_t squares = 0;
    for (std::uint64_t i = 0; i < k->order(); ++i) {
      const Fq a = k->element(i);
      const auto r = k->sqrt(a);
      CHECK(r.has_value() == k->is_square(a));
      if (!r) continue;
      ++squares;
      CHECK(*r * *r == a);
      CHECK(r->index() <= (-*r).index());
    }
    CHECK(squares == (k->order() + 1) / 2);
  }
}

TEST_CASE("embeddings") {
  const Field f7 = make_field(7), f49 = make_field(7, 2);
  CHECK(embed(f7->from_int(5), f49) == f49->from_int(5));

  const Field f9 = make_field(3, 2), f81 = make_field(3, 4);
  const Fq img = embed(f9->generator(), f81);
  // Lex-smallest root of x^2 + 1 in F_81.
  Fq expect;
  for (std::uint64_t i = 0; i < f81->order(); ++i) {
    const Fq z = f81->element(i);
    if ((z * z + f81->one()).is_zero()) {
      expect = z;
      break;
    }
  }
  CHECK(img == expect);

  oracle::Rng rng(3);
  for (auto [s, t] : {std::pair{f9, f81}, std::pair{make_field(5, 2), make_field(5, 4)},
                      std::pair{make_field(7), make_field(7, 3)}, std::pair{make_field(3, 2), make_field(3, 6)}}) {
    const Embedding e(s, t);
    for (int n = 0; n < 200; ++n) {
      const Fq a = rng.element(s), b = rng.element(s);
      CHECK(e(a + b) == e(a) + e(b));
      CHECK(e(a * b) == e(a) * e(b));
    }
  }
  CHECK(code_of([&] { Embedding(f9, make_field(3, 3)); }) == ErrorCode::IncompatibleDegrees);
}

TEST_CASE("primality") {
  std::set<std::uint64_t> small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (std::uint64_t n = 0; n < 50; ++n) CHECK(is_prime(n) == small.count(n) > 0);
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1000001));
}
