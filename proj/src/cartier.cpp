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

#include "richelot/cartier.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace richelot {

bool CartierMatrix::is_zero() const {
  return std::all_of(rows.begin(), rows.end(), [](const std::vector<Fq>& row) {
    return std::all_of(row.begin(), row.end(), [](const Fq& v) { return v.is_zero(); });
  });
}

CartierMatrix cartier_matrix(const HyperCurve& c, std::uint64_t budget) {
  const std::uint64_t p = c.field()->characteristic();
  const std::uint64_t e = (p - 1) / 2;
  const auto deg = static_cast<std::uint64_t>(c.degree());
  if (deg * e > budget) {
    throw Error(ErrorCode::BudgetExceeded, "deg(f) * (p-1)/2 = " + std::to_string(deg * e) +
                                               " exceeds budget " + std::to_string(budget));
  }
  const int g = c.genus();
  const Poly h = pow_truncated(c.f(), e, static_cast<std::size_t>(g) * p);
  CartierMatrix m{c.field(), g, e, {}};
  for (int i = 1; i <= g; ++i) {
    std::vector<Fq> row;
    for (int j = 1; j <= g; ++j) row.push_back(h[static_cast<std::size_t>(i) * p - j]);
    m.rows.push_back(std::move(row));
  }
  return m;
}

bool is_superspecial(const HyperCurve& c, std::uint64_t budget) {
  return cartier_matrix(c, budget).is_zero();
}

bool is_supersingular_elliptic(const HyperCurve& c, std::uint64_t budget) {
  if (c.genus() != 1) {
    throw Error(ErrorCode::WrongGenus, "expected genus 1, got " + std::to_string(c.genus()));
  }
  return is_superspecial(c, budget);
}

bool superspecial_by_factors(std::span<const HyperCurve> factors, std::uint64_t budget) {
  return std::all_of(factors.begin(), factors.end(),
                     [&](const HyperCurve& f) { return is_superspecial(f, budget); });
}

namespace {

void check_primes(std::span<const std::uint32_t> primes) {
  for (std::uint32_t p : primes) {
    if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "scan prime 2");
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
}

ScanRow scan_one(std::span<const std::int64_t> coeffs, std::uint32_t p) {
  ScanRow row;
  row.p = p;
  const Field k = make_field(p);
  const Poly f = Poly::from_ints(k, coeffs);
  if (f.degree() != static_cast<int>(coeffs.size()) - 1 || f.degree() < 3 || !is_squarefree(f)) {
    row.status = ScanStatus::BadReduction;
    return row;
  }
  try {
    row.superspecial = is_superspecial(HyperCurve(f));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    row.status = ScanStatus::BudgetExceeded;
  }
  return row;
}

}  // namespace

std::vector<ScanRow> serial::congruence_scan(std::span<const std::int64_t> coeffs,
                                             std::span<const std::uint32_t> primes) {
  check_primes(primes);
  std::vector<ScanRow> out;
  out.reserve(primes.size());
  for (std::uint32_t p : primes) out.push_back(scan_one(coeffs, p));
  return out;
}

std::vector<ScanRow> parallel::congruence_scan(std::span<const std::int64_t> coeffs,
                                               std::span<const std::uint32_t> primes) {
  check_primes(primes);
  std::vector<ScanRow> out(primes.size());
  const auto n = static_cast<std::int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) out[i] = scan_one(coeffs, primes[i]);
  return out;
}

std::vector<ScanRow> congruence_scan(std::span<const std::int64_t> coeffs, std::span<const std::uint32_t> primes) {
  return parallel::congruence_scan(coeffs, primes);
}

std::string scan_to_csv(std::span<const ScanRow> rows) {
  std::ostringstream os;
  os << "p,p_mod_4,p_mod_8,p_mod_5,is_superspecial\n";
  for (const ScanRow& r : rows) {
    os << r.p << ',' << r.p % 4 << ',' << r.p % 8 << ',' << r.p % 5 << ',';
    switch (r.status) {
      case ScanStatus::Ok: os << (r.superspecial ? "true" : "false"); break;
      case ScanStatus::BadReduction: os << "NA"; break;
      case ScanStatus::BudgetExceeded: os << "BudgetExceeded"; break;
    }
    os << '\n';
  }
  return os.str();
}

std::vector<std::uint32_t> odd_primes(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t n = std::max<std::uint32_t>(lo, 3); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(static_cast<std::uint32_t>(n));
  }
  return out;
}

}  // namespace richelot
