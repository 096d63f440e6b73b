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

// Cartier-Manin matrices of y^2 = f(x): entry (i, j), 1 <= i, j <= g, is the
// coefficient of x^(i p - j) in f(x)^((p - 1) / 2). The curve is
// superspecial exactly when the matrix vanishes.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "richelot/curves.hpp"

namespace richelot {

/// Largest deg(f) * (p - 1) / 2 accepted; covers p < 2^13 at degree 14.
inline constexpr std::uint64_t kCartierBudget = 57344;

struct CartierMatrix {
  Field field;
  int genus = 0;
  std::uint64_t exponent = 0;        // (p - 1) / 2
  std::vector<std::vector<Fq>> rows;  // genus x genus

  bool is_zero() const;
};

/// Throws BudgetExceeded.
CartierMatrix cartier_matrix(const HyperCurve& c, std::uint64_t budget = kCartierBudget);

bool is_superspecial(const HyperCurve& c, std::uint64_t budget = kCartierBudget);

/// Hasse invariant test for genus one. Throws WrongGenus otherwise.
bool is_supersingular_elliptic(const HyperCurve& c, std::uint64_t budget = kCartierBudget);

/// Superspeciality of a curve whose Jacobian is separably isogenous to the
/// product of the given factors: true when every factor is superspecial.
bool superspecial_by_factors(std::span<const HyperCurve> factors, std::uint64_t budget = kCartierBudget);

enum class ScanStatus { Ok, BadReduction, BudgetExceeded };

struct ScanRow {
  std::uint32_t p = 0;
  ScanStatus status = ScanStatus::Ok;
  bool superspecial = false;  // meaningful when status == Ok
};

/// Integer polynomial (ascending coefficients) reduced modulo each prime.
/// Primes where the reduction drops degree or is not squarefree report
/// BadReduction. Throws NotPrime / EvenCharacteristic for invalid primes.
std::vector<ScanRow> congruence_scan(std::span<const std::int64_t> coeffs, std::span<const std::uint32_t> primes);

namespace serial {
std::vector<ScanRow> congruence_scan(std::span<const std::int64_t> coeffs, std::span<const std::uint32_t> primes);
}
namespace parallel {
std::vector<ScanRow> congruence_scan(std::span<const std::int64_t> coeffs, std::span<const std::uint32_t> primes);
}

/// CSV with header p,p_mod_4,p_mod_8,p_mod_5,is_superspecial.
std::string scan_to_csv(std::span<const ScanRow> rows);

/// Odd primes in [lo, hi].
std::vector<std::uint32_t> odd_primes(std::uint32_t lo, std::uint32_t hi);

}  // namespace richelot
