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

// Generalized Howe curves: the normalized fiber product C of two double
// covers C1: y1^2 = f1(x), C2: y2^2 = f2(x) of P^1 sharing r branch points.
// C3: y3^2 = f1 f2 / gcd(f1, f2)^2 is the third intermediate cover, and
//
//     g(C)  = 2 (g1 + g2) + 1 - r,
//     g(C3) = g1 + g2 + 1 - r,
//
// so J(C) ~ J(C1) x J(C2) x J(C3), and C is hyperelliptic exactly when C3
// is rational (r = g1 + g2 + 1).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "richelot/curves.hpp"
#include "richelot/involution.hpp"

namespace richelot {

/// Branch data on P^1 given as point lists. The branch set of C1 is
/// shared + extra1, that of C2 is shared + extra2; infinity may appear in
/// any list (an odd-degree model).
struct HoweInput {
  Field field;
  std::vector<ProjPoint> shared;
  std::vector<ProjPoint> extra1;
  std::vector<ProjPoint> extra2;
};

struct GenusData {
  int gC = 0;
  int g3 = 0;
  bool hyperelliptic = false;
  bool within_hypothesis = false;  // gC >= 4
};

/// Pure genus arithmetic. Throws RangeViolation unless g1, g2 >= 1 and
/// 0 <= r <= g1 + g2 + 1.
GenusData genus_formulas(int g1, int g2, int r);

struct HoweReport {
  HyperCurve c1;
  HyperCurve c2;
  Poly f3;                        // right-hand side of C3, always present
  std::optional<HyperCurve> c3;   // absent when C3 is rational
  int r = 0;
  int g1 = 0;
  int g2 = 0;
  int g3 = 0;
  int gC = 0;
  bool hyperelliptic = false;
  bool within_hypothesis = false;
  bool swapped = false;           // inputs reordered so that g1 <= g2
  std::vector<std::string> notes;

  /// Nonrational factors of J(C) ~ J(C1) x J(C2) x J(C3).
  std::vector<HyperCurve> factors() const;
};

/// Throws DuplicatePoints, IdenticalBranchSets, ConventionViolation.
HoweReport build_howe(const HoweInput& input);

/// The same construction from the two right-hand sides; shared points are
/// the roots of gcd(f1, f2), plus infinity when both degrees are odd.
HoweReport build_howe(const Poly& f1, const Poly& f2);

/// C1 = C_sigma, C2 = C_tau for an involution witness of C; the resulting
/// report must be hyperelliptic with gC = g(C). Throws std::logic_error
/// when it is not.
HoweReport roundtrip_from_involution(const HyperCurve& c, const InvolutionWitness& w);

/// For hyperelliptic reports: C as a double cover z^2 = F(t) of the line
/// C3 ~ P^1, with x = M(t^2) for a Mobius map M sending 0 and infinity to
/// the two branch points of C3. Throws InvalidInput when g3 > 0.
HyperCurve hyperelliptic_model(const HoweReport& report, unsigned max_degree = kDefaultMaxExtension);

/// Plane model y^4 + c2(x) y^2 + c0(x) = 0 satisfied by y = y1 + y2.
struct PlaneQuartic {
  Poly c2;  // -2 (f1 + f2)
  Poly c0;  // (f1 - f2)^2
};

PlaneQuartic plane_model(const HoweReport& report);

std::string to_string(const PlaneQuartic& q);

}  // namespace richelot
