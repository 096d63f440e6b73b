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

// Decomposed Richelot isogenies from involutions of hyperelliptic curves.
//
// An automorphism sigma of order 2 of y^2 = f(x), other than the
// hyperelliptic involution, acts on P^1 as a Mobius involution m that
// permutes the branch points without fixing any of them. Moving the two
// fixed points of m to 0 and infinity puts the curve in the normal form
//
//     y^2 = (x^2 - 1)(x^2 - a_1) ... (x^2 - a_g),
//
// and the quotients by sigma and by sigma composed with the hyperelliptic
// involution are
//
//     C_sigma: v^2 = (u - 1)(u - a_1) ... (u - a_g)        (u = x^2, v = y)
//     C_tau:   v^2 = u (u - 1)(u - a_1) ... (u - a_g)      (u = x^2, v = x y)
//
// with g(C) = g(C_sigma) + g(C_tau). J(C) -> J(C_sigma) x J(C_tau) is then
// a decomposed Richelot isogeny.

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "richelot/curves.hpp"
#include "richelot/mobius.hpp"

namespace richelot {

enum class InvolutionFilter {
  FixedPointFree,  // involutions moving every branch point
  All,             // every involution preserving the branch set
};

/// Involutions of P^1 preserving the branch set, canonical and sorted.
std::vector<MobiusMap> find_branch_involutions(const BranchDivisor& b,
                                               InvolutionFilter filter = InvolutionFilter::FixedPointFree);
std::vector<MobiusMap> find_branch_involutions(const Field& field, std::span<const ProjPoint> points,
                                               InvolutionFilter filter = InvolutionFilter::FixedPointFree);

namespace serial {
std::vector<MobiusMap> find_branch_involutions(const Field& field, std::span<const ProjPoint> points,
                                               InvolutionFilter filter = InvolutionFilter::FixedPointFree);
}
namespace parallel {
std::vector<MobiusMap> find_branch_involutions(const Field& field, std::span<const ProjPoint> points,
                                               InvolutionFilter filter = InvolutionFilter::FixedPointFree);
}

/// Order of the lifts of a branch-preserving involution m to C: 2 when m
/// moves every branch point, 4 when it fixes two of them. Computed from the
/// action of m on the binary form of degree 2g+2 attached to f.
int lift_order(const HyperCurve& c, const MobiusMap& m);

/// Number of automorphisms of C over m; always 2 ({sigma, sigma o iota}).
/// Throws FixedBranchPoint when m fixes a branch point.
int lift_count(const HyperCurve& c, const MobiusMap& m);

struct InvolutionWitness {
  MobiusMap involution;  // over the splitting field
  Field working_field;   // splitting field, or its quadratic extension
  std::vector<std::pair<ProjPoint, ProjPoint>> pairing;  // sorted, over working_field
  std::array<ProjPoint, 2> fixed_points;                  // sorted; first goes to 0
  MobiusMap conjugator;  // conjugator * m * conjugator^-1 = (x -> -x)
  std::vector<Fq> normal_params;  // a_1..a_g, sorted
  Poly normal_form;               // (x^2 - 1) prod (x^2 - a_i)
};

struct NormalizeOptions {
  unsigned max_extension = kDefaultMaxExtension;
};

/// Throws FixedBranchPoint, NotAnInvolution, BoundExceeded.
InvolutionWitness normalize_involution(const HyperCurve& c, const MobiusMap& m,
                                       const NormalizeOptions& opts = {});

/// Pairwise cross-ratio invariants lambda + 1/lambda of the pairing, one per
/// unordered pair of pairs, sorted. Conjugation-invariant.
std::vector<Fq> pairing_invariants(std::span<const std::pair<ProjPoint, ProjPoint>> pairing);

struct DecompositionWitness {
  HyperCurve c_sigma;
  HyperCurve c_tau;
  std::pair<int, int> genus_split;
};

/// Quotient curves read off the normal form. Throws DegenerateQuotient when
/// a quotient would be rational (g(C) < 2).
DecompositionWitness decompose(const HyperCurve& c, const InvolutionWitness& w);

/// Genus of C / <lift> from the fixed fibres of the lift over the two fixed
/// points of m: 2g - 2 = 2 (2g' - 2) + #fixed points.
int lift_quotient_genus(int genus, int fixed_fibres);

/// Fixed fibres (0, 1 or 2) over the fixed points of m of the lift whose
/// action on the fibre over fixed_points[0] is trivial (sigma_lift) or not.
int lift_fixed_fibres(const InvolutionWitness& w, int genus, bool sigma_lift);

struct WitnessEntry {
  InvolutionWitness involution;
  DecompositionWitness decomposition;
};

/// Three commuting involutions m1, m2, m3 = m1 m2 of P^1 whose lifts
/// generate a Klein four-group with rational total quotient, giving
/// J(C) -> J(C/s1) x J(C/s2) x J(C/s3).
struct ThreeFactorWitness {
  std::array<std::size_t, 3> witness_index;  // into Analysis::witnesses
  std::array<bool, 3> sigma_lift;            // true: C_sigma factor, false: C_tau factor
  std::array<int, 3> genera;
};

struct AnalyzeOptions {
  unsigned max_extension = kDefaultMaxExtension;
};

struct Analysis {
  HyperCurve curve;
  BranchDivisor branch;
  std::vector<MobiusMap> involutions;
  std::size_t rejected_fixed_branch = 0;
  std::vector<WitnessEntry> witnesses;
  std::vector<ThreeFactorWitness> three_factor;

  bool decomposed() const noexcept { return !witnesses.empty(); }
  const HyperCurve& factor(const ThreeFactorWitness& t, std::size_t i) const;
};

std::vector<ThreeFactorWitness> find_three_factor(const HyperCurve& c,
                                                  std::span<const WitnessEntry> witnesses);

/// Full pipeline: branch divisor, involution search, normalization and
/// decomposition. Requires genus >= 2 (WrongGenus otherwise).
Analysis analyze(const HyperCurve& c, const AnalyzeOptions& opts = {});

}  // namespace richelot
