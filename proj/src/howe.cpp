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

#include "richelot/howe.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace richelot {

namespace {

HyperCurve cover(const Poly& f, const char* name) {
  try {
    return HyperCurve(f);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotSquarefree) {
      throw Error(ErrorCode::DuplicatePoints, std::string(name) + " has a repeated branch point");
    }
    if (e.code() == ErrorCode::DegreeTooSmall) {
      throw Error(ErrorCode::ConventionViolation,
                  std::string(name) + " must have genus >= 1 (deg >= 3), got degree " +
                      std::to_string(f.degree()));
    }
    throw;
  }
}

Poly product_of_linears(const Field& k, const std::vector<const ProjPoint*>& pts) {
  Poly f = Poly::constant(k, k->one());
  for (const ProjPoint* p : pts) {
    if (!p->is_infinity()) f *= Poly(k, {-p->x(), k->one()});
  }
  return f;
}

}  // namespace

GenusData genus_formulas(int g1, int g2, int r) {
  if (g1 < 1 || g2 < 1) {
    throw Error(ErrorCode::RangeViolation, "genera must be >= 1, got (" + std::to_string(g1) + ", " +
                                               std::to_string(g2) + ")");
  }
  if (r < 0 || r > g1 + g2 + 1) {
    throw Error(ErrorCode::RangeViolation,
                "r = " + std::to_string(r) + " outside [0, " + std::to_string(g1 + g2 + 1) + "]");
  }
  GenusData d;
  d.gC = 2 * (g1 + g2) + 1 - r;
  d.g3 = g1 + g2 + 1 - r;
  d.hyperelliptic = d.g3 == 0;
  d.within_hypothesis = d.gC >= 4;
  return d;
}

std::vector<HyperCurve> HoweReport::factors() const {
  std::vector<HyperCurve> out{c1, c2};
  if (c3) out.push_back(*c3);
  return out;
}

HoweReport build_howe(const HoweInput& input) {
  const Field& k = input.field;
  std::vector<const ProjPoint*> all;
  for (const auto* list : {&input.shared, &input.extra1, &input.extra2}) {
    for (const ProjPoint& p : *list) {
      if (!p.is_infinity()) require_same_field(k.get(), p.x().ctx());
      all.push_back(&p);
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (*all[i] == *all[j]) {
        throw Error(ErrorCode::DuplicatePoints, "point " + to_string(*all[i]) + " listed twice");
      }
    }
  }
  if (input.extra1.empty() && input.extra2.empty()) {
    throw Error(ErrorCode::IdenticalBranchSets, "C1 and C2 have the same branch set");
  }
  std::vector<const ProjPoint*> b1, b2;
  for (const ProjPoint& p : input.shared) {
    b1.push_back(&p);
    b2.push_back(&p);
  }
  for (const ProjPoint& p : input.extra1) b1.push_back(&p);
  for (const ProjPoint& p : input.extra2) b2.push_back(&p);
  for (const auto& [b, name] : {std::pair{&b1, "C1"}, std::pair{&b2, "C2"}}) {
    if (b->size() < 4 || b->size() % 2 != 0) {
      throw Error(ErrorCode::ConventionViolation, std::string(name) + " needs an even number >= 4 of branch points, got " +
                                                      std::to_string(b->size()));
    }
  }
  return build_howe(product_of_linears(k, b1), product_of_linears(k, b2));
}

HoweReport build_howe(const Poly& f1, const Poly& f2) {
  require_same_field(f1.field().get(), f2.field().get());
  HyperCurve c1 = cover(f1, "C1");
  HyperCurve c2 = cover(f2, "C2");
  const Poly h = gcd(f1, f2);
  const int r = h.degree() + ((f1.degree() % 2 == 1 && f2.degree() % 2 == 1) ? 1 : 0);
  const Poly f3 = divrem(f1 * f2, h * h).quotient;
  if (f3.degree() <= 0) {
    throw Error(ErrorCode::IdenticalBranchSets, "C1 and C2 have the same branch set; the fiber product is reducible");
  }

  bool swapped = false;
  if (c1.genus() > c2.genus()) {
    std::swap(c1, c2);
    swapped = true;
  }
  const int g1 = c1.genus();
  const int g2 = c2.genus();
  const GenusData d = genus_formulas(g1, g2, r);

  std::optional<HyperCurve> c3;
  if (f3.degree() >= 3) c3.emplace(f3);
  const int g3 = c3 ? c3->genus() : 0;
  if (g3 != d.g3) throw std::logic_error("genus of C3 disagrees with the genus formula");

  HoweReport rep{std::move(c1), std::move(c2), f3, std::move(c3), r, g1, g2, g3, d.gC,
                 d.hyperelliptic, d.within_hypothesis, swapped, {}};
  if (swapped) rep.notes.emplace_back("inputs reordered so that g1 <= g2");
  if (!d.within_hypothesis) {
    rep.notes.emplace_back("gC < 4: outside the hypothesis of the hyperellipticity criterion");
  }
  if (d.hyperelliptic) rep.notes.emplace_back("C3 is rational; J(C) ~ J(C1) x J(C2)");
  return rep;
}

HoweReport roundtrip_from_involution(const HyperCurve& c, const InvolutionWitness& w) {
  const DecompositionWitness d = decompose(c, w);
  HoweReport rep = build_howe(d.c_sigma.f(), d.c_tau.f());
  if (!rep.hyperelliptic || rep.r != rep.g1 + rep.g2 + 1 || rep.gC != c.genus()) {
    throw std::logic_error("round trip through the fiber product does not recover the curve");
  }
  return rep;
}

HyperCurve hyperelliptic_model(const HoweReport& report, unsigned max_degree) {
  if (!report.hyperelliptic) {
    throw Error(ErrorCode::InvalidInput, "C3 has genus " + std::to_string(report.g3) + "; C is not hyperelliptic");
  }
  const Poly& f3 = report.f3;
  Field k = f3.field();
  // x = (alpha s + beta) / (gamma s + delta), s = t^2.
  Fq alpha = k->one(), beta = k->zero(), gamma = k->zero(), delta = k->one();
  if (f3.degree() == 1) {
    beta = -f3[0] / f3[1];
  } else {
    k = splitting_context(f3, max_degree);
    const auto roots = roots_in_field(f3, k);
    alpha = -roots[1];
    beta = roots[0];
    gamma = -k->one();
  }
  const Poly f1 = f3.field()->same_as(*k) ? report.c1.f() : embed(report.c1.f(), Embedding(f3.field(), k));
  const int e = f1.degree() + f1.degree() % 2;
  const Poly num(k, {beta, k->zero(), alpha});
  const Poly den(k, {delta, k->zero(), gamma});
  Poly big(k);
  for (int i = 0; i <= f1.degree(); ++i) {
    big += f1[static_cast<std::size_t>(i)] * (pow(num, static_cast<std::uint64_t>(i)) *
                                               pow(den, static_cast<std::uint64_t>(e - i)));
  }
  Poly odd = Poly::constant(k, big.lead());
  for (const auto& [fac, mult] : squarefree_factorization(big)) {
    if (mult % 2 == 1) odd *= fac;
  }
  return HyperCurve(odd);
}

PlaneQuartic plane_model(const HoweReport& report) {
  const Poly& f1 = report.c1.f();
  const Poly& f2 = report.c2.f();
  const Field& k = f1.field();
  const Poly diff = f1 - f2;
  return {(f1 + f2) * (-k->from_int(2)), diff * diff};
}

std::string to_string(const PlaneQuartic& q) {
  struct Term {
    Fq c;
    std::size_t xdeg;
    int ydeg;
  };
  std::vector<Term> terms;
  const Field& k = q.c2.field();
  terms.push_back({k->one(), 0, 4});
  for (const auto& [poly, ydeg] : {std::pair{&q.c2, 2}, std::pair{&q.c0, 0}}) {
    for (std::size_t i = poly->coeffs().size(); i-- > 0;) {
      if (!poly->coeffs()[i].is_zero()) terms.push_back({poly->coeffs()[i], i, ydeg});
    }
  }
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms) {
    std::string s = to_string(t.c);
    const bool negative = s[0] == '-';
    if (negative) s.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    std::vector<std::string> parts;
    if (s != "1" || (t.xdeg == 0 && t.ydeg == 0)) parts.push_back(s);
    if (t.xdeg > 0) parts.push_back(t.xdeg == 1 ? "x" : "x^" + std::to_string(t.xdeg));
    if (t.ydeg > 0) parts.push_back("y^" + std::to_string(t.ydeg));
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
    first = false;
  }
  os << " = 0";
  return os.str();
}

}  // namespace richelot
