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

#include "richelot/involution.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace richelot {

namespace {

std::vector<ProjPoint> sorted_points(std::span<const ProjPoint> points) {
  std::vector<ProjPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  return pts;
}

bool fixes_any(const MobiusMap& m, std::span<const ProjPoint> pts) {
  return std::any_of(pts.begin(), pts.end(), [&](const ProjPoint& p) { return m(p) == p; });
}

// Candidates whose first transposition starts at index i: m swaps pts[i],
// pts[j] (i < j) and sends pts[k] to pts[l]. Fixed-point-free involutions
// have a second transposition, so k < l suffices for them; the All filter
// also tries l == k.
void scan_first_point(const Field& field, const std::vector<ProjPoint>& pts, std::size_t i,
                      InvolutionFilter filter, std::vector<MobiusMap>& out) {
  const std::size_t n = pts.size();
  for (std::size_t j = i + 1; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        if (filter == InvolutionFilter::FixedPointFree ? l <= k : l < k) continue;
        const auto m = MobiusMap::sending(field, {pts[i], pts[j], pts[k]}, {pts[j], pts[i], pts[l]});
        if (!m.is_involution() || !preserves(m, pts)) continue;
        if (filter == InvolutionFilter::FixedPointFree && fixes_any(m, pts)) continue;
        out.push_back(m);
      }
    }
  }
}

void dedupe(std::vector<MobiusMap>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Fq eigenvalue_at(const MobiusMap& m, const ProjPoint& fixed) {
  // M (x, 1)^T = kappa (x, 1)^T reads kappa off the second row; at infinity
  // the first row gives kappa = a.
  return fixed.is_infinity() ? m.a() : m.c() * fixed.x() + m.d();
}

Field quadratic_extension(const Field& k, unsigned max_extension) {
  const unsigned deg = 2 * k->degree();
  if (deg > max_extension || deg > kMaxExtensionDegree) {
    throw Error(ErrorCode::BoundExceeded,
                "fixed points need degree " + std::to_string(deg) + " > cap " + std::to_string(max_extension));
  }
  return make_field(k->characteristic(), deg);
}

ProjPoint embed_point(const ProjPoint& p, const Embedding& emb) {
  return p.is_infinity() ? p : ProjPoint::finite(emb(p.x()));
}

}  // namespace

// ---------------------------------------------------------------------------
// Involution search

std::vector<MobiusMap> serial::find_branch_involutions(const Field& field,
                                                       std::span<const ProjPoint> points,
                                                       InvolutionFilter filter) {
  const auto pts = sorted_points(points);
  std::vector<MobiusMap> out;
  if (pts.size() < 4) return out;
  for (std::size_t i = 0; i < pts.size(); ++i) scan_first_point(field, pts, i, filter, out);
  dedupe(out);
  return out;
}

std::vector<MobiusMap> parallel::find_branch_involutions(const Field& field,
                                                         std::span<const ProjPoint> points,
                                                         InvolutionFilter filter) {
  const auto pts = sorted_points(points);
  std::vector<MobiusMap> out;
  if (pts.size() < 4) return out;
  const auto n = static_cast<std::int64_t>(pts.size());
#pragma omp parallel
  {
    std::vector<MobiusMap> local;
#pragma omp for schedule(dynamic) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      scan_first_point(field, pts, static_cast<std::size_t>(i), filter, local);
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  dedupe(out);
  return out;
}

std::vector<MobiusMap> find_branch_involutions(const Field& field, std::span<const ProjPoint> points,
                                               InvolutionFilter filter) {
  return parallel::find_branch_involutions(field, points, filter);
}

std::vector<MobiusMap> find_branch_involutions(const BranchDivisor& b, InvolutionFilter filter) {
  const auto pts = b.points();
  return find_branch_involutions(b.field, pts, filter);
}

// ---------------------------------------------------------------------------
// Lifts

int lift_order(const HyperCurve& c, const MobiusMap& m) {
  if (!m.is_involution()) throw Error(ErrorCode::NotAnInvolution, to_string(m) + " is not an involution");
  const Field& k = m.field();
  const HyperCurve ck = c.base_change(k);
  const int g = ck.genus();
  const int n = 2 * g + 2;
  // Binary form F(X, Z) = Z^n f(X/Z); G(x) = F(a x + b, c x + d).
  const Poly num(k, {m.b(), m.a()});
  const Poly den(k, {m.d(), m.c()});
  std::vector<Poly> num_pow{Poly::constant(k, k->one())};
  std::vector<Poly> den_pow{Poly::constant(k, k->one())};
  for (int i = 1; i <= n; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  Poly transformed(k);
  for (int i = 0; i <= ck.degree(); ++i) {
    transformed += ck.f()[static_cast<std::size_t>(i)] * (num_pow[i] * den_pow[n - i]);
  }
  const std::size_t lead = static_cast<std::size_t>(ck.degree());
  const Fq lambda = transformed[lead] / ck.f().lead();
  if (!(transformed == ck.f() * lambda)) {
    throw Error(ErrorCode::InvalidInput, to_string(m) + " does not preserve the branch divisor");
  }
  const Fq delta = m.a() * m.a() + m.b() * m.c();
  return lambda == delta.pow(static_cast<std::uint64_t>(g + 1)) ? 2 : 4;
}

int lift_count(const HyperCurve& c, const MobiusMap& m) {
  const HyperCurve ck = c.base_change(m.field());
  const auto pts = branch_divisor_over(ck, m.field()).points();
  if (fixes_any(m, pts) || lift_order(c, m) != 2) {
    throw Error(ErrorCode::FixedBranchPoint,
                to_string(m) + " fixes a branch point; its lifts have order 4");
  }
  return 2;
}

int lift_quotient_genus(int genus, int fixed_fibres) {
  return (2 * genus + 2 - 2 * fixed_fibres) / 4;
}

// ---------------------------------------------------------------------------
// Normalization

InvolutionWitness normalize_involution(const HyperCurve& c, const MobiusMap& m,
                                       const NormalizeOptions& opts) {
  if (!m.is_involution()) throw Error(ErrorCode::NotAnInvolution, to_string(m) + " is not an involution");
  const Field& k = m.field();
  const HyperCurve ck = c.base_change(k);
  const BranchDivisor b = branch_divisor_over(ck, k);
  if (b.size() != static_cast<std::size_t>(2 * c.genus() + 2)) {
    const Field ext = splitting_context(ck.f(), opts.max_extension);
    InvolutionWitness w = normalize_involution(c, m.base_change(Embedding(k, ext)), opts);
    w.involution = m;
    return w;
  }
  const auto pts = b.points();
  if (!preserves(m, pts)) {
    throw Error(ErrorCode::InvalidInput, to_string(m) + " does not preserve the branch divisor");
  }
  if (fixes_any(m, pts)) {
    throw Error(ErrorCode::FixedBranchPoint, to_string(m) + " fixes a branch point");
  }

  // Fixed points of a trace-zero matrix: c z^2 - 2 a z - b = 0.
  std::array<ProjPoint, 2> fixed{ProjPoint::infinity(), ProjPoint::infinity()};
  if (m.c().is_zero()) {
    fixed[0] = ProjPoint::finite(-m.b() / (m.a() + m.a()));
  } else {
    const Fq disc = m.a() * m.a() + m.b() * m.c();
    const auto root = k->sqrt(disc);
    if (!root) {
      const Field ext = quadratic_extension(k, opts.max_extension);
      std::optional<Embedding> emb;
      try {
        emb.emplace(k, ext);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::FieldTooLarge) throw;
        throw Error(ErrorCode::BoundExceeded, e.detail());
      }
      InvolutionWitness w = normalize_involution(c, m.base_change(*emb), opts);
      w.involution = m;
      return w;
    }
    fixed[0] = ProjPoint::finite((m.a() + *root) / m.c());
    fixed[1] = ProjPoint::finite((m.a() - *root) / m.c());
  }
  std::sort(fixed.begin(), fixed.end());
  const Fq& f1 = fixed[0].x();

  const MobiusMap t = fixed[1].is_infinity()
                          ? MobiusMap(k, k->one(), -f1, k->zero(), k->one())
                          : MobiusMap(k, k->one(), -f1, k->one(), -fixed[1].x());

  std::vector<std::pair<ProjPoint, ProjPoint>> pairing;
  for (const ProjPoint& p : pts) {
    const ProjPoint q = m(p);
    if (p < q) pairing.emplace_back(p, q);
  }

  // Pick the pair whose image {+-w} has the index-smallest w^2 and scale it to {+-1}.
  std::size_t best = 0;
  std::vector<Fq> squares;
  std::vector<Fq> reps;
  for (const auto& [p, q] : pairing) {
    const Fq wp = t(p).x();
    const Fq wq = t(q).x();
    if (!(wp + wq).is_zero()) throw std::logic_error("conjugated involution is not x -> -x");
    squares.push_back(wp * wp);
    reps.push_back(std::min(wp, wq));
  }
  for (std::size_t i = 1; i < squares.size(); ++i) {
    if (squares[i] < squares[best]) best = i;
  }
  const Fq s0 = reps[best];
  const MobiusMap scale(k, k->one(), k->zero(), k->zero(), s0);
  const MobiusMap conj = scale * t;
  if (!(conj * m * conj.inverse() == MobiusMap::negation(k))) {
    throw std::logic_error("conjugator does not normalize the involution");
  }

  std::vector<Fq> params;
  for (std::size_t i = 0; i < squares.size(); ++i) {
    if (i != best) params.push_back(squares[i] / squares[best]);
  }
  std::sort(params.begin(), params.end());

  const Poly x2 = Poly::monomial(k, k->one(), 2);
  Poly nf = x2 - Poly::constant(k, k->one());
  for (const Fq& a : params) nf *= x2 - Poly::constant(k, a);

  return InvolutionWitness{m, k, std::move(pairing), fixed, conj, std::move(params), std::move(nf)};
}

std::vector<Fq> pairing_invariants(std::span<const std::pair<ProjPoint, ProjPoint>> pairing) {
  std::vector<Fq> out;
  for (std::size_t i = 0; i < pairing.size(); ++i) {
    for (std::size_t j = i + 1; j < pairing.size(); ++j) {
      const Fq l = cross_ratio(pairing[i].first, pairing[i].second, pairing[j].first, pairing[j].second);
      out.push_back(l + l.inv());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DecompositionWitness decompose(const HyperCurve& c, const InvolutionWitness& w) {
  const Field& k = w.working_field;
  if (w.normal_params.size() != static_cast<std::size_t>(c.genus())) {
    throw Error(ErrorCode::InvalidInput, "witness does not belong to this curve");
  }
  if (c.genus() < 2) {
    throw Error(ErrorCode::DegenerateQuotient, "genus " + std::to_string(c.genus()) + " has a rational quotient");
  }
  const Poly u = Poly::x(k);
  Poly f_sigma = u - Poly::constant(k, k->one());
  for (const Fq& a : w.normal_params) f_sigma *= u - Poly::constant(k, a);
  const Poly f_tau = u * f_sigma;
  HyperCurve cs(f_sigma);
  HyperCurve ct(f_tau);
  if (cs.genus() + ct.genus() != c.genus()) throw std::logic_error("quotient genera do not add up");
  const std::pair<int, int> split{cs.genus(), ct.genus()};
  return {std::move(cs), std::move(ct), split};
}

int lift_fixed_fibres(const InvolutionWitness& w, int genus, bool sigma_lift) {
  const Field& k = w.working_field;
  const MobiusMap m = w.involution.field()->same_as(*k)
                          ? w.involution
                          : w.involution.base_change(Embedding(w.involution.field(), k));
  const auto e = static_cast<std::uint64_t>(genus + 1);
  const Fq base = eigenvalue_at(m, w.fixed_points[0]).pow(e);
  const Fq mu = sigma_lift ? base : -base;
  int count = 0;
  for (const ProjPoint& f : w.fixed_points) {
    if (eigenvalue_at(m, f).pow(e) == mu) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Three-factor decompositions

std::vector<ThreeFactorWitness> find_three_factor(const HyperCurve& c,
                                                  std::span<const WitnessEntry> witnesses) {
  std::vector<ThreeFactorWitness> out;
  const int g = c.genus();
  const auto e = static_cast<std::uint64_t>(g + 1);
  const std::size_t n = witnesses.size();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const MobiusMap& mi = witnesses[i].involution.involution;
      const MobiusMap& mj = witnesses[j].involution.involution;
      const MobiusMap prod = mi * mj;
      if (!(prod == mj * mi)) continue;
      std::size_t l = n;
      for (std::size_t t = j + 1; t < n; ++t) {
        if (witnesses[t].involution.involution == prod) l = t;
      }
      if (l == n) continue;

      const std::array<std::size_t, 3> idx{i, j, l};
      Field big = witnesses[i].involution.working_field;
      for (std::size_t t : idx) {
        const Field& wf = witnesses[t].involution.working_field;
        if (wf->degree() > big->degree()) big = wf;
      }
      std::array<MobiusMap, 3> ms{mi, mj, prod};
      std::array<Fq, 3> base;
      for (std::size_t t = 0; t < 3; ++t) {
        const auto& w = witnesses[idx[t]].involution;
        ProjPoint f1 = w.fixed_points[0];
        if (!w.working_field->same_as(*big)) f1 = embed_point(f1, Embedding(w.working_field, big));
        if (!ms[t].field()->same_as(*big)) ms[t] = ms[t].base_change(Embedding(ms[t].field(), big));
        base[t] = eigenvalue_at(ms[t], f1).pow(e);
      }

      // Raw matrix products keep track of the scalars PGL_2 forgets.
      const auto& a1 = ms[0].entries();
      const auto& a2 = ms[1].entries();
      const std::array<Fq, 4> p12{a1[0] * a2[0] + a1[1] * a2[2], a1[0] * a2[1] + a1[1] * a2[3],
                                  a1[2] * a2[0] + a1[3] * a2[2], a1[2] * a2[1] + a1[3] * a2[3]};
      const std::array<Fq, 4> p21{a2[0] * a1[0] + a2[1] * a1[2], a2[0] * a1[1] + a2[1] * a1[3],
                                  a2[2] * a1[0] + a2[3] * a1[2], a2[2] * a1[1] + a2[3] * a1[3]};
      std::size_t lead = 0;
      while (ms[2].entries()[lead].is_zero()) ++lead;
      const Fq s = p12[lead] / ms[2].entries()[lead];
      const Fq rho = p21[lead] / p12[lead];
      // Lifts of anticommuting matrices commute only when rho^(g+1) = 1.
      if (!rho.pow(e).is_one()) continue;

      for (int e1 : {1, -1}) {
        for (int e2 : {1, -1}) {
          Fq mu3 = base[0] * base[1] / s.pow(e);
          if (e1 * e2 < 0) mu3 = -mu3;
          bool sigma3;
          if (mu3 == base[2]) {
            sigma3 = true;
          } else if (mu3 == -base[2]) {
            sigma3 = false;
          } else {
            throw std::logic_error("product of lifts is not a lift of the third involution");
          }
          const std::array<bool, 3> sig{e1 > 0, e2 > 0, sigma3};
          std::array<int, 3> genera{};
          int total = 0;
          for (std::size_t t = 0; t < 3; ++t) {
            const auto& d = witnesses[idx[t]].decomposition;
            genera[t] = sig[t] ? d.genus_split.first : d.genus_split.second;
            total += genera[t];
          }
          if (total == g) out.push_back({idx, sig, genera});
        }
      }
    }
  }
  return out;
}

const HyperCurve& Analysis::factor(const ThreeFactorWitness& t, std::size_t i) const {
  const auto& d = witnesses[t.witness_index[i]].decomposition;
  return t.sigma_lift[i] ? d.c_sigma : d.c_tau;
}

Analysis analyze(const HyperCurve& c, const AnalyzeOptions& opts) {
  if (c.genus() < 2) {
    throw Error(ErrorCode::WrongGenus, "analysis needs genus >= 2, got " + std::to_string(c.genus()));
  }
  Analysis out{c, branch_divisor(c, opts.max_extension), {}, 0, {}, {}};
  out.involutions = find_branch_involutions(out.branch);
  out.rejected_fixed_branch =
      find_branch_involutions(out.branch, InvolutionFilter::All).size() - out.involutions.size();
  for (const MobiusMap& m : out.involutions) {
    lift_count(c, m);
    InvolutionWitness w = normalize_involution(c, m, {opts.max_extension});
    DecompositionWitness d = decompose(c, w);
    out.witnesses.push_back({std::move(w), std::move(d)});
  }
  out.three_factor = find_three_factor(c, out.witnesses);
  return out;
}

}  // namespace richelot
