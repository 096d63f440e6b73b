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

#include "richelot/report.hpp"

namespace richelot {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

const char* lift_name(bool sigma) { return sigma ? "sigma" : "tau"; }

}  // namespace

Json field_to_json(const FieldCtx& k) {
  Json j;
  j["p"] = k.characteristic();
  j["k"] = k.degree();
  if (k.degree() > 1) j["modulus"] = k.modulus();
  return j;
}

Field field_from_json(const Json& j, const std::string& where) {
  const std::int64_t p = integer(member(j, "p", where), where + ".p");
  if (p < 2 || p >= (std::int64_t{1} << 31)) bad(where + ".p", "expected a prime below 2^31");
  std::int64_t k = 1;
  if (j.contains("k")) k = integer(j["k"], where + ".k");
  if (k < 1 || k > static_cast<std::int64_t>(kMaxExtensionDegree)) {
    throw Error(ErrorCode::UnsupportedField, where + ".k: degree " + std::to_string(k) + " outside [1, 16]");
  }
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) {
    const Json& m = j["modulus"];
    if (!m.is_array()) bad(where + ".modulus", "expected an integer list");
    std::vector<std::uint32_t> coeffs;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::string at = where + ".modulus[" + std::to_string(i) + "]";
      const std::int64_t v = integer(m[i], at);
      if (v < 0 || v >= p) bad(at, "coefficient outside [0, p)");
      coeffs.push_back(static_cast<std::uint32_t>(v));
    }
    modulus = std::move(coeffs);
  }
  try {
    return make_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(k), std::move(modulus));
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.detail());
  }
}

Json fq_to_json(const Fq& a) {
  Json j = Json::array();
  for (std::uint32_t c : a.coords()) j.push_back(c);
  return j;
}

Fq fq_from_json(const Json& j, const Field& k, const std::string& where) {
  const std::int64_t p = k->characteristic();
  std::vector<std::int64_t> coords;
  if (j.is_number_integer() && k->degree() == 1) {
    coords.push_back(j.get<std::int64_t>());
  } else {
    if (!j.is_array() || j.size() != k->degree()) {
      bad(where, "expected a vector of " + std::to_string(k->degree()) + " integers");
    }
    for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(integer(j[i], where + "[" + std::to_string(i) + "]"));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= p) {
      bad(where + "[" + std::to_string(i) + "]", "coordinate " + std::to_string(coords[i]) + " outside [0, " +
                                                      std::to_string(p) + ")");
    }
  }
  return k->from_coords(coords);
}

Json poly_to_json(const Poly& f) {
  Json j = Json::array();
  for (const Fq& c : f.coeffs()) j.push_back(fq_to_json(c));
  return j;
}

Poly poly_from_json(const Json& j, const Field& k, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a coefficient list");
  std::vector<Fq> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(fq_from_json(j[i], k, where + "[" + std::to_string(i) + "]"));
  return Poly(k, std::move(coeffs));
}

Json curve_to_json(const HyperCurve& c) {
  Json j = field_to_json(*c.field());
  j["f"] = poly_to_json(c.f());
  return j;
}

HyperCurve curve_from_json(const Json& j, const std::string& where) {
  const Field k = field_from_json(j, where);
  Poly f = poly_from_json(member(j, "f", where), k, where + ".f");
  try {
    return HyperCurve(std::move(f));
  } catch (const Error& e) {
    throw Error(e.code(), where + ".f: " + e.detail());
  }
}

Json point_to_json(const ProjPoint& pt) {
  return pt.is_infinity() ? Json("inf") : fq_to_json(pt.x());
}

ProjPoint point_from_json(const Json& j, const Field& k, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") bad(where, "the only named point is \"inf\"");
    return ProjPoint::infinity();
  }
  return ProjPoint::finite(fq_from_json(j, k, where));
}

Json mobius_to_json(const MobiusMap& m) {
  return Json::array({Json::array({fq_to_json(m.a()), fq_to_json(m.b())}),
                      Json::array({fq_to_json(m.c()), fq_to_json(m.d())})});
}

Json witness_to_json(const HyperCurve& c, const WitnessEntry& w) {
  const InvolutionWitness& iw = w.involution;
  const DecompositionWitness& d = w.decomposition;
  Json j;
  j["involution"] = mobius_to_json(iw.involution);
  j["involution_text"] = to_string(iw.involution);
  j["lift_count"] = lift_count(c, iw.involution);
  j["working_field"] = field_to_json(*iw.working_field);
  Json pairing = Json::array();
  for (const auto& [p, q] : iw.pairing) pairing.push_back(Json::array({point_to_json(p), point_to_json(q)}));
  j["pairing"] = pairing;
  j["fixed_points"] = Json::array({point_to_json(iw.fixed_points[0]), point_to_json(iw.fixed_points[1])});
  j["conjugator"] = mobius_to_json(iw.conjugator);
  Json params = Json::array();
  for (const Fq& a : iw.normal_params) params.push_back(fq_to_json(a));
  j["normal_params"] = params;
  j["normal_form"] = to_string(HyperCurve(iw.normal_form));
  Json inv = Json::array();
  for (const Fq& v : pairing_invariants(iw.pairing)) inv.push_back(fq_to_json(v));
  j["pairing_invariants"] = inv;
  j["c_sigma"] = curve_to_json(d.c_sigma);
  j["c_tau"] = curve_to_json(d.c_tau);
  j["c_sigma_text"] = to_string(d.c_sigma, "v", "u");
  j["c_tau_text"] = to_string(d.c_tau, "v", "u");
  j["genus_split"] = Json::array({d.genus_split.first, d.genus_split.second});
  return j;
}

Json analysis_to_json(const Analysis& a, unsigned max_extension) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "analyze";
  j["input"] = curve_to_json(a.curve);
  j["genus"] = a.curve.genus();
  j["max_extension"] = max_extension;
  Json searched = field_to_json(*a.branch.field);
  searched["name"] = a.branch.field->name();
  j["searched_field"] = searched;
  Json branch = Json::array();
  for (const ProjPoint& p : a.branch.points()) branch.push_back(point_to_json(p));
  j["branch_points"] = branch;
  j["rejected_fixed_branch"] = a.rejected_fixed_branch;
  j["verdict"] = a.decomposed() ? "DECOMPOSED" : "NO-DECOMPOSITION-FOUND";
  Json ws = Json::array();
  for (const WitnessEntry& w : a.witnesses) ws.push_back(witness_to_json(a.curve, w));
  j["witnesses"] = ws;
  Json tf = Json::array();
  for (const ThreeFactorWitness& t : a.three_factor) {
    Json e;
    e["witnesses"] = t.witness_index;
    e["lifts"] = Json::array({lift_name(t.sigma_lift[0]), lift_name(t.sigma_lift[1]), lift_name(t.sigma_lift[2])});
    e["genera"] = t.genera;
    Json factors = Json::array();
    for (std::size_t i = 0; i < 3; ++i) factors.push_back(curve_to_json(a.factor(t, i)));
    e["factors"] = factors;
    tf.push_back(e);
  }
  j["three_factor"] = tf;
  return j;
}

Json howe_report_to_json(const HoweReport& r) {
  Json j;
  j["r"] = r.r;
  j["g1"] = r.g1;
  j["g2"] = r.g2;
  j["g3"] = r.g3;
  j["gC"] = r.gC;
  j["hyperelliptic"] = r.hyperelliptic;
  j["within_hypothesis"] = r.within_hypothesis;
  j["swapped"] = r.swapped;
  Json curves;
  curves["C1"] = curve_to_json(r.c1);
  curves["C2"] = curve_to_json(r.c2);
  if (r.c3) curves["C3"] = curve_to_json(*r.c3);
  j["curves"] = curves;
  Json f3 = field_to_json(*r.f3.field());
  f3["f"] = poly_to_json(r.f3);
  j["f3"] = f3;
  Json genera = Json::array();
  for (const HyperCurve& f : r.factors()) genera.push_back(f.genus());
  j["factor_genera"] = genera;
  j["notes"] = r.notes;
  return j;
}

HoweReport howe_report_from_json(const Json& j) {
  auto count = [&](const char* key) { return static_cast<int>(integer(member(j, key, "$"), std::string("$.") + key)); };
  auto flag = [&](const char* key) {
    const Json& v = member(j, key, "$");
    if (!v.is_boolean()) bad(std::string("$.") + key, "expected a boolean");
    return v.get<bool>();
  };
  const Json& curves = member(j, "curves", "$");
  std::optional<HyperCurve> c3;
  if (curves.contains("C3")) c3 = curve_from_json(curves["C3"], "$.curves.C3");
  const Json& f3 = member(j, "f3", "$");
  const Field k3 = field_from_json(f3, "$.f3");
  std::vector<std::string> notes;
  for (const Json& n : member(j, "notes", "$")) notes.push_back(n.get<std::string>());
  return HoweReport{curve_from_json(member(curves, "C1", "$.curves"), "$.curves.C1"),
                    curve_from_json(member(curves, "C2", "$.curves"), "$.curves.C2"),
                    poly_from_json(member(f3, "f", "$.f3"), k3, "$.f3.f"),
                    std::move(c3),
                    count("r"),
                    count("g1"),
                    count("g2"),
                    count("g3"),
                    count("gC"),
                    flag("hyperelliptic"),
                    flag("within_hypothesis"),
                    flag("swapped"),
                    std::move(notes)};
}

HoweReport build_howe_from_json(const Json& j) {
  const Field k = field_from_json(j, "$");
  if (j.contains("f1") || j.contains("f2")) {
    return build_howe(poly_from_json(member(j, "f1", "$"), k, "$.f1"), poly_from_json(member(j, "f2", "$"), k, "$.f2"));
  }
  HoweInput in{k, {}, {}, {}};
  for (const auto& [key, list] : {std::pair{"shared", &in.shared}, std::pair{"extra1", &in.extra1},
                                  std::pair{"extra2", &in.extra2}}) {
    const Json& arr = member(j, key, "$");
    if (!arr.is_array()) bad(std::string("$.") + key, "expected a point list");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      list->push_back(point_from_json(arr[i], k, std::string("$.") + key + "[" + std::to_string(i) + "]"));
    }
  }
  return build_howe(in);
}

Json cartier_to_json(const CartierMatrix& m) {
  Json j;
  j["genus"] = m.genus;
  j["exponent"] = m.exponent;
  Json rows = Json::array();
  for (const auto& row : m.rows) {
    Json r = Json::array();
    for (const Fq& v : row) r.push_back(fq_to_json(v));
    rows.push_back(r);
  }
  j["matrix"] = rows;
  j["superspecial"] = m.is_zero();
  return j;
}

Json scan_to_json(std::span<const ScanRow> rows) {
  Json out = Json::array();
  for (const ScanRow& r : rows) {
    Json j;
    j["p"] = r.p;
    j["p_mod_4"] = r.p % 4;
    j["p_mod_8"] = r.p % 8;
    j["p_mod_5"] = r.p % 5;
    switch (r.status) {
      case ScanStatus::Ok: j["is_superspecial"] = r.superspecial; break;
      case ScanStatus::BadReduction: j["is_superspecial"] = "NA"; break;
      case ScanStatus::BudgetExceeded: j["is_superspecial"] = "BudgetExceeded"; break;
    }
    out.push_back(j);
  }
  return out;
}

}  // namespace richelot
