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

// JSON records for curves, witnesses and reports. Keys are emitted in
// sorted order and field elements as coordinate vectors, so identical
// inputs give byte-identical documents.
//
// Curve record: {"p": 11, "k": 2, "modulus": [1, 0, 1], "f": [[1, 0], ...]}
// with "modulus" (ascending, monic) present only for k > 1 and "f" listing
// coefficients in ascending degree, each as k integers in [0, p).

#pragma once

#include <json.hpp>

#include <string>

#include "richelot/cartier.hpp"
#include "richelot/curves.hpp"
#include "richelot/howe.hpp"
#include "richelot/involution.hpp"
#include "richelot/mobius.hpp"

namespace richelot {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json field_to_json(const FieldCtx& k);
/// Reads {p, k, modulus?}; `where` names the enclosing record in errors.
Field field_from_json(const Json& j, const std::string& where = "$");

Json fq_to_json(const Fq& a);
Fq fq_from_json(const Json& j, const Field& k, const std::string& where);

Json poly_to_json(const Poly& f);
Poly poly_from_json(const Json& j, const Field& k, const std::string& where);

Json curve_to_json(const HyperCurve& c);
/// Throws InvalidInput for malformed records; curve validation errors
/// (NotSquarefree, DegreeTooSmall) propagate with their own codes.
HyperCurve curve_from_json(const Json& j, const std::string& where = "$");

Json point_to_json(const ProjPoint& pt);
ProjPoint point_from_json(const Json& j, const Field& k, const std::string& where);

Json mobius_to_json(const MobiusMap& m);

Json witness_to_json(const HyperCurve& c, const WitnessEntry& w);
Json analysis_to_json(const Analysis& a, unsigned max_extension);

Json howe_report_to_json(const HoweReport& r);
HoweReport howe_report_from_json(const Json& j);

/// Either {p, k?, modulus?, f1, f2} (coefficient lists) or
/// {p, k?, modulus?, shared, extra1, extra2} (point lists, "inf" allowed).
HoweReport build_howe_from_json(const Json& j);

Json cartier_to_json(const CartierMatrix& m);
Json scan_to_json(std::span<const ScanRow> rows);

}  // namespace richelot
