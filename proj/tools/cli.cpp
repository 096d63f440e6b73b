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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "richelot/report.hpp"

namespace richelot::cli {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw Error(ErrorCode::InvalidInput, "--format " + format + " is not supported by this command");
}

std::string pairing_text(const InvolutionWitness& w) {
  std::string s;
  for (const auto& [p, q] : w.pairing) s += (s.empty() ? "" : " ") + ("{" + to_string(p) + ", " + to_string(q) + "}");
  return s;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& path, unsigned max_ext, const std::string& format, std::ostream& out) {
  require_format(format, {"json", "text"});
  const HyperCurve c = curve_from_json(read_json(path));
  const Analysis a = analyze(c, {max_ext});
  if (format == "json") {
    out << analysis_to_json(a, max_ext).dump(2) << "\n";
    return kExitOk;
  }
  out << "curve: " << to_string(c) << " over " << c.field()->name() << " (genus " << c.genus() << ")\n";
  out << "searched field: " << a.branch.field->name() << " (extension cap " << max_ext << ")\n";
  out << "branch-preserving involutions: " << a.involutions.size()
      << " (rejected, fixing a branch point: " << a.rejected_fixed_branch << ")\n";
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    const auto& w = a.witnesses[i].involution;
    const auto& d = a.witnesses[i].decomposition;
    out << "witness " << i << ": " << to_string(w.involution) << " (2 lifts)\n";
    out << "  pairing: " << pairing_text(w) << "\n";
    out << "  fixed points: " << to_string(w.fixed_points[0]) << ", " << to_string(w.fixed_points[1]) << " over "
        << w.working_field->name() << "\n";
    out << "  normal form: " << to_string(HyperCurve(w.normal_form)) << "\n";
    out << "  C_sigma: " << to_string(d.c_sigma, "v", "u") << " (genus " << d.genus_split.first << ")\n";
    out << "  C_tau: " << to_string(d.c_tau, "v", "u") << " (genus " << d.genus_split.second << ")\n";
  }
  for (const ThreeFactorWitness& t : a.three_factor) {
    out << "three-factor: witnesses " << t.witness_index[0] << ", " << t.witness_index[1] << ", "
        << t.witness_index[2] << "; genera " << t.genera[0] << " + " << t.genera[1] << " + " << t.genera[2] << "\n";
    for (std::size_t i = 0; i < 3; ++i) out << "  " << to_string(a.factor(t, i), "v", "u") << "\n";
  }
  if (a.decomposed()) {
    out << "verdict: DECOMPOSED\n";
  } else {
    out << "verdict: NO-DECOMPOSITION-FOUND (searched over " << a.branch.field->name() << ")\n";
  }
  return kExitOk;
}

int cmd_howe(const std::string& path, const std::string& format, std::ostream& out) {
  require_format(format, {"json", "text"});
  const Json in = read_json(path);
  const HoweReport r = build_howe_from_json(in);
  if (format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "howe";
    j["input"] = in;
    j["report"] = howe_report_to_json(r);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "C1: " << to_string(r.c1, "y1") << " (genus " << r.g1 << ")\n";
  out << "C2: " << to_string(r.c2, "y2") << " (genus " << r.g2 << ")\n";
  out << "C3: y3^2 = " << to_string(r.f3) << " (genus " << r.g3 << (r.c3 ? "" : ", rational") << ")\n";
  out << "r = " << r.r << ", g1 = " << r.g1 << ", g2 = " << r.g2 << ", g3 = " << r.g3 << ", gC = " << r.gC << "\n";
  out << "hyperelliptic: " << (r.hyperelliptic ? "yes" : "no") << "\n";
  out << "Jacobian factors:";
  for (const HyperCurve& f : r.factors()) out << " [genus " << f.genus() << "]";
  out << "\n";
  for (const std::string& n : r.notes) out << "note: " << n << "\n";
  return kExitOk;
}

int cmd_cartier(const std::string& path, const std::string& primes, const std::string& format, std::ostream& out) {
  require_format(format, {"json", "text", "csv"});
  const Json in = read_json(path);
  const HyperCurve c = curve_from_json(in);
  if (primes.empty()) {
    const CartierMatrix m = cartier_matrix(c);
    if (format == "json") {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["command"] = "cartier";
      j["input"] = in;
      j["cartier"] = cartier_to_json(m);
      out << j.dump(2) << "\n";
    } else if (format == "csv") {
      const std::uint32_t p = c.field()->characteristic();
      const ScanRow row{p, ScanStatus::Ok, m.is_zero()};
      out << scan_to_csv(std::span(&row, 1));
    } else {
      out << "Cartier-Manin matrix of " << to_string(c) << " over " << c.field()->name() << ":\n";
      for (const auto& row : m.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "  ") << to_string(row[i]);
        out << "\n";
      }
      out << "superspecial: " << (m.is_zero() ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }
  if (c.field()->degree() != 1) throw Error(ErrorCode::InvalidInput, "--primes needs a curve over a prime field");
  // Coefficients are lifted to the symmetric range (-p/2, p/2) before reduction.
  std::vector<std::int64_t> coeffs;
  const std::int64_t p = c.field()->characteristic();
  for (const Fq& v : c.f().coeffs()) {
    const std::int64_t x = v.coord(0);
    coeffs.push_back(x > p / 2 ? x - p : x);
  }
  const auto list = parse_primes(primes);
  const auto rows = congruence_scan(coeffs, list);
  if (format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "cartier";
    j["input"] = in;
    j["integer_coefficients"] = coeffs;
    j["scan"] = scan_to_json(rows);
    out << j.dump(2) << "\n";
  } else {
    out << scan_to_csv(rows);
  }
  return kExitOk;
}

int cmd_examples(const std::string& name, std::ostream& out) {
  std::vector<std::string> names;
  if (name == "all") {
    names = example_names();
  } else {
    names.push_back(name);
  }
  int status = kExitOk;
  for (const std::string& n : names) {
    const std::string report = example_report(n);
    out << report;
    const std::string diff = unified_diff(golden(n), report, "golden/example" + n + ".txt", "computed");
    if (diff.empty()) {
      out << "golden: OK\n\n";
    } else {
      out << "golden: MISMATCH\n" << diff << "\n";
      status = kExitMismatch;
    }
  }
  return status;
}

}  // namespace

std::vector<std::uint32_t> parse_primes(const std::string& spec) {
  auto number = [&](const std::string& s) -> std::uint32_t {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || v >= (1UL << 31)) {
      throw Error(ErrorCode::InvalidInput, "--primes: cannot read \"" + s + "\"");
    }
    return static_cast<std::uint32_t>(v);
  };
  if (const auto dash = spec.find('-'); dash != std::string::npos) {
    return odd_primes(number(spec.substr(0, dash)), number(spec.substr(dash + 1)));
  }
  std::vector<std::uint32_t> out;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(number(item));
  return out;
}

std::string unified_diff(std::string_view expected, std::string_view actual, std::string_view expected_name,
                         std::string_view actual_name) {
  if (expected == actual) return {};
  const auto a = split_lines(expected);
  const auto b = split_lines(actual);
  // Longest common subsequence table, then one hunk over both files.
  std::vector<std::vector<std::size_t>> lcs(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = a.size(); i-- > 0;) {
    for (std::size_t j = b.size(); j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::ostringstream os;
  os << "--- " << expected_name << "\n+++ " << actual_name << "\n";
  os << "@@ -1," << a.size() << " +1," << b.size() << " @@\n";
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && a[i] == b[j]) {
      os << " " << a[i++] << "\n";
      ++j;
    } else if (j < b.size() && (i == a.size() || lcs[i][j + 1] >= lcs[i + 1][j])) {
      os << "+" << b[j++] << "\n";
    } else {
      os << "-" << a[i++] << "\n";
    }
  }
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decomposed Richelot isogenies, generalized Howe curves and Cartier-Manin matrices"};
  app.require_subcommand(1);
  std::string file, format = "text", primes, example;
  unsigned max_ext = kDefaultMaxExtension;

  auto* analyze_cmd = app.add_subcommand("analyze", "Search a curve for decomposed Richelot isogenies");
  analyze_cmd->add_option("curve", file, "Curve record (JSON)")->required();
  analyze_cmd->add_option("--max-ext", max_ext, "Cap on the absolute extension degree")->check(CLI::Range(1u, 16u));
  analyze_cmd->add_option("--format", format, "json or text");

  auto* howe_cmd = app.add_subcommand("howe", "Build a generalized Howe curve");
  howe_cmd->add_option("input", file, "Howe input (JSON)")->required();
  howe_cmd->add_option("--format", format, "json or text");

  auto* cartier_cmd = app.add_subcommand("cartier", "Cartier-Manin matrix or a superspeciality scan");
  cartier_cmd->add_option("curve", file, "Curve record (JSON)")->required();
  cartier_cmd->add_option("--primes,--prime-range", primes, "Scan primes: LO-HI or p1,p2,...");
  cartier_cmd->add_option("--format", format, "json, text or csv");

  auto* examples_cmd = app.add_subcommand("examples", "Reproduce the worked examples against golden files");
  examples_cmd->add_option("name", example, "5.1 ... 5.5 or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: InvalidInput: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(file, max_ext, format, out);
    if (*howe_cmd) return cmd_howe(file, format, out);
    if (*cartier_cmd) return cmd_cartier(file, primes, format, out);
    return cmd_examples(example, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace richelot::cli
