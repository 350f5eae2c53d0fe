// Copyright 2026 The digraph-energy Authors
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

#include "digraph_energy/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "digraph_energy/errors.hpp"
#include "digraph_energy/json_io.hpp"
#include "digraph_energy/oracle.hpp"

namespace digraph_energy {

namespace {

constexpr int kHumanDigits = 9;
constexpr std::size_t kViolationsShown = 20;

// ---------------------------------------------------------------------------
// Formatting

std::string num(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  std::ostringstream s;
  s << std::setprecision(kHumanDigits) << x;
  return s.str();
}

std::string num(const std::optional<double>& x) { return x ? num(*x) : std::string("n/a"); }

std::string complex_text(std::complex<double> z) {
  if (z.imag() == 0.0) return num(z.real());
  std::string re = num(z.real());
  return re + (z.imag() < 0 ? " - " : " + ") + num(std::fabs(z.imag())) + "i";
}

class Painter {
 public:
  explicit Painter(CliStyle style) : color_(style.color) {}
  std::string bold(std::string_view s) const { return wrap("1", s); }
  std::string good(std::string_view s) const { return wrap("32", s); }
  std::string bad(std::string_view s) const { return wrap("31", s); }
  std::string warn(std::string_view s) const { return wrap("33", s); }

 private:
  std::string wrap(std::string_view code, std::string_view s) const {
    if (!color_) return std::string(s);
    return "\x1b[" + std::string(code) + "m" + std::string(s) + "\x1b[0m";
  }
  bool color_;
};

std::string pad(std::string s, std::size_t width) {
  // Overlong cells still get one separating space.
  s.append(s.size() < width ? width - s.size() : 1, ' ');
  return s;
}

std::string verdict_text(const StructureVerdict& v) {
  const Json params = to_json(v).at("parameters");
  std::string text(v.kind());
  if (!params.empty()) {
    text += "(";
    bool first = true;
    for (const auto& [key, value] : params.items()) {
      if (!first) text += ", ";
      first = false;
      text += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    text += ")";
  }
  return text;
}

// ---------------------------------------------------------------------------
// Input

Digraph read_digraph(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return parse_edge_list(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path, 0);
  return parse_edge_list(file);
}

// ---------------------------------------------------------------------------
// analyze

const std::array<std::pair<std::string_view, RhoBound>, 3> kRhoVerdicts = {{
    {"rho_lower_gr", RhoBound::kGr},
    {"rho_lower_tc", RhoBound::kTc},
    {"rho_lower_new", RhoBound::kNew},
}};
const std::array<std::pair<std::string_view, EnergyBound>, 4> kEnergyVerdicts = {{
    {"e_upper_mcclelland", EnergyBound::kMcClelland},
    {"e_upper_gr", EnergyBound::kGr},
    {"e_upper_tc", EnergyBound::kTc},
    {"e_upper_new", EnergyBound::kNew},
}};

Json document_json(const AnalysisDocument& doc) {
  Json verdicts = Json::object();
  for (const auto& [name, v] : doc.verdicts) verdicts[name] = to_json(v);
  Json coulson = {{"integral", doc.coulson_integral ? Json(*doc.coulson_integral) : Json(nullptr)}};
  if (doc.coulson_integral) coulson["difference"] = std::fabs(*doc.coulson_integral - doc.spectrum.energy);
  return {{"digraph", to_json(doc.digraph)},
          {"profile", to_json(doc.profile)},
          {"characteristic_polynomial", to_json(doc.characteristic_polynomial)},
          {"spectrum", to_json(doc.spectrum)},
          {"bounds", to_json(doc.bounds)},
          {"verdicts", verdicts},
          {"coulson", coulson},
          {"warnings", doc.warnings}};
}

void print_document(const AnalysisDocument& doc, std::ostream& out, const Painter& paint) {
  const Digraph& d = doc.digraph;
  out << paint.bold("digraph") << "  n = " << d.order() << ", a = " << d.arc_count() << "\n";
  if (!d.empty()) {
    out << "  arcs:";
    for (const Arc& arc : d.arcs()) out << ' ' << arc.from << "->" << arc.to;
    out << "\n";
  }

  const ClosedWalkProfile& p = doc.profile;
  out << "\n" << paint.bold("closed walks of length 2") << "\n";
  out << "  " << pad("vertex", 8) << pad("c2", 8) << "t2\n";
  for (int i = 0; i < p.order(); ++i) {
    out << "  " << pad(std::to_string(i), 8) << pad(std::to_string(p.c2_seq[i]), 8)
        << p.t2_seq[i] << "\n";
  }
  out << "  c2 = " << p.c2_total << ", sum c2^2 = " << p.sum_c2_sq
      << ", sum t2^2 = " << p.sum_t2_sq << ", q = " << num(walk_ratio(p)) << "\n";

  out << "\n" << paint.bold("characteristic polynomial") << "\n  "
      << doc.characteristic_polynomial.to_string() << "\n";

  out << "\n" << paint.bold("spectrum") << "\n";
  for (const auto& z : doc.spectrum.eigenvalues) out << "  " << complex_text(z) << "\n";
  out << "  rho = " << num(doc.spectrum.rho) << ", energy = " << num(doc.spectrum.energy) << "\n";

  out << "\n" << paint.bold("bounds") << "\n";
  out << "  " << pad("bound", 22) << pad("value", 16) << pad("target", 20) << "equality\n";
  for (BoundId id : kAllBounds) {
    const std::string name(bound_name(id));
    const bool lower = id == BoundId::kRhoLowerGr || id == BoundId::kRhoLowerTc ||
                       id == BoundId::kRhoLowerNew;
    const std::string target = (lower ? "rho = " : "E = ") +
                               num(lower ? doc.spectrum.rho : doc.spectrum.energy);
    std::string equality = "-";
    if (const auto it = doc.verdicts.find(name); it != doc.verdicts.end()) {
      equality = std::string(it->second.predicted_equality ? "yes " : "no ") +
                 verdict_text(it->second);
    }
    out << "  " << pad(name, 22) << pad(num(doc.bounds.value(id)), 16) << pad(target, 20)
        << equality << "\n";
  }
  out << "  in Gamma (a n < c2^2): " << (doc.bounds.in_gamma ? "yes" : "no") << ", chain: "
      << (doc.bounds.chain_ok ? paint.good("ok") : paint.bad("FAILED")) << "\n";
  for (const auto& failure : doc.bounds.chain_failures) out << "    " << failure << "\n";

  out << "\n" << paint.bold("Coulson integral") << "\n";
  if (doc.coulson_integral) {
    out << "  integral = " << num(*doc.coulson_integral) << ", |integral - energy| = "
        << num(std::fabs(*doc.coulson_integral - doc.spectrum.energy)) << "\n";
  } else {
    out << "  skipped\n";
  }
  for (const auto& w : doc.warnings) out << paint.warn("warning: ") << w << "\n";
}

int cmd_analyze(const std::string& path, bool json, double tol, std::istream& in,
                std::ostream& out, const Painter& paint) {
  const Digraph d = read_digraph(path, in);
  BoundOptions options;
  options.tolerance = tol;
  const AnalysisDocument doc = analyze(d, options);
  if (json) {
    out << document_json(doc).dump(2) << "\n";
  } else {
    print_document(doc, out, paint);
  }
  return doc.bounds.chain_ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// verify

void print_report(const VerificationReport& r, std::ostream& out, const Painter& paint) {
  out << paint.bold("verify") << "  n = " << r.n << ", mode = " << r.mode
      << ", digraphs = " << r.digraphs_checked << ", elapsed = " << num(r.elapsed_seconds)
      << " s\n\n";
  out << "  " << pad("check", 32) << pad("passed", 10) << pad("failed", 10) << "skipped\n";
  for (const auto& [name, t] : r.checks) {
    out << "  " << pad(name, 32) << pad(std::to_string(t.passed), 10)
        << pad(std::to_string(t.failed), 10) << t.skipped << "\n";
  }
  if (r.bound_inapplicable > 0) {
    out << "\n"
        << paint.warn("WARNING: q > a on " + std::to_string(r.bound_inapplicable) +
                      " digraphs; e_upper_new was inapplicable")
        << "\n";
  }
  out << "\nviolations: " << r.violations.size() << "\n";
  for (std::size_t i = 0; i < r.violations.size() && i < kViolationsShown; ++i) {
    const Violation& v = r.violations[i];
    std::string text = v.digraph;
    std::replace(text.begin(), text.end(), '\n', ' ');
    out << "  [" << v.index << "] " << v.check << ": " << v.detail << " (lhs = " << num(v.lhs)
        << ", rhs = " << num(v.rhs) << ", gap = " << num(v.gap) << ")\n      digraph: " << text
        << "\n";
  }
  if (r.violations.size() > kViolationsShown) {
    out << "  ... " << r.violations.size() - kViolationsShown << " more\n";
  }
  out << "result: " << (r.ok() ? paint.good("PASS") : paint.bad("FAIL")) << "\n";
}

// ---------------------------------------------------------------------------
// coulson

int cmd_coulson(const std::string& path, bool json, double rel_tol, std::istream& in,
                std::ostream& out, std::ostream& err) {
  const Digraph d = read_digraph(path, in);
  const double spectral = eigenvalues(d).energy;
  double integral = 0;
  try {
    integral = coulson_energy(d, rel_tol);
  } catch (const PurelyImaginaryEigenvalue& e) {
    err << e.what() << "\n";
    if (json) {
      out << Json{{"error", e.what()}, {"abscissa", e.abscissa()}, {"energy", spectral}}.dump(2)
          << "\n";
    }
    return kExitFailure;
  }
  const double difference = std::fabs(integral - spectral);
  const bool within = difference <= rel_tol * std::max(1.0, spectral);
  if (json) {
    out << Json{{"integral", integral},
                {"energy", spectral},
                {"difference", difference},
                {"rel_tol", rel_tol},
                {"within_tolerance", within}}
               .dump(2)
        << "\n";
  } else {
    out << pad("integral", 12) << num(integral) << "\n"
        << pad("energy", 12) << num(spectral) << "\n"
        << pad("difference", 12) << num(difference) << "\n";
  }
  return within ? kExitOk : kExitFailure;
}

}  // namespace

AnalysisDocument analyze(const Digraph& d, const BoundOptions& options) {
  AnalysisDocument doc;
  doc.digraph = d;
  doc.profile = walk_profile(d);
  doc.characteristic_polynomial = characteristic_polynomial(d);
  doc.spectrum = eigenvalues(d);
  doc.bounds = bound_chain_report(doc.profile, doc.spectrum, options);
  for (const auto& [name, which] : kRhoVerdicts) {
    doc.verdicts.emplace(name, equality_verdict_rho_lower(d, which));
  }
  for (const auto& [name, which] : kEnergyVerdicts) {
    doc.verdicts.emplace(name, equality_verdict_energy_upper(d, doc.spectrum, which));
  }
  try {
    doc.coulson_integral = coulson_energy(doc.characteristic_polynomial);
  } catch (const PurelyImaginaryEigenvalue& e) {
    doc.warnings.push_back(std::string("Coulson integral skipped: ") + e.what());
  }
  for (const auto& [name, reason] : doc.bounds.absent) {
    doc.warnings.push_back(name + " unavailable: " + reason);
  }
  for (const auto& failure : doc.bounds.chain_failures) {
    doc.warnings.push_back("bound chain violated: " + failure);
  }
  return doc;
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err, CliStyle style) {
  const Painter paint(style);
  CLI::App app{"Spectral radius and energy bounds for digraphs", "digraph_energy"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  double tol = 1e-8;
  app.add_flag("--json", json, "Emit JSON instead of tables");
  app.add_option("--tol", tol, "Tolerance for bound inequalities")
      ->check(CLI::PositiveNumber);

  std::string analyze_path;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Profile, spectrum, bounds and verdicts");
  analyze_cmd->add_option("input", analyze_path, "Edge-list file (stdin when omitted or '-')");

  int verify_n = 0;
  std::vector<std::string> checks;
  std::string mode_name = "exhaustive";
  std::uint64_t seed = 0;
  std::uint64_t count = 1000;
  double p = 0.5;
  double iff_tol = 1e-7;
  int jobs = 1;
  bool allow_n5 = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check every invariant on many digraphs");
  verify_cmd->add_option("n", verify_n, "Number of vertices")->required();
  verify_cmd->add_option("--checks", checks, "Comma-separated check names (default: all)")
      ->delimiter(',');
  verify_cmd->add_option("--mode", mode_name, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify_cmd->add_option("--seed", seed, "Random mode seed");
  verify_cmd->add_option("--count", count, "Random mode digraph count");
  verify_cmd->add_option("--p", p, "Random mode arc probability")->check(CLI::Range(0.0, 1.0));
  verify_cmd->add_option("--iff-tol", iff_tol, "Tolerance for equality characterizations")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--allow-n5", allow_n5, "Permit exhaustive enumeration at n = 5");

  std::string coulson_path;
  double rel_tol = 1e-6;
  CLI::App* coulson_cmd = app.add_subcommand("coulson", "Energy via the Coulson-type integral");
  coulson_cmd->add_option("input", coulson_path, "Edge-list file (stdin when omitted or '-')");
  coulson_cmd->add_option("--rel-tol", rel_tol, "Relative tolerance")
      ->check(CLI::Bound(0.0, 1.0));

  int random_n = 0;
  double random_p = 0;
  std::uint64_t random_seed = 0;
  CLI::App* random_cmd = app.add_subcommand("random", "Print a seeded random digraph");
  random_cmd->add_option("n", random_n, "Number of vertices")
      ->required()
      ->check(CLI::Range(1, 100000));
  random_cmd->add_option("p", random_p, "Arc probability")->required()->check(CLI::Range(0.0, 1.0));
  random_cmd->add_option("seed", random_seed, "Seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_path, json, tol, in, out, paint);
    if (*coulson_cmd) return cmd_coulson(coulson_path, json, rel_tol, in, out, err);
    if (*random_cmd) {
      out << serialize_edge_list(random_digraph(random_n, random_p, random_seed));
      return kExitOk;
    }
    if (*verify_cmd) {
      Mode mode = ExhaustiveMode{};
      if (mode_name == "random") mode = RandomMode{count, p, seed};
      VerifyOptions options;
      options.ineq_tol = tol;
      options.iff_tol = iff_tol;
      options.workers = jobs;
      options.allow_exhaustive_n5 = allow_n5;
      const VerificationReport report =
          verify_all(verify_n, std::set<std::string>(checks.begin(), checks.end()), mode, options);
      if (json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        print_report(report, out, paint);
      }
      return report.ok() ? kExitOk : kExitFailure;
    }
  } catch (const InputError& e) {
    err << "input error";
    if (e.line() > 0) err << " at line " << e.line();
    err << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace digraph_energy
