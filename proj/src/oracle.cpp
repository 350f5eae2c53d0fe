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

#include "digraph_energy/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "digraph_energy/errors.hpp"
#include "digraph_energy/spectrum.hpp"
#include "digraph_energy/structure.hpp"

namespace digraph_energy {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Digraph digraph_from_mask(int n, std::uint64_t mask) {
  std::vector<Arc> arcs;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((mask >> bit) & 1U) arcs.push_back({i, j});
      ++bit;
    }
  }
  return Digraph(n, std::move(arcs));
}

std::uint64_t digraph_count(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw DomainError("enumeration needs 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  }
  return std::uint64_t{1} << (n * (n - 1));
}

void enumerate_digraphs(int n, const std::function<void(std::uint64_t, const Digraph&)>& visit) {
  const std::uint64_t total = digraph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(mask, digraph_from_mask(n, mask));
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw DomainError("random_digraph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("random_digraph needs 0 <= p <= 1");
  SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rng.uniform() < p) arcs.push_back({i, j});
    }
  }
  return Digraph(n, std::move(arcs));
}

namespace {

constexpr std::array<std::string_view, 12> kCheckNames = {
    "remark1_i",     "remark1_ii",     "remark1_iii", "lemma_i",
    "lemma_ii",      "rho_chain",      "energy_bounds", "gamma_chain",
    "charpoly_reduction_invariance", "coulson_match", "equality_iff_rho",
    "equality_iff_energy",
};

constexpr double kRemarkTolerance = 1e-9;
constexpr double kImaginaryAxisTolerance = 1e-6;

enum class Outcome { kPass, kFail, kSkip };

// Everything a check may need about one digraph, computed on demand.
class Subject {
 public:
  Subject(const Digraph& d, const VerifyOptions& options) : d_(d), options_(options) {}

  const Digraph& digraph() const { return d_; }
  const ClosedWalkProfile& profile() {
    if (!profile_) profile_ = walk_profile(d_);
    return *profile_;
  }
  const Spectrum& spectrum() {
    if (!spectrum_) spectrum_ = eigenvalues(d_);
    return *spectrum_;
  }
  const BoundReport& bounds() {
    if (!bounds_) {
      BoundOptions opts;
      opts.tolerance = options_.ineq_tol;
      opts.fault = options_.fault;
      bounds_ = bound_chain_report(profile(), spectrum(), opts);
    }
    return *bounds_;
  }
  // Scale for moment identities: every moment is at most a.
  double arc_scale() { return std::max(1.0, static_cast<double>(profile().a)); }

 private:
  const Digraph& d_;
  const VerifyOptions& options_;
  std::optional<ClosedWalkProfile> profile_;
  std::optional<Spectrum> spectrum_;
  std::optional<BoundReport> bounds_;
};

// Collects the failures of one check on one digraph.
class Findings {
 public:
  void fail(std::string detail, double lhs, double rhs) {
    items_.push_back({std::move(detail), lhs, rhs});
  }
  // lhs <= rhs within tol relative to max(1, |lhs|, |rhs|).
  void leq(std::string_view what, double lhs, double rhs, double tol) {
    if (!leq_tol(lhs, rhs, tol)) fail(std::string(what), lhs, rhs);
  }
  bool empty() const { return items_.empty(); }

  struct Item {
    std::string detail;
    double lhs;
    double rhs;
  };
  const std::vector<Item>& items() const { return items_; }

 private:
  std::vector<Item> items_;
};

double value_or_nan(const std::optional<double>& x) {
  return x.value_or(std::numeric_limits<double>::quiet_NaN());
}

void require_bound(Findings& f, const BoundReport& r, BoundId id) {
  if (!r.value(id) && bound_name(id) != "e_upper_new") {
    const auto it = r.absent.find(std::string(bound_name(id)));
    f.fail(std::string(bound_name(id)) + " unavailable: " +
               (it == r.absent.end() ? std::string("unknown") : it->second),
           0, 0);
  }
}

// ---------------------------------------------------------------------------
// Checks

Outcome check_remark1_i(Subject& s, Findings& f, const VerifyOptions&) {
  const AdjacencyMatrix sym = geometric_symmetrization(adjacency_matrix(s.digraph()));
  const auto& c2 = s.profile().c2_seq;
  for (int i = 0; i < sym.order(); ++i) {
    const auto row = sym.row(i);
    const double sum = std::accumulate(row.begin(), row.end(), 0.0);
    if (sum != static_cast<double>(c2[i])) {
      f.fail("row sum of S(A) differs from c2 at vertex " + std::to_string(i), sum,
             static_cast<double>(c2[i]));
    }
  }
  return Outcome::kPass;
}

Outcome check_remark1_ii(Subject& s, Findings& f, const VerifyOptions&) {
  const ClosedWalkProfile& p = s.profile();
  std::int64_t sum_c2_sq = 0;
  for (auto c : p.c2_seq) sum_c2_sq += c * c;
  const std::int64_t sum_t2 = std::accumulate(p.t2_seq.begin(), p.t2_seq.end(), std::int64_t{0});
  if (sum_t2 != sum_c2_sq) {
    f.fail("sum t2 != sum c2^2", static_cast<double>(sum_t2), static_cast<double>(sum_c2_sq));
  }
  return Outcome::kPass;
}

Outcome check_remark1_iii(Subject& s, Findings& f, const VerifyOptions&) {
  const AdjacencyMatrix sym = geometric_symmetrization(adjacency_matrix(s.digraph()));
  const double rho_s = symmetric_spectral_radius(sym);
  const double rho_s2 = symmetric_spectral_radius(square(sym));
  const double rho = s.spectrum().rho;
  f.leq("rho(S(A)) <= rho(A)", rho_s, rho, kRemarkTolerance);
  if (!eq_tol(rho_s, std::sqrt(rho_s2), kRemarkTolerance)) {
    f.fail("rho(S(A)) != sqrt(rho(S(A)^2))", rho_s, std::sqrt(rho_s2));
  }
  if (sym == adjacency_matrix(s.digraph()) && !eq_tol(rho, rho_s, kRemarkTolerance)) {
    f.fail("symmetric digraph with rho(A) != rho(S(A))", rho, rho_s);
  }
  return Outcome::kPass;
}

Outcome check_lemma_i(Subject& s, Findings& f, const VerifyOptions& o) {
  const MomentIdentities m = moment_identities(s.spectrum(), s.profile());
  if (std::fabs(m.lemma_i_residual) > o.ineq_tol * s.arc_scale()) {
    f.fail("sum Re^2 - sum Im^2 != c2", m.sum_re_sq - m.sum_im_sq,
           static_cast<double>(s.profile().c2_total));
  }
  return Outcome::kPass;
}

Outcome check_lemma_ii(Subject& s, Findings& f, const VerifyOptions& o) {
  const MomentIdentities m = moment_identities(s.spectrum(), s.profile());
  if (m.lemma_ii_slack < -o.ineq_tol * s.arc_scale()) {
    f.fail("sum Re^2 + sum Im^2 > a", m.sum_re_sq + m.sum_im_sq,
           static_cast<double>(s.profile().a));
  }
  return Outcome::kPass;
}

Outcome check_rho_chain(Subject& s, Findings& f, const VerifyOptions& o) {
  const BoundReport& r = s.bounds();
  for (BoundId id : {BoundId::kRhoLowerGr, BoundId::kRhoLowerTc, BoundId::kRhoLowerNew}) {
    require_bound(f, r, id);
  }
  const double gr = value_or_nan(r.rho_lower_gr);
  const double tc = value_or_nan(r.rho_lower_tc);
  const double nw = value_or_nan(r.rho_lower_new);
  f.leq("rho_lower_gr <= rho_lower_tc", gr, tc, o.ineq_tol);
  f.leq("rho_lower_tc <= rho_lower_new", tc, nw, o.ineq_tol);
  f.leq("rho_lower_new <= rho", nw, r.rho, o.ineq_tol);
  return Outcome::kPass;
}

Outcome check_energy_bounds(Subject& s, Findings& f, const VerifyOptions& o) {
  const BoundReport& r = s.bounds();
  for (BoundId id : {BoundId::kEnergyUpperMcClelland, BoundId::kEnergyUpperRho,
                     BoundId::kEnergyUpperGr, BoundId::kEnergyUpperTc, BoundId::kEnergyUpperNew}) {
    require_bound(f, r, id);
    if (const auto bound = r.value(id)) {
      f.leq("energy <= " + std::string(bound_name(id)), r.energy, *bound, o.ineq_tol);
    }
  }
  // n sum Re^2 = mcc^2 - (n/2) lemma_ii_slack, so a wrong McClelland value
  // shows up even where the bound is slack.
  if (r.e_upper_mcclelland) {
    const int n = s.digraph().order();
    const MomentIdentities m = moment_identities(s.spectrum(), s.profile());
    const double mcc_sq = *r.e_upper_mcclelland * *r.e_upper_mcclelland;
    const double lhs = mcc_sq - n * m.sum_re_sq;
    const double rhs = 0.5 * n * m.lemma_ii_slack;
    if (std::fabs(lhs - rhs) > o.ineq_tol * std::max(1.0, n * s.arc_scale())) {
      f.fail("e_upper_mcclelland^2 - n sum Re^2 != (n/2)(a - sum |z|^2)", lhs, rhs);
    }
  }
  return Outcome::kPass;
}

Outcome check_gamma_chain(Subject& s, Findings& f, const VerifyOptions& o) {
  const BoundReport& r = s.bounds();
  if (!r.in_gamma) return Outcome::kSkip;
  const int n = s.digraph().order();
  const double a = static_cast<double>(s.profile().a);
  const double gr = value_or_nan(r.rho_lower_gr);
  const double tc = value_or_nan(r.rho_lower_tc);
  const double nw = value_or_nan(r.rho_lower_new);
  f.leq("sqrt(a/n) <= rho_lower_gr", std::sqrt(a / n), gr, o.ineq_tol);
  f.leq("rho_lower_gr <= rho_lower_tc", gr, tc, o.ineq_tol);
  f.leq("rho_lower_tc <= rho_lower_new", tc, nw, o.ineq_tol);
  f.leq("rho_lower_new <= rho", nw, r.rho, o.ineq_tol);
  f.leq("rho <= sqrt(a)", r.rho, std::sqrt(a), o.ineq_tol);
  const double e_rho = value_or_nan(r.e_upper_rho);
  const double e_new = value_or_nan(r.e_upper_new);
  const double e_tc = value_or_nan(r.e_upper_tc);
  const double e_gr = value_or_nan(r.e_upper_gr);
  f.leq("energy <= e_upper_rho", r.energy, e_rho, o.ineq_tol);
  f.leq("e_upper_rho <= e_upper_new", e_rho, e_new, o.ineq_tol);
  f.leq("e_upper_new <= e_upper_tc", e_new, e_tc, o.ineq_tol);
  f.leq("e_upper_tc <= e_upper_gr", e_tc, e_gr, o.ineq_tol);
  return Outcome::kPass;
}

Outcome check_charpoly_reduction(Subject& s, Findings& f, const VerifyOptions&) {
  const Digraph& d = s.digraph();
  const Digraph reduced = cycle_arc_reduction(d);
  if (characteristic_polynomial(d) != characteristic_polynomial(reduced)) {
    f.fail("characteristic polynomial changed by cycle-arc reduction", 0, 0);
  }
  if (geometric_symmetrization(adjacency_matrix(d)) !=
      geometric_symmetrization(adjacency_matrix(reduced))) {
    f.fail("geometric symmetrization changed by cycle-arc reduction", 0, 0);
  }
  if (cycle_arc_reduction(reduced) != reduced) f.fail("cycle-arc reduction not idempotent", 0, 0);
  const double removed = static_cast<double>(non_cycle_arcs(d).size());
  const double dropped = static_cast<double>(d.arc_count() - reduced.arc_count());
  if (removed != dropped) f.fail("non-cycle arc count mismatch", removed, dropped);
  return Outcome::kPass;
}

Outcome check_coulson(Subject& s, Findings& f, const VerifyOptions& o) {
  const Spectrum& sp = s.spectrum();
  const bool near_axis = std::any_of(sp.eigenvalues.begin(), sp.eigenvalues.end(), [](auto z) {
    return std::fabs(z.real()) <= kImaginaryAxisTolerance &&
           std::fabs(z.imag()) > kImaginaryAxisTolerance;
  });
  if (near_axis) return Outcome::kSkip;
  try {
    const double integral = coulson_energy(s.digraph(), o.coulson_rel_tol);
    if (std::fabs(integral - sp.energy) > o.coulson_rel_tol * std::max(1.0, sp.energy)) {
      f.fail("Coulson integral != energy", integral, sp.energy);
    }
  } catch (const PurelyImaginaryEigenvalue& e) {
    f.fail(std::string("unexpected pole: ") + e.what(), e.abscissa(), 0);
  }
  return Outcome::kPass;
}

void iff(Findings& f, std::string_view name, bool predicted, double bound, double actual,
         double tol) {
  const bool attained = std::fabs(bound - actual) <= tol;
  if (predicted != attained) {
    std::ostringstream msg;
    msg << name << ": structure predicts " << (predicted ? "equality" : "strict inequality")
        << " but |bound - value| = " << std::fabs(bound - actual);
    f.fail(msg.str(), bound, actual);
  }
}

Outcome check_equality_rho(Subject& s, Findings& f, const VerifyOptions& o) {
  const BoundReport& r = s.bounds();
  const std::array cases = {std::pair{RhoBound::kGr, BoundId::kRhoLowerGr},
                            std::pair{RhoBound::kTc, BoundId::kRhoLowerTc},
                            std::pair{RhoBound::kNew, BoundId::kRhoLowerNew}};
  for (const auto& [which, id] : cases) {
    const auto bound = r.value(id);
    if (!bound) continue;
    const StructureVerdict v = equality_verdict_rho_lower(s.digraph(), which);
    iff(f, bound_name(id), v.predicted_equality, *bound, r.rho, o.iff_tol);
  }
  return Outcome::kPass;
}

Outcome check_equality_energy(Subject& s, Findings& f, const VerifyOptions& o) {
  const BoundReport& r = s.bounds();
  const std::array cases = {
      std::pair{EnergyBound::kMcClelland, BoundId::kEnergyUpperMcClelland},
      std::pair{EnergyBound::kGr, BoundId::kEnergyUpperGr},
      std::pair{EnergyBound::kTc, BoundId::kEnergyUpperTc},
      std::pair{EnergyBound::kNew, BoundId::kEnergyUpperNew}};
  for (const auto& [which, id] : cases) {
    const auto bound = r.value(id);
    if (!bound) continue;
    const StructureVerdict v = equality_verdict_energy_upper(s.digraph(), s.spectrum(), which);
    iff(f, bound_name(id), v.predicted_equality, *bound, r.energy, o.iff_tol);
  }
  return Outcome::kPass;
}

using CheckFn = Outcome (*)(Subject&, Findings&, const VerifyOptions&);

CheckFn check_function(std::string_view name) {
  if (name == "remark1_i") return check_remark1_i;
  if (name == "remark1_ii") return check_remark1_ii;
  if (name == "remark1_iii") return check_remark1_iii;
  if (name == "lemma_i") return check_lemma_i;
  if (name == "lemma_ii") return check_lemma_ii;
  if (name == "rho_chain") return check_rho_chain;
  if (name == "energy_bounds") return check_energy_bounds;
  if (name == "gamma_chain") return check_gamma_chain;
  if (name == "charpoly_reduction_invariance") return check_charpoly_reduction;
  if (name == "coulson_match") return check_coulson;
  if (name == "equality_iff_rho") return check_equality_rho;
  if (name == "equality_iff_energy") return check_equality_energy;
  return nullptr;
}

struct PlannedCheck {
  std::string name;
  CheckFn fn;
};

// Partial report for a contiguous slice of the digraph stream.
struct Partial {
  std::uint64_t checked = 0;
  std::map<std::string, CheckTally> checks;
  std::vector<Violation> violations;
  std::uint64_t bound_inapplicable = 0;
};

void examine(std::uint64_t index, const Digraph& d, const std::vector<PlannedCheck>& plan,
             const VerifyOptions& options, Partial& out) {
  Subject subject(d, options);
  ++out.checked;
  std::optional<std::string> text;
  auto serialized = [&]() -> const std::string& {
    if (!text) text = serialize_edge_list(d);
    return *text;
  };
  for (const auto& check : plan) {
    Findings findings;
    Outcome outcome = Outcome::kPass;
    try {
      outcome = check.fn(subject, findings, options);
    } catch (const std::exception& e) {
      findings.fail(std::string("exception: ") + e.what(), 0, 0);
    }
    CheckTally& tally = out.checks[check.name];
    if (!findings.empty()) {
      ++tally.failed;
      for (const auto& item : findings.items()) {
        out.violations.push_back({index, serialized(), check.name, item.detail, item.lhs, item.rhs,
                                  item.lhs - item.rhs});
      }
    } else {
      ++tally.passed;
      if (outcome == Outcome::kSkip) ++tally.skipped;
    }
  }
  try {
    if (!plan.empty() && subject.bounds().absent.contains("e_upper_new")) ++out.bound_inapplicable;
  } catch (const std::exception&) {
    // already reported by the failing check
  }
}

void merge(Partial& into, Partial&& part) {
  into.checked += part.checked;
  for (const auto& [name, tally] : part.checks) {
    CheckTally& t = into.checks[name];
    t.passed += tally.passed;
    t.failed += tally.failed;
    t.skipped += tally.skipped;
  }
  into.violations.insert(into.violations.end(), std::make_move_iterator(part.violations.begin()),
                         std::make_move_iterator(part.violations.end()));
  into.bound_inapplicable += part.bound_inapplicable;
}

}  // namespace

std::span<const std::string_view> all_check_names() { return kCheckNames; }

VerificationReport verify_all(int n, const std::set<std::string>& checks, const Mode& mode,
                              const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<PlannedCheck> plan;
  for (std::string_view name : kCheckNames) {
    if (checks.empty() || checks.contains(std::string(name))) {
      plan.push_back({std::string(name), check_function(name)});
    }
  }
  for (const auto& name : checks) {
    if (!check_function(name)) throw ConfigurationError("unknown check: " + name);
  }

  const bool exhaustive = std::holds_alternative<ExhaustiveMode>(mode);
  std::uint64_t total = 0;
  std::function<Digraph(std::uint64_t)> make;
  if (exhaustive) {
    const int cap = options.allow_exhaustive_n5 ? kMaxEnumerationOrder : kMaxEnumerationOrder - 1;
    if (n < 1 || n > cap) {
      throw ConfigurationError("exhaustive mode needs 1 <= n <= " + std::to_string(cap) +
                               (options.allow_exhaustive_n5 ? "" : " (n = 5 must be enabled)"));
    }
    total = digraph_count(n);
    make = [n](std::uint64_t mask) { return digraph_from_mask(n, mask); };
  } else {
    const RandomMode& r = std::get<RandomMode>(mode);
    if (n < 1 || n > kMaxRandomOrder) {
      throw ConfigurationError("random mode needs 1 <= n <= " + std::to_string(kMaxRandomOrder));
    }
    if (!(r.p >= 0.0 && r.p <= 1.0)) throw ConfigurationError("p must lie in [0, 1]");
    total = r.count;
    auto seeds = std::make_shared<std::vector<std::uint64_t>>(total);
    SplitMix64 rng(r.seed);
    for (auto& s : *seeds) s = rng.next();
    make = [n, p = r.p, seeds](std::uint64_t i) { return random_digraph(n, p, (*seeds)[i]); };
  }
  if (options.workers < 0) throw ConfigurationError("workers must be non-negative");

  const std::uint64_t workers =
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(options.workers, 1)), 1,
                                std::max<std::uint64_t>(total, 1));
  std::vector<Partial> parts(workers);
  auto run_slice = [&](std::uint64_t w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    for (std::uint64_t i = lo; i < hi; ++i) examine(i, make(i), plan, options, parts[w]);
  };
  if (workers == 1) {
    run_slice(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run_slice, w);
  }

  Partial merged;
  for (const auto& check : plan) merged.checks[check.name];
  for (auto& part : parts) merge(merged, std::move(part));

  VerificationReport report;
  report.n = n;
  report.mode = exhaustive ? "exhaustive" : "random";
  report.digraphs_checked = merged.checked;
  report.checks = std::move(merged.checks);
  report.violations = std::move(merged.violations);
  report.bound_inapplicable = merged.bound_inapplicable;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace digraph_energy
