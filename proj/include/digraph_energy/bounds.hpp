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

// Lower bounds on the spectral radius and upper bounds on the energy of a
// digraph, written in terms of its closed-walk profile.
//
// Three lower bounds on rho, each at least as strong as the previous one:
//   rho_lower_gr  = c2 / n
//   rho_lower_tc  = sqrt(sum c2(i)^2 / n)
//   rho_lower_new = sqrt(q),  q = sum t2(i)^2 / sum c2(i)^2
// Every energy bound except McClelland's is the envelope
//   f(x) = x + sqrt((n - 1)(a - x^2))
// evaluated at rho or at one of the lower bounds above.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digraph_energy/digraph.hpp"
#include "digraph_energy/spectrum.hpp"

namespace digraph_energy {

enum class BoundId {
  kRhoLowerGr,
  kRhoLowerTc,
  kRhoLowerNew,
  kEnergyUpperMcClelland,
  kEnergyUpperRho,
  kEnergyUpperGr,
  kEnergyUpperTc,
  kEnergyUpperNew,
};

inline constexpr std::array kAllBounds = {
    BoundId::kRhoLowerGr,           BoundId::kRhoLowerTc,     BoundId::kRhoLowerNew,
    BoundId::kEnergyUpperMcClelland, BoundId::kEnergyUpperRho, BoundId::kEnergyUpperGr,
    BoundId::kEnergyUpperTc,        BoundId::kEnergyUpperNew,
};

/// "rho_lower_gr", ..., "e_upper_new".
std::string_view bound_name(BoundId id);
std::optional<BoundId> bound_from_name(std::string_view name);

/// x <= y up to tol * max(1, |x|, |y|).
bool leq_tol(double x, double y, double tol);
/// |x - y| <= tol * max(1, |x|, |y|).
bool eq_tol(double x, double y, double tol);

/// f(x) = x + sqrt((n - 1)(a - x^2)) on [0, sqrt(a)]. Strictly increasing on
/// [0, sqrt(a/n)], strictly decreasing on [sqrt(a/n), sqrt(a)].
double energy_envelope(double x, int n, double a);

/// q = sum t2^2 / sum c2^2, or 0 when every c2(i) is 0.
double walk_ratio(const ClosedWalkProfile& p);

double rho_lower_gr(const ClosedWalkProfile& p, int n);
double rho_lower_tc(const ClosedWalkProfile& p, int n);
double rho_lower_new(const ClosedWalkProfile& p);

double e_upper_mcclelland(const ClosedWalkProfile& p, int n);
/// rho + sqrt((n - 1)(a - rho^2)); throws ConsistencyError when rho^2
/// exceeds a beyond tolerance.
double e_upper_rho(double rho, int n, std::int64_t a);
double e_upper_rho(const Digraph& d);
double e_upper_gr(const ClosedWalkProfile& p, int n);
double e_upper_tc(const ClosedWalkProfile& p, int n);
/// Throws BoundInapplicable when q > a beyond tolerance.
double e_upper_new(const ClosedWalkProfile& p, int n);

/// Adds `delta` to one bound after it is evaluated. Used to validate that
/// the verification harness notices a wrong formula.
struct BoundFault {
  BoundId target;
  double delta;
};

struct BoundOptions {
  double tolerance = 1e-8;
  std::optional<BoundFault> fault;
};

struct BoundReport {
  std::optional<double> rho_lower_gr;
  std::optional<double> rho_lower_tc;
  std::optional<double> rho_lower_new;
  double q = 0;
  double rho = 0;
  std::optional<double> e_upper_mcclelland;
  std::optional<double> e_upper_rho;
  std::optional<double> e_upper_gr;
  std::optional<double> e_upper_tc;
  std::optional<double> e_upper_new;
  double energy = 0;
  /// a * n < c2^2
  bool in_gamma = false;
  bool chain_ok = false;
  /// Bound name -> reason, for every bound that could not be evaluated.
  std::map<std::string, std::string> absent;
  /// Human-readable description of every failed ordering.
  std::vector<std::string> chain_failures;

  std::optional<double> value(BoundId id) const;
};

BoundReport bound_chain_report(const Digraph& d, const BoundOptions& options = {});
BoundReport bound_chain_report(const ClosedWalkProfile& p, const Spectrum& s,
                               const BoundOptions& options = {});

}  // namespace digraph_energy
