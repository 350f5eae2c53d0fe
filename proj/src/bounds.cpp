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

#include "digraph_energy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "digraph_energy/errors.hpp"

namespace digraph_energy {

namespace {

constexpr double kRadicandTolerance = 1e-8;

struct NamedBound {
  BoundId id;
  std::string_view name;
};

constexpr std::array kBoundNames = {
    NamedBound{BoundId::kRhoLowerGr, "rho_lower_gr"},
    NamedBound{BoundId::kRhoLowerTc, "rho_lower_tc"},
    NamedBound{BoundId::kRhoLowerNew, "rho_lower_new"},
    NamedBound{BoundId::kEnergyUpperMcClelland, "e_upper_mcclelland"},
    NamedBound{BoundId::kEnergyUpperRho, "e_upper_rho"},
    NamedBound{BoundId::kEnergyUpperGr, "e_upper_gr"},
    NamedBound{BoundId::kEnergyUpperTc, "e_upper_tc"},
    NamedBound{BoundId::kEnergyUpperNew, "e_upper_new"},
};

void require_vertices(int n, std::string_view what) {
  if (n < 1) throw DomainError(std::string(what) + " needs at least one vertex");
}

// sqrt of a radicand that may dip below zero by rounding only.
double checked_sqrt(double radicand, double scale, std::string_view what) {
  if (radicand < -kRadicandTolerance * std::max(1.0, scale)) {
    std::ostringstream msg;
    msg << what << ": negative radicand " << radicand;
    throw DomainError(msg.str());
  }
  return std::sqrt(std::max(radicand, 0.0));
}

}  // namespace

std::string_view bound_name(BoundId id) {
  for (const auto& entry : kBoundNames) {
    if (entry.id == id) return entry.name;
  }
  return "unknown";
}

std::optional<BoundId> bound_from_name(std::string_view name) {
  for (const auto& entry : kBoundNames) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

bool leq_tol(double x, double y, double tol) {
  return x <= y + tol * std::max({1.0, std::fabs(x), std::fabs(y)});
}

bool eq_tol(double x, double y, double tol) {
  return std::fabs(x - y) <= tol * std::max({1.0, std::fabs(x), std::fabs(y)});
}

double energy_envelope(double x, int n, double a) {
  return x + checked_sqrt((n - 1) * (a - x * x), a, "energy envelope");
}

double walk_ratio(const ClosedWalkProfile& p) {
  if (p.sum_c2_sq == 0) return 0.0;
  return static_cast<double>(p.sum_t2_sq) / static_cast<double>(p.sum_c2_sq);
}

double rho_lower_gr(const ClosedWalkProfile& p, int n) {
  require_vertices(n, "rho_lower_gr");
  return static_cast<double>(p.c2_total) / n;
}

double rho_lower_tc(const ClosedWalkProfile& p, int n) {
  require_vertices(n, "rho_lower_tc");
  return std::sqrt(static_cast<double>(p.sum_c2_sq) / n);
}

double rho_lower_new(const ClosedWalkProfile& p) { return std::sqrt(walk_ratio(p)); }

double e_upper_mcclelland(const ClosedWalkProfile& p, int n) {
  require_vertices(n, "e_upper_mcclelland");
  return std::sqrt(n * static_cast<double>(p.a + p.c2_total) / 2.0);
}

double e_upper_rho(double rho, int n, std::int64_t a) {
  require_vertices(n, "e_upper_rho");
  const double arcs = static_cast<double>(a);
  const double radicand = (n - 1) * (arcs - rho * rho);
  if (radicand < -kRadicandTolerance * std::max(1.0, arcs) * std::max(1, n - 1)) {
    std::ostringstream msg;
    msg << "e_upper_rho: rho^2 = " << rho * rho << " exceeds a = " << a;
    throw ConsistencyError(msg.str());
  }
  return rho + std::sqrt(std::max(radicand, 0.0));
}

double e_upper_rho(const Digraph& d) {
  return e_upper_rho(spectral_radius(d), d.order(), static_cast<std::int64_t>(d.arc_count()));
}

double e_upper_gr(const ClosedWalkProfile& p, int n) {
  const double x = rho_lower_gr(p, n);
  const double a = static_cast<double>(p.a);
  return x + checked_sqrt((n - 1) * (a - x * x), a, "e_upper_gr");
}

double e_upper_tc(const ClosedWalkProfile& p, int n) {
  require_vertices(n, "e_upper_tc");
  const double x2 = static_cast<double>(p.sum_c2_sq) / n;
  const double a = static_cast<double>(p.a);
  return std::sqrt(x2) + checked_sqrt((n - 1) * (a - x2), a, "e_upper_tc");
}

double e_upper_new(const ClosedWalkProfile& p, int n) {
  require_vertices(n, "e_upper_new");
  const double q = walk_ratio(p);
  const double a = static_cast<double>(p.a);
  if (q > a + kRadicandTolerance * std::max(1.0, a)) {
    std::ostringstream msg;
    msg << "e_upper_new: q = " << q << " exceeds a = " << p.a;
    throw BoundInapplicable(msg.str());
  }
  return std::sqrt(q) + std::sqrt(std::max((n - 1) * (a - q), 0.0));
}

std::optional<double> BoundReport::value(BoundId id) const {
  switch (id) {
    case BoundId::kRhoLowerGr: return rho_lower_gr;
    case BoundId::kRhoLowerTc: return rho_lower_tc;
    case BoundId::kRhoLowerNew: return rho_lower_new;
    case BoundId::kEnergyUpperMcClelland: return e_upper_mcclelland;
    case BoundId::kEnergyUpperRho: return e_upper_rho;
    case BoundId::kEnergyUpperGr: return e_upper_gr;
    case BoundId::kEnergyUpperTc: return e_upper_tc;
    case BoundId::kEnergyUpperNew: return e_upper_new;
  }
  return std::nullopt;
}

namespace {

std::optional<double>& slot(BoundReport& r, BoundId id) {
  switch (id) {
    case BoundId::kRhoLowerGr: return r.rho_lower_gr;
    case BoundId::kRhoLowerTc: return r.rho_lower_tc;
    case BoundId::kRhoLowerNew: return r.rho_lower_new;
    case BoundId::kEnergyUpperMcClelland: return r.e_upper_mcclelland;
    case BoundId::kEnergyUpperRho: return r.e_upper_rho;
    case BoundId::kEnergyUpperGr: return r.e_upper_gr;
    case BoundId::kEnergyUpperTc: return r.e_upper_tc;
    case BoundId::kEnergyUpperNew: break;
  }
  return r.e_upper_new;
}

class ChainChecker {
 public:
  ChainChecker(BoundReport& report, double tol) : report_(report), tol_(tol) {}

  void leq(std::string_view lhs_name, std::optional<double> lhs, std::string_view rhs_name,
           std::optional<double> rhs) {
    if (!lhs || !rhs) return;
    if (!leq_tol(*lhs, *rhs, tol_)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << lhs_name << " = " << *lhs << " > " << rhs_name << " = " << *rhs;
      report_.chain_failures.push_back(msg.str());
    }
  }

 private:
  BoundReport& report_;
  double tol_;
};

}  // namespace

BoundReport bound_chain_report(const ClosedWalkProfile& p, const Spectrum& s,
                               const BoundOptions& options) {
  const int n = p.order();
  BoundReport r;
  r.rho = s.rho;
  r.energy = s.energy;
  r.q = walk_ratio(p);
  r.in_gamma = static_cast<double>(p.a) * n < static_cast<double>(p.c2_total) * p.c2_total;

  auto evaluate = [&](BoundId id, const std::function<double()>& formula) {
    try {
      slot(r, id) = formula();
    } catch (const Error& e) {
      r.absent.emplace(std::string(bound_name(id)), e.what());
    }
  };
  evaluate(BoundId::kRhoLowerGr, [&] { return rho_lower_gr(p, n); });
  evaluate(BoundId::kRhoLowerTc, [&] { return rho_lower_tc(p, n); });
  evaluate(BoundId::kRhoLowerNew, [&] { return rho_lower_new(p); });
  evaluate(BoundId::kEnergyUpperMcClelland, [&] { return e_upper_mcclelland(p, n); });
  evaluate(BoundId::kEnergyUpperRho, [&] { return e_upper_rho(s.rho, n, p.a); });
  evaluate(BoundId::kEnergyUpperGr, [&] { return e_upper_gr(p, n); });
  evaluate(BoundId::kEnergyUpperTc, [&] { return e_upper_tc(p, n); });
  evaluate(BoundId::kEnergyUpperNew, [&] { return e_upper_new(p, n); });

  if (options.fault) {
    if (auto& value = slot(r, options.fault->target)) *value += options.fault->delta;
  }

  ChainChecker chain(r, options.tolerance);
  const std::optional<double> rho = r.rho;
  const std::optional<double> energy = r.energy;
  chain.leq("rho_lower_gr", r.rho_lower_gr, "rho_lower_tc", r.rho_lower_tc);
  chain.leq("rho_lower_tc", r.rho_lower_tc, "rho_lower_new", r.rho_lower_new);
  chain.leq("rho_lower_new", r.rho_lower_new, "rho", rho);
  chain.leq("energy", energy, "e_upper_rho", r.e_upper_rho);
  chain.leq("energy", energy, "e_upper_new", r.e_upper_new);
  if (r.in_gamma) {
    chain.leq("e_upper_new", r.e_upper_new, "e_upper_tc", r.e_upper_tc);
    chain.leq("e_upper_tc", r.e_upper_tc, "e_upper_gr", r.e_upper_gr);
  }
  r.chain_ok = r.chain_failures.empty();
  return r;
}

BoundReport bound_chain_report(const Digraph& d, const BoundOptions& options) {
  return bound_chain_report(walk_profile(d), eigenvalues(d), options);
}

}  // namespace digraph_energy
