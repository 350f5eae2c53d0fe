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

// Structural recognizers for the graphs that make the spectral-radius and
// energy bounds tight, and verdicts predicting tightness from structure
// alone (no comparison of the bound against the spectrum).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "digraph_energy/digraph.hpp"
#include "digraph_energy/spectrum.hpp"

namespace digraph_energy {

/// Non-negative rational in lowest terms.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  bool operator==(const Ratio&) const = default;
};

struct SrgParameters {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;
  bool operator==(const SrgParameters&) const = default;
};

std::optional<int> is_regular(const Graph& g);
/// (r1, r2) with r1 >= r2.
std::optional<std::pair<int, int>> is_semiregular_bipartite(const Graph& g);
/// Connected, regular, non-complete, with constant common-neighbour counts.
std::optional<SrgParameters> is_strongly_regular(const Graph& g);
/// Constant average 2-degree t(i)/d(i) over non-isolated vertices.
std::optional<Ratio> is_pseudo_regular(const Graph& g);
/// Bipartite with constant t(i)/d(i) on each part; p1 belongs to the part of
/// the smallest non-isolated vertex.
std::optional<std::pair<Ratio, Ratio>> is_pseudo_semiregular_bipartite(const Graph& g);

// ---------------------------------------------------------------------------
// Verdicts

struct NotApplicable {
  bool operator==(const NotApplicable&) const = default;
};
struct RRegular {
  int r = 0;
  bool operator==(const RRegular&) const = default;
};
struct SemiregularBipartite {
  int r1 = 0;
  int r2 = 0;
  bool operator==(const SemiregularBipartite&) const = default;
};
struct Complete {
  int n = 0;
  bool operator==(const Complete&) const = default;
};
struct PerfectMatchingUnion {
  int copies = 0;
  bool operator==(const PerfectMatchingUnion&) const = default;
};
struct StronglyRegular {
  SrgParameters parameters;
  bool operator==(const StronglyRegular&) const = default;
};
struct PseudoRegular {
  Ratio p;
  bool operator==(const PseudoRegular&) const = default;
};
struct PseudoSemiregularBipartite {
  Ratio p1;
  Ratio p2;
  bool operator==(const PseudoSemiregularBipartite&) const = default;
};
struct EmptyGraph {
  int n = 0;
  bool operator==(const EmptyGraph&) const = default;
};
struct NoStructure {
  bool operator==(const NoStructure&) const = default;
};

using Structure = std::variant<NotApplicable, RRegular, SemiregularBipartite, Complete,
                               PerfectMatchingUnion, StronglyRegular, PseudoRegular,
                               PseudoSemiregularBipartite, EmptyGraph, NoStructure>;

/// "NOT_APPLICABLE", "R_REGULAR", ..., "NONE".
std::string_view structure_kind(const Structure& s);

struct StructureVerdict {
  Structure structure = NoStructure{};
  /// Arcs on no directed cycle, removed before the structural test.
  std::vector<Arc> extra_noncycle_arcs;
  bool predicted_equality = false;
  /// One-line explanation of the outcome.
  std::string note;

  std::string_view kind() const { return structure_kind(structure); }
};

enum class RhoBound { kGr, kTc, kNew };
enum class EnergyBound { kMcClelland, kGr, kTc, kNew };

/// Predicts rho(D) == the chosen lower bound. For kNew: after deleting arcs
/// on no cycle, every connected component of the digon graph must have a
/// positive eigenvector proportional to its degree vector with eigenvalue
/// q (regular or semiregular bipartite, or their pseudo-variants), every
/// strong component containing a digon must be symmetric, and strong
/// components without digons must have spectral radius at most sqrt(q).
/// kTc additionally needs constant t2, kGr constant c2.
StructureVerdict equality_verdict_rho_lower(const Digraph& d, RhoBound which = RhoBound::kNew);

/// Predicts E(D) == the chosen upper bound. Needs D = <->G with G one of
/// nK1, K_n, (n/2)K2, a connected strongly regular graph with lambda = mu,
/// or (kNew only) a connected non-bipartite pseudo-regular graph with three
/// distinct eigenvalues p, +-sqrt((2m - p^2)/(n - 1)), p > sqrt(m/n).
/// kMcClelland accepts only nK1 and (n/2)K2.
StructureVerdict equality_verdict_energy_upper(const Digraph& d,
                                               EnergyBound which = EnergyBound::kNew);
StructureVerdict equality_verdict_energy_upper(const Digraph& d, const Spectrum& spectrum,
                                               EnergyBound which = EnergyBound::kNew);

/// Eigenvalue clustering tolerance used for spectral conditions.
inline constexpr double kSpectralClusterTolerance = 1e-7;

}  // namespace digraph_energy
