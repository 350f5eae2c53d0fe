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

#include "digraph_energy/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "digraph_energy/bounds.hpp"
#include "digraph_energy/errors.hpp"

namespace digraph_energy {

namespace {

__extension__ using Wide = __int128;

// Degrees and 2-degrees (sum of neighbour degrees) of a graph.
struct DegreeProfile {
  std::vector<std::int64_t> d;
  std::vector<std::int64_t> t;
};

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.d.resize(g.order());
  p.t.assign(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) p.d[v] = g.degree(v);
  for (int v = 0; v < g.order(); ++v)
    for (int w : g.neighbors(v)) p.t[v] += p.d[w];
  return p;
}

bool same_ratio(std::int64_t t1, std::int64_t d1, std::int64_t t2, std::int64_t d2) {
  return Wide(t1) * d2 == Wide(t2) * d1;
}

// Constant t/d over `vertices` (all non-isolated); returns (t, d) of the
// first one.
std::optional<std::pair<std::int64_t, std::int64_t>> constant_ratio(const DegreeProfile& p,
                                                                   std::span<const int> vertices) {
  if (vertices.empty()) return std::nullopt;
  const int first = vertices.front();
  for (int v : vertices) {
    if (!same_ratio(p.t[v], p.d[v], p.t[first], p.d[first])) return std::nullopt;
  }
  return std::pair{p.t[first], p.d[first]};
}

bool constant_degree(const DegreeProfile& p, std::span<const int> vertices) {
  return std::all_of(vertices.begin(), vertices.end(),
                     [&](int v) { return p.d[v] == p.d[vertices.front()]; });
}

// Vertices of each colour class within one component.
std::pair<std::vector<int>, std::vector<int>> split_by_colour(std::span<const int> members,
                                                              const std::vector<int>& colour) {
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (int v : members) (colour[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return n >= 2 && g.edge_count() == n * (n - 1) / 2;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ratio

Ratio Ratio::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("ratio with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

std::string Ratio::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

// ---------------------------------------------------------------------------
// Recognizers

std::optional<int> is_regular(const Graph& g) {
  if (g.order() == 0) return 0;
  const int r = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  return r;
}

std::optional<std::pair<int, int>> is_semiregular_bipartite(const Graph& g) {
  if (g.edge_count() == 0) return std::pair{0, 0};
  const auto colour = bipartition(g);
  if (!colour) return std::nullopt;
  const DegreeProfile p = degree_profile(g);
  std::optional<std::pair<int, int>> degrees;
  for (const auto& members : connected_components(g).members()) {
    const auto [side0, side1] = split_by_colour(members, *colour);
    if (side1.empty()) return std::nullopt;  // isolated vertex beside edges
    if (!constant_degree(p, side0) || !constant_degree(p, side1)) return std::nullopt;
    const int a = static_cast<int>(p.d[side0.front()]);
    const int b = static_cast<int>(p.d[side1.front()]);
    const std::pair<int, int> here{std::max(a, b), std::min(a, b)};
    if (degrees && *degrees != here) return std::nullopt;
    degrees = here;
  }
  return degrees;
}

std::optional<SrgParameters> is_strongly_regular(const Graph& g) {
  const int n = g.order();
  if (n < 3 || g.edge_count() == 0 || is_complete(g)) return std::nullopt;
  const auto k = is_regular(g);
  if (!k) return std::nullopt;
  if (connected_components(g).component_count != 1) return std::nullopt;

  // A^2 = kI + lambda A + mu (J - I - A)
  std::vector<int> square(static_cast<std::size_t>(n) * n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v))
      for (int x : g.neighbors(w)) ++square[static_cast<std::size_t>(v) * n + x];

  std::optional<int> lambda;
  std::optional<int> mu;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int entry = square[static_cast<std::size_t>(u) * n + v];
      if (u == v) {
        if (entry != *k) return std::nullopt;
        continue;
      }
      std::optional<int>& slot = g.has_edge(u, v) ? lambda : mu;
      if (!slot) slot = entry;
      if (*slot != entry) return std::nullopt;
    }
  }
  return SrgParameters{n, *k, lambda.value_or(0), mu.value_or(0)};
}

std::optional<Ratio> is_pseudo_regular(const Graph& g) {
  const DegreeProfile p = degree_profile(g);
  std::vector<int> active;
  for (int v = 0; v < g.order(); ++v) {
    if (p.d[v] > 0) active.push_back(v);
  }
  if (active.empty()) return Ratio{0, 1};
  const auto ratio = constant_ratio(p, active);
  if (!ratio) return std::nullopt;
  return Ratio::of(ratio->first, ratio->second);
}

std::optional<std::pair<Ratio, Ratio>> is_pseudo_semiregular_bipartite(const Graph& g) {
  if (g.edge_count() == 0) return std::pair{Ratio{0, 1}, Ratio{0, 1}};
  const auto colour = bipartition(g);
  if (!colour) return std::nullopt;
  const DegreeProfile p = degree_profile(g);
  std::optional<std::pair<Ratio, Ratio>> ratios;
  for (const auto& members : connected_components(g).members()) {
    if (members.size() < 2) continue;
    const auto [side0, side1] = split_by_colour(members, *colour);
    const auto r0 = constant_ratio(p, side0);
    const auto r1 = constant_ratio(p, side1);
    if (!r0 || !r1) return std::nullopt;
    const std::pair here{Ratio::of(r0->first, r0->second), Ratio::of(r1->first, r1->second)};
    if (!ratios) {
      ratios = here;
    } else if (*ratios != here && *ratios != std::pair{here.second, here.first}) {
      return std::nullopt;
    }
  }
  return ratios;
}

std::string_view structure_kind(const Structure& s) {
  struct Visitor {
    std::string_view operator()(const NotApplicable&) const { return "NOT_APPLICABLE"; }
    std::string_view operator()(const RRegular&) const { return "R_REGULAR"; }
    std::string_view operator()(const SemiregularBipartite&) const {
      return "SEMIREGULAR_BIPARTITE";
    }
    std::string_view operator()(const Complete&) const { return "COMPLETE"; }
    std::string_view operator()(const PerfectMatchingUnion&) const {
      return "PERFECT_MATCHING_UNION";
    }
    std::string_view operator()(const StronglyRegular&) const { return "STRONGLY_REGULAR"; }
    std::string_view operator()(const PseudoRegular&) const { return "PSEUDO_REGULAR"; }
    std::string_view operator()(const PseudoSemiregularBipartite&) const {
      return "PSEUDO_SEMIREGULAR_BIPARTITE";
    }
    std::string_view operator()(const EmptyGraph&) const { return "EMPTY"; }
    std::string_view operator()(const NoStructure&) const { return "NONE"; }
  };
  return std::visit(Visitor{}, s);
}

// ---------------------------------------------------------------------------
// Spectral-radius verdict

namespace {

// Ranks component structures from most to least specific; the verdict
// reports the least specific one found.
int generality(const Structure& s) {
  if (std::holds_alternative<RRegular>(s)) return 0;
  if (std::holds_alternative<SemiregularBipartite>(s)) return 1;
  if (std::holds_alternative<PseudoRegular>(s)) return 2;
  return 3;
}

StructureVerdict walk_ratio_verdict(const Digraph& d) {
  StructureVerdict verdict;
  verdict.extra_noncycle_arcs = non_cycle_arcs(d);
  const Digraph reduced = cycle_arc_reduction(d);
  const ClosedWalkProfile profile = walk_profile(d);
  const double sqrt_q = rho_lower_new(profile);
  const std::int64_t sum_c2_sq = profile.sum_c2_sq;
  const std::int64_t sum_t2_sq = profile.sum_t2_sq;

  // Strong components: symmetric, or digon-free and no stronger than sqrt(q).
  const SccPartition scc = strongly_connected_components(reduced);
  std::vector<std::vector<int>> strong(scc.component_count);
  for (int v = 0; v < d.order(); ++v) strong[scc.component_id[v]].push_back(v);
  std::ostringstream notes;
  for (const auto& members : strong) {
    if (members.size() < 2) continue;
    const Digraph part = induced_subdigraph(reduced, members);
    if (underlying_graph_if_symmetric(part)) continue;
    const bool has_digon = std::any_of(members.begin(), members.end(),
                                       [&](int v) { return profile.c2_seq[v] > 0; });
    if (has_digon) {
      verdict.structure = NotApplicable{};
      verdict.note = "a strong component containing a digon is not symmetric";
      return verdict;
    }
    const double rho_part = spectral_radius(part);
    if (!leq_tol(rho_part, sqrt_q, 1e-9)) {
      verdict.structure = NotApplicable{};
      verdict.note = "a digon-free strong component has spectral radius above sqrt(q)";
      return verdict;
    }
    notes << "digon-free strong component of spectral radius " << rho_part
          << " <= sqrt(q) kept; ";
  }

  if (sum_c2_sq == 0) {
    verdict.structure = EmptyGraph{d.order()};
    verdict.predicted_equality = true;
    verdict.note = notes.str() + "no digons and no cycles";
    return verdict;
  }

  const Graph digons = digon_graph(d);
  const auto colour = bipartition(digons);
  const auto& c = profile.c2_seq;
  const auto& t = profile.t2_seq;
  std::optional<Structure> overall;
  for (const auto& members : connected_components(digons).members()) {
    if (members.size() < 2) continue;
    const int first = members.front();
    Structure here = NoStructure{};

    const bool pseudo_regular = std::all_of(members.begin(), members.end(), [&](int v) {
      return same_ratio(t[v], c[v], t[first], c[first]);
    });
    // p^2 == q with p = t/c and q = sum t^2 / sum c^2
    if (pseudo_regular && Wide(t[first]) * t[first] * sum_c2_sq ==
                              Wide(c[first]) * c[first] * sum_t2_sq) {
      const bool regular =
          std::all_of(members.begin(), members.end(), [&](int v) { return c[v] == c[first]; });
      here = regular ? Structure{RRegular{static_cast<int>(c[first])}}
                     : Structure{PseudoRegular{Ratio::of(t[first], c[first])}};
    } else if (colour) {
      std::vector<int> side0;
      std::vector<int> side1;
      for (int v : members) ((*colour)[v] == 0 ? side0 : side1).push_back(v);
      auto ratio_constant = [&](const std::vector<int>& side) {
        return std::all_of(side.begin(), side.end(), [&](int v) {
          return same_ratio(t[v], c[v], t[side.front()], c[side.front()]);
        });
      };
      const int x = side0.front();
      const int y = side1.front();
      // p1 p2 == q
      if (ratio_constant(side0) && ratio_constant(side1) &&
          Wide(t[x]) * t[y] * sum_c2_sq == Wide(c[x]) * c[y] * sum_t2_sq) {
        auto degree_constant = [&](const std::vector<int>& side) {
          return std::all_of(side.begin(), side.end(),
                             [&](int v) { return c[v] == c[side.front()]; });
        };
        if (degree_constant(side0) && degree_constant(side1)) {
          const int r1 = static_cast<int>(std::max(c[x], c[y]));
          const int r2 = static_cast<int>(std::min(c[x], c[y]));
          here = SemiregularBipartite{r1, r2};
        } else {
          here = PseudoSemiregularBipartite{Ratio::of(t[x], c[x]), Ratio::of(t[y], c[y])};
        }
      }
    }
    if (std::holds_alternative<NoStructure>(here)) {
      verdict.structure = NoStructure{};
      verdict.note = notes.str() + "a digon component is not (pseudo-)regular or "
                                   "(pseudo-)semiregular bipartite with parameter q";
      return verdict;
    }
    if (!overall || generality(here) > generality(*overall)) overall = here;
  }
  verdict.structure = *overall;
  verdict.predicted_equality = true;
  verdict.note = notes.str() + "every digon component has its degree vector as Perron vector";
  return verdict;
}

}  // namespace

StructureVerdict equality_verdict_rho_lower(const Digraph& d, RhoBound which) {
  StructureVerdict verdict = walk_ratio_verdict(d);
  if (which == RhoBound::kNew || !verdict.predicted_equality) return verdict;

  const ClosedWalkProfile profile = walk_profile(d);
  const auto& seq = which == RhoBound::kGr ? profile.c2_seq : profile.t2_seq;
  const bool constant =
      std::all_of(seq.begin(), seq.end(), [&](std::int64_t x) { return x == seq.front(); });
  if (!constant) {
    verdict.predicted_equality = false;
    verdict.note = which == RhoBound::kGr ? "closed-walk sequence c2 is not constant"
                                          : "sequence t2 is not constant";
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Energy verdict

namespace {

// Connected non-bipartite pseudo-regular G with spectrum {p, theta, -theta},
// theta^2 = (2m - p^2)/(n - 1) and p > sqrt(m/n).
bool three_eigenvalue_case(const Graph& g, const Spectrum& spectrum, std::string& note) {
  const auto p = is_pseudo_regular(g);
  if (!p || connected_components(g).component_count != 1 || bipartition(g)) return false;
  std::vector<double> distinct;
  for (const auto& z : spectrum.eigenvalues) {
    if (distinct.empty() || distinct.back() - z.real() > kSpectralClusterTolerance) {
      distinct.push_back(z.real());
    }
  }
  if (distinct.size() != 3) return false;
  const int n = g.order();
  const double m = static_cast<double>(g.edge_count());
  const double pv = p->value();
  const double theta = distinct[1];
  const bool ok = eq_tol(distinct[0], pv, kSpectralClusterTolerance) &&
                  eq_tol(distinct[2], -theta, kSpectralClusterTolerance) &&
                  eq_tol(theta * theta, (2 * m - pv * pv) / (n - 1), kSpectralClusterTolerance) &&
                  pv > std::sqrt(m / n);
  if (ok) note = "pseudo-regular with three distinct eigenvalues p, +-theta";
  return ok;
}

}  // namespace

StructureVerdict equality_verdict_energy_upper(const Digraph& d, const Spectrum& spectrum,
                                               EnergyBound which) {
  StructureVerdict verdict;
  verdict.extra_noncycle_arcs = non_cycle_arcs(d);
  const auto g = underlying_graph_if_symmetric(d);
  if (!g) {
    verdict.structure = NotApplicable{};
    verdict.note = "digraph is not symmetric";
    return verdict;
  }
  const int n = g->order();
  if (g->edge_count() == 0) {
    verdict.structure = EmptyGraph{n};
    verdict.predicted_equality = true;
    verdict.note = "empty digraph";
    return verdict;
  }
  if (is_complete(*g) && !(which == EnergyBound::kMcClelland && n == 2)) {
    verdict.structure = Complete{n};
    verdict.predicted_equality = which != EnergyBound::kMcClelland;
    verdict.note = "complete graph";
    return verdict;
  }
  if (is_regular(*g) == 1) {
    verdict.structure = PerfectMatchingUnion{n / 2};
    verdict.predicted_equality = true;
    verdict.note = "disjoint copies of K2";
    return verdict;
  }
  if (which == EnergyBound::kMcClelland) {
    verdict.structure = NoStructure{};
    verdict.note = "only nK1 and (n/2)K2 attain McClelland's bound";
    return verdict;
  }
  if (const auto srg = is_strongly_regular(*g)) {
    verdict.structure = StronglyRegular{*srg};
    verdict.predicted_equality = srg->lambda == srg->mu;
    verdict.note = verdict.predicted_equality
                       ? "strongly regular with lambda = mu: non-trivial eigenvalues +-theta"
                       : "strongly regular with lambda != mu: non-trivial eigenvalues differ "
                         "in modulus";
    return verdict;
  }
  if (which == EnergyBound::kNew) {
    std::string note;
    if (three_eigenvalue_case(*g, spectrum, note)) {
      verdict.structure = PseudoRegular{*is_pseudo_regular(*g)};
      verdict.predicted_equality = true;
      verdict.note = note;
      return verdict;
    }
  }
  verdict.structure = NoStructure{};
  verdict.note = "symmetric but not an extremal graph";
  return verdict;
}

StructureVerdict equality_verdict_energy_upper(const Digraph& d, EnergyBound which) {
  return equality_verdict_energy_upper(d, eigenvalues(d), which);
}

}  // namespace digraph_energy
