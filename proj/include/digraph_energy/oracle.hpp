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

// Verification harness: enumerates labeled digraphs (exhaustively or at
// random), runs a registry of named checks on each, and collects violations.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "digraph_energy/bounds.hpp"
#include "digraph_energy/digraph.hpp"

namespace digraph_energy {

/// SplitMix64: 64-bit state, output mixes (Steele, Lea, Flood 2014).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Largest n accepted by enumeration.
inline constexpr int kMaxEnumerationOrder = 5;
/// Largest n accepted by random mode.
inline constexpr int kMaxRandomOrder = 12;

/// Bit k of `mask` selects the k-th ordered pair (i, j), i != j, in
/// row-major order.
Digraph digraph_from_mask(int n, std::uint64_t mask);
/// 2^(n(n-1)).
std::uint64_t digraph_count(int n);
/// Calls `visit(mask, digraph)` for every labeled digraph on n vertices in
/// mask order. DomainError unless 1 <= n <= 5.
void enumerate_digraphs(int n, const std::function<void(std::uint64_t, const Digraph&)>& visit);

/// Each ordered pair (row-major, i != j) is included iff uniform() < p.
Digraph random_digraph(int n, double p, std::uint64_t seed);

/// Registered check names in canonical order.
std::span<const std::string_view> all_check_names();

struct ExhaustiveMode {};
struct RandomMode {
  std::uint64_t count = 1000;
  double p = 0.5;
  std::uint64_t seed = 0;
};
using Mode = std::variant<ExhaustiveMode, RandomMode>;

struct VerifyOptions {
  double ineq_tol = 1e-8;
  double iff_tol = 1e-7;
  double coulson_rel_tol = 1e-6;
  std::optional<BoundFault> fault;
  /// Worker threads; 0 or 1 runs inline.
  int workers = 1;
  /// Lifts the exhaustive cap from 4 to 5.
  bool allow_exhaustive_n5 = false;
};

struct CheckTally {
  /// Includes skipped and vacuous digraphs.
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  bool operator==(const CheckTally&) const = default;
};

struct Violation {
  /// Mask in exhaustive mode, draw number in random mode.
  std::uint64_t index = 0;
  /// Edge-list serialization.
  std::string digraph;
  std::string check;
  std::string detail;
  double lhs = 0;
  double rhs = 0;
  double gap = 0;
  bool operator==(const Violation&) const = default;
};

struct VerificationReport {
  int n = 0;
  std::string mode;
  std::uint64_t digraphs_checked = 0;
  std::map<std::string, CheckTally> checks;
  std::vector<Violation> violations;
  /// Digraphs on which e_upper_new raised BoundInapplicable (q > a).
  std::uint64_t bound_inapplicable = 0;
  double elapsed_seconds = 0;

  bool ok() const { return violations.empty() && bound_inapplicable == 0; }
};

/// Runs `checks` (every registered check when empty). ConfigurationError on
/// an unknown check name or when n is outside the mode's limits.
VerificationReport verify_all(int n, const std::set<std::string>& checks, const Mode& mode,
                              const VerifyOptions& options = {});

}  // namespace digraph_energy
