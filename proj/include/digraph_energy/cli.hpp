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

// Command-line front end. Exit codes: 0 success, 1 verification or
// tolerance failure (including Coulson poles), 2 usage, configuration or
// input error.

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "digraph_energy/bounds.hpp"
#include "digraph_energy/digraph.hpp"
#include "digraph_energy/spectrum.hpp"
#include "digraph_energy/structure.hpp"

namespace digraph_energy {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct AnalysisDocument {
  Digraph digraph;
  ClosedWalkProfile profile;
  CharPoly characteristic_polynomial;
  Spectrum spectrum;
  BoundReport bounds;
  /// Keyed by bound name, e.g. "rho_lower_new", "e_upper_mcclelland".
  std::map<std::string, StructureVerdict> verdicts;
  std::optional<double> coulson_integral;
  std::vector<std::string> warnings;
};

AnalysisDocument analyze(const Digraph& d, const BoundOptions& options = {});

struct CliStyle {
  bool color = false;
};

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err, CliStyle style = {});

}  // namespace digraph_energy
