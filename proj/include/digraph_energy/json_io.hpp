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

// JSON encodings of the library's result types. The layout is described in
// docs/json-schema.md.

#pragma once

#include <json.hpp>

#include "digraph_energy/bounds.hpp"
#include "digraph_energy/digraph.hpp"
#include "digraph_energy/oracle.hpp"
#include "digraph_energy/spectrum.hpp"
#include "digraph_energy/structure.hpp"

namespace digraph_energy {

using Json = nlohmann::json;

/// {"n", "a", "arcs": [[from, to], ...]}
Json to_json(const Digraph& d);
Digraph digraph_from_json(const Json& j);

Json to_json(const ClosedWalkProfile& p);
/// Coefficients low to high; numbers when they fit in 64 bits, strings
/// otherwise.
Json to_json(const CharPoly& phi);
/// Eigenvalues as [re, im] pairs.
Json to_json(const Spectrum& s);
/// Missing bounds are null.
Json to_json(const BoundReport& r);
/// {"kind", "parameters", "predicted_equality", "note", "extra_noncycle_arcs"}
Json to_json(const StructureVerdict& v);
Json to_json(const VerificationReport& r);

}  // namespace digraph_energy
