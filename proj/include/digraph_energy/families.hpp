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

// Named graph and digraph families used by fixtures and the acceptance suite.

#pragma once

#include "digraph_energy/digraph.hpp"

namespace digraph_energy::families {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
/// K_{r,s}: part {0..r-1} joined to part {r..r+s-1}.
Graph complete_bipartite(int r, int s);
/// (n/2) K_2 on pairs (0,1), (2,3), ...; n must be even.
Graph perfect_matching(int n);
Graph petersen();
/// K_k x K_k (rook's graph), strongly regular with parameters
/// (k^2, 2(k-1), k-2, 2).
Graph rook(int k);
/// Vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

Digraph directed_cycle(int n);
Digraph directed_path(int n);

/// d with extra vertices appended (no arcs) and the given arcs added.
Digraph with_arcs(const Digraph& d, int extra_vertices, const std::vector<Arc>& arcs);

}  // namespace digraph_energy::families
