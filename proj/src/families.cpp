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

#include "digraph_energy/families.hpp"

#include "digraph_energy/errors.hpp"

namespace digraph_energy::families {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int r, int s) {
  std::vector<Edge> edges;
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < s; ++v) edges.push_back({u, r + v});
  return Graph(r + s, std::move(edges));
}

Graph perfect_matching(int n) {
  if (n % 2 != 0) throw DomainError("perfect matching needs an even vertex count");
  std::vector<Edge> edges;
  for (int v = 0; v < n; v += 2) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer pentagon
    edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    edges.push_back({i, 5 + i});                // spokes
  }
  return Graph(10, std::move(edges));
}

Graph rook(int k) {
  std::vector<Edge> edges;
  for (int u = 0; u < k * k; ++u) {
    for (int v = u + 1; v < k * k; ++v) {
      if (u / k == v / k || u % k == v % k) edges.push_back({u, v});
    }
  }
  return Graph(k * k, std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : h.edges()) edges.push_back({e.u + g.order(), e.v + g.order()});
  return Graph(g.order() + h.order(), std::move(edges));
}

Digraph directed_cycle(int n) {
  if (n < 2) throw DomainError("directed cycle needs at least 2 vertices");
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  return Digraph(n, std::move(arcs));
}

Digraph directed_path(int n) {
  std::vector<Arc> arcs;
  for (int v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  return Digraph(n, std::move(arcs));
}

Digraph with_arcs(const Digraph& d, int extra_vertices, const std::vector<Arc>& arcs) {
  std::vector<Arc> all(d.arcs().begin(), d.arcs().end());
  all.insert(all.end(), arcs.begin(), arcs.end());
  return Digraph(d.order() + extra_vertices, std::move(all));
}

}  // namespace digraph_energy::families
