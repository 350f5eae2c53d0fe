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

// Simple digraphs (no loops, no multiple arcs) on vertices 0..n-1, their
// undirected counterparts, and the combinatorial machinery the spectral
// modules consume: adjacency matrices, geometric symmetrization, length-2
// closed-walk profiles, strong components and the cycle-arc reduction.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace digraph_energy {

struct Arc {
  int from = 0;
  int to = 0;
  auto operator<=>(const Arc&) const = default;
};

/// Immutable simple digraph. Arcs are kept sorted lexicographically and
/// indexed by tail, so out-neighbourhoods are contiguous.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  /// Duplicate arcs collapse. Throws ValidationError on a loop or an
  /// endpoint outside [0, n).
  Digraph(int n, std::vector<Arc> arcs);

  int order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<const Arc> out_arcs(int v) const;
  bool has_arc(int from, int to) const;
  bool empty() const noexcept { return arcs_.empty(); }

  bool operator==(const Digraph&) const = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> row_offsets_{0};
};

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Edges are normalized to u < v and deduplicated. Throws
  /// ValidationError on a loop or an endpoint outside [0, n).
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<int> adjacency_;
};

/// Dense n x n real matrix. Raw adjacency matrices hold 0/1 entries; the
/// same type carries geometric symmetrizations.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0.0) {}

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const { return entries_[index(i, j)]; }
  double& operator()(int i, int j) { return entries_[index(i, j)]; }
  std::span<const double> row(int i) const {
    return std::span<const double>(entries_).subspan(static_cast<std::size_t>(i) * n_, n_);
  }
  bool is_symmetric() const;

  bool operator==(const AdjacencyMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<double> entries_;
};

/// Per-vertex closed walks of length 2 (digons at the vertex) and their
/// neighbourhood sums, with the aggregates the bounds are written in.
struct ClosedWalkProfile {
  std::vector<std::int64_t> c2_seq;  // c2(i) = |{j : (i,j), (j,i) arcs}|
  std::vector<std::int64_t> t2_seq;  // t2(i) = sum of c2(j) over doubly adjacent j
  std::int64_t a = 0;                // arc count
  std::int64_t c2_total = 0;
  std::int64_t sum_c2_sq = 0;
  std::int64_t sum_t2_sq = 0;

  int order() const noexcept { return static_cast<int>(c2_seq.size()); }
  bool operator==(const ClosedWalkProfile&) const = default;
};

struct SccPartition {
  std::vector<int> component_id;  // dense, ordered by smallest member vertex
  int component_count = 0;
};

Digraph parse_edge_list(std::istream& in);
Digraph parse_edge_list(std::string_view text);

/// `n`, then one `i j` line per arc in lexicographic order.
std::string serialize_edge_list(const Digraph& d);

AdjacencyMatrix adjacency_matrix(const Digraph& d);

/// Entrywise sqrt(m_ij * m_ji). Throws DomainError if some product is
/// negative.
AdjacencyMatrix geometric_symmetrization(const AdjacencyMatrix& m);

ClosedWalkProfile walk_profile(const Digraph& d);

SccPartition strongly_connected_components(const Digraph& d);

/// Deletes every arc whose endpoints lie in different strong components,
/// i.e. every arc that is on no directed cycle.
Digraph cycle_arc_reduction(const Digraph& d);

/// The arcs cycle_arc_reduction would delete, in lexicographic order.
std::vector<Arc> non_cycle_arcs(const Digraph& d);

/// G with d = <->G when d's arc set is closed under reversal.
std::optional<Graph> underlying_graph_if_symmetric(const Digraph& d);

/// <->G: every edge becomes a pair of opposite arcs.
Digraph symmetric_digraph(const Graph& g);

/// Undirected graph of the digons of d (the graph of S(A)).
Graph digon_graph(const Digraph& d);

/// Sub-digraph induced on `vertices`, relabelled 0..k-1 in the given order.
Digraph induced_subdigraph(const Digraph& d, std::span<const int> vertices);

/// Connected components of an undirected graph, ids ordered by smallest
/// member vertex.
struct ComponentPartition {
  std::vector<int> component_id;
  int component_count = 0;
  std::vector<std::vector<int>> members() const;
};
ComponentPartition connected_components(const Graph& g);

/// Two-colouring of g's components, colour 0 on each component's smallest
/// vertex. Empty when some component contains an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace digraph_energy
