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

#include "digraph_energy/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>

#include "digraph_energy/errors.hpp"

namespace digraph_energy {

namespace {

void check_endpoint(int v, int n, int line) {
  if (v < 0 || v >= n) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range [0, " +
                              std::to_string(n) + ")",
                          line);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(int n) : Digraph(n, {}) {}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw ValidationError("negative vertex count", 0);
  for (const Arc& arc : arcs_) {
    check_endpoint(arc.from, n, 0);
    check_endpoint(arc.to, n, 0);
    if (arc.from == arc.to) {
      throw ValidationError("loop at vertex " + std::to_string(arc.from), 0);
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

  row_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Arc& arc : arcs_) ++row_offsets_[static_cast<std::size_t>(arc.from) + 1];
  for (std::size_t i = 1; i < row_offsets_.size(); ++i) row_offsets_[i] += row_offsets_[i - 1];
}

std::span<const Arc> Digraph::out_arcs(int v) const {
  const auto begin = row_offsets_[static_cast<std::size_t>(v)];
  const auto end = row_offsets_[static_cast<std::size_t>(v) + 1];
  return std::span<const Arc>(arcs_).subspan(begin, end - begin);
}

bool Digraph::has_arc(int from, int to) const {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) return false;
  const auto row = out_arcs(from);
  return std::binary_search(row.begin(), row.end(), Arc{from, to});
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw ValidationError("negative vertex count", 0);
  for (Edge& e : edges_) {
    check_endpoint(e.u, n, 0);
    check_endpoint(e.v, n, 0);
    if (e.u == e.v) throw ValidationError("loop at vertex " + std::to_string(e.u), 0);
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::size_t> degree(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges_) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

std::span<const int> Graph::neighbors(int v) const {
  const auto begin = offsets_[static_cast<std::size_t>(v)];
  const auto end = offsets_[static_cast<std::size_t>(v) + 1];
  return std::span<const int>(adjacency_).subspan(begin, end - begin);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

bool AdjacencyMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

int parse_index(std::string_view token, int line) {
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("integer out of range: '" + std::string(token) + "'", line);
  }
  if (ec != std::errc() || ptr != end || value < 0) {
    throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

}  // namespace

Digraph parse_edge_list(std::istream& in) {
  std::optional<int> n;
  std::vector<Arc> arcs;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (!n) {
      if (tokens.size() != 1) {
        throw ParseError("first line must hold the vertex count alone", line_no);
      }
      n = parse_index(tokens[0], line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("arc line must hold exactly two vertex indices", line_no);
    }
    const int from = parse_index(tokens[0], line_no);
    const int to = parse_index(tokens[1], line_no);
    check_endpoint(from, *n, line_no);
    check_endpoint(to, *n, line_no);
    if (from == to) throw ValidationError("loop at vertex " + std::to_string(from), line_no);
    arcs.push_back({from, to});
  }
  if (!n) throw ParseError("missing vertex count", 0);
  return Digraph(*n, std::move(arcs));
}

Digraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Digraph& d) {
  std::string out = std::to_string(d.order()) + "\n";
  for (const Arc& arc : d.arcs()) {
    out += std::to_string(arc.from);
    out += ' ';
    out += std::to_string(arc.to);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrices and walk profile

AdjacencyMatrix adjacency_matrix(const Digraph& d) {
  AdjacencyMatrix m(d.order());
  for (const Arc& arc : d.arcs()) m(arc.from, arc.to) = 1.0;
  return m;
}

AdjacencyMatrix geometric_symmetrization(const AdjacencyMatrix& m) {
  const int n = m.order();
  AdjacencyMatrix s(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double product = m(i, j) * m(j, i);
      if (product < 0.0) throw DomainError("geometric symmetrization of a negative product");
      s(i, j) = std::sqrt(product);
    }
  }
  return s;
}

ClosedWalkProfile walk_profile(const Digraph& d) {
  const int n = d.order();
  ClosedWalkProfile p;
  p.c2_seq.assign(static_cast<std::size_t>(n), 0);
  p.t2_seq.assign(static_cast<std::size_t>(n), 0);
  p.a = static_cast<std::int64_t>(d.arc_count());

  const Graph digons = digon_graph(d);
  for (int v = 0; v < n; ++v) p.c2_seq[v] = digons.degree(v);
  for (int v = 0; v < n; ++v) {
    for (int w : digons.neighbors(v)) p.t2_seq[v] += p.c2_seq[w];
  }
  for (int v = 0; v < n; ++v) {
    p.c2_total += p.c2_seq[v];
    p.sum_c2_sq += p.c2_seq[v] * p.c2_seq[v];
    p.sum_t2_sq += p.t2_seq[v] * p.t2_seq[v];
  }
  return p;
}

// ---------------------------------------------------------------------------
// Strong components (iterative Tarjan)

SccPartition strongly_connected_components(const Digraph& d) {
  const int n = d.order();
  constexpr int kUnvisited = -1;
  std::vector<int> index(n, kUnvisited);
  std::vector<int> lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<int> raw_id(n, -1);
  int next_index = 0;
  int raw_count = 0;

  struct Frame {
    int vertex;
    std::size_t next_arc;
  };
  std::vector<Frame> call_stack;

  for (int root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call_stack.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const int v = frame.vertex;
      const auto out = d.out_arcs(v);
      if (frame.next_arc < out.size()) {
        const int w = out[frame.next_arc++].to;
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      if (lowlink[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw_id[w] = raw_count;
        } while (w != v);
        ++raw_count;
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const int parent = call_stack.back().vertex;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }

  // Relabel so ids follow the smallest member vertex.
  SccPartition out;
  out.component_id.assign(n, -1);
  std::vector<int> relabel(raw_count, -1);
  for (int v = 0; v < n; ++v) {
    int& id = relabel[raw_id[v]];
    if (id < 0) id = out.component_count++;
    out.component_id[v] = id;
  }
  return out;
}

std::vector<Arc> non_cycle_arcs(const Digraph& d) {
  const SccPartition scc = strongly_connected_components(d);
  std::vector<Arc> removed;
  for (const Arc& arc : d.arcs()) {
    if (scc.component_id[arc.from] != scc.component_id[arc.to]) removed.push_back(arc);
  }
  return removed;
}

Digraph cycle_arc_reduction(const Digraph& d) {
  const SccPartition scc = strongly_connected_components(d);
  std::vector<Arc> kept;
  kept.reserve(d.arc_count());
  for (const Arc& arc : d.arcs()) {
    if (scc.component_id[arc.from] == scc.component_id[arc.to]) kept.push_back(arc);
  }
  return Digraph(d.order(), std::move(kept));
}

// ---------------------------------------------------------------------------
// Symmetric digraphs and graph helpers

std::optional<Graph> underlying_graph_if_symmetric(const Digraph& d) {
  std::vector<Edge> edges;
  for (const Arc& arc : d.arcs()) {
    if (!d.has_arc(arc.to, arc.from)) return std::nullopt;
    if (arc.from < arc.to) edges.push_back({arc.from, arc.to});
  }
  return Graph(d.order(), std::move(edges));
}

Digraph symmetric_digraph(const Graph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edge_count());
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return Digraph(g.order(), std::move(arcs));
}

Graph digon_graph(const Digraph& d) {
  std::vector<Edge> edges;
  for (const Arc& arc : d.arcs()) {
    if (arc.from < arc.to && d.has_arc(arc.to, arc.from)) edges.push_back({arc.from, arc.to});
  }
  return Graph(d.order(), std::move(edges));
}

Digraph induced_subdigraph(const Digraph& d, std::span<const int> vertices) {
  std::vector<int> position(d.order(), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) position[vertices[k]] = static_cast<int>(k);
  std::vector<Arc> arcs;
  for (int v : vertices) {
    for (const Arc& arc : d.out_arcs(v)) {
      if (position[arc.to] >= 0) arcs.push_back({position[v], position[arc.to]});
    }
  }
  return Digraph(static_cast<int>(vertices.size()), std::move(arcs));
}

std::vector<std::vector<int>> ComponentPartition::members() const {
  std::vector<std::vector<int>> out(component_count);
  for (std::size_t v = 0; v < component_id.size(); ++v) {
    out[component_id[v]].push_back(static_cast<int>(v));
  }
  return out;
}

ComponentPartition connected_components(const Graph& g) {
  const int n = g.order();
  ComponentPartition out;
  out.component_id.assign(n, -1);
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (out.component_id[root] >= 0) continue;
    const int id = out.component_count++;
    out.component_id[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (out.component_id[w] < 0) {
          out.component_id[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

}  // namespace digraph_energy
