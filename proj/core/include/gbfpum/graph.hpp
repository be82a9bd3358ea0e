/*
 * Copyright 2026 The gbfpum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*!
 * \file graph.hpp
 *
 * \brief Immutable simple undirected graph in compressed adjacency
 * form, plus the handful of traversals every other module needs.
 */
#ifndef GBFPUM_GRAPH_HPP
#define GBFPUM_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace gbfpum {

using Vertex = std::int32_t;

/// Sorted, duplicate-free list of vertex ids.
using NodeSet = std::vector<Vertex>;

/// One real value per vertex.
using SignalVector = Eigen::VectorXd;

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Sorts and deduplicates in place, returning the result.
NodeSet make_node_set(std::vector<Vertex> ids);

/// True when `ids` is sorted strictly increasing.
bool is_node_set(std::span<const Vertex> ids);

/// True when the sorted set `s` contains `v`.
bool contains(std::span<const Vertex> s, Vertex v);

class Graph {
 public:
  Graph() = default;

  /// Builds from an undirected edge list. Reversed and repeated pairs
  /// collapse to one edge; self-loops and ids >= n throw ValidationError.
  static Graph from_edge_list(std::span<const std::pair<Vertex, Vertex>> edges,
                              Vertex n);

  Vertex node_count() const noexcept { return static_cast<Vertex>(offsets_.size()) - 1; }
  std::int64_t edge_count() const noexcept {
    return static_cast<std::int64_t>(neighbors_.size()) / 2;
  }

  std::span<const Vertex> neighbors(Vertex u) const {
    return {neighbors_.data() + offsets_[u],
            static_cast<std::size_t>(offsets_[u + 1] - offsets_[u])};
  }
  Vertex degree(Vertex u) const {
    return static_cast<Vertex>(offsets_[u + 1] - offsets_[u]);
  }
  bool has_edge(Vertex u, Vertex v) const;

  /// Position of the arc u->v in the flat adjacency array, or -1.
  std::int64_t arc_index(Vertex u, Vertex v) const;
  std::int64_t arc_begin(Vertex u) const { return offsets_[u]; }

  /// Every undirected edge once, as (u, v) with u < v, in sorted order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::int64_t> offsets_{0};
  std::vector<Vertex> neighbors_;
};

/// L = D - A as a compressed column matrix.
SparseMatrix laplacian(const Graph& g);

/// Vertices at hop distance <= `radius` from `src`, `src` included.
NodeSet bfs_within(const Graph& g, Vertex src, int radius);

/// Reusable BFS buffers for callers that run many bounded searches on
/// one graph. Not thread-safe; use one per worker.
class BoundedBfs {
 public:
  explicit BoundedBfs(const Graph& g);
  /// Appends the ball of `radius` around `src` to `out` (unsorted).
  void ball(Vertex src, int radius, std::vector<Vertex>& out);

 private:
  const Graph* graph_;
  std::vector<std::uint32_t> stamp_;
  std::vector<Vertex> queue_;
  std::vector<int> depth_;
  std::uint32_t epoch_ = 0;
};

struct Subgraph {
  Graph graph;
  /// to_parent[local] is the id in the parent graph; sorted.
  NodeSet to_parent;

  /// Local id of parent vertex `v`, or -1 if absent.
  Vertex to_local(Vertex v) const;
};

/// Subgraph induced by `s` with vertices relabeled 0..|s|-1 in id order.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Components ordered by smallest member; each component sorted.
std::vector<NodeSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace gbfpum

#endif  // GBFPUM_GRAPH_HPP
