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
 * \file mincut.hpp
 *
 * \brief Minimum s-v cut on an undirected capacitated graph (Dinic).
 */
#ifndef GBFPUM_MINCUT_HPP
#define GBFPUM_MINCUT_HPP

#include <limits>
#include <vector>

#include "gbfpum/graph.hpp"

namespace gbfpum {

inline constexpr double kInfiniteCapacity = std::numeric_limits<double>::infinity();

/// Capacity overlay on the edges of a graph. Every edge starts at 1.
class CapacityGraph {
 public:
  explicit CapacityGraph(const Graph& base, double initial = 1.0);

  const Graph& base() const noexcept { return *base_; }

  /// Sets the capacity of undirected edge {u, v}; kInfiniteCapacity is
  /// allowed. Throws ValidationError if the edge is absent or c < 0.
  void set_capacity(Vertex u, Vertex v, double c);
  double capacity(Vertex u, Vertex v) const;

  /// Capacity indexed by Graph arc position (both directions agree).
  double arc_capacity(std::int64_t arc) const { return arc_capacity_[static_cast<std::size_t>(arc)]; }

 private:
  const Graph* base_;
  std::vector<double> arc_capacity_;
};

struct Cut {
  NodeSet source_side;
  NodeSet sink_side;
  /// Sum of crossing capacities; kInfiniteCapacity when s and v cannot be
  /// separated by finite-capacity edges alone.
  double value = 0.0;

  bool finite() const noexcept { return value != kInfiniteCapacity; }
};

/// Minimum s-v cut. The source side is the set reachable from s in the
/// residual network of a maximum flow, i.e. the minimal one.
Cut min_st_cut(const CapacityGraph& cg, Vertex s, Vertex v);

}  // namespace gbfpum

#endif  // GBFPUM_MINCUT_HPP
