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

#include "gbfpum/graph.hpp"

#include <algorithm>
#include <string>

#include "gbfpum/error.hpp"

namespace gbfpum {

NodeSet make_node_set(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool is_node_set(std::span<const Vertex> ids) {
  return std::adjacent_find(ids.begin(), ids.end(),
                            [](Vertex a, Vertex b) { return a >= b; }) == ids.end();
}

bool contains(std::span<const Vertex> s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

Graph Graph::from_edge_list(std::span<const std::pair<Vertex, Vertex>> edges,
                            Vertex n) {
  if (n < 0) throw ValidationError("negative vertex count");
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(2 * edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") has a vertex id outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      throw ValidationError("self-loop (" + std::to_string(u) + ", " +
                            std::to_string(v) + ")");
    }
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.neighbors_.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    ++g.offsets_[u + 1];
    g.neighbors_.push_back(v);
  }
  for (Vertex u = 0; u < n; ++u) g.offsets_[u + 1] += g.offsets_[u];
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const { return arc_index(u, v) >= 0; }

std::int64_t Graph::arc_index(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return offsets_[u] + (it - nb.begin());
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (Vertex u = 0; u < node_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

SparseMatrix laplacian(const Graph& g) {
  const Vertex n = g.node_count();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n + 2 * g.edge_count()));
  for (Vertex u = 0; u < n; ++u) {
    triplets.emplace_back(u, u, static_cast<double>(g.degree(u)));
    for (Vertex v : g.neighbors(u)) triplets.emplace_back(u, v, -1.0);
  }
  SparseMatrix L(n, n);
  L.setFromTriplets(triplets.begin(), triplets.end());
  return L;
}

BoundedBfs::BoundedBfs(const Graph& g)
    : graph_(&g), stamp_(static_cast<std::size_t>(g.node_count()), 0),
      depth_(static_cast<std::size_t>(g.node_count()), 0) {}

void BoundedBfs::ball(Vertex src, int radius, std::vector<Vertex>& out) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  queue_.push_back(src);
  stamp_[src] = epoch_;
  depth_[src] = 0;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Vertex u = queue_[head];
    out.push_back(u);
    if (depth_[u] == radius) continue;
    for (Vertex w : graph_->neighbors(u)) {
      if (stamp_[w] == epoch_) continue;
      stamp_[w] = epoch_;
      depth_[w] = depth_[u] + 1;
      queue_.push_back(w);
    }
  }
}

NodeSet bfs_within(const Graph& g, Vertex src, int radius) {
  if (src < 0 || src >= g.node_count()) throw ValidationError("bfs source out of range");
  if (radius < 0) throw ValidationError("bfs radius must be nonnegative");
  BoundedBfs bfs(g);
  NodeSet out;
  bfs.ball(src, radius, out);
  std::sort(out.begin(), out.end());
  return out;
}

Vertex Subgraph::to_local(Vertex v) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), v);
  if (it == to_parent.end() || *it != v) return -1;
  return static_cast<Vertex>(it - to_parent.begin());
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw ValidationError("induced subgraph of an empty vertex set");
  Subgraph sub;
  sub.to_parent.assign(s.begin(), s.end());
  if (!is_node_set(sub.to_parent)) sub.to_parent = make_node_set(std::move(sub.to_parent));
  if (sub.to_parent.front() < 0 || sub.to_parent.back() >= g.node_count()) {
    throw ValidationError("induced subgraph vertex id out of range");
  }

  std::vector<Vertex> local(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    local[sub.to_parent[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(sub.to_parent[i])) {
      const Vertex j = local[w];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  sub.graph = Graph::from_edge_list(edges, static_cast<Vertex>(sub.to_parent.size()));
  return sub;
}

std::vector<NodeSet> connected_components(const Graph& g) {
  const Vertex n = g.node_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<NodeSet> comps;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    NodeSet comp;
    stack.push_back(root);
    seen[root] = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.node_count() <= 1 || connected_components(g).size() == 1;
}

}  // namespace gbfpum
