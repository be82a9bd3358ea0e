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

#include "gbfpum/mincut.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gbfpum/error.hpp"

namespace gbfpum {

CapacityGraph::CapacityGraph(const Graph& base, double initial)
    : base_(&base),
      arc_capacity_(static_cast<std::size_t>(2 * base.edge_count()), initial) {
  if (!(initial >= 0.0)) throw ValidationError("capacities must be nonnegative");
}

void CapacityGraph::set_capacity(Vertex u, Vertex v, double c) {
  if (!(c >= 0.0)) throw ValidationError("capacities must be nonnegative");
  const std::int64_t uv = base_->arc_index(u, v);
  if (uv < 0) {
    throw ValidationError("no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  arc_capacity_[static_cast<std::size_t>(uv)] = c;
  arc_capacity_[static_cast<std::size_t>(base_->arc_index(v, u))] = c;
}

double CapacityGraph::capacity(Vertex u, Vertex v) const {
  const std::int64_t uv = base_->arc_index(u, v);
  if (uv < 0) {
    throw ValidationError("no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  return arc_capacity_[static_cast<std::size_t>(uv)];
}

namespace {

// Dinic blocking flow on the symmetric arc structure of Graph. Each
// undirected edge is a pair of opposed arcs with equal capacity; flow is
// kept antisymmetric so residual(u->v) = cap - flow(u->v).
class Dinic {
 public:
  Dinic(const Graph& g, std::vector<double> cap, double eps)
      : g_(g), cap_(std::move(cap)), flow_(cap_.size(), 0.0),
        reverse_(cap_.size()), level_(static_cast<std::size_t>(g.node_count())),
        cursor_(static_cast<std::size_t>(g.node_count())), eps_(eps) {
    for (Vertex u = 0; u < g.node_count(); ++u) {
      for (Vertex w : g.neighbors(u)) {
        reverse_[static_cast<std::size_t>(g.arc_index(u, w))] = g.arc_index(w, u);
      }
    }
  }

  double run(Vertex s, Vertex t) {
    double total = 0.0;
    while (build_levels(s, t)) {
      for (Vertex u = 0; u < g_.node_count(); ++u) cursor_[u] = g_.arc_begin(u);
      while (true) {
        const double pushed = augment(s, t, std::numeric_limits<double>::infinity());
        if (pushed <= eps_) break;
        total += pushed;
      }
    }
    return total;
  }

  /// Vertices reachable from s through arcs with positive residual.
  std::vector<char> residual_reachable(Vertex s) const {
    std::vector<char> seen(static_cast<std::size_t>(g_.node_count()), 0);
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      std::int64_t arc = g_.arc_begin(u);
      for (Vertex w : g_.neighbors(u)) {
        if (!seen[w] && residual(arc) > eps_) {
          seen[w] = 1;
          stack.push_back(w);
        }
        ++arc;
      }
    }
    return seen;
  }

 private:
  double residual(std::int64_t arc) const {
    return cap_[static_cast<std::size_t>(arc)] - flow_[static_cast<std::size_t>(arc)];
  }

  bool build_levels(Vertex s, Vertex t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<Vertex> queue{s};
    level_[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      std::int64_t arc = g_.arc_begin(u);
      for (Vertex w : g_.neighbors(u)) {
        if (level_[w] < 0 && residual(arc) > eps_) {
          level_[w] = level_[u] + 1;
          queue.push_back(w);
        }
        ++arc;
      }
    }
    return level_[t] >= 0;
  }

  // Recursion depth is bounded by the level of t.
  double augment(Vertex u, Vertex t, double limit) {
    if (u == t) return limit;
    const std::int64_t end = g_.arc_begin(u) + g_.degree(u);
    for (std::int64_t& arc = cursor_[u]; arc < end; ++arc) {
      const Vertex w = g_.neighbors(u)[static_cast<std::size_t>(arc - g_.arc_begin(u))];
      const double room = residual(arc);
      if (level_[w] != level_[u] + 1 || room <= eps_) continue;
      const double pushed = augment(w, t, std::min(limit, room));
      if (pushed > eps_) {
        flow_[static_cast<std::size_t>(arc)] += pushed;
        flow_[static_cast<std::size_t>(reverse_[static_cast<std::size_t>(arc)])] -= pushed;
        return pushed;
      }
    }
    return 0.0;
  }

  const Graph& g_;
  std::vector<double> cap_;
  std::vector<double> flow_;
  std::vector<std::int64_t> reverse_;
  std::vector<int> level_;
  std::vector<std::int64_t> cursor_;
  double eps_;
};

}  // namespace

Cut min_st_cut(const CapacityGraph& cg, Vertex s, Vertex v) {
  const Graph& g = cg.base();
  const Vertex n = g.node_count();
  if (s < 0 || v < 0 || s >= n || v >= n) throw ValidationError("cut terminal out of range");
  if (s == v) throw ValidationError("cut terminals must differ");

  const std::size_t arcs = static_cast<std::size_t>(2 * g.edge_count());
  double finite_total = 0.0;
  for (std::size_t a = 0; a < arcs; ++a) {
    const double c = cg.arc_capacity(static_cast<std::int64_t>(a));
    if (c != kInfiniteCapacity) finite_total += c;
  }
  // Each edge is counted from both ends above; halve for the undirected sum.
  finite_total /= 2.0;
  const double stand_in = finite_total + 1.0;
  std::vector<double> cap(arcs);
  for (std::size_t a = 0; a < arcs; ++a) {
    const double c = cg.arc_capacity(static_cast<std::int64_t>(a));
    cap[a] = c == kInfiniteCapacity ? stand_in : c;
  }

  Dinic dinic(g, std::move(cap), 1e-12 * std::max(1.0, stand_in));
  dinic.run(s, v);
  const std::vector<char> side = dinic.residual_reachable(s);

  Cut cut;
  for (Vertex u = 0; u < n; ++u) (side[u] ? cut.source_side : cut.sink_side).push_back(u);
  double value = 0.0;
  for (Vertex u : cut.source_side) {
    std::int64_t arc = g.arc_begin(u);
    for (Vertex w : g.neighbors(u)) {
      if (!side[w]) value += cg.arc_capacity(arc);
      ++arc;
    }
  }
  cut.value = value;
  return cut;
}

}  // namespace gbfpum
