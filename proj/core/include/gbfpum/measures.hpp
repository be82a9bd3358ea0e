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
 * \file measures.hpp
 *
 * \brief Katz centrality, modularity and Jaccard similarity.
 */
#ifndef GBFPUM_MEASURES_HPP
#define GBFPUM_MEASURES_HPP

#include <span>
#include <vector>

#include "gbfpum/graph.hpp"

namespace gbfpum {

struct KatzParams {
  /// Requested attenuation. Clamped to 0.9 / lambda_max(A) when larger.
  double alpha = 0.5;
  int max_iter = 10000;
  double tol = 1e-12;
};

struct KatzResult {
  SignalVector centrality;
  double alpha = 0.0;  ///< attenuation actually used
  bool clamped = false;
  int iterations = 0;
};

/// Largest adjacency eigenvalue, estimated by Lanczos iteration started
/// from the all-ones vector. Stops when the top Ritz value moves by less
/// than tol (relative) over eight steps, or after max_iter steps.
double adjacency_spectral_radius(const Graph& g, double tol = 1e-6, int max_iter = 120);

/// Solves (I - alpha A) c = alpha A 1 by fixed-point iteration
/// c <- alpha A (c + 1). Throws ConvergenceError after max_iter sweeps.
KatzResult katz_centrality(const Graph& g, const KatzParams& params = {});

/// Disjoint cover of the vertex set.
struct Partition {
  std::vector<NodeSet> communities;

  std::size_t size() const noexcept { return communities.size(); }
  bool operator==(const Partition&) const = default;
};

/// Throws ValidationError unless `p` is a disjoint cover of 0..n-1 with
/// nonempty sorted communities.
void validate_partition(const Partition& p, Vertex n);

/// Community index of every vertex.
std::vector<int> membership(const Partition& p, Vertex n);

/// Newman modularity. Throws ValidationError on an edgeless graph.
double modularity(const Graph& g, const Partition& p);

/// Contribution of one community: e_c / m - (d_c / 2m)^2, where e_c is
/// the internal edge count and d_c the degree total. Modularity is the
/// sum of these over the communities.
double community_modularity_term(const Graph& g, std::span<const Vertex> community);

/// |N(u) n N(v)| / |N(u) u N(v)| over full-graph neighborhoods; 0 when
/// both are empty.
double jaccard_nodes(const Graph& g, Vertex u, Vertex v);

/// Mean of jaccard_nodes over all |U| * |V| ordered pairs.
double jaccard_communities(const Graph& g, std::span<const Vertex> U,
                           std::span<const Vertex> V);

}  // namespace gbfpum

#endif  // GBFPUM_MEASURES_HPP
