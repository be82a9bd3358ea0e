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
 * \file community.hpp
 *
 * \brief Sample-driven divisive community detection.
 *
 * Communities are split in two by a minimum cut between the two most
 * Katz-central sample vertices they hold, a split being kept only when it
 * raises modularity. Afterwards, communities below a size threshold are
 * merged into the most Jaccard-similar large one, and every community is
 * grown by BFS balls so that neighbouring communities overlap.
 */
#ifndef GBFPUM_COMMUNITY_HPP
#define GBFPUM_COMMUNITY_HPP

#include <span>
#include <vector>

#include "gbfpum/error.hpp"
#include "gbfpum/graph.hpp"
#include "gbfpum/measures.hpp"

namespace gbfpum {

struct CommunityParams {
  /// Inside-neighbour ratio below which a vertex counts as boundary.
  double r = 0.75;
  /// BFS radius added around boundary vertices.
  int dmax = 6;
  /// BFS radius added around interior vertices.
  int dmin = 4;
  /// A community is small when |c| < small_fraction * n.
  double small_fraction = 0.02;
  KatzParams katz{};
};

/// Throws ValidationError when a field is out of range.
void validate(const CommunityParams& params);

/// Overlapping communities aligned by index with the disjoint `origin`.
struct ExpandedPartition {
  std::vector<NodeSet> communities;
  Partition origin;

  std::size_t size() const noexcept { return communities.size(); }
  bool operator==(const ExpandedPartition&) const = default;
};

/// The community cannot be split: fewer than two samples, or its induced
/// subgraph is disconnected.
class UnsplittableError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct Split {
  NodeSet first;   ///< contains `source`
  NodeSet second;  ///< contains `sink`
  Vertex source = -1;
  Vertex sink = -1;
  double cut_value = 0.0;
};

/// Splits `community` by a minimum cut between its two most central
/// samples. Edges from a terminal to a vertex that is neither the other
/// terminal nor one of its neighbours get infinite capacity.
Split split_net(const Graph& g, std::span<const Vertex> community,
                std::span<const Vertex> samples, const KatzParams& katz = {});

/// Returned as the modularity of an unsplittable candidate. Lies below
/// the attainable minimum of -1/2.
inline constexpr double kUnsplittableModularity = -1.0;

struct Candidate {
  Partition partition;
  double modularity = kUnsplittableModularity;
};

/// Replaces p.communities[index] by the two halves of its split (first
/// half in place, second right after it) and scores the result. An
/// unsplittable community yields {p, kUnsplittableModularity}.
Candidate find_partition(const Graph& g, const Partition& p, std::size_t index,
                         std::span<const Vertex> samples, const KatzParams& katz = {});

/// Merges every small community into the large one of highest Jaccard
/// similarity, ties to the lowest index. When every community is small the
/// largest one is treated as large.
Partition join_communities(const Graph& g, const Partition& p, double small_fraction);

/// Grows each community by BFS balls in the full graph: radius dmax around
/// members with fewer than r * deg inside neighbours, dmin otherwise.
ExpandedPartition expand_communities(const Graph& g, const Partition& p,
                                     const CommunityParams& params);

/// One accepted split of the greedy loop.
struct AcceptedSplit {
  NodeSet community;
  NodeSet first;
  NodeSet second;
  double modularity_before = 0.0;
  double modularity_after = 0.0;
};

struct CommunityDetection {
  /// Disjoint communities after joining.
  Partition partition;
  ExpandedPartition expanded;
  /// Modularity before joining small communities.
  double split_modularity = 0.0;
  std::vector<AcceptedSplit> trace;
};

/// Full pipeline: greedy splitting while |partition| <= |W| and the last
/// pass improved modularity, then join, then expand.
CommunityDetection detect_communities(const Graph& g, std::span<const Vertex> samples,
                                      const CommunityParams& params = {});

}  // namespace gbfpum

#endif  // GBFPUM_COMMUNITY_HPP
