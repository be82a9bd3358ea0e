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

#include "gbfpum/community.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <string>

#include <spdlog/spdlog.h>

#include "gbfpum/mincut.hpp"

namespace gbfpum {

void validate(const CommunityParams& params) {
  if (!(params.r >= 0.0 && params.r <= 1.0)) throw ValidationError("r must lie in [0, 1]");
  if (params.dmin < 0) throw ValidationError("dmin must be nonnegative");
  if (params.dmax < params.dmin) throw ValidationError("dmax must be >= dmin");
  if (!(params.small_fraction > 0.0 && params.small_fraction < 1.0)) {
    throw ValidationError("small_fraction must lie in (0, 1)");
  }
}

namespace {

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodeSet samples_in(std::span<const Vertex> community, std::span<const Vertex> samples) {
  NodeSet out;
  std::set_intersection(community.begin(), community.end(), samples.begin(), samples.end(),
                        std::back_inserter(out));
  return out;
}

NodeSet checked_samples(const Graph& g, std::span<const Vertex> samples) {
  NodeSet w = make_node_set({samples.begin(), samples.end()});
  if (!w.empty() && (w.front() < 0 || w.back() >= g.node_count())) {
    throw ValidationError("sample vertex id out of range");
  }
  return w;
}

}  // namespace

Split split_net(const Graph& g, std::span<const Vertex> community,
                std::span<const Vertex> samples, const KatzParams& katz) {
  if (!is_node_set(community)) throw ValidationError("community must be sorted and unique");
  const NodeSet local_samples = samples_in(community, checked_samples(g, samples));
  if (local_samples.size() < 2) {
    throw UnsplittableError("community holds fewer than two sample vertices");
  }
  const Subgraph sub = induced_subgraph(g, community);
  if (!is_connected(sub.graph)) throw UnsplittableError("community is not connected");

  const KatzResult centrality = katz_centrality(sub.graph, katz);
  std::vector<Vertex> ranked;
  ranked.reserve(local_samples.size());
  for (Vertex w : local_samples) ranked.push_back(sub.to_local(w));
  // Local ids follow parent id order, so a stable sort breaks ties by id.
  std::stable_sort(ranked.begin(), ranked.end(), [&](Vertex a, Vertex b) {
    return centrality.centrality[a] > centrality.centrality[b];
  });
  const Vertex s = ranked[0];
  const Vertex v = ranked[1];

  const Graph& h = sub.graph;
  CapacityGraph capacities(h);
  for (Vertex u : h.neighbors(s)) {
    if (u != v && !h.has_edge(v, u)) capacities.set_capacity(s, u, kInfiniteCapacity);
  }
  for (Vertex u : h.neighbors(v)) {
    if (u != s && !h.has_edge(s, u)) capacities.set_capacity(v, u, kInfiniteCapacity);
  }
  const Cut cut = min_st_cut(capacities, s, v);
  if (!cut.finite()) throw UnsplittableError("no finite cut separates the terminals");

  Split split;
  split.source = sub.to_parent[s];
  split.sink = sub.to_parent[v];
  split.cut_value = cut.value;
  for (Vertex u : cut.source_side) split.first.push_back(sub.to_parent[u]);
  for (Vertex u : cut.sink_side) split.second.push_back(sub.to_parent[u]);
  return split;
}

Candidate find_partition(const Graph& g, const Partition& p, std::size_t index,
                         std::span<const Vertex> samples, const KatzParams& katz) {
  if (index >= p.size()) throw ValidationError("community index out of range");
  Split split;
  try {
    split = split_net(g, p.communities[index], samples, katz);
  } catch (const UnsplittableError&) {
    return {p, kUnsplittableModularity};
  }
  Candidate out{p, 0.0};
  auto& cs = out.partition.communities;
  cs[index] = std::move(split.first);
  cs.insert(cs.begin() + static_cast<std::ptrdiff_t>(index) + 1, std::move(split.second));
  out.modularity = modularity(g, out.partition);
  return out;
}

Partition join_communities(const Graph& g, const Partition& p, double small_fraction) {
  if (p.size() <= 1) return p;
  const double threshold = small_fraction * static_cast<double>(g.node_count());
  std::vector<char> is_big(p.size(), 0);
  bool any_big = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    is_big[i] = static_cast<double>(p.communities[i].size()) >= threshold;
    any_big = any_big || is_big[i];
  }
  if (!any_big) {
    std::size_t largest = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (p.communities[i].size() > p.communities[largest].size()) largest = i;
    }
    is_big[largest] = 1;
  }

  std::vector<NodeSet> big;
  std::vector<const NodeSet*> small;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (is_big[i]) {
      big.push_back(p.communities[i]);
    } else {
      small.push_back(&p.communities[i]);
    }
  }
  for (const NodeSet* c : small) {
    std::size_t best = 0;
    double best_similarity = -1.0;
    for (std::size_t k = 0; k < big.size(); ++k) {
      const double similarity = jaccard_communities(g, *c, big[k]);
      if (similarity > best_similarity) {
        best_similarity = similarity;
        best = k;
      }
    }
    big[best] = set_union(big[best], *c);
  }
  return Partition{std::move(big)};
}

ExpandedPartition expand_communities(const Graph& g, const Partition& p,
                                     const CommunityParams& params) {
  validate(params);
  const std::vector<int> label = membership(p, g.node_count());
  BoundedBfs bfs(g);
  ExpandedPartition out;
  out.origin = p;
  out.communities.reserve(p.size());
  std::vector<Vertex> grown;
  for (std::size_t i = 0; i < p.size(); ++i) {
    grown.assign(p.communities[i].begin(), p.communities[i].end());
    for (Vertex v : p.communities[i]) {
      std::size_t inside = 0;
      for (Vertex w : g.neighbors(v)) inside += label[w] == static_cast<int>(i);
      const bool boundary =
          static_cast<double>(inside) < params.r * static_cast<double>(g.degree(v));
      bfs.ball(v, boundary ? params.dmax : params.dmin, grown);
    }
    out.communities.push_back(make_node_set(grown));
  }
  return out;
}

CommunityDetection detect_communities(const Graph& g, std::span<const Vertex> samples,
                                      const CommunityParams& params) {
  validate(params);
  const NodeSet w = checked_samples(g, samples);
  if (w.empty()) throw ValidationError("no sample vertices");
  if (!is_connected(g)) throw ValidationError("graph is not connected");

  const Vertex n = g.node_count();
  Partition partition;
  partition.communities.emplace_back(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) partition.communities[0][u] = u;

  CommunityDetection result;
  double q = g.edge_count() > 0 ? modularity(g, partition) : 0.0;
  double q_prev = -1.0;

  // The modularity gain of splitting a community does not depend on the
  // rest of the partition, so each community is split at most once.
  struct Outcome {
    NodeSet first;
    NodeSet second;
    double gain = 0.0;
  };
  std::map<NodeSet, std::optional<Outcome>> tried;
  std::size_t disconnected = 0;
  auto attempt = [&](const NodeSet& community) -> const std::optional<Outcome>& {
    auto it = tried.find(community);
    if (it != tried.end()) return it->second;
    std::optional<Outcome> outcome;
    try {
      Split split = split_net(g, community, w, params.katz);
      const double gain = community_modularity_term(g, split.first) +
                          community_modularity_term(g, split.second) -
                          community_modularity_term(g, community);
      outcome = Outcome{std::move(split.first), std::move(split.second), gain};
    } catch (const UnsplittableError& e) {
      if (samples_in(community, w).size() >= 2) {
        ++disconnected;
        spdlog::debug("community of {} vertices left unsplit: {}", community.size(), e.what());
      }
    }
    return tried.emplace(community, std::move(outcome)).first->second;
  };

  while (partition.size() <= w.size() && q_prev < q) {
    q_prev = q;
    const std::vector<NodeSet> snapshot = partition.communities;
    for (const NodeSet& community : snapshot) {
      const auto& outcome = attempt(community);
      if (!outcome) continue;
      const double candidate_q = q + outcome->gain;
      if (!(candidate_q > q)) continue;
      auto& cs = partition.communities;
      const auto pos = std::find(cs.begin(), cs.end(), community);
      *pos = outcome->first;
      cs.insert(pos + 1, outcome->second);
      result.trace.push_back({community, outcome->first, outcome->second, q, candidate_q});
      q = candidate_q;
    }
  }
  if (disconnected > 0) {
    spdlog::warn("{} disconnected communities holding several samples were left unsplit",
                 disconnected);
  }
  result.split_modularity = q;
  result.partition = join_communities(g, partition, params.small_fraction);
  result.expanded = expand_communities(g, result.partition, params);
  return result;
}

}  // namespace gbfpum
