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
 * \file io.hpp
 *
 * \brief Text formats: edge lists, `node,value` signal CSV, sample id
 * lists, partition JSON, flow CSV. All readers throw ValidationError with
 * the offending line number.
 */
#ifndef GBFPUM_IO_HPP
#define GBFPUM_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gbfpum/community.hpp"
#include "gbfpum/graph.hpp"

namespace gbfpum {

/// Graph plus the external label of every vertex.
///
/// When every token of the edge list is a nonnegative integer the ids are
/// used as-is (n = max id + 1 unless given) and label i is "i". Otherwise
/// labels get dense ids in order of first appearance.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(Graph graph, std::vector<std::string> labels);
  /// Labels "0", "1", ... for a graph with dense numeric ids.
  static LabeledGraph numeric(Graph graph);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }

  /// Vertex id of `label`, or nullopt.
  std::optional<Vertex> find(std::string_view label) const;
  /// Vertex id of `label`; throws ValidationError when unknown.
  Vertex at(std::string_view label) const;

 private:
  Graph graph_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> lookup_;
};

/// `u v` per line, `#` comments and blank lines skipped. A third column is
/// accepted only when it equals 1.
LabeledGraph read_edge_list(std::istream& in, std::optional<Vertex> n = std::nullopt);
LabeledGraph read_edge_list(const std::filesystem::path& path,
                            std::optional<Vertex> n = std::nullopt);
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>* labels = nullptr);

/// Values at a subset of vertices, sorted by vertex.
struct PartialSignal {
  NodeSet nodes;
  std::vector<double> values;

  /// Dense vector; throws ValidationError unless every vertex is present.
  SignalVector dense(Vertex n) const;
  /// Values at `ids` (sorted); throws ValidationError naming a missing id.
  SignalVector at(std::span<const Vertex> ids) const;
};

/// CSV with header `node,value`; node column holds labels.
PartialSignal read_signal_csv(std::istream& in, const LabeledGraph& g);
PartialSignal read_signal_csv(const std::filesystem::path& path, const LabeledGraph& g);
void write_signal_csv(std::ostream& out, const LabeledGraph& g, const PartialSignal& signal);
void write_signal_csv(std::ostream& out, const LabeledGraph& g, const SignalVector& signal);

/// Whitespace-separated labels, `#` comments allowed.
NodeSet read_sample_ids(std::istream& in, const LabeledGraph& g);
NodeSet read_sample_ids(const std::filesystem::path& path, const LabeledGraph& g);
void write_sample_ids(std::ostream& out, const LabeledGraph& g, std::span<const Vertex> ids);

/// `{"communities": [[...], ...]}`
nlohmann::json partition_to_json(const Partition& p);
/// Adds `"expanded"` aligned with `"communities"`.
nlohmann::json partition_to_json(const ExpandedPartition& ep);
Partition partition_from_json(const nlohmann::json& j);
ExpandedPartition expanded_partition_from_json(const nlohmann::json& j);

/// `node,community,expanded_memberships`; memberships joined by ';'.
void write_community_plot_csv(std::ostream& out, const LabeledGraph& g,
                              const ExpandedPartition& ep);

/// Rows of a `node,timestamp,flow` CSV whose timestamp equals `timestamp`.
/// Unknown nodes, malformed rows and repeated nodes at the timestamp throw.
PartialSignal read_flow_slice(std::istream& in, const LabeledGraph& g,
                              std::string_view timestamp);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

}  // namespace gbfpum

#endif  // GBFPUM_IO_HPP
