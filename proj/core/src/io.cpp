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

#include "gbfpum/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gbfpum/error.hpp"

namespace gbfpum {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    const auto end = std::min(line.find_first_of(" \t\r", pos), line.size());
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.push_back(trim(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool is_skippable(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

std::optional<std::int64_t> parse_integer(std::string_view s) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || value < 0) return std::nullopt;
  return value;
}

std::optional<double> parse_double(std::string_view s) {
  double value = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  throw ValidationError("line " + std::to_string(line_no) + ": " + what);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return in;
}

PartialSignal from_pairs(std::vector<std::pair<Vertex, double>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  PartialSignal out;
  for (auto [v, x] : pairs) {
    out.nodes.push_back(v);
    out.values.push_back(x);
  }
  return out;
}

}  // namespace

LabeledGraph::LabeledGraph(Graph graph, std::vector<std::string> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (labels_.size() != static_cast<std::size_t>(graph_.node_count())) {
    throw ValidationError("label table size does not match the graph");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!lookup_.emplace(labels_[i], static_cast<Vertex>(i)).second) {
      throw ValidationError("duplicate vertex label '" + labels_[i] + "'");
    }
  }
}

LabeledGraph LabeledGraph::numeric(Graph graph) {
  std::vector<std::string> labels(static_cast<std::size_t>(graph.node_count()));
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = std::to_string(i);
  return {std::move(graph), std::move(labels)};
}

std::optional<Vertex> LabeledGraph::find(std::string_view label) const {
  const auto it = lookup_.find(std::string(label));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Vertex LabeledGraph::at(std::string_view label) const {
  const auto v = find(label);
  if (!v) throw ValidationError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

LabeledGraph read_edge_list(std::istream& in, std::optional<Vertex> n) {
  std::vector<std::pair<std::string, std::string>> raw;
  std::string line;
  std::size_t line_no = 0;
  bool numeric = true;
  std::int64_t max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto tokens = split_whitespace(line);
    if (tokens.size() < 2 || tokens.size() > 3) fail_at(line_no, "expected 'u v' or 'u v 1'");
    if (tokens.size() == 3) {
      const auto w = parse_double(tokens[2]);
      if (!w || *w != 1.0) fail_at(line_no, "weighted edges are not supported");
    }
    for (int k = 0; k < 2; ++k) {
      const auto id = parse_integer(tokens[k]);
      if (id) {
        max_id = std::max(max_id, *id);
      } else {
        numeric = false;
      }
    }
    raw.emplace_back(tokens[0], tokens[1]);
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(raw.size());
  if (numeric) {
    if (max_id >= std::numeric_limits<Vertex>::max()) throw ValidationError("vertex id too large");
    const Vertex count = n.value_or(static_cast<Vertex>(max_id + 1));
    if (max_id >= count) {
      throw ValidationError("vertex id " + std::to_string(max_id) + " exceeds the vertex count " +
                            std::to_string(count));
    }
    for (const auto& [u, v] : raw) {
      edges.emplace_back(static_cast<Vertex>(*parse_integer(u)),
                         static_cast<Vertex>(*parse_integer(v)));
    }
    return LabeledGraph::numeric(Graph::from_edge_list(edges, count));
  }

  if (n) throw ValidationError("an explicit vertex count requires numeric vertex ids");
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& label) {
    const auto [it, inserted] = ids.emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  for (const auto& [u, v] : raw) {
    const Vertex a = intern(u);
    const Vertex b = intern(v);
    edges.emplace_back(a, b);
  }
  const auto count = static_cast<Vertex>(labels.size());
  return {Graph::from_edge_list(edges, count), std::move(labels)};
}

LabeledGraph read_edge_list(const std::filesystem::path& path, std::optional<Vertex> n) {
  auto in = open_input(path);
  return read_edge_list(in, n);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>* labels) {
  for (auto [u, v] : g.edges()) {
    if (labels) {
      out << (*labels)[u] << ' ' << (*labels)[v] << '\n';
    } else {
      out << u << ' ' << v << '\n';
    }
  }
}

SignalVector PartialSignal::dense(Vertex n) const {
  if (nodes.size() != static_cast<std::size_t>(n)) {
    for (Vertex v = 0; v < n; ++v) {
      if (!contains(nodes, v)) {
        throw ValidationError("signal has no value for vertex " + std::to_string(v));
      }
    }
  }
  SignalVector out(n);
  for (std::size_t i = 0; i < nodes.size(); ++i) out[nodes[i]] = values[i];
  return out;
}

SignalVector PartialSignal::at(std::span<const Vertex> ids) const {
  SignalVector out(static_cast<Eigen::Index>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), ids[i]);
    if (it == nodes.end() || *it != ids[i]) {
      throw ValidationError("signal has no value for vertex " + std::to_string(ids[i]));
    }
    out[static_cast<Eigen::Index>(i)] = values[static_cast<std::size_t>(it - nodes.begin())];
  }
  return out;
}

PartialSignal read_signal_csv(std::istream& in, const LabeledGraph& g) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<std::pair<Vertex, double>> pairs;
  std::vector<char> seen(static_cast<std::size_t>(g.graph().node_count()), 0);
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto fields = split_csv(line);
    if (!header_seen) {
      if (fields.size() != 2 || fields[0] != "node" || fields[1] != "value") {
        fail_at(line_no, "expected header 'node,value'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 2) fail_at(line_no, "expected 'node,value'");
    const auto v = g.find(fields[0]);
    if (!v) fail_at(line_no, "unknown vertex '" + std::string(fields[0]) + "'");
    const auto x = parse_double(fields[1]);
    if (!x) fail_at(line_no, "malformed value '" + std::string(fields[1]) + "'");
    if (seen[*v]) fail_at(line_no, "repeated vertex '" + std::string(fields[0]) + "'");
    seen[*v] = 1;
    pairs.emplace_back(*v, *x);
  }
  if (!header_seen) throw ValidationError("signal file is empty");
  return from_pairs(std::move(pairs));
}

PartialSignal read_signal_csv(const std::filesystem::path& path, const LabeledGraph& g) {
  auto in = open_input(path);
  return read_signal_csv(in, g);
}

void write_signal_csv(std::ostream& out, const LabeledGraph& g, const PartialSignal& signal) {
  out << "node,value\n";
  for (std::size_t i = 0; i < signal.nodes.size(); ++i) {
    out << g.label(signal.nodes[i]) << ',' << format_double(signal.values[i]) << '\n';
  }
}

void write_signal_csv(std::ostream& out, const LabeledGraph& g, const SignalVector& signal) {
  if (signal.size() != g.graph().node_count()) {
    throw ValidationError("signal length does not match the graph");
  }
  out << "node,value\n";
  for (Vertex v = 0; v < g.graph().node_count(); ++v) {
    out << g.label(v) << ',' << format_double(signal[v]) << '\n';
  }
}

NodeSet read_sample_ids(std::istream& in, const LabeledGraph& g) {
  std::vector<Vertex> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    for (auto token : split_whitespace(line)) {
      const auto v = g.find(token);
      if (!v) fail_at(line_no, "unknown vertex '" + std::string(token) + "'");
      ids.push_back(*v);
    }
  }
  return make_node_set(std::move(ids));
}

NodeSet read_sample_ids(const std::filesystem::path& path, const LabeledGraph& g) {
  auto in = open_input(path);
  return read_sample_ids(in, g);
}

void write_sample_ids(std::ostream& out, const LabeledGraph& g, std::span<const Vertex> ids) {
  for (Vertex v : ids) out << g.label(v) << '\n';
}

nlohmann::json partition_to_json(const Partition& p) {
  return {{"communities", p.communities}};
}

nlohmann::json partition_to_json(const ExpandedPartition& ep) {
  nlohmann::json j = partition_to_json(ep.origin);
  j["expanded"] = ep.communities;
  return j;
}

Partition partition_from_json(const nlohmann::json& j) {
  try {
    return Partition{j.at("communities").get<std::vector<NodeSet>>()};
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed partition JSON: ") + e.what());
  }
}

ExpandedPartition expanded_partition_from_json(const nlohmann::json& j) {
  ExpandedPartition ep;
  ep.origin = partition_from_json(j);
  try {
    ep.communities = j.at("expanded").get<std::vector<NodeSet>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed partition JSON: ") + e.what());
  }
  if (ep.communities.size() != ep.origin.size()) {
    throw ValidationError("expanded communities are not aligned with communities");
  }
  return ep;
}

void write_community_plot_csv(std::ostream& out, const LabeledGraph& g,
                              const ExpandedPartition& ep) {
  const Vertex n = g.graph().node_count();
  const std::vector<int> label = membership(ep.origin, n);
  std::vector<std::vector<int>> covering(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < ep.size(); ++j) {
    for (Vertex v : ep.communities[j]) covering[v].push_back(static_cast<int>(j));
  }
  out << "node,community,expanded_memberships\n";
  for (Vertex v = 0; v < n; ++v) {
    out << g.label(v) << ',' << label[v] << ',';
    for (std::size_t k = 0; k < covering[v].size(); ++k) {
      if (k > 0) out << ';';
      out << covering[v][k];
    }
    out << '\n';
  }
}

PartialSignal read_flow_slice(std::istream& in, const LabeledGraph& g,
                              std::string_view timestamp) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<std::pair<Vertex, double>> pairs;
  std::vector<char> seen(static_cast<std::size_t>(g.graph().node_count()), 0);
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto fields = split_csv(line);
    if (!header_seen) {
      if (fields.size() != 3 || fields[0] != "node" || fields[1] != "timestamp" ||
          fields[2] != "flow") {
        fail_at(line_no, "expected header 'node,timestamp,flow'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) fail_at(line_no, "expected 'node,timestamp,flow'");
    const auto v = g.find(fields[0]);
    if (!v) fail_at(line_no, "unknown vertex '" + std::string(fields[0]) + "'");
    const auto x = parse_double(fields[2]);
    if (!x) fail_at(line_no, "malformed flow '" + std::string(fields[2]) + "'");
    if (fields[1] != timestamp) continue;
    if (seen[*v]) fail_at(line_no, "repeated vertex '" + std::string(fields[0]) + "'");
    seen[*v] = 1;
    pairs.emplace_back(*v, *x);
  }
  if (!header_seen) throw ValidationError("flow file is empty");
  return from_pairs(std::move(pairs));
}

std::string format_double(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, end};
}

}  // namespace gbfpum
