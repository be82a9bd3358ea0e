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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "gbfpum/error.hpp"
#include "gbfpum/io.hpp"
#include "gbfpum/pum.hpp"
#include "gbfpum/signal.hpp"

namespace gbfpum::cli {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << content;
  if (!out) throw ValidationError("error while writing " + path.string());
}

LabeledGraph load_graph(const RunConfig& config) {
  LabeledGraph lg = read_edge_list(config.graph, config.node_count);
  if (lg.graph().node_count() == 0) throw ValidationError("graph has no vertices");
  return lg;
}

// Samples from --sample-ids, or `count` vertices drawn uniformly from
// `candidates` (sorted) with the given seed.
NodeSet resolve_samples(const SampleSpec& spec, const LabeledGraph& lg,
                        const NodeSet& candidates) {
  if (spec.ids_file) return read_sample_ids(*spec.ids_file, lg);
  const Vertex count = *spec.count;
  if (count > static_cast<Vertex>(candidates.size())) {
    throw ValidationError("requested " + std::to_string(count) + " samples but only " +
                          std::to_string(candidates.size()) + " vertices are eligible");
  }
  const NodeSet picks = uniform_samples(static_cast<Vertex>(candidates.size()), count, spec.seed);
  NodeSet out;
  out.reserve(picks.size());
  for (Vertex i : picks) out.push_back(candidates[i]);
  return out;
}

NodeSet all_vertices(Vertex n) {
  NodeSet out(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) out[v] = v;
  return out;
}

std::string signal_csv(const LabeledGraph& lg, const SignalVector& x) {
  std::ostringstream out;
  write_signal_csv(out, lg, x);
  return out.str();
}

void write_partition_files(const RunConfig& config, const LabeledGraph& lg,
                           const ExpandedPartition& ep, const std::filesystem::path& json_path) {
  write_file(json_path, partition_to_json(ep).dump() + "\n");
  if (config.plot_out) {
    std::ostringstream plot;
    write_community_plot_csv(plot, lg, ep);
    write_file(*config.plot_out, plot.str());
  }
}

void configure_logging(bool verbose) {
  auto logger = spdlog::stderr_color_mt("gbfpum");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::info);
}

}  // namespace

void validate(const RunConfig& config, const std::string& command) {
  const bool by_count = config.samples.count.has_value();
  const bool by_file = config.samples.ids_file.has_value();
  if (by_count == by_file) {
    throw ValidationError("give exactly one of --samples N or --sample-ids FILE");
  }
  if (by_count && *config.samples.count < 1) throw ValidationError("--samples must be positive");
  if (command == "interpolate" && config.signal.has_value() == config.synth_seed.has_value()) {
    throw ValidationError("give exactly one of --signal FILE or --synth-seed S");
  }
  gbfpum::validate(config.community);
  gbfpum::validate(config.kernel);
}

void cmd_communities(const RunConfig& config) {
  validate(config, "communities");
  const LabeledGraph lg = load_graph(config);
  const NodeSet samples =
      resolve_samples(config.samples, lg, all_vertices(lg.graph().node_count()));
  const CommunityDetection detection = detect_communities(lg.graph(), samples, config.community);
  write_partition_files(config, lg, detection.expanded, config.out);
  spdlog::info("{} communities from {} samples (modularity {:.6f})", detection.partition.size(),
               samples.size(), modularity(lg.graph(), detection.partition));
}

void cmd_interpolate(const RunConfig& config) {
  validate(config, "interpolate");
  const LabeledGraph lg = load_graph(config);
  const Graph& g = lg.graph();
  const Vertex n = g.node_count();

  PartialSignal truth;
  if (config.signal) {
    truth = read_signal_csv(*config.signal, lg);
  } else {
    const SignalVector x = synth_low_pass_signal(g, *config.synth_seed, config.synth_order);
    truth.nodes = all_vertices(n);
    truth.values.assign(x.data(), x.data() + x.size());
  }
  const NodeSet samples = resolve_samples(config.samples, lg, truth.nodes);
  const SignalVector sample_values = truth.at(samples);

  const PipelineResult result =
      run_pipeline(g, samples, sample_values, config.community, config.kernel);
  const SignalVector& approx = result.global.approx;

  SignalVector truth_known = Eigen::Map<const SignalVector>(
      truth.values.data(), static_cast<Eigen::Index>(truth.values.size()));
  SignalVector approx_known(static_cast<Eigen::Index>(truth.nodes.size()));
  for (std::size_t i = 0; i < truth.nodes.size(); ++i) {
    approx_known[static_cast<Eigen::Index>(i)] = approx[truth.nodes[i]];
  }
  const ErrorReport errors = compute_errors(truth_known, approx_known, result.timing.total);

  double worst_sample = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    worst_sample = std::max(
        worst_sample, std::abs(approx[samples[i]] - sample_values[static_cast<Eigen::Index>(i)]));
  }

  nlohmann::json report;
  report["approx"] = std::vector<double>(approx.data(), approx.data() + approx.size());
  report["rmae"] = errors.rmae;
  report["rrmse"] = errors.rrmse;
  report["communities"] = result.detection.partition.size();
  report["samples"] = samples.size();
  report["evaluated"] = truth.nodes.size();
  report["max_sample_residual"] = worst_sample;
  report["sample_free_communities"] = result.global.sample_free;
  report["time_s"] = {{"detect", result.timing.detect},
                      {"fit", result.timing.fit},
                      {"total", result.timing.total}};
  write_file(config.out, report.dump(2) + "\n");
  if (config.approx_out) write_file(*config.approx_out, signal_csv(lg, approx));
  if (config.partition_out) {
    write_partition_files(config, lg, result.detection.expanded, *config.partition_out);
  }
  spdlog::info("|W| = {}: {} communities, RMAE {:.6e}, RRMSE {:.6e}, {:.3f} s", samples.size(),
               result.detection.partition.size(), errors.rmae, errors.rrmse,
               result.timing.total);
}

void cmd_synth_signal(const SynthConfig& config) {
  const LabeledGraph lg = read_edge_list(config.graph);
  const SignalVector x = synth_low_pass_signal(lg.graph(), config.seed, config.order);
  write_file(config.out, signal_csv(lg, x));
}

std::size_t cmd_flow_ingest(const FlowConfig& config) {
  const LabeledGraph lg = read_edge_list(config.graph);
  std::ifstream in(config.flows);
  if (!in) throw ValidationError("cannot open " + config.flows.string());
  const PartialSignal slice = read_flow_slice(in, lg, config.timestamp);
  if (slice.nodes.empty()) {
    throw ValidationError("no flow rows at timestamp '" + config.timestamp + "'");
  }

  const Subgraph measured = induced_subgraph(lg.graph(), slice.nodes);
  const std::vector<NodeSet> components = connected_components(measured.graph);
  const auto largest = std::max_element(
      components.begin(), components.end(),
      [](const NodeSet& a, const NodeSet& b) { return a.size() < b.size(); });
  spdlog::info("{} measured vertices in {} components; keeping the largest ({} vertices)",
               slice.nodes.size(), components.size(), largest->size());

  NodeSet kept;
  kept.reserve(largest->size());
  for (Vertex local : *largest) kept.push_back(measured.to_parent[local]);
  const SignalVector values = slice.at(kept);

  if (config.graph_out) {
    // Dense relabeling so the written graph reads back without gaps.
    const Subgraph sub = induced_subgraph(lg.graph(), kept);
    const LabeledGraph relabeled = LabeledGraph::numeric(sub.graph);
    std::ostringstream edges;
    edges << "# largest measured component, " << kept.size() << " vertices\n";
    write_edge_list(edges, sub.graph);
    write_file(*config.graph_out, edges.str());
    std::ostringstream mapping;
    mapping << "node,original\n";
    for (std::size_t i = 0; i < kept.size(); ++i) mapping << i << ',' << lg.label(kept[i]) << '\n';
    write_file(config.graph_out->string() + ".map.csv", mapping.str());
    write_file(config.out, signal_csv(relabeled, values));
    if (config.ids_out) {
      std::ostringstream ids;
      write_sample_ids(ids, relabeled, all_vertices(static_cast<Vertex>(kept.size())));
      write_file(*config.ids_out, ids.str());
    }
  } else {
    PartialSignal out{kept, std::vector<double>(values.data(), values.data() + values.size())};
    std::ostringstream csv;
    write_signal_csv(csv, lg, out);
    write_file(config.out, csv.str());
    if (config.ids_out) {
      std::ostringstream ids;
      write_sample_ids(ids, lg, kept);
      write_file(*config.ids_out, ids.str());
    }
  }
  return kept.size();
}

int run(int argc, char** argv) {
  CLI::App app{"Graph signal interpolation with community-based partition of unity"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Debug logging");

  RunConfig run_config;
  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--graph", run_config.graph, "Edge list file")->required();
    cmd->add_option("--n", run_config.node_count, "Vertex count (default: max id + 1)");
    auto* count = cmd->add_option("--samples", run_config.samples.count,
                                  "Number of uniformly drawn sample vertices");
    cmd->add_option("--seed", run_config.samples.seed, "Sampling seed")->needs(count);
    cmd->add_option("--sample-ids", run_config.samples.ids_file, "File of sample vertex labels")
        ->excludes(count);
    cmd->add_option("--r", run_config.community.r, "Inside-neighbour ratio threshold")
        ->capture_default_str();
    cmd->add_option("--dmax", run_config.community.dmax, "Boundary expansion radius")
        ->capture_default_str();
    cmd->add_option("--dmin", run_config.community.dmin, "Interior expansion radius")
        ->capture_default_str();
    cmd->add_option("--small-fraction", run_config.community.small_fraction,
                    "Communities below this fraction of n are merged")
        ->capture_default_str();
    cmd->add_option("--katz-alpha", run_config.community.katz.alpha, "Katz attenuation")
        ->capture_default_str();
    cmd->add_option("--out", run_config.out, "Output file")->required();
    cmd->add_option("--plot-out", run_config.plot_out,
                    "CSV node,community,expanded_memberships");
  };

  auto* communities = app.add_subcommand("communities", "Detect overlapping communities");
  add_run_options(communities);

  auto* interpolate = app.add_subcommand("interpolate", "Reconstruct a signal from samples");
  add_run_options(interpolate);
  auto* signal_opt =
      interpolate->add_option("--signal", run_config.signal, "Signal CSV (node,value)");
  interpolate->add_option("--synth-seed", run_config.synth_seed, "Use the synthetic signal")
      ->excludes(signal_opt);
  interpolate->add_option("--synth-order", run_config.synth_order,
                          "Low-pass order of the synthetic signal")
      ->capture_default_str();
  interpolate->add_option("--epsilon", run_config.kernel.epsilon, "Kernel shift")
      ->capture_default_str();
  interpolate->add_option("--s", run_config.kernel.s, "Kernel exponent")->capture_default_str();
  interpolate->add_option("--gamma", run_config.kernel.gamma, "Regularization weight")
      ->capture_default_str();
  interpolate->add_option("--approx-out", run_config.approx_out, "Approximation CSV");
  interpolate->add_option("--partition-out", run_config.partition_out, "Partition JSON");

  SynthConfig synth_config;
  auto* synth = app.add_subcommand("synth-signal", "Write a seeded low-pass test signal");
  synth->add_option("--graph", synth_config.graph, "Edge list file")->required();
  synth->add_option("--seed", synth_config.seed, "Noise seed")->required();
  synth->add_option("--order", synth_config.order, "Power of (I + L)^-1 applied to the noise")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  synth->add_option("--out", synth_config.out, "Signal CSV")->required();

  FlowConfig flow_config;
  auto* flow = app.add_subcommand("flow-ingest", "Extract one timestamp of flow measurements");
  flow->add_option("--graph", flow_config.graph, "Edge list file")->required();
  flow->add_option("--flows", flow_config.flows, "CSV node,timestamp,flow")->required();
  flow->add_option("--timestamp", flow_config.timestamp, "Timestamp to extract")->required();
  flow->add_option("--out", flow_config.out, "Signal CSV")->required();
  flow->add_option("--ids-out", flow_config.ids_out, "Measured vertex list");
  flow->add_option("--graph-out", flow_config.graph_out,
                   "Write the largest measured component as a relabeled edge list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kValidation;
  }

  if (!spdlog::get("gbfpum")) configure_logging(verbose);
  spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::info);
  try {
    if (communities->parsed()) {
      cmd_communities(run_config);
    } else if (interpolate->parsed()) {
      cmd_interpolate(run_config);
    } else if (synth->parsed()) {
      cmd_synth_signal(synth_config);
    } else if (flow->parsed()) {
      cmd_flow_ingest(flow_config);
    }
  } catch (const ValidationError& e) {
    spdlog::error("{}", e.what());
    return kValidation;
  } catch (const NumericalError& e) {
    spdlog::error("{}", e.what());
    return kNumerical;
  } catch (const std::filesystem::filesystem_error& e) {
    spdlog::error("{}", e.what());
    return kValidation;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
  return kSuccess;
}

int run(const std::vector<std::string>& args) {
  std::vector<std::string> storage{"gbfpum"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace gbfpum::cli
