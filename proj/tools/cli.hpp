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

#ifndef GBFPUM_TOOLS_CLI_HPP
#define GBFPUM_TOOLS_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gbfpum/community.hpp"
#include "gbfpum/kernel.hpp"

namespace gbfpum::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kValidation = 2,
  kNumerical = 3,
};

struct SampleSpec {
  std::optional<Vertex> count;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> ids_file;
};

struct RunConfig {
  std::filesystem::path graph;
  std::optional<Vertex> node_count;
  std::optional<std::filesystem::path> signal;
  std::optional<std::uint64_t> synth_seed;
  int synth_order = 1;
  SampleSpec samples;
  CommunityParams community;
  KernelParams kernel;
  std::filesystem::path out;
  std::optional<std::filesystem::path> plot_out;
  std::optional<std::filesystem::path> approx_out;
  std::optional<std::filesystem::path> partition_out;
};

/// Throws ValidationError when the config is inconsistent for `command`.
void validate(const RunConfig& config, const std::string& command);

void cmd_communities(const RunConfig& config);
void cmd_interpolate(const RunConfig& config);

struct SynthConfig {
  std::filesystem::path graph;
  std::uint64_t seed = 0;
  int order = 1;
  std::filesystem::path out;
};
void cmd_synth_signal(const SynthConfig& config);

struct FlowConfig {
  std::filesystem::path graph;
  std::filesystem::path flows;
  std::string timestamp;
  std::filesystem::path out;
  std::optional<std::filesystem::path> ids_out;
  std::optional<std::filesystem::path> graph_out;
};
/// Returns the number of measured vertices kept.
std::size_t cmd_flow_ingest(const FlowConfig& config);

/// Parses argv, dispatches, and maps exceptions to exit codes.
int run(int argc, char** argv);
int run(const std::vector<std::string>& args);

}  // namespace gbfpum::cli

#endif  // GBFPUM_TOOLS_CLI_HPP
