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

#include "gbfpum/pum.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <string>

#include <spdlog/spdlog.h>

#include "gbfpum/error.hpp"
#include "parallel.hpp"

namespace gbfpum {

PUWeights::PUWeights(std::vector<std::vector<int>> covering, std::size_t community_count)
    : covering_(std::move(covering)), community_count_(community_count) {}

double PUWeights::weight(Vertex v, int community) const {
  const auto& cover = covering_[v];
  if (!std::binary_search(cover.begin(), cover.end(), community)) return 0.0;
  return 1.0 / static_cast<double>(cover.size());
}

PUWeights build_pu_weights(const ExpandedPartition& ep, Vertex n) {
  std::vector<std::vector<int>> covering(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < ep.size(); ++j) {
    for (Vertex v : ep.communities[j]) {
      if (v < 0 || v >= n) throw ValidationError("expanded community vertex out of range");
      covering[v].push_back(static_cast<int>(j));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (covering[v].empty()) {
      throw ValidationError("vertex " + std::to_string(v) + " is not covered by any community");
    }
  }
  return PUWeights(std::move(covering), ep.size());
}

SignalVector blend_local_fits(const PUWeights& weights, std::span<const LocalFit> locals) {
  if (locals.size() != weights.community_count()) {
    throw ValidationError("local fit count does not match the partition of unity");
  }
  const Vertex n = weights.node_count();
  // Fixed-order reduction keeps the result independent of scheduling.
  SignalVector sum = SignalVector::Zero(n);
  for (const LocalFit& local : locals) {
    if (local.values.size() != static_cast<Eigen::Index>(local.community.size())) {
      throw ValidationError("local fit values and community differ in length");
    }
    for (std::size_t i = 0; i < local.community.size(); ++i) {
      sum[local.community[i]] += local.values[static_cast<Eigen::Index>(i)];
    }
  }
  SignalVector out(n);
  for (Vertex v = 0; v < n; ++v) out[v] = sum[v] / static_cast<double>(weights.multiplicity(v));
  return out;
}

GlobalApproximation assemble_global(const Graph& g, const ExpandedPartition& ep,
                                    std::span<const Vertex> samples,
                                    const SignalVector& sample_values,
                                    const KernelParams& params) {
  validate(params);
  if (!is_node_set(samples)) throw ValidationError("samples must be sorted and unique");
  if (sample_values.size() != static_cast<Eigen::Index>(samples.size())) {
    throw ValidationError("sample values and sample ids differ in length");
  }
  const Vertex n = g.node_count();
  if (!samples.empty() && (samples.front() < 0 || samples.back() >= n)) {
    throw ValidationError("sample vertex id out of range");
  }

  GlobalApproximation out;
  out.weights = build_pu_weights(ep, n);
  out.locals.resize(ep.size());

  detail::parallel_for(ep.size(), [&](std::size_t j) {
    LocalFit& local = out.locals[j];
    local.community = ep.communities[j];
    std::set_intersection(local.community.begin(), local.community.end(), samples.begin(),
                          samples.end(), std::back_inserter(local.samples));
    if (local.samples.empty()) {
      local.values = SignalVector::Zero(static_cast<Eigen::Index>(local.community.size()));
      return;
    }
    const Subgraph sub = induced_subgraph(g, local.community);
    NodeSet local_ids;
    SignalVector local_values(static_cast<Eigen::Index>(local.samples.size()));
    local_ids.reserve(local.samples.size());
    for (std::size_t i = 0; i < local.samples.size(); ++i) {
      local_ids.push_back(sub.to_local(local.samples[i]));
      const auto pos = std::lower_bound(samples.begin(), samples.end(), local.samples[i]);
      local_values[static_cast<Eigen::Index>(i)] = sample_values[pos - samples.begin()];
    }
    local.values = fit_local(sub.graph, local_values, local_ids, params).evaluate_all();
  });

  for (std::size_t j = 0; j < ep.size(); ++j) {
    if (out.locals[j].samples.empty()) {
      out.sample_free.push_back(j);
      spdlog::warn("community {} ({} vertices) holds no sample; its local approximant is 0", j,
                   ep.communities[j].size());
    }
  }

  out.approx = blend_local_fits(out.weights, out.locals);
  return out;
}

ErrorReport compute_errors(const SignalVector& truth, const SignalVector& approx,
                           double elapsed_seconds) {
  if (truth.size() != approx.size()) throw ValidationError("signal lengths differ");
  const double truth_max = truth.size() == 0 ? 0.0 : truth.cwiseAbs().maxCoeff();
  if (truth_max == 0.0) throw ValidationError("relative errors are undefined for a zero signal");
  ErrorReport report;
  report.abs_errors = (truth - approx).cwiseAbs();
  report.rmae = report.abs_errors.maxCoeff() / truth_max;
  report.rrmse = report.abs_errors.norm() / truth.norm();
  report.seconds = elapsed_seconds;
  return report;
}

PipelineResult run_pipeline(const Graph& g, std::span<const Vertex> samples,
                            const SignalVector& sample_values,
                            const CommunityParams& community_params,
                            const KernelParams& kernel_params) {
  using clock = std::chrono::steady_clock;
  const auto seconds = [](clock::duration d) { return std::chrono::duration<double>(d).count(); };

  PipelineResult result;
  const auto start = clock::now();
  result.detection = detect_communities(g, samples, community_params);
  const auto detected = clock::now();
  result.global =
      assemble_global(g, result.detection.expanded, samples, sample_values, kernel_params);
  const auto fitted = clock::now();
  result.timing = {seconds(detected - start), seconds(fitted - detected), seconds(fitted - start)};
  return result;
}

}  // namespace gbfpum
