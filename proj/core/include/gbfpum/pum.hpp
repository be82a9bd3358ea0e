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
 * \file pum.hpp
 *
 * \brief Partition of unity over overlapping communities and the global
 * approximant x*(v) = sum_j phi_j(v) x*_j(v).
 */
#ifndef GBFPUM_PUM_HPP
#define GBFPUM_PUM_HPP

#include <span>
#include <vector>

#include "gbfpum/community.hpp"
#include "gbfpum/graph.hpp"
#include "gbfpum/kernel.hpp"

namespace gbfpum {

/// Characteristic-function weights phi_j(v) = 1_{V_j}(v) / #{j : v in V_j}.
class PUWeights {
 public:
  PUWeights() = default;
  PUWeights(std::vector<std::vector<int>> covering, std::size_t community_count);

  Vertex node_count() const noexcept { return static_cast<Vertex>(covering_.size()); }
  std::size_t community_count() const noexcept { return community_count_; }

  /// Indices of the communities containing v, ascending.
  std::span<const int> covering(Vertex v) const { return covering_[v]; }
  /// Number of communities containing v; every weight at v is 1 / this.
  int multiplicity(Vertex v) const { return static_cast<int>(covering_[v].size()); }
  double weight(Vertex v, int community) const;

 private:
  std::vector<std::vector<int>> covering_;
  std::size_t community_count_ = 0;
};

/// Throws ValidationError naming the first vertex no community covers.
PUWeights build_pu_weights(const ExpandedPartition& ep, Vertex n);

struct LocalFit {
  /// Expanded community, in parent ids.
  NodeSet community;
  /// Samples inside it, in parent ids.
  NodeSet samples;
  /// Local approximant at every community vertex, aligned with `community`.
  SignalVector values;
};

struct GlobalApproximation {
  SignalVector approx;
  PUWeights weights;
  std::vector<LocalFit> locals;
  /// Communities without samples; their local approximant is 0.
  std::vector<std::size_t> sample_free;
};

/// sum_j phi_j(v) y_j(v), with the 1/k weight applied once after summing
/// the k local values at v in community order.
SignalVector blend_local_fits(const PUWeights& weights, std::span<const LocalFit> locals);

/// Fits each expanded community independently and blends the fits.
/// `sample_values` is aligned with the sorted sample ids.
GlobalApproximation assemble_global(const Graph& g, const ExpandedPartition& ep,
                                    std::span<const Vertex> samples,
                                    const SignalVector& sample_values,
                                    const KernelParams& params = {});

struct ErrorReport {
  double rmae = 0.0;
  double rrmse = 0.0;
  SignalVector abs_errors;
  double seconds = 0.0;
};

/// RMAE = ||e||_inf / ||x||_inf and RRMSE = ||e||_2 / ||x||_2 over all
/// vertices. Throws ValidationError for a zero truth vector.
ErrorReport compute_errors(const SignalVector& truth, const SignalVector& approx,
                           double elapsed_seconds = 0.0);

struct PipelineTiming {
  double detect = 0.0;
  double fit = 0.0;
  double total = 0.0;
};

struct PipelineResult {
  CommunityDetection detection;
  GlobalApproximation global;
  PipelineTiming timing;
};

/// Community detection followed by the partition-of-unity fit.
PipelineResult run_pipeline(const Graph& g, std::span<const Vertex> samples,
                            const SignalVector& sample_values,
                            const CommunityParams& community_params = {},
                            const KernelParams& kernel_params = {});

}  // namespace gbfpum

#endif  // GBFPUM_PUM_HPP
