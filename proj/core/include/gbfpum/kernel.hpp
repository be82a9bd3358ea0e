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
 * \file kernel.hpp
 *
 * \brief Polyharmonic-spline graph basis functions K = (eps I + L)^{-s},
 * the graph Fourier transform, and the regularized least squares fit
 *
 *   x* = argmin_y (1/N) sum_i |x(w_i) - y(w_i)|^2 + gamma ||y||_K^2,
 *
 * whose minimizer is x* = sum_i c_i K(., w_i) with
 * (K_WW + gamma N I) c = x_W.
 */
#ifndef GBFPUM_KERNEL_HPP
#define GBFPUM_KERNEL_HPP

#include <span>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "gbfpum/graph.hpp"

namespace gbfpum {

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;   ///< ascending
  Eigen::MatrixXd eigenvectors;  ///< orthonormal columns
};

/// Full eigendecomposition of a symmetric matrix. Throws ValidationError
/// for non-square or non-symmetric input.
SpectralDecomposition laplacian_spectrum(const Eigen::MatrixXd& L);
SpectralDecomposition laplacian_spectrum(const SparseMatrix& L);

/// x_hat = U^T x.
SignalVector graph_fourier(const SpectralDecomposition& spectrum, const SignalVector& x);
/// x = U x_hat.
SignalVector inverse_graph_fourier(const SpectralDecomposition& spectrum,
                                   const SignalVector& x_hat);

struct KernelParams {
  double epsilon = 1.0;
  double s = 1.0;
  double gamma = 1e-10;
};

void validate(const KernelParams& params);

enum class KernelMethod {
  Auto,      ///< linear solves when s == 1, spectral sum otherwise
  Solve,     ///< sparse Cholesky of eps I + L; s must be 1
  Spectral,  ///< sum_k (eps + lambda_k)^{-s} u_k u_k^T
};

/// Largest matrix handed to the dense eigensolver.
inline constexpr Vertex kMaxSpectralSize = 3000;

/// Columns `cols` of (eps I + L)^{-s} for a graph Laplacian L. Throws
/// NumericalError when eps + lambda_min <= 0.
Eigen::MatrixXd build_kernel_columns(const SparseMatrix& L, const KernelParams& params,
                                     std::span<const Vertex> cols,
                                     KernelMethod method = KernelMethod::Auto);

/// Fitted local expansion. Vertex ids are local to the graph it was fitted on.
struct KernelModel {
  Vertex node_count = 0;
  NodeSet samples;
  KernelParams params;
  /// Kernel columns at the samples, node_count x |samples|.
  Eigen::MatrixXd columns;
  Eigen::VectorXd coefficients;

  /// Values of the expansion at every vertex.
  SignalVector evaluate_all() const { return columns * coefficients; }
};

/// Regularized least squares fit of `values` (aligned with `samples`) on
/// graph `g`. Throws ValidationError on an empty sample set and
/// NumericalError when the Gram system is not positive definite or the
/// relative residual exceeds 1e-10.
KernelModel fit_local(const Graph& g, const SignalVector& values,
                      std::span<const Vertex> samples, const KernelParams& params = {});

/// sum_i c_i K(v, w_i). Throws ValidationError when v is outside the model.
double evaluate_local(const KernelModel& model, Vertex v);

/// The objective of the fit problem for coefficient vector `c`.
double rls_objective(const KernelModel& model, const SignalVector& values,
                     const Eigen::VectorXd& c);

/// Coefficients, sample ids and parameters; the kernel columns are rebuilt
/// from the graph on restore.
nlohmann::json model_to_json(const KernelModel& model);
KernelModel model_from_json(const Graph& g, const nlohmann::json& j);

}  // namespace gbfpum

#endif  // GBFPUM_KERNEL_HPP
