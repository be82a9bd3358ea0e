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

#include "gbfpum/kernel.hpp"

#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>
#include <nlohmann/json.hpp>

#include "gbfpum/error.hpp"

namespace gbfpum {

SpectralDecomposition laplacian_spectrum(const Eigen::MatrixXd& L) {
  if (L.rows() != L.cols()) throw ValidationError("spectrum of a non-square matrix");
  const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
  if ((L - L.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ValidationError("spectrum of a non-symmetric matrix");
  }
  SpectralDecomposition out;
  if (L.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  return out;
}

SpectralDecomposition laplacian_spectrum(const SparseMatrix& L) {
  return laplacian_spectrum(Eigen::MatrixXd(L));
}

SignalVector graph_fourier(const SpectralDecomposition& spectrum, const SignalVector& x) {
  if (x.size() != spectrum.eigenvectors.rows()) {
    throw ValidationError("signal length does not match the spectrum");
  }
  return spectrum.eigenvectors.transpose() * x;
}

SignalVector inverse_graph_fourier(const SpectralDecomposition& spectrum,
                                   const SignalVector& x_hat) {
  if (x_hat.size() != spectrum.eigenvectors.cols()) {
    throw ValidationError("spectrum length does not match the eigenbasis");
  }
  return spectrum.eigenvectors * x_hat;
}

void validate(const KernelParams& params) {
  if (!(params.s > 0.0)) throw ValidationError("kernel exponent s must be positive");
  if (!(params.gamma >= 0.0)) throw ValidationError("gamma must be nonnegative");
  if (!std::isfinite(params.epsilon)) throw ValidationError("epsilon must be finite");
}

namespace {

Eigen::MatrixXd columns_by_solve(const SparseMatrix& L, const KernelParams& params,
                                 std::span<const Vertex> cols) {
  const Eigen::Index n = L.rows();
  // The smallest Laplacian eigenvalue is 0.
  if (!(params.epsilon > 0.0)) {
    throw NumericalError("eps I + L is not positive definite for eps = " +
                         std::to_string(params.epsilon));
  }
  SparseMatrix shifted = L;
  for (Eigen::Index i = 0; i < n; ++i) shifted.coeffRef(i, i) += params.epsilon;
  Eigen::SimplicialLLT<SparseMatrix> chol(shifted);
  if (chol.info() != Eigen::Success) throw NumericalError("eps I + L factorization failed");
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) rhs(cols[j], static_cast<Eigen::Index>(j)) = 1.0;
  Eigen::MatrixXd out = chol.solve(rhs);
  if (chol.info() != Eigen::Success) throw NumericalError("eps I + L solve failed");
  return out;
}

Eigen::MatrixXd columns_by_spectrum(const SparseMatrix& L, const KernelParams& params,
                                    std::span<const Vertex> cols) {
  if (L.rows() > kMaxSpectralSize) {
    throw NumericalError("spectral kernel limited to " + std::to_string(kMaxSpectralSize) +
                         " vertices; use s = 1");
  }
  const SpectralDecomposition spectrum = laplacian_spectrum(L);
  const Eigen::Index n = L.rows();
  if (n == 0) return {};
  if (!(params.epsilon + spectrum.eigenvalues[0] > 0.0)) {
    throw NumericalError("kernel is not positive definite: eps + lambda_min = " +
                         std::to_string(params.epsilon + spectrum.eigenvalues[0]));
  }
  const Eigen::ArrayXd weights =
      (params.epsilon + spectrum.eigenvalues.array()).pow(-params.s);
  Eigen::MatrixXd rows_at(static_cast<Eigen::Index>(cols.size()), n);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    rows_at.row(static_cast<Eigen::Index>(j)) = spectrum.eigenvectors.row(cols[j]);
  }
  return spectrum.eigenvectors * (weights.matrix().asDiagonal() * rows_at.transpose());
}

}  // namespace

Eigen::MatrixXd build_kernel_columns(const SparseMatrix& L, const KernelParams& params,
                                     std::span<const Vertex> cols, KernelMethod method) {
  validate(params);
  if (L.rows() != L.cols()) throw ValidationError("laplacian must be square");
  for (Vertex c : cols) {
    if (c < 0 || c >= L.rows()) throw ValidationError("kernel column out of range");
  }
  if (method == KernelMethod::Auto) {
    method = params.s == 1.0 ? KernelMethod::Solve : KernelMethod::Spectral;
  }
  if (method == KernelMethod::Solve) {
    if (params.s != 1.0) throw ValidationError("the solve path requires s = 1");
    return columns_by_solve(L, params, cols);
  }
  return columns_by_spectrum(L, params, cols);
}

KernelModel fit_local(const Graph& g, const SignalVector& values,
                      std::span<const Vertex> samples, const KernelParams& params) {
  if (samples.empty()) throw ValidationError("no samples in the community");
  if (values.size() != static_cast<Eigen::Index>(samples.size())) {
    throw ValidationError("sample values and sample ids differ in length");
  }
  if (!is_node_set(samples)) throw ValidationError("samples must be sorted and unique");

  KernelModel model;
  model.node_count = g.node_count();
  model.samples.assign(samples.begin(), samples.end());
  model.params = params;
  model.columns = build_kernel_columns(laplacian(g), params, samples);

  const auto count = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd gram(count, count);
  for (Eigen::Index i = 0; i < count; ++i) gram.row(i) = model.columns.row(samples[i]);
  // Both kernel paths are symmetric up to rounding.
  gram = 0.5 * (gram + gram.transpose()).eval();
  gram.diagonal().array() += params.gamma * static_cast<double>(count);

  Eigen::LLT<Eigen::MatrixXd> chol(gram);
  if (chol.info() != Eigen::Success) {
    throw NumericalError("Gram matrix is not positive definite; check epsilon and s");
  }
  model.coefficients = chol.solve(values);
  Eigen::VectorXd residual = values - gram * model.coefficients;
  const double scale = std::max(values.norm(), std::numeric_limits<double>::min());
  if (residual.norm() > 1e-10 * scale) {
    model.coefficients += chol.solve(residual);
    residual = values - gram * model.coefficients;
  }
  if (residual.norm() > 1e-10 * scale) {
    throw NumericalError("Gram solve relative residual " +
                         std::to_string(residual.norm() / scale) + " exceeds 1e-10");
  }
  return model;
}

double evaluate_local(const KernelModel& model, Vertex v) {
  if (v < 0 || v >= model.node_count) throw ValidationError("vertex outside the model's community");
  return model.columns.row(v).dot(model.coefficients);
}

double rls_objective(const KernelModel& model, const SignalVector& values,
                     const Eigen::VectorXd& c) {
  const auto count = static_cast<Eigen::Index>(model.samples.size());
  Eigen::MatrixXd gram(count, count);
  for (Eigen::Index i = 0; i < count; ++i) gram.row(i) = model.columns.row(model.samples[i]);
  const Eigen::VectorXd fitted = gram * c;
  const double fidelity = (values - fitted).squaredNorm() / static_cast<double>(count);
  return fidelity + model.params.gamma * c.dot(gram * c);
}

nlohmann::json model_to_json(const KernelModel& model) {
  return {
      {"node_count", model.node_count},
      {"samples", model.samples},
      {"coefficients", std::vector<double>(model.coefficients.data(),
                                           model.coefficients.data() + model.coefficients.size())},
      {"params",
       {{"epsilon", model.params.epsilon}, {"s", model.params.s}, {"gamma", model.params.gamma}}},
  };
}

KernelModel model_from_json(const Graph& g, const nlohmann::json& j) {
  KernelModel model;
  try {
    model.node_count = j.at("node_count").get<Vertex>();
    model.samples = j.at("samples").get<NodeSet>();
    const auto coefficients = j.at("coefficients").get<std::vector<double>>();
    model.coefficients = Eigen::Map<const Eigen::VectorXd>(
        coefficients.data(), static_cast<Eigen::Index>(coefficients.size()));
    const auto& p = j.at("params");
    model.params = {p.at("epsilon").get<double>(), p.at("s").get<double>(),
                    p.at("gamma").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed kernel model: ") + e.what());
  }
  if (model.node_count != g.node_count()) {
    throw ValidationError("kernel model was fitted on a graph of a different size");
  }
  if (model.samples.size() != static_cast<std::size_t>(model.coefficients.size()) ||
      !is_node_set(model.samples) ||
      (!model.samples.empty() && (model.samples.front() < 0 || model.samples.back() >= g.node_count()))) {
    throw ValidationError("kernel model samples are inconsistent");
  }
  model.columns = build_kernel_columns(laplacian(g), model.params, model.samples);
  return model;
}

}  // namespace gbfpum
