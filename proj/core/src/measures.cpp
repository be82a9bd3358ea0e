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

#include "gbfpum/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <spdlog/spdlog.h>

#include "gbfpum/error.hpp"

namespace gbfpum {

namespace {

// y = A x
void adjacency_apply(const Graph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  for (Vertex u = 0; u < g.node_count(); ++u) {
    double acc = 0.0;
    for (Vertex w : g.neighbors(u)) acc += x[w];
    y[u] = acc;
  }
}

}  // namespace

double adjacency_spectral_radius(const Graph& g, double tol, int max_iter) {
  const Vertex n = g.node_count();
  if (n == 0 || g.edge_count() == 0) return 0.0;
  // Lanczos with full reorthogonalization, started from the all-ones vector
  // (not orthogonal to the Perron vector of any component).
  const int max_steps = std::min<int>(n, std::max(2, max_iter));
  std::vector<Eigen::VectorXd> basis;
  std::vector<double> diag;
  std::vector<double> off;
  Eigen::VectorXd q = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
  Eigen::VectorXd w(n);
  double estimate = 0.0;
  for (int k = 0; k < max_steps; ++k) {
    basis.push_back(q);
    adjacency_apply(g, q, w);
    diag.push_back(q.dot(w));
    for (const auto& b : basis) w -= b.dot(w) * b;
    const double beta = w.norm();

    const bool exhausted = beta <= 1e-12 * std::max(1.0, std::abs(diag.back()));
    if (k % 8 == 7 || exhausted || k + 1 == max_steps) {
      Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), k + 1);
      Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(off.data(), k);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz;
      ritz.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
      const double next = ritz.eigenvalues()[k];
      const bool settled = std::abs(next - estimate) <= tol * std::max(1.0, next);
      estimate = next;
      if (settled || exhausted) break;
    }
    off.push_back(beta);
    q = w / beta;
  }
  // Ritz values approach rho from below; max degree bounds it from above.
  Vertex max_degree = 0;
  for (Vertex u = 0; u < n; ++u) max_degree = std::max(max_degree, g.degree(u));
  return std::min(estimate, static_cast<double>(max_degree));
}

KatzResult katz_centrality(const Graph& g, const KatzParams& params) {
  if (!(params.alpha > 0.0)) throw ValidationError("katz alpha must be positive");
  if (!(params.tol > 0.0)) throw ValidationError("katz tolerance must be positive");

  KatzResult result;
  const Vertex n = g.node_count();
  result.alpha = params.alpha;
  const double rho = adjacency_spectral_radius(g);
  if (rho > 0.0 && params.alpha > 0.9 / rho) {
    result.alpha = 0.9 / rho;
    result.clamped = true;
    spdlog::debug("katz: alpha {} exceeds 1/rho(A) = {}; using {}", params.alpha,
                  1.0 / rho, result.alpha);
  }

  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd next(n);
  Eigen::VectorXd shifted(n);
  double delta = 0.0;
  for (int it = 1; it <= params.max_iter; ++it) {
    shifted = c.array() + 1.0;
    adjacency_apply(g, shifted, next);
    next *= result.alpha;
    delta = n == 0 ? 0.0 : (next - c).cwiseAbs().maxCoeff();
    c.swap(next);
    if (delta < params.tol) {
      result.iterations = it;
      result.centrality = std::move(c);
      return result;
    }
  }
  throw ConvergenceError("katz centrality did not converge in " +
                             std::to_string(params.max_iter) + " iterations",
                         delta);
}

void validate_partition(const Partition& p, Vertex n) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  Vertex covered = 0;
  for (std::size_t i = 0; i < p.communities.size(); ++i) {
    const NodeSet& c = p.communities[i];
    if (c.empty()) throw ValidationError("community " + std::to_string(i) + " is empty");
    if (!is_node_set(c)) {
      throw ValidationError("community " + std::to_string(i) + " is not sorted and unique");
    }
    for (Vertex v : c) {
      if (v < 0 || v >= n) throw ValidationError("vertex " + std::to_string(v) + " out of range");
      if (seen[v]) {
        throw ValidationError("vertex " + std::to_string(v) + " is in two communities");
      }
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n) throw ValidationError("partition does not cover every vertex");
}

std::vector<int> membership(const Partition& p, Vertex n) {
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < p.communities.size(); ++i) {
    for (Vertex v : p.communities[i]) label[v] = static_cast<int>(i);
  }
  return label;
}

double community_modularity_term(const Graph& g, std::span<const Vertex> community) {
  const double m = static_cast<double>(g.edge_count());
  if (m == 0.0) throw ValidationError("modularity is undefined for a graph without edges");
  std::int64_t internal_arcs = 0;
  std::int64_t degree_total = 0;
  for (Vertex u : community) {
    degree_total += g.degree(u);
    for (Vertex w : g.neighbors(u)) {
      if (contains(community, w)) ++internal_arcs;
    }
  }
  const double fraction = static_cast<double>(degree_total) / (2.0 * m);
  return static_cast<double>(internal_arcs) / (2.0 * m) - fraction * fraction;
}

double modularity(const Graph& g, const Partition& p) {
  const Vertex n = g.node_count();
  const double m = static_cast<double>(g.edge_count());
  if (m == 0.0) throw ValidationError("modularity is undefined for a graph without edges");
  const std::vector<int> label = membership(p, n);
  std::vector<std::int64_t> internal(p.size(), 0);
  std::vector<std::int64_t> degree_total(p.size(), 0);
  for (Vertex u = 0; u < n; ++u) {
    const int c = label[u];
    if (c < 0) throw ValidationError("vertex " + std::to_string(u) + " is not in any community");
    degree_total[c] += g.degree(u);
    for (Vertex w : g.neighbors(u)) {
      if (label[w] == c) ++internal[c];
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < p.size(); ++c) {
    const double fraction = static_cast<double>(degree_total[c]) / (2.0 * m);
    q += static_cast<double>(internal[c]) / (2.0 * m) - fraction * fraction;
  }
  return q;
}

double jaccard_nodes(const Graph& g, Vertex u, Vertex v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  const std::size_t united = a.size() + b.size() - common;
  return united == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(united);
}

double jaccard_communities(const Graph& g, std::span<const Vertex> U,
                           std::span<const Vertex> V) {
  if (U.empty() || V.empty()) throw ValidationError("jaccard of an empty community");
  double total = 0.0;
  for (Vertex u : U) {
    for (Vertex v : V) total += jaccard_nodes(g, u, v);
  }
  return total / (static_cast<double>(U.size()) * static_cast<double>(V.size()));
}

}  // namespace gbfpum
