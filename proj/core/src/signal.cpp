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

#include "gbfpum/signal.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/SparseCholesky>

#include "gbfpum/error.hpp"

namespace gbfpum {

namespace {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace

SignalVector seeded_normal(Vertex n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SignalVector out(n);
  for (Vertex i = 0; i < n; i += 2) {
    const double u1 = 1.0 - unit_uniform(rng);  // (0, 1]
    const double u2 = unit_uniform(rng);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    out[i] = radius * std::cos(2.0 * std::numbers::pi * u2);
    if (i + 1 < n) out[i + 1] = radius * std::sin(2.0 * std::numbers::pi * u2);
  }
  return out;
}

SignalVector low_pass(const Graph& g, const SignalVector& f, int order) {
  if (order < 1) throw ValidationError("low-pass order must be at least 1");
  if (f.size() != g.node_count()) throw ValidationError("signal length does not match the graph");
  SparseMatrix shifted = laplacian(g);
  for (Vertex i = 0; i < g.node_count(); ++i) shifted.coeffRef(i, i) += 1.0;
  Eigen::SimplicialLLT<SparseMatrix> chol(shifted);
  if (chol.info() != Eigen::Success) throw NumericalError("I + L factorization failed");
  SignalVector x = f;
  for (int k = 0; k < order; ++k) x = chol.solve(x);
  return x;
}

SignalVector synth_low_pass_signal(const Graph& g, std::uint64_t seed, int order) {
  if (g.node_count() == 0) throw ValidationError("empty graph");
  if (!is_connected(g)) throw ValidationError("graph is not connected");
  SignalVector x = low_pass(g, seeded_normal(g.node_count(), seed), order);
  const double peak = x.cwiseAbs().maxCoeff();
  if (peak > 0.0) x /= peak;
  return x;
}

NodeSet uniform_samples(Vertex n, Vertex count, std::uint64_t seed) {
  if (count < 0 || count > n) throw ValidationError("sample count must lie in [0, n]");
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) pool[i] = i;
  std::mt19937_64 rng(seed);
  for (Vertex i = 0; i < count; ++i) {
    const auto j = static_cast<Vertex>(i + bounded(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(count));
  return make_node_set(std::move(pool));
}

Graph grid_graph(Vertex rows, Vertex cols) {
  if (rows < 1 || cols < 1) throw ValidationError("grid dimensions must be positive");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex r = 0; r < rows; ++r) {
    for (Vertex c = 0; c < cols; ++c) {
      const Vertex id = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(id, id + 1);
      if (r + 1 < rows) edges.emplace_back(id, id + cols);
    }
  }
  return Graph::from_edge_list(edges, rows * cols);
}

}  // namespace gbfpum
